from dotenv import load_dotenv

from wilf.cli import run

# Load environment variables
load_dotenv()

if __name__ == '__main__':
    run()
