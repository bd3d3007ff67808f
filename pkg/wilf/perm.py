# perm.py
"""
Words over the positive integers and permutations in one-line notation.

Everything else in the package is built on these two value types. Both are
immutable, hashable and ordered lexicographically by their letters.
"""
import logging
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .exceptions import (
    DuplicateLetter,
    EmptyPattern,
    MalformedToken,
    MissingLetter,
    NonPositiveLetter,
)

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r"[,\s]+")
_INTEGER = re.compile(r"[+-]?\d+")


@dataclass(frozen=True, order=True)
class Word:
    letters: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(self.letters))
        for letter in self.letters:
            if letter < 1:
                raise NonPositiveLetter(f"Letter {letter} is not a positive integer")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + tuple(other))

    def __str__(self) -> str:
        return render_letters(self.letters)

    @property
    def alph(self) -> FrozenSet[int]:
        return frozenset(self.letters)

    def to_json(self) -> List[int]:
        return list(self.letters)


@dataclass(frozen=True, order=True)
class Permutation(Word):
    """A word whose letters are exactly 1..n, each once"""

    def __post_init__(self):
        super().__post_init__()
        n = len(self.letters)
        if n < 1:
            raise MissingLetter("A permutation needs at least one letter")
        if len(set(self.letters)) != n:
            raise DuplicateLetter(f"Repeated letter in {self.letters}")
        missing = sorted(set(range(1, n + 1)) - set(self.letters))
        if missing:
            raise MissingLetter(f"Letters {missing} are missing from {self.letters}")

    @property
    def n(self) -> int:
        return len(self.letters)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Permutation":
        return cls(tuple(int(letter) for letter in data))


@dataclass(frozen=True)
class EmbeddingSet:
    indices: Tuple[int, ...]
    pattern_length: int

    def __contains__(self, index) -> bool:
        return index in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)


class Weight(NamedTuple):
    length: int
    norm: int


def render_letters(letters: Sequence[int]) -> str:
    """Compact digit string when every letter fits in one digit"""
    if all(1 <= letter <= 9 for letter in letters):
        return ''.join(str(letter) for letter in letters)
    return ','.join(str(letter) for letter in letters)


def _tokenize(text: str, n_hint: Optional[int] = None, permutation: bool = True) -> List[int]:
    stripped = text.strip()
    if not stripped:
        raise MalformedToken("Empty input")

    if _SEPARATORS.search(stripped):
        tokens = [token for token in _SEPARATORS.split(stripped) if token]
        letters = []
        for token in tokens:
            if not _INTEGER.fullmatch(token):
                raise MalformedToken(f"Token {token!r} is not an integer")
            letters.append(int(token))
        return letters

    # compact form: one digit per letter
    if not stripped.isdigit():
        raise MalformedToken(f"Compact word {stripped!r} may only contain digits")
    if permutation and (len(stripped) > 9 or (n_hint is not None and n_hint > 9)):
        raise MalformedToken(
            f"Compact form only covers letters up to 9; separate the letters of {stripped!r}"
        )
    return [int(char) for char in stripped]


def parse_word(text: str) -> Word:
    """Separated integers, or one digit per letter; blank text is the empty word"""
    if not text.strip():
        return Word(())
    letters = _tokenize(text, permutation=False)
    for letter in letters:
        if letter < 1:
            raise NonPositiveLetter(f"Letter {letter} is not a positive integer")
    return Word(tuple(letters))


def parse_permutation(text: str, n_hint: Optional[int] = None) -> Permutation:
    letters = _tokenize(text, n_hint)
    for letter in letters:
        if letter < 1:
            raise NonPositiveLetter(f"Letter {letter} is not a positive integer")
    seen = set()
    for letter in letters:
        if letter in seen:
            raise DuplicateLetter(f"Letter {letter} appears more than once in {text!r}")
        seen.add(letter)
    n = n_hint if n_hint is not None else len(letters)
    missing = sorted(set(range(1, n + 1)) - seen)
    if missing or len(letters) != n:
        raise MissingLetter(f"{text!r} is not a permutation of 1..{n} (missing {missing})")
    return Permutation(tuple(letters))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def inverse(u: Permutation) -> Permutation:
    result = [0] * u.n
    for position, letter in enumerate(u.letters, start=1):
        result[letter - 1] = position
    return Permutation(tuple(result))


def reversal(w: Word) -> Word:
    return type(w)(w.letters[::-1])


def reduced_form(w: Iterable[int]) -> Permutation:
    """Relabel a word of distinct letters onto 1..k keeping the relative order"""
    letters = tuple(w)
    if len(set(letters)) != len(letters):
        raise DuplicateLetter(f"Reduced form needs distinct letters, got {letters}")
    rank = {letter: index for index, letter in enumerate(sorted(letters), start=1)}
    return Permutation(tuple(rank[letter] for letter in letters))


def weight(w: Word) -> Weight:
    return Weight(len(w), sum(w.letters))


def embedding_set(u: Word, w: Word) -> EmbeddingSet:
    """Start indices (1-based) of the factors of w that dominate u letterwise"""
    if len(u) == 0:
        raise EmptyPattern("Cannot embed the empty word")
    k = len(u)
    indices = tuple(
        j + 1
        for j in range(len(w) - k + 1)
        if all(u[i] <= w[j + i] for i in range(k))
    )
    return EmbeddingSet(indices, k)
