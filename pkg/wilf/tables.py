# tables.py
"""
The five appendix tables: d_{i,n}, s_n, sh_n, s_{j,n} and the sets R_n.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set, Tuple

import pandas as pd

from .counting import CountTable, default_table
from .exceptions import OutOfRange
from .perm import render_letters
from .representatives import representatives_R
from .types import OutputFormat

logger = logging.getLogger(__name__)

TITLES = {
    1: "The numbers d_{i,n}",
    2: "The numbers s_n",
    3: "The numbers sh_n",
    4: "The numbers s_{j,n}",
    5: "The sets R_n",
}

DEFAULT_N_MAX = {1: 12, 2: 12, 3: 12, 4: 12, 5: 6}
MAX_TABLE_N = 20


@dataclass
class AppendixTable:
    number: int
    title: str
    row_label: str
    frame: pd.DataFrame
    marked: Set[Tuple[int, int]] = field(default_factory=set)


@dataclass
class RepresentativeListing:
    number: int
    title: str
    groups: Dict[int, List[List[Tuple[str, str]]]]


def _frame(rows: List[Any], columns: List[int], cell) -> pd.DataFrame:
    data = {n: [cell(row, n) for row in rows] for n in columns}
    return pd.DataFrame(data, index=rows, dtype="Int64")


def build_table(number: int, n_max: Optional[int] = None, counts: CountTable = default_table):
    if number not in TITLES:
        raise OutOfRange(f"Tables are numbered 1 to 5, got {number}")
    n_max = n_max or DEFAULT_N_MAX[number]
    if number != 5 and n_max > MAX_TABLE_N:
        raise OutOfRange(f"Table cells are 64-bit integers, n_max is capped at {MAX_TABLE_N}")
    logger.info(f"Building table {number} up to n = {n_max}")

    if number == 1:
        if n_max < 3:
            raise OutOfRange(f"Table 1 starts at n = 3, got n_max = {n_max}")
        rows = list(range(1, n_max - 1))
        frame = _frame(rows, list(range(3, n_max + 1)), lambda i, n: counts.d(i, n) if i <= n - 2 else None)
        marked = {(i, n) for i in rows for n in range(3, n_max + 1) if i <= n - 2 and i < n // 2}
        return AppendixTable(1, TITLES[1], "i", frame, marked)
    if number == 2:
        frame = _frame(["s_n"], list(range(1, n_max + 1)), lambda _, n: counts.s(n))
        return AppendixTable(2, TITLES[2], "n", frame)
    if number == 3:
        frame = _frame(["sh_n"], list(range(1, n_max + 1)), lambda _, n: counts.sh(n))
        return AppendixTable(3, TITLES[3], "n", frame)
    if number == 4:
        if n_max < 2:
            raise OutOfRange(f"Table 4 starts at n = 2, got n_max = {n_max}")
        rows = list(range(1, n_max))
        frame = _frame(rows, list(range(2, n_max + 1)), lambda j, n: counts.s_j(j, n) if j <= n - 1 else None)
        return AppendixTable(4, TITLES[4], "j", frame)
    return _representative_listing(n_max)


def _representative_listing(n_max: int) -> RepresentativeListing:
    if n_max < 3:
        raise OutOfRange(f"Table 5 starts at n = 3, got n_max = {n_max}")
    groups = {}
    for n in range(3, n_max + 1):
        by_prefix_length: Dict[int, List[Tuple[str, str]]] = {}
        for entry in representatives_R(n).entries:
            prefix = entry.member.letters[:len(entry.prefix)]
            rest = entry.member.letters[len(entry.prefix):]
            by_prefix_length.setdefault(entry.i, []).append((render_letters(prefix), render_letters(rest)))
        groups[n] = [by_prefix_length[i] for i in sorted(by_prefix_length)]
    return RepresentativeListing(5, TITLES[5], groups)


def _cell_text(value, marked: bool, fmt: OutputFormat) -> str:
    if pd.isna(value):
        return ''
    text = fmt.number(int(value))
    return f"{text}*" if marked else text


def _is_marked(table: AppendixTable, row, n) -> bool:
    return not isinstance(row, str) and (int(row), int(n)) in table.marked


def render_text(table, fmt: OutputFormat = OutputFormat()) -> str:
    if isinstance(table, RepresentativeListing):
        lines = [f"Table {table.number}: {table.title}"]
        for n, groups in table.groups.items():
            for index, group in enumerate(groups):
                label = str(n) if index == 0 else ''
                members = ', '.join(f"[{prefix}]{rest}" for prefix, rest in group)
                lines.append(f"{label:>2}  {members}")
        return '\n'.join(lines) + '\n'

    frame = table.frame
    header = [f"{table.row_label}\\n"] + [str(n) for n in frame.columns]
    body = []
    for row in frame.index:
        body.append(
            [str(row)]
            + [_cell_text(frame.at[row, n], _is_marked(table, row, n), fmt) for n in frame.columns]
        )
    widths = [max(len(line[k]) for line in [header] + body) for k in range(len(header))]
    lines = [f"Table {table.number}: {table.title}"]
    for line in [header] + body:
        lines.append('  '.join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip())
    return '\n'.join(lines) + '\n'


def render_json(table) -> Dict[str, Any]:
    if isinstance(table, RepresentativeListing):
        return {
            'title': table.title,
            'row_label': 'n',
            'rows': list(table.groups),
            'groups': {
                str(n): [[{'prefix': prefix, 'rest': rest} for prefix, rest in group] for group in groups]
                for n, groups in table.groups.items()
            },
        }
    frame = table.frame
    cells = [
        [None if pd.isna(frame.at[row, n]) else int(frame.at[row, n]) for n in frame.columns]
        for row in frame.index
    ]
    report = {
        'title': table.title,
        'row_label': table.row_label,
        'rows': [row if isinstance(row, str) else int(row) for row in frame.index],
        'columns': [int(n) for n in frame.columns],
        'cells': cells,
    }
    if table.marked:
        report['marked'] = sorted([i, n] for i, n in table.marked)
    return report
