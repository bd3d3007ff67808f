# wilf/types.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .exceptions import InvariantViolation


@dataclass(frozen=True)
class ClassSummary:
    key: bytes
    size: int
    representative: Tuple[int, ...]

    def to_json(self) -> Dict[str, Any]:
        return {'key': self.key.hex(), 'size': self.size, 'representative': list(self.representative)}


@dataclass
class ClassPartitionReport:
    n: int
    class_count: int
    size_histogram: Dict[int, int]
    classes: List[ClassSummary] = field(default_factory=list)
    relation: str = 'ss'

    def check(self, total: int):
        """Class sizes must be powers of two adding up to total"""
        covered = sum(summary.size for summary in self.classes)
        if self.classes and covered != total:
            raise InvariantViolation(f"Classes of S_{self.n} cover {covered} permutations, expected {total}")
        for summary in self.classes:
            if summary.size & (summary.size - 1):
                raise InvariantViolation(f"Class of {summary.representative} has size {summary.size}")
        if sum(self.size_histogram.values()) != self.class_count:
            raise InvariantViolation(f"Histogram of S_{self.n} does not add up to {self.class_count}")

    def to_json(self, with_classes: bool = False) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            'n': self.n,
            'relation': self.relation,
            'class_count': self.class_count,
            'histogram': {str(j): count for j, count in sorted(self.size_histogram.items())},
        }
        if with_classes:
            report['classes'] = [summary.to_json() for summary in self.classes]
        return report


@dataclass(frozen=True)
class OutputFormat:
    mode: str = 'text'
    thousands_separators: bool = False

    @property
    def is_json(self) -> bool:
        return self.mode == 'json'

    def number(self, value: Optional[int]) -> str:
        if value is None:
            return ''
        return f"{value:,}" if self.thousands_separators else str(value)


@dataclass(frozen=True)
class Settings:
    ss_limit: int = 9
    shift_limit: int = 7
    prefix_limit: int = 9
    workers: int = 1
    log_level: str = 'WARNING'
    table_n_max: int = 12
    block_size: int = 5040
