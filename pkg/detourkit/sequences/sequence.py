"""
Detour sequences and their statistics.

A sequence is kept as its sorted terms; the run-length form (value,
multiplicity) is derived. Text form: comma-separated terms where a run may
be written `(12)x3`, e.g. `10,11,(12)x2,(13)x3`.
"""

import math
import re
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import groupby

from detourkit.errors import BadSequence, Empty

_RUN = re.compile(r"^\((\d+)\)\s*[x_]\s*(\d+)$")


@dataclass(frozen=True)
class DetourSequence:
    terms: tuple[int, ...]

    def __post_init__(self):
        if any(a > b for a, b in zip(self.terms, self.terms[1:])):
            raise BadSequence(f"sequence is not nondecreasing: {list(self.terms)}")

    @classmethod
    def from_terms(cls, terms: Iterable[int]) -> "DetourSequence":
        """Sort arbitrary per-vertex orders into a sequence."""
        return cls(tuple(sorted(terms)))

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> "DetourSequence":
        terms: list[int] = []
        for value, mult in runs:
            if mult < 1:
                raise BadSequence(f"run ({value}) has multiplicity {mult}")
            terms.extend([value] * mult)
        return cls(tuple(terms))

    @classmethod
    def parse(cls, text: str) -> "DetourSequence":
        return parse_sequence(text)

    @property
    def runs(self) -> list[tuple[int, int]]:
        return [(value, len(list(group))) for value, group in groupby(self.terms)]

    @property
    def max_gap(self) -> int:
        return max((b - a for a, b in zip(self.terms, self.terms[1:])), default=0)

    @property
    def is_full(self) -> bool:
        return self.max_gap <= 1

    @property
    def is_constant(self) -> bool:
        return self.max_gap == 0

    @property
    def repetitions(self) -> list[tuple[int, int]]:
        return [(v, m) for v, m in self.runs if m >= 2]

    @property
    def longest_repetition(self) -> int:
        return max((m for _, m in self.runs), default=0) if self.repetitions else 0

    def __len__(self) -> int:
        return len(self.terms)

    def format(self) -> str:
        return format_sequence(self)

    def __str__(self) -> str:
        return self.format()


def format_sequence(d: DetourSequence) -> str:
    return ",".join(str(v) if m == 1 else f"({v})x{m}" for v, m in d.runs)


def parse_sequence(text: str) -> DetourSequence:
    """Accept expanded terms and run notation, mixed freely."""
    terms: list[int] = []
    for raw in text.split(","):
        tok = raw.strip()
        if not tok:
            continue
        run = _RUN.match(tok)
        if run:
            terms.extend([int(run.group(1))] * int(run.group(2)))
        elif tok.isdigit():
            terms.append(int(tok))
        else:
            raise BadSequence(f"cannot parse sequence term {tok!r}")
    if not terms:
        raise Empty("empty sequence")
    return DetourSequence(tuple(terms))


@dataclass(frozen=True)
class SequenceReport:
    max_gap: int
    full: bool
    constant: bool
    repetitions: list[tuple[int, int]]
    longest_repetition: int
    gap_bound_ok: bool
    distinct_bound_ok: bool
    repetition_bound_ok: bool
    min_term_bound_ok: bool

    @property
    def bounds_ok(self) -> bool:
        return self.gap_bound_ok and self.distinct_bound_ok and self.repetition_bound_ok and self.min_term_bound_ok

    def as_dict(self) -> dict:
        return {
            "max_gap": self.max_gap,
            "full": self.full,
            "constant": self.constant,
            "repetitions": [list(r) for r in self.repetitions],
            "longest_repetition": self.longest_repetition,
            "gap_bound_ok": self.gap_bound_ok,
            "distinct_bound_ok": self.distinct_bound_ok,
            "repetition_bound_ok": self.repetition_bound_ok,
            "min_term_bound_ok": self.min_term_bound_ok,
        }


def analyze_sequence(d: DetourSequence, n_vertices: int, tau: int) -> SequenceReport:
    """
    Statistics plus the bounds every connected graph satisfies:
    gap <= floor(tau/2), at most ceil(tau/2) distinct terms, some run of
    length >= ceil(2n/tau) when n > 1, and every term >= ceil((tau+1)/2).
    """
    if not d.terms:
        raise Empty("empty sequence")
    if tau != d.terms[-1]:
        raise BadSequence(f"tau={tau} but the largest term is {d.terms[-1]}")
    longest_run = max(m for _, m in d.runs)
    return SequenceReport(
        max_gap=d.max_gap,
        full=d.is_full,
        constant=d.is_constant,
        repetitions=d.repetitions,
        longest_repetition=d.longest_repetition,
        gap_bound_ok=d.max_gap <= tau // 2,
        distinct_bound_ok=len(d.runs) <= math.ceil(tau / 2),
        repetition_bound_ok=n_vertices <= 1 or longest_run >= math.ceil(2 * n_vertices / tau),
        min_term_bound_ok=d.terms[0] >= math.ceil((tau + 1) / 2),
    )
