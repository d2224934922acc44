"""Shared domain types: alphabets, targets, measured trials, growth models.

Everything here is an immutable value object; instances can be shared freely
between threads.
"""

from __future__ import annotations

import csv
import io
import string
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal, Sequence

import numpy as np

from .scaled import ScaledDecimal


class AlphabetMismatchError(ValueError):
    """A required character is not a member of the alphabet in use."""

    def __init__(self, missing: str, context: str = "text"):
        self.missing = missing
        listed = ", ".join(repr(c) for c in missing)
        super().__init__(f"{context} contains characters not in the alphabet: {listed}")


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct symbols candidates are drawn from."""

    symbols: str

    def __post_init__(self):
        if len(self.symbols) == 0:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            dupes = sorted({c for c in self.symbols if self.symbols.count(c) > 1})
            raise ValueError(f"alphabet symbols must be distinct, duplicated: {dupes}")

    @property
    def size(self) -> int:
        return len(self.symbols)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.symbols)}

    def __contains__(self, char: str) -> bool:
        return char in self._index

    def missing_from(self, text: str) -> str:
        """Distinct characters of ``text`` not in this alphabet, in first-seen order."""
        seen: list[str] = []
        for c in text:
            if c not in self._index and c not in seen:
                seen.append(c)
        return "".join(seen)

    def encode(self, text: str) -> np.ndarray:
        """Map text to symbol indices (uint32). Raises on unknown characters."""
        missing = self.missing_from(text)
        if missing:
            raise AlphabetMismatchError(missing)
        return np.array([self._index[c] for c in text], dtype=np.uint32)

    def decode(self, codes: Iterable[int]) -> str:
        return "".join(self.symbols[int(i)] for i in codes)

    def extended_with(self, chars: str) -> "Alphabet":
        """A new alphabet with any unknown ``chars`` appended, order preserved."""
        missing = self.missing_from(chars)
        return Alphabet(self.symbols + missing) if missing else self


#: The 52 ASCII letters: the alphabet the published closed-form math assumes.
LETTERS = Alphabet(string.ascii_letters)

#: The 52 letters plus space: the alphabet the published trial code drew from.
LETTERS_AND_SPACE = Alphabet(string.ascii_letters + " ")

_PRESETS = {"letters": LETTERS, "letters+space": LETTERS_AND_SPACE}


def alphabet_preset(name: str) -> Alphabet:
    """Look up a named preset (``letters`` or ``letters+space``)."""
    try:
        return _PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown alphabet preset {name!r}; choose from {sorted(_PRESETS)}"
        ) from None


@dataclass(frozen=True)
class TargetText:
    """The text a typing experiment tries to reproduce, prefix by prefix."""

    text: str

    def __post_init__(self):
        if len(self.text) == 0:
            raise ValueError("target text must be nonempty")

    @property
    def length(self) -> int:
        return len(self.text)

    def prefix(self, n: int) -> str:
        if not 1 <= n <= self.length:
            raise ValueError(f"prefix length {n} outside 1..{self.length}")
        return self.text[:n]

    def is_valid_for(self, alphabet: Alphabet) -> bool:
        """Whether every character of the text is a member of ``alphabet``."""
        return not alphabet.missing_from(self.text)


@dataclass(frozen=True)
class TrialRecord:
    """One prefix-matching trial: attempts made and wall-clock time spent.

    ``seed`` is the derived 64-bit value that reproduces this trial's
    character stream on its own. ``completed`` is False when the trial hit
    its attempt budget before matching; ``attempts`` then holds the count
    so far.
    """

    prefix_length: int
    attempts: int
    elapsed_seconds: float
    seed: int
    completed: bool = True

    def __post_init__(self):
        if self.prefix_length < 1:
            raise ValueError("prefix_length must be >= 1")
        if self.attempts < 1:
            raise ValueError("attempts must be >= 1")
        if self.elapsed_seconds < 0:
            raise ValueError("elapsed_seconds must be >= 0")


# CSV schema for measurement tables; ``--no-timing`` zeroes elapsed_seconds.
MEASUREMENT_CSV_HEADER = ("test", "prefix_len", "attempts", "elapsed_seconds", "seed")


@dataclass(frozen=True)
class MeasurementTable:
    """A full experiment matrix (iterations x prefix lengths) plus column means."""

    prefix_lengths: tuple[int, ...]
    trials: tuple[tuple[TrialRecord, ...], ...]  # trials[iteration][column]
    attempts_averages: tuple[float, ...]
    time_averages: tuple[float, ...]

    @classmethod
    def from_trials(
        cls,
        prefix_lengths: Sequence[int],
        rows: Sequence[Sequence[TrialRecord]],
    ) -> "MeasurementTable":
        prefix_lengths = tuple(prefix_lengths)
        if list(prefix_lengths) != sorted(set(prefix_lengths)):
            raise ValueError("prefix_lengths must be strictly increasing")
        if not rows:
            raise ValueError("at least one test iteration required")
        for row in rows:
            if len(row) != len(prefix_lengths):
                raise ValueError("every iteration must cover every prefix length")
            for rec, n in zip(row, prefix_lengths):
                if rec.prefix_length != n:
                    raise ValueError(
                        f"record for prefix {rec.prefix_length} in column {n}"
                    )
        count = len(rows)
        attempts_avg = tuple(
            sum(row[j].attempts for row in rows) / count
            for j in range(len(prefix_lengths))
        )
        time_avg = tuple(
            sum(row[j].elapsed_seconds for row in rows) / count
            for j in range(len(prefix_lengths))
        )
        return cls(prefix_lengths, tuple(tuple(r) for r in rows), attempts_avg, time_avg)

    @property
    def iterations(self) -> int:
        return len(self.trials)

    def incomplete_cells(self) -> list[tuple[int, int]]:
        """(iteration, prefix_length) pairs whose trial hit its budget."""
        return [
            (i + 1, rec.prefix_length)
            for i, row in enumerate(self.trials)
            for rec in row
            if not rec.completed
        ]

    def to_csv(self, include_timing: bool = True) -> str:
        """Serialize as ``test,prefix_len,attempts,elapsed_seconds,seed`` rows.

        Trial rows come first in (test, prefix) order, then one ``average``
        row per prefix length. With ``include_timing=False`` every elapsed
        value is written as 0 so repeated runs are byte-identical.
        """
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(MEASUREMENT_CSV_HEADER)
        for i, row in enumerate(self.trials, start=1):
            for rec in row:
                elapsed = repr(rec.elapsed_seconds) if include_timing else "0"
                writer.writerow([i, rec.prefix_length, rec.attempts, elapsed, rec.seed])
        for j, n in enumerate(self.prefix_lengths):
            elapsed = repr(self.time_averages[j]) if include_timing else "0"
            writer.writerow(["average", n, repr(self.attempts_averages[j]), elapsed, ""])
        return buf.getvalue()


def read_measurement_csv(text: str) -> tuple[list[int], list[float], list[float]]:
    """Extract (prefix_lengths, attempts_averages, time_averages) from CSV text.

    Accepts both this package's measurement CSV and the bundled published
    matrix (which has no seed column). Average rows are used when present;
    otherwise column means are recomputed from the trial rows.
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise ValueError("empty measurements file")
    required = {"test", "prefix_len", "attempts", "elapsed_seconds"}
    missing = required - set(reader.fieldnames)
    if missing:
        raise ValueError(f"measurements file lacks columns: {sorted(missing)}")

    averages: dict[int, tuple[float, float]] = {}
    trials: dict[int, list[tuple[float, float]]] = {}
    for row in reader:
        n = int(row["prefix_len"])
        attempts = float(row["attempts"])
        elapsed = float(row["elapsed_seconds"])
        if row["test"] == "average":
            averages[n] = (attempts, elapsed)
        else:
            trials.setdefault(n, []).append((attempts, elapsed))
    if averages:
        lengths = sorted(averages)
        return (
            lengths,
            [averages[n][0] for n in lengths],
            [averages[n][1] for n in lengths],
        )
    if not trials:
        raise ValueError("measurements file contains no data rows")
    lengths = sorted(trials)
    return (
        lengths,
        [sum(a for a, _ in trials[n]) / len(trials[n]) for n in lengths],
        [sum(e for _, e in trials[n]) / len(trials[n]) for n in lengths],
    )


@dataclass(frozen=True)
class GrowthModel:
    """Measured base series plus the estimated per-character growth factors."""

    attempts_base: tuple[float, ...]
    times_base: tuple[float, ...]
    attempts_growth_factor: float
    time_growth_factor: float

    def __post_init__(self):
        if len(self.attempts_base) != len(self.times_base):
            raise ValueError("base series must have equal length")
        if self.attempts_growth_factor <= 0 or self.time_growth_factor <= 0:
            raise ValueError("growth factors must be positive")


Region = Literal["measured", "extrapolated"]


@dataclass(frozen=True)
class ProjectionRow:
    prefix_len: int
    text_part: str
    attempts: ScaledDecimal
    seconds: ScaledDecimal
    hours: ScaledDecimal
    region: Region


@dataclass(frozen=True)
class ProjectionTable:
    """Per-prefix estimates: measured rows echo the base, the rest extrapolate."""

    target: str
    rows: tuple[ProjectionRow, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for i, row in enumerate(self.rows, start=1):
            if row.prefix_len != i or row.text_part != self.target[:i]:
                raise ValueError(f"row {i} is not the length-{i} prefix of the target")

    @property
    def final(self) -> ProjectionRow:
        return self.rows[-1]

    def to_csv(self, fmt=None) -> str:
        """Serialize as ``prefix_len,text_part,attempts,seconds,hours,region``.

        ``fmt`` maps a ScaledDecimal to its printed form; default is the
        plain ``<mantissa>e<exponent>`` serialization.
        """
        fmt = fmt or str
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["prefix_len", "text_part", "attempts", "seconds", "hours", "region"])
        for row in self.rows:
            writer.writerow(
                [
                    row.prefix_len,
                    row.text_part,
                    fmt(row.attempts),
                    fmt(row.seconds),
                    fmt(row.hours),
                    row.region,
                ]
            )
        return buf.getvalue()

    def to_json_rows(self, fmt=None) -> list[dict]:
        fmt = fmt or str
        return [
            {
                "prefix_len": row.prefix_len,
                "text_part": row.text_part,
                "attempts": fmt(row.attempts),
                "seconds": fmt(row.seconds),
                "hours": fmt(row.hours),
                "region": row.region,
            }
            for row in self.rows
        ]
