"""Prefix-matching trial loop: seeded candidate generation at desk scale.

A trial repeatedly generates fresh fixed-length candidate strings until one
equals the target prefix (restart semantics: no characters are reused between
candidates). Attempts are counted exactly, including the successful candidate.

Determinism contract
--------------------
Symbol indices are drawn as bounded uint32 values from a PCG64 stream keyed
by ``(seed, stream_id)``. Bounded uint32 generation consumes the underlying
bit stream one value at a time, so the sequence of drawn symbols does not
depend on how draws are partitioned into batches; the attempt count of a
trial is therefore a pure function of its stream key, no matter the internal
batch size or how many workers run concurrently. (A regression test pins
this partition-invariance.) Wall-clock times are measured with a monotonic
clock and are explicitly outside the determinism guarantee.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .model import Alphabet, AlphabetMismatchError, MeasurementTable, TargetText, TrialRecord

_MIN_BATCH = 64
_MAX_BATCH = 1 << 16

#: Default per-trial attempt cap; keeps prefix lengths >= 6 from running
#: effectively forever while still being far above any measured mean here.
DEFAULT_ATTEMPT_BUDGET = 10**10


@dataclass
class RngStream:
    """A deterministic symbol-index source keyed by ``(seed, stream_id)``.

    Identical keys yield identical draw sequences; distinct ``stream_id``
    values under one seed yield statistically independent streams.
    """

    seed: int
    stream_id: int = 0
    _generator: np.random.Generator = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.stream_id < 0:
            raise ValueError("stream_id must be nonnegative")
        sequence = np.random.SeedSequence((self.seed, self.stream_id))
        self._generator = np.random.Generator(np.random.PCG64(sequence))

    def draw_codes(self, count: int, bound: int) -> np.ndarray:
        """Draw ``count`` uniform symbol indices in ``[0, bound)``."""
        return self._generator.integers(0, bound, size=count, dtype=np.uint32)


def derive_trial_seed(seed: int, iteration: int, prefix_length: int) -> int:
    """Collapse (experiment seed, iteration, prefix length) into one 64-bit seed.

    The derived value alone reproduces the trial: feed it to
    ``RngStream(seed=derived)``. It is what lands in ``TrialRecord.seed``.
    """
    sequence = np.random.SeedSequence((seed, iteration, prefix_length))
    return int(sequence.generate_state(1, np.uint64)[0])


def generate_candidate(alphabet: Alphabet, length: int, rng: RngStream) -> str:
    """One candidate string: ``length`` independent uniform draws from the alphabet."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length == 0:
        return ""
    return alphabet.decode(rng.draw_codes(length, alphabet.size))


def _batch_rows(alphabet_size: int, prefix_length: int) -> int:
    # Scale the batch to the expected waiting time so short waits do not
    # over-draw; the drawn symbol sequence itself is batch-size invariant.
    expected = alphabet_size**prefix_length
    if expected >= _MAX_BATCH:
        return _MAX_BATCH
    return max(_MIN_BATCH, 2 * expected)


def run_prefix_trial(
    target: TargetText,
    prefix_length: int,
    alphabet: Alphabet,
    rng: RngStream,
    budget: Optional[int] = DEFAULT_ATTEMPT_BUDGET,
) -> TrialRecord:
    """Generate fresh candidates until one equals the target prefix.

    Returns the exact number of candidates generated (the successful one
    included) and the wall-clock seconds the loop took. If ``budget``
    attempts pass without a match the record comes back with
    ``completed=False`` and the attempt count so far.
    """
    if not 1 <= prefix_length <= target.length:
        raise ValueError(
            f"prefix_length {prefix_length} outside 1..{target.length}"
        )
    if budget is not None and budget < 1:
        raise ValueError("budget must be >= 1")
    prefix = target.text[:prefix_length]
    missing = alphabet.missing_from(prefix)
    if missing:
        raise AlphabetMismatchError(missing, context=f"target prefix {prefix!r}")

    prefix_codes = alphabet.encode(prefix)
    batch = _batch_rows(alphabet.size, prefix_length)
    attempts = 0
    start = time.perf_counter()
    while True:
        rows = batch if budget is None else min(batch, budget - attempts)
        codes = rng.draw_codes(rows * prefix_length, alphabet.size)
        matches = np.all(codes.reshape(rows, prefix_length) == prefix_codes, axis=1)
        hits = np.flatnonzero(matches)
        if hits.size:
            attempts += int(hits[0]) + 1
            elapsed = time.perf_counter() - start
            return TrialRecord(prefix_length, attempts, elapsed, rng.seed, True)
        attempts += rows
        if budget is not None and attempts >= budget:
            elapsed = time.perf_counter() - start
            return TrialRecord(prefix_length, attempts, elapsed, rng.seed, False)


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a measurement run needs, seed included."""

    target: TargetText
    alphabet: Alphabet
    max_prefix_length: int = 5
    iterations: int = 10
    seed: int = 0
    attempt_budget: Optional[int] = DEFAULT_ATTEMPT_BUDGET
    worker_count: int = 1
    auto_extend_alphabet: bool = False

    def __post_init__(self):
        if not 1 <= self.max_prefix_length <= self.target.length:
            raise ValueError(
                f"max_prefix_length {self.max_prefix_length} outside "
                f"1..{self.target.length}"
            )
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.attempt_budget is not None and self.attempt_budget < 1:
            raise ValueError("attempt_budget must be >= 1")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")

    def effective_alphabet(self) -> Alphabet:
        """The alphabet trials will draw from, auto-extended when opted in.

        Without the opt-in, a target prefix containing out-of-alphabet
        characters is a hard error; the trial could never succeed.
        """
        covered = self.target.text[: self.max_prefix_length]
        missing = self.alphabet.missing_from(covered)
        if not missing:
            return self.alphabet
        if self.auto_extend_alphabet:
            return self.alphabet.extended_with(covered)
        raise AlphabetMismatchError(missing, context=f"target prefix {covered!r}")


def run_experiment(config: ExperimentConfig) -> MeasurementTable:
    """Run the full iteration x prefix-length trial matrix.

    Every trial draws from its own stream derived from
    ``(seed, iteration, prefix_length)``, and results are assembled in
    canonical order, so the attempts matrix is identical for any
    ``worker_count`` and any scheduling of the trials.
    """
    alphabet = config.effective_alphabet()
    prefix_lengths = list(range(1, config.max_prefix_length + 1))
    tasks = [
        (iteration, n)
        for iteration in range(1, config.iterations + 1)
        for n in prefix_lengths
    ]

    def run_one(task: tuple[int, int]) -> tuple[tuple[int, int], TrialRecord]:
        iteration, n = task
        stream = RngStream(derive_trial_seed(config.seed, iteration, n))
        record = run_prefix_trial(
            config.target, n, alphabet, stream, config.attempt_budget
        )
        return task, record

    if config.worker_count == 1:
        results = dict(map(run_one, tasks))
    else:
        with ThreadPoolExecutor(max_workers=config.worker_count) as pool:
            results = dict(pool.map(run_one, tasks))

    rows = [
        [results[(iteration, n)] for n in prefix_lengths]
        for iteration in range(1, config.iterations + 1)
    ]
    return MeasurementTable.from_trials(prefix_lengths, rows)


def measure_throughput(
    alphabet: Alphabet,
    length: int,
    duration_seconds: float = 0.25,
    workload: Optional[int] = None,
    seed: int = 0,
) -> float:
    """Candidate generations per second for this alphabet and length.

    Generates and compares candidates against a fixed prefix for roughly
    ``duration_seconds`` (or for exactly ``workload`` candidates when given)
    and returns count / elapsed. This is the preferred way to turn projected
    attempt counts into projected durations: it sidesteps the noisy per-trial
    wall clocks.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if workload is None and duration_seconds <= 0:
        raise ValueError("duration_seconds must be positive")
    if workload is not None and workload < 1:
        raise ValueError("workload must be >= 1")

    reference = np.arange(length, dtype=np.uint32) % alphabet.size
    stream = RngStream(seed)
    batch = _MAX_BATCH if workload is None else min(_MAX_BATCH, workload)
    generated = 0
    start = time.perf_counter()
    while True:
        rows = batch if workload is None else min(batch, workload - generated)
        codes = stream.draw_codes(rows * length, alphabet.size)
        np.all(codes.reshape(rows, length) == reference, axis=1).any()
        generated += rows
        elapsed = time.perf_counter() - start
        if workload is not None:
            if generated >= workload:
                break
        elif elapsed >= duration_seconds:
            break
    return generated / max(elapsed, 1e-9)
