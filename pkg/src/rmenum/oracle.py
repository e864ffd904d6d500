"""Independent ground truth for small parameters.

brute_force_distribution enumerates every codeword of R(r,m), nothing
derived from the recursion machinery, so the two routes can be compared
coefficient for coefficient. The Gray sequence over the 2**dim coefficient
vectors is cut into segments: a segment is all words sharing a prefix
state over the high basis elements, and the low span of each segment is
swept as one vectorised block. Segments are independent, which is also
what makes the sweep restartable and splittable across processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .cosetenum import rm_basis_masks, rm_dimension
from .boolfn import monomial_table
from .wenum import ValidationReport, WeightEnumerator, read_distribution, validate_code_enumerator

DEFAULT_DIM_CAP = 28
_LOW_BITS = 16


def _pack(words: list[int], lanes: int) -> np.ndarray:
    buf = b"".join(w.to_bytes(lanes * 8, "little") for w in words)
    return np.frombuffer(buf, dtype="<u8").reshape(len(words), lanes)


def _low_block(tables: list[int], lanes: int) -> np.ndarray:
    """All XOR combinations of the given tables, in Gray order."""
    words = [0] * (1 << len(tables))
    w = 0
    for step in range(1, len(words)):
        w ^= tables[(step & -step).bit_length() - 1]
        words[step] = w
    return _pack(words, lanes)


def _segment_counts(r: int, m: int, lo: int, hi: int) -> np.ndarray:
    """Histogram over Gray segments lo..hi-1 of the high prefix space."""
    n = 1 << m
    lanes = max(1, n // 64)
    tables = [monomial_table(mask, m) for mask in rm_basis_masks(r, m)]
    nlow = min(len(tables), _LOW_BITS)
    low = _low_block(tables[:nlow], lanes)
    high_tables = tables[nlow:]
    counts = np.zeros(n + 1, dtype=np.int64)
    for seg in range(lo, hi):
        gray = seg ^ (seg >> 1)
        offset = 0
        g = gray
        while g:
            bit = g & -g
            offset ^= high_tables[bit.bit_length() - 1]
            g ^= bit
        block = low ^ _pack([offset], lanes)
        weights = np.bitwise_count(block).sum(axis=1, dtype=np.int64)
        counts += np.bincount(weights, minlength=n + 1)
    return counts


def _segment_job(args):
    return _segment_counts(*args)


def brute_force_distribution(
    r: int, m: int, cap_dim: int = DEFAULT_DIM_CAP, jobs: int = 1
) -> WeightEnumerator:
    """Exact W[z; R(r,m)] by enumerating all 2**dim codewords."""
    dim = rm_dimension(r, m)
    if dim > cap_dim:
        raise ValueError(f"dim R({r},{m}) = {dim} exceeds the cap of {cap_dim}")
    n = 1 << m
    nseg = 1 << max(0, dim - _LOW_BITS)
    if jobs <= 1 or nseg == 1:
        counts = _segment_counts(r, m, 0, nseg)
    else:
        jobs = min(jobs, nseg)
        bounds = [nseg * k // jobs for k in range(jobs + 1)]
        work = [(r, m, bounds[k], bounds[k + 1]) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = sum(pool.map(_segment_job, work))
    return WeightEnumerator(n, [int(c) for c in counts])


def min_weight_count(r: int, m: int) -> int:
    """Number of minimum-weight (2**(m-r)) words of R(r,m), exact.

    2**r * prod_{i=0}^{m-r-1} (2**(m-i) - 1) / (2**(m-r-i) - 1); the
    division is exact and checked rather than floated.
    """
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r} m={m}")
    num = 1
    den = 1
    for i in range(m - r):
        num *= (1 << (m - i)) - 1
        den *= (1 << (m - r - i)) - 1
    total = (1 << r) * num
    count, rem = divmod(total, den)
    if rem:
        raise AssertionError(f"minimum-weight count for r={r} m={m} did not divide exactly")
    return count


def divisibility_exponent(r: int, m: int) -> int:
    """Every weight in R(r,m) is a multiple of 2**this (McEliece/Ax bound)."""
    if r <= 0:
        return 0
    return (m + r - 1) // r - 1


def validate_reference(source, r: int, m: int) -> ValidationReport:
    """Check a claimed R(r,m) distribution against everything known a priori.

    source is a path, file object, or WeightEnumerator. The checks layer
    RM-specific facts (dimension, minimum weight and its count, weight
    divisibility) on the generic code-enumerator sanity checks.
    """
    if isinstance(source, WeightEnumerator):
        dist = source
    else:
        dist = read_distribution(source)
    report = ValidationReport()
    n = 1 << m
    report.record("length is 2**m", dist.n == n, f"n = {dist.n}, expected {n}")
    if dist.n != n:
        return report
    for name, ok, detail in validate_code_enumerator(dist).checks:
        report.record(name, ok, detail)
    dim = rm_dimension(r, m)
    report.record(
        "total = 2**dim",
        dist.total() == 1 << dim,
        f"dim R({r},{m}) = {dim}",
    )
    expected_min = 1 << (m - r)
    got_min = dist.min_weight()
    report.record(
        f"minimum weight = {expected_min}",
        got_min == expected_min,
        f"found {got_min}",
    )
    expected_count = min_weight_count(r, m)
    got_count = dist.coeffs[expected_min] if expected_min <= dist.n else 0
    report.record(
        f"minimum-weight count = {expected_count}",
        got_count == expected_count,
        f"found {got_count}",
    )
    step = 1 << divisibility_exponent(r, m)
    bad = [w for w, c in dist.nonzero_items() if w % step]
    report.record(
        f"weights divisible by {step}",
        not bad,
        f"offending weights {bad[:4]}" if bad else "",
    )
    return report
