"""Exhaustive coset weight distributions by Gray-code sweeps.

A coset f + R(r,m) is walked by enumerating all 2**dim codewords of
R(r,m) in reflected Gray order, so each step XORs a single basis table
into the running word and pays one popcount per tracked representative.
A batch call amortises one sweep over many representatives, which is how
the product-sum recursion consumes whole families of cosets at once.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from math import comb

from .boolfn import Anf, TruthTable, monomial_table, truth_table_from_anf
from .wenum import WeightEnumerator

DEFAULT_CAP = 1 << 30


def rm_dimension(r: int, m: int) -> int:
    return sum(comb(m, d) for d in range(r + 1))


def rm_basis_masks(r: int, m: int) -> list[int]:
    """Monomial masks of degree <= r, by degree then lexicographic order."""
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r} m={m}")
    masks = []
    for d in range(r + 1):
        for combo in itertools.combinations(range(1, m + 1), d):
            masks.append(sum(1 << (i - 1) for i in combo))
    return masks


def _rep_bits(rep, m: int) -> int:
    if isinstance(rep, TruthTable):
        if rep.m != m:
            raise ValueError("representative has wrong variable count")
        return rep.bits
    if isinstance(rep, Anf):
        if rep.m != m:
            raise ValueError("representative has wrong variable count")
        return truth_table_from_anf(rep).bits
    bits = int(rep)
    if not 0 <= bits < 1 << (1 << m):
        raise ValueError("representative wider than the code length")
    return bits


def _sweep(rep_bits: list[int], r: int, m: int) -> list[list[int]]:
    """Histogram per representative over one Gray sweep of R(r,m)."""
    n = 1 << m
    tables = [monomial_table(mask, m) for mask in rm_basis_masks(r, m)]
    hists = [[0] * (n + 1) for _ in rep_bits]
    words = list(rep_bits)
    for hist, w in zip(hists, words):
        hist[w.bit_count()] += 1
    for step in range(1, 1 << len(tables)):
        t = tables[(step & -step).bit_length() - 1]
        for k, w in enumerate(words):
            w ^= t
            words[k] = w
            hists[k][w.bit_count()] += 1
    return hists


def _sweep_job(args):
    return _sweep(*args)


def coset_enumerator(rep, r: int, m: int, cap: int = DEFAULT_CAP) -> WeightEnumerator:
    """W[z; rep + R(r,m)], exact.

    rep may be a TruthTable, an Anf, or raw table bits. The sweep visits
    2**dim(R(r,m)) codewords and refuses to start past the cap.
    """
    return batch_coset_enumerators([rep], r, m, cap=cap)[0]


def batch_coset_enumerators(
    reps, r: int, m: int, cap: int = DEFAULT_CAP, jobs: int = 1
) -> list[WeightEnumerator]:
    """One Gray sweep of R(r,m) shared by every representative.

    The result list is aligned with reps and identical for any jobs value;
    workers replay the same codeword sequence on disjoint slices of reps.
    """
    dim = rm_dimension(r, m)
    if 1 << dim > cap:
        raise ValueError(f"2**{dim} codewords exceed the cap of {cap}")
    rep_bits = [_rep_bits(rep, m) for rep in reps]
    n = 1 << m
    if not rep_bits:
        return []
    if jobs <= 1 or len(rep_bits) == 1:
        hists = _sweep(rep_bits, r, m)
    else:
        jobs = min(jobs, len(rep_bits))
        chunk = (len(rep_bits) + jobs - 1) // jobs
        parts = [rep_bits[i : i + chunk] for i in range(0, len(rep_bits), chunk)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_job, [(part, r, m) for part in parts]))
        hists = [h for part in results for h in part]
    return [WeightEnumerator(n, h) for h in hists]
