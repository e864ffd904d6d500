"""Invertible substitutions over GF(2) acting on Boolean functions.

A matrix is stored as m row masks: row k (0-based k, variable k+1) is the
linear form substituted for x_{k+1}, with bit j-1 the coefficient of x_j.
An affine map adds a translation of the point before evaluation, so
apply(f, A) is the table of x -> f(Mx + b).

Substituting an invertible map never raises degree and changes only the
parts below the top degree, which is what the classification machinery
relies on: the induced action on degree-d homogeneous parts is a genuine
group action.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .boolfn import Anf, TruthTable, anf_from_truth_table, homogeneous_part


@dataclass(frozen=True)
class Gf2Matrix:
    m: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.m:
            raise ValueError("row count != m")
        for row in self.rows:
            if not 0 <= row < 1 << self.m:
                raise ValueError("row mask wider than m bits")

    @staticmethod
    def identity(m: int) -> "Gf2Matrix":
        return Gf2Matrix(m, tuple(1 << k for k in range(m)))

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        """Matrix product; f o (A @ B) substitutes B into A's output, f(A(Bx))."""
        if self.m != other.m:
            raise ValueError("mixed dimensions")
        rows = []
        for row in self.rows:
            acc = 0
            r = row
            while r:
                low = r & -r
                acc ^= other.rows[low.bit_length() - 1]
                r ^= low
            rows.append(acc)
        return Gf2Matrix(self.m, tuple(rows))

    def mul_vec(self, x: int) -> int:
        y = 0
        for k, row in enumerate(self.rows):
            y |= ((row & x).bit_count() & 1) << k
        return y

    def column(self, j: int) -> int:
        """Column j as a mask over output positions (0-based j)."""
        c = 0
        for k, row in enumerate(self.rows):
            c |= ((row >> j) & 1) << k
        return c

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(self.m, tuple(self.column(j) for j in range(self.m)))

    def rank(self) -> int:
        rows = list(self.rows)
        rank = 0
        for j in range(self.m):
            pivot = None
            for i in range(rank, self.m):
                if (rows[i] >> j) & 1:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            for i in range(self.m):
                if i != rank and (rows[i] >> j) & 1:
                    rows[i] ^= rows[rank]
            rank += 1
        return rank

    def is_invertible(self) -> bool:
        return self.rank() == self.m

    def inverse(self) -> "Gf2Matrix":
        m = self.m
        rows = list(self.rows)
        aug = [1 << i for i in range(m)]
        rank = 0
        for j in range(m):
            pivot = None
            for i in range(rank, m):
                if (rows[i] >> j) & 1:
                    pivot = i
                    break
            if pivot is None:
                raise ValueError("matrix is singular")
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            aug[rank], aug[pivot] = aug[pivot], aug[rank]
            for i in range(m):
                if i != rank and (rows[i] >> j) & 1:
                    rows[i] ^= rows[rank]
                    aug[i] ^= aug[rank]
            rank += 1
        return Gf2Matrix(m, tuple(aug))

    def to_text(self) -> str:
        """Rows as bit strings, leftmost character the x_1 coefficient."""
        return " ".join(
            "".join("1" if (row >> j) & 1 else "0" for j in range(self.m)) for row in self.rows
        )

    @staticmethod
    def from_text(text: str) -> "Gf2Matrix":
        parts = text.split()
        m = len(parts)
        rows = []
        for part in parts:
            if len(part) != m or set(part) - {"0", "1"}:
                raise ValueError(f"bad matrix row {part!r}")
            rows.append(sum(1 << j for j, ch in enumerate(part) if ch == "1"))
        return Gf2Matrix(m, tuple(rows))


@dataclass(frozen=True)
class AffineMap:
    matrix: Gf2Matrix
    shift: int = 0

    def __post_init__(self):
        if not 0 <= self.shift < 1 << self.matrix.m:
            raise ValueError("shift wider than m bits")

    @property
    def m(self) -> int:
        return self.matrix.m

    @staticmethod
    def identity(m: int) -> "AffineMap":
        return AffineMap(Gf2Matrix.identity(m), 0)

    @staticmethod
    def translation(m: int, shift: int) -> "AffineMap":
        return AffineMap(Gf2Matrix.identity(m), shift)


def as_affine(a) -> AffineMap:
    return a if isinstance(a, AffineMap) else AffineMap(a, 0)


def apply(t: TruthTable, a) -> TruthTable:
    """Table of x -> f(Mx + b), walking points in Gray order."""
    a = as_affine(a)
    if a.m != t.m:
        raise ValueError("variable count mismatch")
    m = t.m
    cols = [a.matrix.column(j) for j in range(m)]
    y = a.shift
    out = (t.bits >> y) & 1
    x = 0
    for i in range(1, 1 << m):
        flip = (i & -i).bit_length() - 1
        x ^= 1 << flip
        y ^= cols[flip]
        out |= ((t.bits >> y) & 1) << x
    return TruthTable(m, out)


def compose(a, b) -> AffineMap:
    """Map with apply(f, compose(a, b)) == apply(apply(f, b), a)."""
    a, b = as_affine(a), as_affine(b)
    if a.m != b.m:
        raise ValueError("mixed dimensions")
    matrix = b.matrix @ a.matrix
    shift = b.matrix.mul_vec(a.shift) ^ b.shift
    return AffineMap(matrix, shift)


def invert(a) -> AffineMap:
    a = as_affine(a)
    inv = a.matrix.inverse()
    return AffineMap(inv, inv.mul_vec(a.shift))


def transform_anf(f: Anf, a) -> Anf:
    """ANF of f composed with the substitution (all degrees, not just the top)."""
    from .boolfn import truth_table_from_anf

    return anf_from_truth_table(apply(truth_table_from_anf(f), a))


def top_image(f: Anf, a) -> Anf:
    """Degree-deg(f) part of f after the substitution."""
    return homogeneous_part(transform_anf(f, a), f.degree())


def stabilizer_check(e: Anf, a) -> bool:
    """True when the substitution fixes e modulo lower-degree terms."""
    a = as_affine(a)
    if not a.matrix.is_invertible():
        return False
    if e.is_zero():
        return True
    return top_image(e, a) == e


def random_invertible(m: int, rng: random.Random) -> Gf2Matrix:
    """Uniform over GL(m,2) by rejection sampling."""
    while True:
        mat = Gf2Matrix(m, tuple(rng.getrandbits(m) for _ in range(m)))
        if mat.is_invertible():
            return mat


def find_equivalence(
    e1: Anf,
    e2: Anf,
    r_low: int,
    budget: int,
    rng: random.Random,
    progress_every: int = 0,
) -> Gf2Matrix | None:
    """Search for invertible A with every part of (e1 o A) + e2 of degree <= r_low.

    The identity is tried first, then random invertible matrices up to the
    budget. Translations never move the top-degree part, so the search runs
    over linear maps only. Returns None when the budget runs out, which is
    not a proof of inequivalence.
    """
    if e1.m != e2.m:
        raise ValueError("variable count mismatch")
    m = e1.m

    def matches(mat: Gf2Matrix) -> bool:
        diff = transform_anf(e1, AffineMap(mat, 0)) ^ e2
        return diff.degree() <= r_low or diff.is_zero()

    ident = Gf2Matrix.identity(m)
    if matches(ident):
        return ident
    for attempt in range(1, budget):
        mat = random_invertible(m, rng)
        if matches(mat):
            return mat
        if progress_every and attempt % progress_every == 0:
            print(f"equivalence search: {attempt}/{budget} attempts", flush=True)
    return None


DEFAULT_EQUIV_BUDGET = 10**7
