"""Orbit classification of homogeneous forms and of cosets above a fixed form.

Two group actions live here, both on packed form indices:

  * classify_quotient partitions H^(d)(m) under GL(m,2) acting by
    g -> [g o A]_d (top-degree part of the substitution), with orbit
    representatives, sizes, and Schreier-derived stabilizer generators;
  * orbit_partition partitions H^(r+1)(m) under a stabilizer St(e),
    where A sends the coset (e+g) + R(r,m) to (e+g') + R(r,m) with
    g' = [e o A]_{r+1} xor [g o A]_{r+1}.

Both actions are affine over GF(2) in the packed coefficient vector, so a
generator is expanded once into a full image table (XOR-doubling over the
images of the basis monomials) and closure is array chasing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .boolfn import (
    Anf,
    HomogeneousSpace,
    format_anf,
    homogeneous_part,
    parse_anf,
)
from .gf2 import (
    AffineMap,
    Gf2Matrix,
    as_affine,
    stabilizer_check,
    transform_anf,
)
from .wenum import WeightEnumerator

MAX_INDEX_BITS = 25
DEFAULT_MAX_GENS = 64


def gl2_generators(m: int) -> list[Gf2Matrix]:
    """A transvection (x1 <- x1+x2) and a cyclic shift; they generate GL(m,2)."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return [Gf2Matrix.identity(1)]
    transvection = list(Gf2Matrix.identity(m).rows)
    transvection[0] = 0b11
    shift = tuple(1 << ((k + 1) % m) for k in range(m))
    return [Gf2Matrix(m, tuple(transvection)), Gf2Matrix(m, shift)]


def _monomial_anf(space: HomogeneousSpace, j: int) -> Anf:
    return Anf(space.m, frozenset([space.masks[j]]))


def _action_table(space: HomogeneousSpace, a: AffineMap, e: Anf | None = None) -> np.ndarray:
    """Full image table of g -> [e o A]_d xor [g o A]_d over packed indices.

    The map is affine in the packed vector: column j holds the image of the
    j-th basis monomial, the constant comes from e (zero when e is None),
    and the table is filled by XOR-doubling.
    """
    if space.nbits > MAX_INDEX_BITS:
        raise ValueError(f"index space of 2**{space.nbits} forms is past the supported size")
    const = 0
    if e is not None and not e.is_zero():
        const = space.index_of(homogeneous_part(transform_anf(e, a), space.d))
    cols = [
        space.index_of(homogeneous_part(transform_anf(_monomial_anf(space, j), a), space.d))
        for j in range(space.nbits)
    ]
    table = np.zeros(space.size, dtype=np.uint32)
    table[0] = const
    for j, col in enumerate(cols):
        half = 1 << j
        table[half : 2 * half] = table[:half] ^ np.uint32(col)
    return table


def _close_orbits(tables: list[np.ndarray], size: int, want_parents: bool):
    """BFS closure over the whole index space; orbits appear in seed order."""
    block_of = np.full(size, -1, dtype=np.int32)
    parent = np.full(size, -1, dtype=np.int32) if want_parents else None
    pgen = np.full(size, -1, dtype=np.int8) if want_parents else None
    blocks = []
    for seed in range(size):
        if block_of[seed] >= 0:
            continue
        cid = len(blocks)
        block_of[seed] = cid
        frontier = np.array([seed], dtype=np.uint32)
        members = [frontier]
        while frontier.size:
            grown = []
            for gi, table in enumerate(tables):
                images = table[frontier]
                fresh = block_of[images] < 0
                if not fresh.any():
                    continue
                vals, first = np.unique(images[fresh], return_index=True)
                still = block_of[vals] < 0
                vals = vals[still]
                if not vals.size:
                    continue
                if want_parents:
                    parent[vals] = frontier[fresh][first][still]
                    pgen[vals] = gi
                block_of[vals] = cid
                grown.append(vals)
            frontier = np.concatenate(grown) if grown else np.empty(0, dtype=np.uint32)
            if frontier.size:
                members.append(frontier)
        blocks.append(np.sort(np.concatenate(members)))
    return block_of, blocks, parent, pgen


@dataclass(frozen=True)
class ClassRecord:
    rep: Anf
    size: int
    gens: tuple[AffineMap, ...] = ()


@dataclass
class Partition:
    """Blocks of packed degree-d indices above a fixed form e."""

    e: Anf
    d: int
    m: int
    block_of: np.ndarray
    blocks: tuple
    merged: bool = False

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def find_block(self, g: int) -> int:
        return int(self.block_of[g])


def coset_action(e: Anf, g: int, a, r: int) -> int:
    """Image index of the coset (e+g) + R(r,m) under a stabilizer element.

    g is a packed H^(r+1)(m) index; the result is [e o A]_{r+1} xor
    [g o A]_{r+1}, which is where the substitution moves the coset inside
    e + R(r+1,m). Raises for maps outside St(e).
    """
    a = as_affine(a)
    if not stabilizer_check(e, a):
        raise ValueError("substitution does not stabilize e modulo lower degrees")
    space = HomogeneousSpace(e.m, r + 1)
    out = homogeneous_part(transform_anf(space.anf_of(g), a), r + 1)
    if not e.is_zero():
        out = out ^ homogeneous_part(transform_anf(e, a), r + 1)
    return space.index_of(out)


def orbit_partition(e: Anf, gens, r: int, m: int) -> Partition:
    """Partition of all H^(r+1)(m) indices under the group the gens generate.

    Unit translations are appended automatically (they always stabilize e),
    so passing the GL generators for e = 0 yields the full affine-orbit
    partition. Every generator must pass stabilizer_check.
    """
    if e.m != m:
        raise ValueError("e has the wrong variable count")
    maps = [as_affine(g) for g in gens]
    for a in maps:
        if not stabilizer_check(e, a):
            raise ValueError(f"generator {a} does not stabilize e")
    maps.extend(AffineMap.translation(m, 1 << i) for i in range(m))
    space = HomogeneousSpace(m, r + 1)
    tables = [_action_table(space, a, e) for a in maps]
    block_of, blocks, _, _ = _close_orbits(tables, space.size, want_parents=False)
    return Partition(
        e=e,
        d=r + 1,
        m=m,
        block_of=block_of,
        blocks=tuple(tuple(int(x) for x in b) for b in blocks),
        merged=False,
    )


def singleton_partition(e: Anf, r: int, m: int) -> Partition:
    """Degraded partition with every index in its own block (no gens known)."""
    space = HomogeneousSpace(m, r + 1)
    return Partition(
        e=e,
        d=r + 1,
        m=m,
        block_of=np.arange(space.size, dtype=np.int32),
        blocks=tuple((g,) for g in range(space.size)),
        merged=False,
    )


def merge_by_enumerator(partition: Partition, enums) -> tuple[Partition, list[WeightEnumerator]]:
    """Union blocks whose coset enumerators are coefficient-identical.

    enums is aligned with partition.blocks. Returns the merged partition
    and one enumerator per merged block; its block count is the number of
    distinct polynomials the product-sum step really needs.
    """
    if len(enums) != partition.block_count:
        raise ValueError("one enumerator per block required")
    groups: dict = {}
    for bid, enum in enumerate(enums):
        groups.setdefault(enum.coeffs, []).append(bid)
    merged_members = []
    for key, bids in groups.items():
        members = sorted(x for bid in bids for x in partition.blocks[bid])
        merged_members.append((members, enums[bids[0]]))
    merged_members.sort(key=lambda item: item[0][0])
    block_of = np.full(partition.block_of.shape, -1, dtype=np.int32)
    out_blocks = []
    out_enums = []
    for mid, (members, enum) in enumerate(merged_members):
        block_of[np.array(members, dtype=np.int64)] = mid
        out_blocks.append(tuple(members))
        out_enums.append(enum)
    merged = Partition(
        e=partition.e,
        d=partition.d,
        m=partition.m,
        block_of=block_of,
        blocks=tuple(out_blocks),
        merged=True,
    )
    return merged, out_enums


class QuotientClassification:
    """Classes of H^(d)(m) under GL(m,2) with transversal bookkeeping.

    Keeps the parent forest of the closure so any form can be written as
    (class representative) acted on by an explicit matrix, which is what
    representative rebasing needs. Representatives are the least packed
    index of each class; classes are numbered in representative order.
    """

    def __init__(self, d, m, space, records, class_of, parent, pgen, gens, seeds):
        self.d = d
        self.m = m
        self.space = space
        self.records = records
        self.class_of = class_of
        self._parent = parent
        self._pgen = pgen
        self.gens = gens
        self.seeds = seeds

    @staticmethod
    def compute(
        d: int,
        m: int,
        rng: random.Random | None = None,
        max_gens: int = DEFAULT_MAX_GENS,
    ) -> "QuotientClassification":
        rng = rng if rng is not None else random.Random(0)
        space = HomogeneousSpace(m, d)
        if space.nbits > MAX_INDEX_BITS:
            raise ValueError(
                f"C({m},{d}) = {space.nbits} index bits exceed the cap of {MAX_INDEX_BITS}"
            )
        gens = gl2_generators(m)
        tables = [_action_table(space, AffineMap(g, 0)) for g in gens]
        class_of, blocks, parent, pgen = _close_orbits(tables, space.size, want_parents=True)
        cls = QuotientClassification(
            d, m, space, [], class_of, parent, pgen, gens, [int(b[0]) for b in blocks]
        )
        for cid, members in enumerate(blocks):
            rep_idx = int(members[0])
            rep = space.anf_of(rep_idx)
            stab = cls._schreier_sample(cid, members, tables, rng, max_gens)
            cls.records.append(ClassRecord(rep=rep, size=len(members), gens=tuple(stab)))
        return cls

    def transversal(self, idx: int) -> Gf2Matrix:
        """Matrix carrying the class representative of idx onto idx."""
        path = []
        node = idx
        while self._parent[node] >= 0:
            path.append(self.gens[int(self._pgen[node])])
            node = int(self._parent[node])
        # path holds the edge generators from idx back to the seed; the
        # transversal applies them in seed-to-idx order.
        return reduce(lambda acc, g: acc @ g, reversed(path), Gf2Matrix.identity(self.m))

    def class_index_of(self, a: Anf) -> int:
        return int(self.class_of[self.space.index_of(a)])

    def _schreier_sample(self, cid, members, tables, rng, max_gens):
        rep = self.space.anf_of(int(members[0]))
        if len(members) == 1:
            candidates = [Gf2Matrix.identity(self.m)] if self.m == 1 else list(self.gens)
            out = []
            for mat in candidates:
                a = AffineMap(mat, 0)
                if not stabilizer_check(rep, a):
                    raise AssertionError("whole group should stabilize a fixed form")
                out.append(a)
            return out[:max_gens]
        out = []
        seen = set()
        attempts = 0
        while len(out) < max_gens and attempts < max_gens * 8:
            attempts += 1
            y = int(members[rng.randrange(len(members))])
            si = rng.randrange(len(self.gens))
            t_y = self.transversal(y)
            ys = int(tables[si][y])
            sigma = t_y @ self.gens[si] @ self.transversal(ys).inverse()
            if sigma.rows in seen:
                continue
            seen.add(sigma.rows)
            a = AffineMap(sigma, 0)
            if not stabilizer_check(rep, a):
                raise AssertionError("Schreier element failed the stabilizer check")
            if sigma == Gf2Matrix.identity(self.m):
                continue
            out.append(a)
        return out


def classify_quotient(
    d: int, m: int, rng: random.Random | None = None, max_gens: int = DEFAULT_MAX_GENS
) -> list[ClassRecord]:
    """Orbit representatives, sizes, and stabilizer gens for H^(d)(m) / GL(m,2)."""
    return QuotientClassification.compute(d, m, rng=rng, max_gens=max_gens).records


def write_classification(target, records, d: int, m: int, seed: int | None = None):
    """Text form: header comments, then one record per class.

    class <id> rep <monomial-string> size <decimal>
    gen <m bit-rows>              (zero or more lines, one matrix each)

    separated by blank lines. The rep grammar is the ANF digit notation,
    "0" for the zero form; bit rows read leftmost character = x_1.
    """
    own = not hasattr(target, "write")
    fh = open(target, "w") if own else target
    try:
        fh.write("# classification\n")
        fh.write(f"# d {d}\n")
        fh.write(f"# m {m}\n")
        if seed is not None:
            fh.write(f"# seed {seed}\n")
        for cid, rec in enumerate(records):
            fh.write(f"class {cid} rep {format_anf(rec.rep)} size {rec.size}\n")
            for a in rec.gens:
                fh.write(f"gen {a.matrix.to_text()}\n")
            fh.write("\n")
    finally:
        if own:
            fh.close()


def ingest_classification(source, expect_d: int | None = None, expect_m: int | None = None):
    """Parse and validate a classification file; returns (records, d, m).

    Validation: header advertises d and m, sizes are positive and sum to
    2**C(m,d), reps are homogeneous of degree d (or zero), stated gens are
    invertible and stabilize their representative.
    """
    own = not hasattr(source, "read")
    fh = open(source) if own else source
    try:
        lines = fh.read().splitlines()
    finally:
        if own:
            fh.close()
    d = m = None
    records = []
    current = None

    def flush():
        nonlocal current
        if current is not None:
            records.append(ClassRecord(rep=current[0], size=current[1], gens=tuple(current[2])))
            current = None

    for raw in lines:
        line = raw.strip()
        if not line:
            flush()
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] in ("d", "m"):
                if fields[0] == "d":
                    d = int(fields[1])
                else:
                    m = int(fields[1])
            continue
        fields = line.split()
        if fields[0] == "class":
            flush()
            if len(fields) != 6 or fields[2] != "rep" or fields[4] != "size":
                raise ValueError(f"bad class line {line!r}")
            if m is None or d is None:
                raise ValueError("class record before '# d'/'# m' headers")
            rep = parse_anf(fields[3], m)
            size = int(fields[5])
            if size <= 0:
                raise ValueError(f"class size must be positive, got {size}")
            current = (rep, size, [])
        elif fields[0] == "gen":
            if current is None:
                raise ValueError("gen line outside a class record")
            mat = Gf2Matrix.from_text(" ".join(fields[1:]))
            if mat.m != m:
                raise ValueError("generator dimension differs from m")
            current[2].append(AffineMap(mat, 0))
        else:
            raise ValueError(f"unrecognised line {line!r}")
    flush()
    if d is None or m is None:
        raise ValueError("missing '# d' or '# m' header")
    if expect_d is not None and d != expect_d:
        raise ValueError(f"file classifies degree {d}, expected {expect_d}")
    if expect_m is not None and m != expect_m:
        raise ValueError(f"file is over {m} variables, expected {expect_m}")
    space = HomogeneousSpace(m, d)
    total = sum(rec.size for rec in records)
    if total != space.size:
        raise ValueError(f"orbit sizes sum to {total}, expected 2**{space.nbits}")
    for rec in records:
        if not rec.rep.is_zero() and not rec.rep.is_homogeneous(d):
            raise ValueError(f"representative {format_anf(rec.rep)} is not degree-{d} homogeneous")
        for a in rec.gens:
            if not stabilizer_check(rec.rep, a):
                raise ValueError(f"stated generator does not stabilize {format_anf(rec.rep)}")
    return records, d, m
