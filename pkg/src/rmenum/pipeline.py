"""Weight distributions of R(r,m) assembled from classified cosets.

The identity driving everything: splitting codewords on the top variable
gives W[z; R(r,m)] = sum over p in H^(r)(m-1) of W^2[z; p + R(r-1,m-1)],
and the sum only needs one term per substitution class of p, weighted by
its orbit size. Each coset enumerator in turn splits on the next variable
down as a product-sum over H^(r-1)(m-2):

    W[z; (e + f x) + R(r-1,m-1)] =
        sum_g W[z; e+g + R(r-2,m-2)] * W[z; e+g+f + R(r-2,m-2)]

computed either directly over all g, or ("blocks") with g grouped by the
orbit partition above e so equal factors are fetched instead of recomputed;
then the number of polynomial multiplications per coset drops to the
merged block count.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .boolfn import (
    Anf,
    HomogeneousSpace,
    attach_top,
    decompose_top,
    format_anf,
    truth_table_from_anf,
)
from .classify import (
    DEFAULT_MAX_GENS,
    ClassRecord,
    Partition,
    QuotientClassification,
    ingest_classification,
    merge_by_enumerator,
    orbit_partition,
    singleton_partition,
)
from .cosetenum import DEFAULT_CAP, batch_coset_enumerators
from .gf2 import AffineMap, find_equivalence, top_image
from .oracle import divisibility_exponent
from .wenum import (
    WeightEnumerator,
    read_distribution,
    scale,
    square,
    write_distribution,
)


@dataclass
class MulCounter:
    count: int = 0

    def tick(self, n: int = 1):
        self.count += n


def coset_enum_split(
    e: Anf, f: Anf, r: int, m: int, counter: MulCounter | None = None, cap: int = DEFAULT_CAP
) -> WeightEnumerator:
    """W[z; (e + f x_{m+1}) + R(r+1,m+1)] as a product-sum over H^(r+1)(m).

    One Gray sweep of R(r,m) collects the enumerators of every coset
    e + g + R(r,m) at once; the factor at g+f is then a lookup because
    adding f is XOR on packed indices. Exactly 2**C(m,r+1) polynomial
    multiplications are performed.
    """
    if not e.is_zero() and not e.is_homogeneous(r + 2):
        raise ValueError("e must be homogeneous of degree r+2")
    if not f.is_zero() and not f.is_homogeneous(r + 1):
        raise ValueError("f must be homogeneous of degree r+1")
    space = HomogeneousSpace(m, r + 1)
    e_bits = truth_table_from_anf(e).bits
    tables = space.all_tables()
    enums = batch_coset_enumerators([e_bits ^ t for t in tables], r, m, cap=cap)
    f_idx = space.index_of(f)
    out = WeightEnumerator.zero(1 << (m + 1))
    for g in range(space.size):
        out = out + enums[g] * enums[g ^ f_idx]
        if counter is not None:
            counter.tick()
    return out


def coset_enum_blocks(
    f: Anf,
    partition: Partition,
    block_enums,
    counter: MulCounter | None = None,
) -> WeightEnumerator:
    """Same value as coset_enum_split, using one multiplication per block.

    partition must be the (merged) orbit partition above e = partition.e
    and block_enums its per-block coset enumerators; all g in a block share
    their factor, so the inner factor is accumulated by block lookup and
    the multiplication count equals the block count.
    """
    if len(block_enums) != partition.block_count:
        raise ValueError("one enumerator per block required")
    space = HomogeneousSpace(partition.m, partition.d)
    f_idx = space.index_of(f)
    block_of = partition.block_of
    n_half = 1 << partition.m
    out = WeightEnumerator.zero(2 * n_half)
    for bid, members in enumerate(partition.blocks):
        inner = WeightEnumerator.zero(n_half)
        for g in members:
            inner = inner + block_enums[int(block_of[g ^ f_idx])]
        out = out + block_enums[bid] * inner
        if counter is not None:
            counter.tick()
    return out


@dataclass(frozen=True)
class DirectStrategy:
    """Evaluate every coset enumerator by the plain product-sum."""

    r: int
    m: int
    cap: int = DEFAULT_CAP

    def __call__(self, p: Anf) -> tuple[WeightEnumerator, int]:
        e, f = decompose_top(p)
        counter = MulCounter()
        enum = coset_enum_split(e, f, self.r, self.m, counter=counter, cap=self.cap)
        return enum, counter.count


@dataclass(frozen=True)
class BlockStrategy:
    """Evaluate coset enumerators through precomputed per-e block tables.

    Representatives must be rebased so that their lower part is exactly one
    of the keyed forms; lookup is by packed index in H^(r+2)(m).
    """

    r: int
    m: int
    space: HomogeneousSpace
    tables: dict

    def __call__(self, p: Anf) -> tuple[WeightEnumerator, int]:
        e, f = decompose_top(p)
        key = self.space.index_of(e)
        entry = self.tables.get(key)
        if entry is None:
            raise ValueError(f"representative {format_anf(p)} was not rebased onto a known form")
        partition, block_enums = entry
        counter = MulCounter()
        enum = coset_enum_blocks(f, partition, block_enums, counter=counter)
        return enum, counter.count


def _class_contribution(args):
    rec, enum_fn = args
    enum, mults = enum_fn(rec.rep)
    return scale(square(enum), rec.size).coeffs, mults


def _checkpoint_path(directory: str, cid: int) -> str:
    return os.path.join(directory, f"class_{cid:05d}.txt")


def _read_checkpoint(directory: str, cid: int, rec: ClassRecord, n: int):
    path = _checkpoint_path(directory, cid)
    if not os.path.exists(path):
        return None
    header = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line.startswith("#"):
                continue
            fields = line[1:].split(None, 1)
            if len(fields) == 2:
                header[fields[0]] = fields[1]
    expected = {"class": str(cid), "rep": format_anf(rec.rep), "size": str(rec.size)}
    for key, want in expected.items():
        got = header.get(key)
        if got != want:
            raise ValueError(
                f"checkpoint {path} header {key!r} is {got!r}, expected {want!r}"
            )
    dist = read_distribution(path)
    if dist.n != n:
        raise ValueError(f"checkpoint {path} has length {dist.n}, expected {n}")
    return dist


def _write_checkpoint(directory: str, cid: int, rec: ClassRecord, contribution: WeightEnumerator):
    comments = [f"class {cid}", f"rep {format_anf(rec.rep)}", f"size {rec.size}"]
    write_distribution(_checkpoint_path(directory, cid), contribution, comments=comments)


def distribution_from_classes(
    classes,
    d: int,
    m1: int,
    enum_fn,
    jobs: int = 1,
    checkpoint: str | None = None,
    counter: MulCounter | None = None,
) -> WeightEnumerator:
    """W[z; R(d, m1+1)] = sum of size * W^2[z; rep + R(d-1, m1)] over classes.

    classes must exhaust H^(d)(m1): orbit sizes are validated to sum to
    2**C(m1,d) before any work is done. Class order is canonical (packed
    representative index), each contribution is exact, and the result is
    identical for every jobs value. With a checkpoint directory, finished
    per-class contributions are persisted and resumed after header checks;
    the counter only sees multiplications actually performed.
    """
    space = HomogeneousSpace(m1, d)
    total = sum(rec.size for rec in classes)
    if total != space.size:
        raise ValueError(f"orbit sizes sum to {total}, expected 2**{space.nbits}")
    ordered = sorted(classes, key=lambda rec: space.index_of(rec.rep))
    n_out = 1 << (m1 + 1)
    contributions: dict[int, WeightEnumerator] = {}
    if checkpoint:
        os.makedirs(checkpoint, exist_ok=True)
        for cid, rec in enumerate(ordered):
            got = _read_checkpoint(checkpoint, cid, rec, n_out)
            if got is not None:
                contributions[cid] = got
    pending = [cid for cid in range(len(ordered)) if cid not in contributions]
    if jobs <= 1 or len(pending) <= 1:
        results = map(_class_contribution, [(ordered[cid], enum_fn) for cid in pending])
        for cid, (coeffs, mults) in zip(pending, results):
            contributions[cid] = WeightEnumerator(n_out, coeffs)
            if counter is not None:
                counter.tick(mults)
            if checkpoint:
                _write_checkpoint(checkpoint, cid, ordered[cid], contributions[cid])
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(pending))) as pool:
            results = pool.map(_class_contribution, [(ordered[cid], enum_fn) for cid in pending])
            for cid, (coeffs, mults) in zip(pending, results):
                contributions[cid] = WeightEnumerator(n_out, coeffs)
                if counter is not None:
                    counter.tick(mults)
                if checkpoint:
                    _write_checkpoint(checkpoint, cid, ordered[cid], contributions[cid])
    acc = WeightEnumerator.zero(n_out)
    for cid in range(len(ordered)):
        acc = acc + contributions[cid]
    return acc


def rebase_representatives(
    classes,
    targets,
    rng: random.Random | None = None,
    lookup: QuotientClassification | None = None,
    budget: int = 200000,
) -> list[ClassRecord]:
    """Rewrite class representatives as e + f x so e is exactly a target form.

    Each representative splits as e' + f' x over the top variable; a
    substitution A of the lower variables carrying e' onto its target is
    taken from the classification transversal when lookup is given,
    otherwise found by randomized search. The rebased representative is
    target + ([f' o A] top part) x, an equal-size member of the same class,
    so its coset enumerator is unchanged. Stabilizer gens are dropped: they
    belonged to the old representative.
    """
    rng = rng if rng is not None else random.Random(0)
    by_monomials = {t.monomials: t for t in targets}
    out = []
    for rec in classes:
        e1, f1 = decompose_top(rec.rep)
        if e1.monomials in by_monomials:
            target, mat = by_monomials[e1.monomials], None
        elif lookup is not None:
            idx = lookup.space.index_of(e1)
            cid = int(lookup.class_of[idx])
            target = lookup.records[cid].rep
            if target.monomials not in by_monomials:
                raise ValueError(f"classified target {format_anf(target)} missing from targets")
            mat = lookup.transversal(idx).inverse()
        else:
            target = mat = None
            for cand in targets:
                found = find_equivalence(e1, cand, max(e1.degree() - 1, 0), budget, rng)
                if found is not None:
                    target, mat = cand, found
                    break
            if target is None:
                raise RuntimeError(
                    f"no target equivalent to {format_anf(e1)} found within the budget"
                )
        if mat is None:
            f_new = f1
        else:
            a = AffineMap(mat, 0)
            if top_image(e1, a) != target:
                raise AssertionError("transversal failed to carry e onto its target")
            f_new = top_image(f1, a) if not f1.is_zero() else f1
        out.append(ClassRecord(rep=attach_top(target, f_new), size=rec.size, gens=()))
    return out


def run_pipeline(
    r: int,
    m: int,
    classes=None,
    strategy: str = "blocks",
    seed: int = 0,
    jobs: int = 1,
    checkpoint: str | None = None,
    counter: MulCounter | None = None,
    cap: int = DEFAULT_CAP,
    max_gens: int = DEFAULT_MAX_GENS,
) -> WeightEnumerator:
    """Full W[z; R(r,m)] via the doubling recursion, r >= 2.

    classes may be None (self-classify H^(r)(m-1)), a classification file
    path, or a list of ClassRecord. The blocks strategy self-classifies
    H^(r)(m-2) for the lower forms, rebases representatives onto those, and
    precomputes the per-form block tables; classes lacking stabilizer gens
    degrade to singleton blocks. Both strategies produce identical output.

    The recursion peels two variables, so m >= 3 is required; use the brute
    oracle for anything smaller.
    """
    if not 2 <= r <= m or m < 3:
        raise ValueError(f"need 2 <= r <= m and m >= 3, got r={r} m={m}")
    rng = random.Random(seed)
    m1, m0, r0 = m - 1, m - 2, r - 2
    if isinstance(classes, (str, os.PathLike)):
        classes, _, _ = ingest_classification(classes, expect_d=r, expect_m=m1)
    elif classes is None:
        classes = QuotientClassification.compute(r, m1, rng, max_gens=max_gens).records
    if strategy == "direct":
        enum_fn = DirectStrategy(r0, m0, cap)
    elif strategy == "blocks":
        lower = QuotientClassification.compute(r, m0, rng, max_gens=max_gens)
        targets = [rec.rep for rec in lower.records]
        classes = rebase_representatives(classes, targets, rng, lookup=lower)
        espace = HomogeneousSpace(m0, r)
        gspace = HomogeneousSpace(m0, r0 + 1)
        gtables = gspace.all_tables()
        tables = {}
        for rec in lower.records:
            part = (
                orbit_partition(rec.rep, rec.gens, r0, m0)
                if rec.gens
                else singleton_partition(rec.rep, r0, m0)
            )
            e_bits = truth_table_from_anf(rec.rep).bits
            rep_words = [e_bits ^ gtables[b[0]] for b in part.blocks]
            raw = batch_coset_enumerators(rep_words, r0, m0, cap=cap, jobs=jobs)
            merged, menums = merge_by_enumerator(part, raw)
            tables[espace.index_of(rec.rep)] = (merged, tuple(menums))
        enum_fn = BlockStrategy(r=r0, m=m0, space=espace, tables=tables)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    dist = distribution_from_classes(
        classes, r, m1, enum_fn, jobs=jobs, checkpoint=checkpoint, counter=counter
    )
    step = 1 << divisibility_exponent(r, m)
    bad = [w for w, c in dist.nonzero_items() if w % step]
    if bad:
        raise AssertionError(f"weights {bad[:4]} violate the 2**k divisibility bound")
    return dist
