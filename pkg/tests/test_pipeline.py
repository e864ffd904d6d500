import random
from math import comb

import pytest

from rmenum.boolfn import (
    HomogeneousSpace,
    attach_top,
    decompose_top,
    parse_anf,
    truth_table_from_anf,
)
from rmenum.classify import (
    QuotientClassification,
    classify_quotient,
    merge_by_enumerator,
    orbit_partition,
    write_classification,
)
from rmenum.cosetenum import batch_coset_enumerators, coset_enumerator
from rmenum.oracle import brute_force_distribution
from rmenum.pipeline import (
    MulCounter,
    coset_enum_blocks,
    coset_enum_split,
    distribution_from_classes,
    rebase_representatives,
    run_pipeline,
)
from rmenum.wenum import WeightEnumerator


def split_reference(e, f, r, m):
    # (e + f x_{m+1}) + R(r+1,m+1) enumerated directly
    p = attach_top(e, f)
    return coset_enumerator(truth_table_from_anf(p).bits, r + 1, m + 1)


def test_split_identity_exhaustive_tiny():
    # r=0, m=2: every homogeneous pair (e of degree 2, f of degree 1)
    e_space = HomogeneousSpace(2, 2)
    f_space = HomogeneousSpace(2, 1)
    for ei in range(e_space.size):
        for fi in range(f_space.size):
            e, f = e_space.anf_of(ei), f_space.anf_of(fi)
            assert coset_enum_split(e, f, 0, 2) == split_reference(e, f, 0, 2)


def test_split_identity_random():
    rng = random.Random(13)
    e_space = HomogeneousSpace(4, 3)
    f_space = HomogeneousSpace(4, 2)
    for _ in range(8):
        e = e_space.anf_of(rng.randrange(e_space.size))
        f = f_space.anf_of(rng.randrange(f_space.size))
        counter = MulCounter()
        got = coset_enum_split(e, f, 1, 4, counter=counter)
        assert got == split_reference(e, f, 1, 4)
        assert counter.count == f_space.size


def test_split_rejects_inhomogeneous():
    with pytest.raises(ValueError, match="homogeneous"):
        coset_enum_split(parse_anf("12", 4), parse_anf("12", 4), 1, 4)


def test_blocks_equal_split_with_fewer_multiplications():
    e = parse_anf("123", 5)
    cls = QuotientClassification.compute(3, 5)
    rec = next(r for r in cls.records if r.rep == e)
    part = orbit_partition(e, rec.gens, 1, 5)
    space = HomogeneousSpace(5, 2)
    e_bits = truth_table_from_anf(e).bits
    tables = space.all_tables()
    raw = batch_coset_enumerators([e_bits ^ tables[b[0]] for b in part.blocks], 1, 5)
    merged, menums = merge_by_enumerator(part, raw)

    f_space = HomogeneousSpace(5, 2)
    rng = random.Random(19)
    for _ in range(4):
        f = f_space.anf_of(rng.randrange(f_space.size))
        c_split = MulCounter()
        c_blocks = MulCounter()
        want = coset_enum_split(e, f, 1, 5, counter=c_split)
        got = coset_enum_blocks(f, merged, menums, counter=c_blocks)
        assert got == want
        assert c_blocks.count == merged.block_count < c_split.count


def test_blocks_requires_aligned_enums():
    part = orbit_partition(parse_anf("0", 3), [], 0, 3)
    with pytest.raises(ValueError, match="per block"):
        coset_enum_blocks(parse_anf("1", 3), part, [])


def test_distribution_from_classes_validates_sizes():
    short = classify_quotient(2, 4)[:-1]
    with pytest.raises(ValueError, match="sum to"):
        distribution_from_classes(short, 2, 4, lambda p: (WeightEnumerator.zero(32), 0))


def test_pipeline_matches_brute_force_small():
    for r, m in [(2, 4), (2, 5), (3, 4)]:
        for strategy in ("direct", "blocks"):
            assert run_pipeline(r, m, strategy=strategy) == brute_force_distribution(r, m)


def test_pipeline_r23_closed_form():
    # R(2,3) is the even-weight code on 8 points
    want = WeightEnumerator(8, [comb(8, w) if w % 2 == 0 else 0 for w in range(9)])
    assert run_pipeline(2, 3) == want


def test_pipeline_r45_closed_form():
    # R(4,5) is the even-weight code on 32 points, past the brute-force cap
    want = WeightEnumerator(32, [comb(32, w) if w % 2 == 0 else 0 for w in range(33)])
    assert run_pipeline(4, 5) == want


def test_pipeline_rejects_bad_parameters():
    with pytest.raises(ValueError):
        run_pipeline(1, 4)
    with pytest.raises(ValueError):
        run_pipeline(2, 2)
    with pytest.raises(ValueError, match="strategy"):
        run_pipeline(2, 4, strategy="magic")


def test_pipeline_accepts_classification_records_and_files(tmp_path):
    records = classify_quotient(3, 4)
    want = run_pipeline(3, 5)
    assert run_pipeline(3, 5, classes=records) == want
    path = tmp_path / "cls.txt"
    write_classification(str(path), records, 3, 4)
    assert run_pipeline(3, 5, classes=str(path)) == want
    # a file for the wrong parameters is rejected before any work
    with pytest.raises(ValueError):
        run_pipeline(2, 5, classes=str(path))


def test_pipeline_jobs_invariance():
    assert run_pipeline(2, 6, jobs=3) == run_pipeline(2, 6)


def test_pipeline_checkpoint_resume(tmp_path):
    ckpt = tmp_path / "ckpt"
    first = MulCounter()
    a = run_pipeline(3, 5, checkpoint=str(ckpt), counter=first)
    assert first.count > 0
    names = sorted(p.name for p in ckpt.iterdir())
    assert names == [f"class_{i:05d}.txt" for i in range(len(names))]
    second = MulCounter()
    b = run_pipeline(3, 5, checkpoint=str(ckpt), counter=second)
    assert a == b
    assert second.count == 0


def test_pipeline_checkpoint_rejects_foreign_files(tmp_path):
    ckpt = tmp_path / "ckpt"
    run_pipeline(3, 5, checkpoint=str(ckpt))
    victim = next(iter(sorted(ckpt.iterdir())))
    text = victim.read_text()
    victim.write_text(text.replace("# size", "# size 9"))
    with pytest.raises(ValueError, match="header"):
        run_pipeline(3, 5, checkpoint=str(ckpt))


def test_rebase_onto_classified_targets():
    lower = QuotientClassification.compute(2, 3)
    targets = [rec.rep for rec in lower.records]
    classes = classify_quotient(2, 4)
    rebased = rebase_representatives(classes, targets, lookup=lower)
    assert [rec.size for rec in rebased] == [rec.size for rec in classes]
    for old, new in zip(classes, rebased):
        e, _ = decompose_top(new.rep)
        assert e in targets
        # same class, same coset enumerator (substitutions preserve R(1,4))
        assert coset_enumerator(new.rep, 1, 4) == coset_enumerator(old.rep, 1, 4)


def test_rebase_by_search():
    # single class, no lookup: equivalence found by randomized search
    from rmenum.classify import ClassRecord

    e_old = parse_anf("123", 5)
    f_old = parse_anf("12", 5)
    rec = ClassRecord(rep=attach_top(e_old, f_old), size=1, gens=())
    target = parse_anf("145", 5)
    out = rebase_representatives([rec], [target], rng=random.Random(21))
    e_new, _ = decompose_top(out[0].rep)
    assert e_new == target
    old_enum, new_enum = batch_coset_enumerators([rec.rep, out[0].rep], 2, 6)
    assert old_enum == new_enum


def test_rebase_identity_when_already_on_target():
    records = classify_quotient(2, 4)
    targets = [decompose_top(rec.rep)[0] for rec in records]
    rebased = rebase_representatives(records, targets, lookup=None)
    assert [rec.rep for rec in rebased] == [rec.rep for rec in records]


def test_pipeline_multiplication_counts():
    blocks = MulCounter()
    run_pipeline(3, 5, strategy="blocks", counter=blocks)
    direct = MulCounter()
    run_pipeline(3, 5, strategy="direct", counter=direct)
    # direct pays the whole product-sum for each class; blocks only the
    # merged block counts
    assert direct.count == len(classify_quotient(3, 4)) * HomogeneousSpace(3, 2).size
    assert 0 < blocks.count < direct.count
