"""Truncation engine, symmetrizer oracle, mu/z machinery, verification."""

import pytest

from gknichols import (BraidedSpaceSpec, Presentation, ScalarRing,
                       TensorElement, compute_truncation, infinite_probe,
                       is_zero_in_nichols, mu_sequence, parse_element,
                       pbw_hilbert_coeffs, quantum_symmetrizer_kernel,
                       verify_presentation, z_element)
from gknichols.nichols import BudgetExceeded, NotWeak, mu_rank2
from tests.conftest import entry_instance

RING = ScalarRing(1)


def test_jordan_plane_dims_and_ideal():
    spec, pres = entry_instance("jordan")
    trunc = compute_truncation(spec, 6)
    assert trunc.dims[:7] == [1, 2, 3, 4, 5, 6, 7]
    # the quadratic ideal starts with one relation in degree 2
    assert trunc.ideal_dims[2] == 1
    rel = parse_element(pres.relations[0], spec, pres.macros)
    zero, witness = is_zero_in_nichols(rel, trunc)
    assert zero and witness is None


def test_nonzero_element_has_witness():
    spec, _ = entry_instance("jordan")
    trunc = compute_truncation(spec, 3)
    e = parse_element("x1 x1h", spec)
    zero, witness = is_zero_in_nichols(e, trunc)
    assert not zero and witness is not None


def test_extend_matches_fresh_computation():
    spec, _ = entry_instance("super_jordan")
    t1 = compute_truncation(spec, 3)
    t1.extend(5)
    t2 = compute_truncation(spec, 5)
    assert t1.dims[:6] == t2.dims[:6]
    assert t1.ideal_dims[:6] == t2.ideal_dims[:6]


def test_budget_is_enforced():
    spec, _ = entry_instance("cyc2")
    with pytest.raises(BudgetExceeded):
        compute_truncation(spec, 6, budget=10)


def test_symmetrizer_kernel_equals_ideal():
    for name in ("jordan", "super_jordan", "cyc1"):
        spec, _ = entry_instance(name)
        trunc = compute_truncation(spec, 4)
        for n in range(2, 5):
            kernel = quantum_symmetrizer_kernel(spec, n)
            assert len(kernel) == trunc.ideal_dims[n]
            for vec in kernel:
                e = vec if isinstance(vec, TensorElement) \
                    else TensorElement(spec, vec)
                zero, _ = is_zero_in_nichols(e, trunc)
                assert zero


def test_pbw_hilbert_coeffs():
    # two height-infinity degree-1 generators: polynomial algebra growth
    p = Presentation(name="poly2", relations=[],
                     pbw=[("x", 1, None), ("y", 1, None)], gk=2)
    assert pbw_hilbert_coeffs(p, 5) == [1, 2, 3, 4, 5, 6]
    # height-2 generators truncate their geometric factor
    p2 = Presentation(name="ext2", relations=[],
                      pbw=[("x", 1, 2), ("y", 2, 2)], gk=0)
    assert pbw_hilbert_coeffs(p2, 4) == [1, 1, 1, 1, 0]


def test_verify_presentation_reports_failures():
    spec, pres = entry_instance("jordan")
    bad = Presentation(name="bad", relations=["x1 x1h - x1h x1"],
                       pbw=list(pres.pbw), gk=2, macros=dict(pres.macros))
    report = verify_presentation(bad, spec, 4)
    assert not report["pass"]
    failed = [r for r in report["relations"] if r["zero"] is False]
    assert failed and "witness" in failed[0]


def test_verify_presentation_skips_deep_relations():
    spec, pres = entry_instance("jordan")
    deep = Presentation(name="deep", relations=list(pres.relations)
                        + ["x1^40"], pbw=list(pres.pbw), gk=2,
                        macros=dict(pres.macros))
    report = verify_presentation(deep, spec, 4)
    skipped = [r for r in report["relations"] if r.get("skipped_degree")]
    assert skipped and skipped[0]["skipped_degree"] == 40
    assert report["pass"]


MU_CASES = [
    # (entry, G, bound): bound = G for eps = +1 blocks, 2G for eps = -1
    ("lstr(1,G)", 1, 1), ("lstr(1,G)", 2, 2),
    ("lstr(-1,G)", 1, 1), ("lstr(-1,G)", 2, 2),
    ("lstr_-(1,G)", 1, 2), ("lstr_-(1,G)", 2, 4),
    ("lstr_-(-1,G)", 1, 2), ("lstr_-(-1,G)", 2, 4),
]


@pytest.mark.parametrize("name,G,bound", MU_CASES)
def test_mu_zeros_match_z_vanishing(name, G, bound):
    spec, _ = entry_instance(name, {"G": G})
    mus = mu_sequence(spec.epsilon(1), spec.a(2, 1), bound + 1)
    assert all(not m.is_zero() for m in mus[:bound + 1])
    assert mus[bound + 1].is_zero()
    trunc = compute_truncation(spec, bound + 2)
    for n in range(1, bound + 2):
        e, check_ok = z_element(spec, 1, 2, n)
        assert check_ok
        zero, _ = is_zero_in_nichols(e, trunc)
        assert zero == (n > bound)


def test_mu_rank2_vanishing():
    ring = ScalarRing(6)
    q11 = ring.zeta(1)  # order 6
    qt = q11 ** -2
    # factor (1 - q11^i qt) vanishes first at i = 2
    assert not mu_rank2(q11, qt, 2).is_zero()
    assert mu_rank2(q11, qt, 3).is_zero()


def test_z_element_requires_weak_interaction():
    spec, _ = entry_instance("cyc1")
    with pytest.raises(NotWeak):
        z_element(spec, 1, 2, 1)


def test_infinite_probe_report_shape():
    spec, _ = entry_instance("jordan")
    report = infinite_probe(spec, 0, 1, 3, 4)
    assert report["evidence"] in ("INFINITE", "INCONCLUSIVE")
    assert set(report) >= {"evidence", "nonzero_y", "products_tested",
                           "dependencies"}
