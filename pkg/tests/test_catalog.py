"""Catalog entries: verification, GK agreement, lookup and composition."""

import pytest

from gknichols import (BraidedSpaceSpec, FiniteGK, PaleBlockPointSpec,
                       classify, classify_pale)
from gknichols import catalog
from tests.conftest import entry_instance, entry_report

# (entry, params, verification degree at desk scale)
ENTRY_CASES = [
    ("jordan", {}, 7),
    ("super_jordan", {}, 7),
    ("lstr(1,G)", {"G": 1}, 6),
    ("lstr(1,G)", {"G": 2}, 6),
    ("lstr(-1,G)", {"G": 1}, 6),
    ("lstr(-1,G)", {"G": 2}, 6),
    ("lstr_-(1,G)", {"G": 1}, 6),
    ("lstr_-(1,G)", {"G": 2}, 6),
    ("lstr_-(-1,G)", {"G": 1}, 6),
    ("lstr_-(-1,G)", {"G": 2}, 6),
    ("lstr(omega,1)", {}, 6),
    ("cyc1", {}, 7),
    ("cyc2", {}, 7),
    ("lstr(A(1|0)1;r)", {"r": 4}, 6),
    ("lstr(A(1|0)1;r)", {"r": "generic"}, 6),
    ("lstr(A(1|0)2;omega)", {}, 6),
    ("lstr(A(1|0)3;omega)", {}, 6),
    ("lstr(A2,2)", {}, 6),
    ("lstr(A(2|0)1;omega)", {}, 5),
    ("lstr(D(2|1);omega)", {}, 5),
    ("lstr(A_theta-1)", {"theta": 3}, 6),
    ("poseidon", {}, 5),
    ("eny_plus", {}, 6),
    ("eny_minus", {}, 6),
    ("eny_star", {}, 6),
]


@pytest.mark.parametrize("name,params,degree", ENTRY_CASES,
                         ids=[f"{n}-{p}" for n, p, _ in ENTRY_CASES])
def test_entry_presentation_verifies(name, params, degree):
    report = entry_report(name, params, degree)
    assert report["pass"], report
    assert report["dims"] == report["pbw_dims"]


@pytest.mark.parametrize("name,params,degree", ENTRY_CASES,
                         ids=[f"{n}-{p}" for n, p, _ in ENTRY_CASES])
def test_entry_gk_matches_classifier(name, params, degree):
    spec, pres = entry_instance(name, params)
    if isinstance(spec, PaleBlockPointSpec):
        verdict = classify_pale(spec)
    else:
        verdict = classify(spec)
    assert isinstance(verdict, FiniteGK)
    assert verdict.gk == pres.gk


DOMAINS = {"jordan", "lstr(1,G)", "lstr_-(1,G)", "poseidon"}


@pytest.mark.parametrize("name,params,degree", ENTRY_CASES,
                         ids=[f"{n}-{p}" for n, p, _ in ENTRY_CASES])
def test_entry_domain_flags(name, params, degree):
    spec, pres = entry_instance(name, params)
    if isinstance(spec, PaleBlockPointSpec):
        assert not pres.is_domain
        return
    verdict = classify(spec)
    assert verdict.is_domain == pres.is_domain


def test_list_entries_is_stable():
    names = catalog.list_entries()
    assert names == sorted(set(names), key=names.index)
    assert "jordan" in names and "compose" in names


def test_unknown_entry_raises():
    with pytest.raises(catalog.CatalogError):
        catalog.instantiate("nonsense", {})
    with pytest.raises(catalog.CatalogError):
        catalog.instantiate("lstr(A_theta-1)", {"theta": 7})


def test_lookup_roundtrip():
    for name, params in [("lstr(1,G)", {"G": 1}), ("cyc1", {}),
                         ("lstr(A(1|0)2;omega)", {})]:
        spec, pres = entry_instance(name, params)
        from gknichols.flourished import build_flourished
        found = catalog.lookup(build_flourished(spec))
        assert any(n == name for n, _ in found), (name, found)


def test_compose_two_components():
    spec, pres = catalog.compose([("lstr(1,G)", {"G": 1}),
                                  ("lstr(-1,G)", {"G": 1})])
    assert isinstance(spec, BraidedSpaceSpec)
    # one shared block, one point per component
    assert spec.t == 1 and spec.theta == 3
    verdict = classify(spec)
    assert isinstance(verdict, FiniteGK)
    assert verdict.gk == pres.gk == 4
    from gknichols import verify_presentation
    report = verify_presentation(pres, spec, 4)
    assert report["pass"], report


def test_compose_single_item_passthrough():
    spec, pres = catalog.compose([("jordan", {})])
    direct_spec, direct_pres = entry_instance("jordan")
    assert pres.relations == direct_pres.relations
    assert spec.t == direct_spec.t


def test_compose_rejects_mild_components():
    with pytest.raises(catalog.CatalogError):
        catalog.compose([("cyc1", {}), ("lstr(1,G)", {"G": 1})])
