"""Braided space specs: braiding axioms, decorations, JSON round trips."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from gknichols import (BraidedSpaceSpec, DiagonalBraiding, PaleBlockPointSpec,
                       ScalarRing, braid_letters, diagonalize, ghost,
                       interaction, spec_from_json, spec_to_json)
from gknichols.braidings import (Interaction, SpecError, ghost_is_discrete,
                                 principal_realization)

RING = ScalarRing(12)


def _spec(blocks, points, qmat, avals=None):
    return BraidedSpaceSpec(RING, blocks, points, qmat, avals)


def jordan_point_spec(a="1", q22="-1", q12="1", q21="1"):
    return _spec([("1", 2)], [q22], [["1", q12], [q21, q22]], {(2, 1): a})


@st.composite
def random_specs(draw):
    nblocks = draw(st.integers(0, 1))
    npoints = draw(st.integers(2 - 2 * nblocks, 2))
    theta = nblocks + npoints
    blocks = [(draw(st.sampled_from(["1", "-1"])), 2)] * nblocks
    points = [RING.zeta(draw(st.integers(0, 11))) for _ in range(npoints)]
    qmat = [[None] * theta for _ in range(theta)]
    for i in range(theta):
        for j in range(theta):
            if i == j:
                qmat[i][j] = blocks[i][0] if i < nblocks else points[i - nblocks]
            else:
                qmat[i][j] = RING.zeta(draw(st.integers(0, 11)))
    avals = {(j, 1): draw(st.sampled_from(["0", "1", "-1", "1/2"]))
             for j in range(nblocks + 1, theta + 1) for _ in range(nblocks)}
    return _spec(blocks, points, qmat, avals)


def _braid_matrix(spec):
    """R as a map (i, j) -> {(a, b): coeff} on pairs of letter indices."""
    table = {}
    for i in range(spec.nletters):
        for j in range(spec.nletters):
            table[(i, j)] = dict(braid_letters(spec, i, j).terms)
    return table


def _apply(R, vec, pos):
    """Apply R at tensor positions (pos, pos+1) to a dict word->coeff."""
    out = {}
    for word, coeff in vec.items():
        for pair, c in R[(word[pos], word[pos + 1])].items():
            key = word[:pos] + pair + word[pos + 2:]
            acc = out.get(key)
            acc = coeff * c if acc is None else acc + coeff * c
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
    return out


@settings(max_examples=25, deadline=None)
@given(random_specs())
def test_braiding_satisfies_braid_equation(spec):
    R = _braid_matrix(spec)
    one = spec.ring.one()
    n = spec.nletters
    for i in range(n):
        for j in range(n):
            for k in range(n):
                start = {(i, j, k): one}
                lhs = _apply(R, _apply(R, _apply(R, start, 0), 1), 0)
                rhs = _apply(R, _apply(R, _apply(R, start, 1), 0), 1)
                assert lhs == rhs


def test_braiding_on_block_letters():
    spec = jordan_point_spec()
    x1, x1h = spec.letter("x1").idx, spec.letter("x1h").idx
    c = braid_letters(spec, "x1", "x1h")
    # g1 . x_{1h} = eps x_{1h} + x_1, so c(x1 (x) x1h) has two terms
    assert c.coeff((x1h, x1)) == RING.one()
    assert c.coeff((x1, x1)) == RING.one()
    c2 = braid_letters(spec, "x1h", "x1")
    assert c2.coeff((x1, x1h)) == RING.one()
    assert len(c2.terms) == 1


def test_interaction_classes():
    assert interaction(jordan_point_spec(q12="1", q21="1"), 1, 2) \
        == Interaction.WEAK
    assert interaction(jordan_point_spec(q12="-1", q21="1"), 1, 2) \
        == Interaction.MILD
    spec = _spec([("1", 2)], ["-1"], [["1", "z"], ["1", "-1"]])
    assert interaction(spec, 1, 2) == Interaction.STRONG


def test_ghost_sign_convention():
    # eps = +1: ghost = -2a; eps = -1: ghost = a
    plus = jordan_point_spec(a="-1/2")
    assert ghost(plus, 2, 1) == RING.one()
    minus = _spec([("-1", 2)], ["-1"], [["-1", "1"], ["1", "-1"]],
                  {(2, 1): "3"})
    assert ghost(minus, 2, 1) == RING.from_int(3)
    assert ghost_is_discrete(ghost(minus, 2, 1))
    assert not ghost_is_discrete(RING.from_rational(1) / RING.from_int(-2))


def test_diagonalize_forgets_jordan_tail():
    spec = jordan_point_spec(a="1")
    diag = diagonalize(spec)
    assert isinstance(diag, DiagonalBraiding)
    assert diag.dim == 3
    one = RING.one()
    assert diag.q(1, 1) == one and diag.q(2, 2) == one
    assert diag.q(3, 3) == -one
    assert diag.qtilde(1, 2) == one


def test_principal_realization_table():
    spec = jordan_point_spec()
    table = principal_realization(spec)
    assert table[(1, "x1h")] == [("x1h", RING.one()), ("x1", RING.one())]
    assert table[(2, "x2")] == [("x2", -RING.one())]


def test_letter_names_and_lookup():
    spec = jordan_point_spec()
    assert [l.name for l in spec.letters] == ["x1", "x1h", "x2"]
    assert spec.letter("x1h").group == 1
    with pytest.raises(SpecError):
        spec.letter("x9")


def test_spec_validation():
    with pytest.raises(SpecError):
        _spec([("1", 1)], [], [["1"]])
    with pytest.raises(SpecError):
        _spec([], ["0"], [["0"]])
    with pytest.raises(SpecError):
        # diagonal q entry must match the block epsilon
        _spec([("1", 2)], [], [["-1"]])


@settings(max_examples=25, deadline=None)
@given(random_specs())
def test_spec_json_roundtrip_is_byte_identical(spec):
    obj = spec_to_json(spec)
    text = json.dumps(obj, sort_keys=True)
    again = spec_to_json(spec_from_json(json.loads(text)))
    assert json.dumps(again, sort_keys=True) == text


def test_spec_json_ghost_table():
    obj = {
        "ring": {"cyclotomic_order": 1, "params": []},
        "blocks": [{"epsilon": "1", "length": 2}],
        "points": [{"q": "-1"}],
        "q": [["1", "1"], ["1", "-1"]],
        "ghost": {"2,1": "1"},
    }
    spec = spec_from_json(obj)
    # ghost 1 with eps = +1 means a = -1/2
    half = spec.ring.from_rational(1) / spec.ring.from_int(2)
    assert spec.a(2, 1) == -half
    assert ghost(spec, 2, 1).is_one()


def test_pale_spec_letters():
    ring = ScalarRing(1)
    p = PaleBlockPointSpec(ring, "-1", "1", "1", "1")
    assert [l.name for l in p.letters] == ["x1", "x2", "x3"]
    assert p.qtilde().is_one()
    # g2 acts on x2 with a Jordan tail
    assert p.act_letter(2, "x2") == ((1, ring.one()), (0, ring.one()))
