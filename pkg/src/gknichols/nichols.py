"""Degree-by-degree computation of the Nichols algebra B(V).

The defining ideal is computed by the derivation recursion
I(1) = 0,  I(n) = { t in T^n : partial_i(t) in I(n-1) for every letter i },
so B^n = T^n / I(n).  Degree n is obtained by incremental sparse elimination:
words are processed in increasing (length, lex) order and each word either
joins the monomial complement spanning B^n or yields a reduced ideal element
whose leading (largest) monomial is that word.  The per-word coordinates of
all skew derivations in the previous complement are kept, so that degree n
only needs degree n-1 data.

An independent oracle, the quantum symmetrizer, is provided for small degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .braidings import Interaction, interaction
from .freealgebra import (TensorElement, ad_letter, braided_commutator,
                          expression_degree, parse_element, print_element,
                          skew_derivation)
from .scalars import Scalar

DEFAULT_BUDGET = 10 ** 6


class NicholsError(Exception):
    pass


class BudgetExceeded(NicholsError):
    def __init__(self, degree, count, budget):
        super().__init__(
            f"degree {degree} needs {count} monomials (budget {budget})")
        self.degree = degree


class DegreeTooLarge(NicholsError):
    pass


class NotWeak(NicholsError):
    pass


def _vec_addmul(acc, vec, coeff):
    """acc += coeff * vec for sparse dicts of Scalars."""
    for k, v in vec.items():
        w = v * coeff
        cur = acc.get(k)
        if cur is None:
            acc[k] = w
        else:
            s = cur + w
            if s.is_zero():
                del acc[k]
            else:
                acc[k] = s


class NicholsTruncation:
    """Bases of I(n) and monomial complements of B^n for 0 <= n <= max_degree."""

    def __init__(self, spec, max_degree: int, budget: int = DEFAULT_BUDGET):
        self.spec = spec
        self.budget = budget
        self.max_degree = 0
        L = spec.nletters
        one = spec.ring.one()
        self.basis = {0: [()], 1: [(l,) for l in range(L)]}
        self.nf = {
            0: {(): {(): one}},
            1: {(l,): {(l,): one} for l in range(L)},
        }
        self.dims = [1, L]
        self.ideal_dims = [0, 0]
        # NF coordinates of all skew derivations of length-1 words in basis[0]
        self._dcoords = {(l,): [({(): one} if d == l else {})
                                for d in range(L)]
                         for l in range(L)}
        self.extend(max_degree)

    def extend(self, max_degree: int):
        while self.max_degree < max_degree:
            self._advance()

    def _advance(self):
        spec = self.spec
        L = spec.nletters
        n = self.max_degree + 1
        if n == 1:
            self.max_degree = 1
            return
        count = L ** n
        if count > self.budget:
            raise BudgetExceeded(n, count, self.budget)
        prev_d = self._dcoords
        nf_prev = self.nf[n - 1]
        nf_pp = self.nf[n - 2] if n >= 2 else None
        act = spec._act
        group_of = spec.group_of
        ring = spec.ring
        one = ring.one()

        pivots = {}
        basis_n = []
        nf_n = {}
        new_d = {}
        for w in product(range(L), repeat=n):
            prefix, last = w[:-1], w[-1]
            pd = prev_d[prefix]
            nfp = nf_prev.get(prefix)
            dvecs = []
            img = {}
            for d in range(L):
                acc = {}
                g = group_of(d)
                expansion = act[g - 1][last]
                for u, alpha in pd[d].items():
                    for tgt, beta in expansion:
                        vec = nf_prev[u + (tgt,)]
                        if vec:
                            _vec_addmul(acc, vec, alpha * beta)
                if d == last and nfp:
                    _vec_addmul(acc, nfp, one)
                dvecs.append(acc)
                for cw, cc in acc.items():
                    img[(d, cw)] = cc
            new_d[w] = dvecs
            # incremental elimination with expression tracking
            expr = {}
            while img:
                key = max(img)
                hit = pivots.get(key)
                if hit is None:
                    break
                rv, ex = hit
                alpha = img.pop(key)
                for k, v in rv.items():
                    if k == key:
                        continue
                    s = img.get(k, None)
                    t = (-alpha) * v if s is None else s - alpha * v
                    if t.is_zero():
                        img.pop(k, None)
                    else:
                        img[k] = t
                _vec_addmul(expr, ex, alpha)
            if not img:
                nf_n[w] = expr  # w is congruent to expr modulo I(n)
            else:
                lead = max(img)
                inv = img[lead].inverse()
                rv = {k: v * inv for k, v in img.items()}
                ex = {w: inv}
                for cw, cc in expr.items():
                    val = -cc * inv
                    if not val.is_zero():
                        ex[cw] = val
                pivots[lead] = (rv, ex)
                basis_n.append(w)
                nf_n[w] = {w: one}
        self.basis[n] = basis_n
        self.nf[n] = nf_n
        self.dims.append(len(basis_n))
        self.ideal_dims.append(L ** n - len(basis_n))
        self._dcoords = new_d
        self.max_degree = n

    # ------------------------------------------------------------------

    def normal_form_vector(self, e: TensorElement, n: int) -> dict:
        """Coordinates of the degree-n component of e in the complement basis."""
        nf_n = self.nf[n]
        acc = {}
        for w, c in e.terms.items():
            if len(w) == n:
                _vec_addmul(acc, nf_n[w], c)
        return acc

    def normal_form(self, e: TensorElement) -> TensorElement:
        out = TensorElement(self.spec)
        for n in e.degrees():
            if n > self.max_degree:
                raise DegreeTooLarge(
                    f"degree {n} exceeds truncation {self.max_degree}")
            for w, c in self.normal_form_vector(e, n).items():
                out.terms[w] = c
        return out

    def ideal_basis(self, n: int):
        """Reduced basis of I(n): one vector per non-complement word."""
        out = []
        one = self.spec.ring.one()
        comp = set(self.basis[n])
        for w, vec in sorted(self.nf[n].items()):
            if w in comp:
                continue
            tail = TensorElement(self.spec)
            tail.terms = dict(vec)
            elt = TensorElement(self.spec)
            elt.terms = {w: one}
            out.append(elt - tail)
        return out


def compute_truncation(spec, max_degree: int,
                       budget: int = DEFAULT_BUDGET) -> NicholsTruncation:
    return NicholsTruncation(spec, max_degree, budget)


def is_zero_in_nichols(e: TensorElement, trunc: NicholsTruncation):
    """(is_zero, witness): witness is a nonzero reduced form when not zero.

    Components of degree <= max_degree reduce through the stored tables; one
    degree above only needs all skew derivations to land in the ideal, and the
    recursion extends this to any finite overshoot.
    """
    spec = trunc.spec
    for n in e.degrees():
        comp = e.homogeneous_component(n)
        ok, witness = _component_zero(comp, n, trunc)
        if not ok:
            return False, witness
    return True, None


def _component_zero(comp, n, trunc):
    if n == 0:
        return comp.is_zero(), (None if comp.is_zero() else comp)
    if n <= trunc.max_degree:
        vec = trunc.normal_form_vector(comp, n)
        if vec:
            out = TensorElement(trunc.spec)
            out.terms = vec
            return False, out
        return True, None
    spec = trunc.spec
    for lt in spec.letters:
        de = skew_derivation(spec, lt, comp)
        if de.is_zero():
            continue
        ok, witness = _component_zero(de, n - 1, trunc)
        if not ok:
            return False, witness
    return True, None


# ---------------------------------------------------------------------------
# quantum symmetrizer oracle


def _apply_braid_at(spec, e_terms, pos):
    """Apply c at tensor positions (pos, pos+1) to a word-keyed dict."""
    from .braidings import braid_letters
    out = {}
    for word, coeff in e_terms.items():
        br = braid_letters(spec, word[pos], word[pos + 1])
        for w2, c2 in br.terms.items():
            t = word[:pos] + w2 + word[pos + 2:]
            c = coeff * c2
            cur = out.get(t)
            if cur is None:
                out[t] = c
            else:
                s = cur + c
                if s.is_zero():
                    del out[t]
                else:
                    out[t] = s
    return out


def quantum_symmetrizer(spec, n: int) -> dict:
    """S_n on T^n as a table word -> dict(word -> Scalar).

    Built by the Matsumoto recursion
    S_m = (1 + c_1 + c_2 c_1 + ... + c_{m-1}...c_1) (id (x) S_{m-1}),
    where the right-to-left operator products apply c_1 first, so each
    shuffle term extends the previous one by a single braiding.
    """
    if n > 4:
        raise DegreeTooLarge("symmetrizer oracle capped at degree 4")
    L = spec.nletters
    one = spec.ring.one()
    table = {(l,): {(l,): one} for l in range(L)}
    for m in range(2, n + 1):
        new = {}
        for w in product(range(L), repeat=m):
            # apply id (x) S_{m-1}
            v = {}
            for u, cu in table[w[1:]].items():
                v[w[:1] + u] = cu
            acc = dict(v)
            cur = v
            for j in range(1, m):
                cur = _apply_braid_at(spec, cur, j - 1)
                for t, c in cur.items():
                    cur2 = acc.get(t)
                    if cur2 is None:
                        acc[t] = c
                    else:
                        s = cur2 + c
                        if s.is_zero():
                            del acc[t]
                        else:
                            acc[t] = s
            new[w] = acc
        table = new
    return table


def quantum_symmetrizer_kernel(spec, n: int):
    """Echelon basis of ker S_n in T^n (one vector per dependent word)."""
    if n == 1:
        return []
    table = quantum_symmetrizer(spec, n)
    pivots = {}
    kernel = []
    L = spec.nletters
    for w in product(range(L), repeat=n):
        img = dict(table[w])
        expr = {}
        while img:
            key = max(img)
            hit = pivots.get(key)
            if hit is None:
                break
            rv, ex = hit
            alpha = img.pop(key)
            for k, v in rv.items():
                if k == key:
                    continue
                s = img.get(k)
                t = (-alpha) * v if s is None else s - alpha * v
                if t.is_zero():
                    img.pop(k, None)
                else:
                    img[k] = t
            _vec_addmul(expr, ex, alpha)
        if not img:
            elt = TensorElement(spec)
            elt.terms = {w: spec.ring.one()}
            tail = TensorElement(spec)
            tail.terms = dict(expr)
            kernel.append(elt - tail)
        else:
            lead = max(img)
            inv = img[lead].inverse()
            rv = {k: v * inv for k, v in img.items()}
            ex = {w: inv}
            for cw, cc in expr.items():
                val = -cc * inv
                if not val.is_zero():
                    ex[cw] = val
            pivots[lead] = (rv, ex)
    return kernel


# ---------------------------------------------------------------------------
# presentations


@dataclass
class Presentation:
    """A named presentation: relations as parseable strings plus PBW data.

    ``pbw`` entries are (label, degree, height); height None means infinite.
    """

    name: str
    relations: list
    pbw: list
    gk: int
    macros: dict = field(default_factory=dict)
    is_domain: bool = False
    params: dict = field(default_factory=dict)


def pbw_hilbert_coeffs(p: Presentation, nstar: int):
    """Coefficients up to t^nstar of the PBW generating function."""
    series = [1] + [0] * nstar
    for _, degree, height in p.pbw:
        if degree < 1:
            raise NicholsError("PBW generator degrees must be >= 1")
        factor = [0] * (nstar + 1)
        k = 0
        while True:
            d = k * degree
            if d > nstar or (height is not None and k >= height):
                break
            factor[d] = 1
            k += 1
        out = [0] * (nstar + 1)
        for i, a in enumerate(series):
            if a:
                for j, b in enumerate(factor):
                    if b and i + j <= nstar:
                        out[i + j] += a * b
        series = out
    return series


def verify_presentation(p: Presentation, spec, nstar: int,
                        budget: int = DEFAULT_BUDGET,
                        progress=None) -> dict:
    """Check every relation vanishes in B(V) and graded dims match the PBW
    generating function up to degree nstar."""
    trunc = compute_truncation(spec, nstar, budget)
    macros = dict(p.macros)
    report = {"name": p.name, "relations": [], "pass": True}
    for rel in p.relations:
        deg = expression_degree(rel, spec, p.macros)
        if deg > nstar:
            report["relations"].append(
                {"relation": rel, "zero": None, "skipped_degree": deg})
            if progress:
                progress(f"relation skipped (degree {deg} > {nstar}): {rel}")
            continue
        e = parse_element(rel, spec, macros)
        zero, witness = is_zero_in_nichols(e, trunc)
        entry = {"relation": rel, "zero": zero}
        if not zero:
            entry["witness"] = print_element(witness)
            report["pass"] = False
        report["relations"].append(entry)
        if progress:
            progress(f"relation {'ok' if zero else 'FAIL'}: {rel}")
    expected = pbw_hilbert_coeffs(p, nstar)
    got = trunc.dims[: nstar + 1]
    report["dims"] = got
    report["pbw_dims"] = expected
    if got != expected:
        report["pass"] = False
    return report


# ---------------------------------------------------------------------------
# mu sequences and z elements


def mu_sequence(eps: Scalar, a: Scalar, nstar: int):
    """mu_0 = 1, mu_{2k+1} = -(a + k eps) mu_{2k},
    mu_{2k} = (a + k + eps(a + k - 1)) mu_{2k-1}."""
    ring = eps.ring
    out = [ring.one()]
    for n in range(1, nstar + 1):
        k = n // 2
        kk = ring.from_int(k)
        if n % 2 == 1:
            out.append(-(a + kk * eps) * out[-1])
        else:
            out.append((a + kk + eps * (a + kk - ring.one())) * out[-1])
    return out


def mu_rank2(q11: Scalar, qt: Scalar, k: int) -> Scalar:
    """prod_{i<k} (1 - q11^i * q12 q21), the rank-2 diagonal mu_k."""
    ring = q11.ring
    out = ring.one()
    power = ring.one()
    for _ in range(k):
        out = out * (ring.one() - power * qt)
        power = power * q11
    return out


def z_element(spec, k: int, j: int, n: int, check: bool = True,
              budget: int = DEFAULT_BUDGET):
    """(ad_c x_{k+1/2})^n x_j, with the derivation/mu cross-check.

    The cross-check verifies, in B(V), that the point derivation of the
    result equals mu_n times x_k^{n mod 2} x_{(k+1/2)k}^{floor(n/2)}.
    Returns (element, check_ok); check_ok is None when check is disabled.
    """
    if interaction(spec, k, j) is not Interaction.WEAK:
        raise NotWeak(f"interaction between block {k} and point {j} not weak")
    half = f"x{k}h"
    e = TensorElement.letter(spec, f"x{j}")
    for _ in range(n):
        e = ad_letter(spec, half, e)
    if not check or n == 0:
        return e, (None if not check else True)
    eps = spec.epsilon(k)
    a = spec.a(j, k)
    mus = mu_sequence(eps, a, n)
    xk = TensorElement.letter(spec, f"x{k}")
    xkh = TensorElement.letter(spec, half)
    x21 = braided_commutator(xkh, xk)
    m = n // 2
    expect = x21 ** m
    if n % 2 == 1:
        expect = xk * expect
    expect = expect.scale(mus[n])
    got = skew_derivation(spec, f"x{j}", e)
    trunc = compute_truncation(spec, n, budget)
    ok, _ = is_zero_in_nichols(got - expect, trunc)
    return e, ok


# ---------------------------------------------------------------------------
# infinite-GK probe


def infinite_probe(spec, i, j, count: int, nstar: int,
                   budget: int = DEFAULT_BUDGET) -> dict:
    """Build y_k = ad(x_i)^k x_j and reduce ordered products in B.

    Evidence only: INFINITE when all tested ordered products are linearly
    independent, INCONCLUSIVE otherwise.
    """
    trunc = compute_truncation(spec, nstar, budget)
    ys = []
    e = TensorElement.letter(spec, j)
    for k in range(count):
        if k:
            e = ad_letter(spec, i, e)
        if e.degree() > nstar:
            break
        ys.append((k, e))
    nonzero = []
    for k, y in ys:
        zero, _ = is_zero_in_nichols(y, trunc)
        if not zero:
            nonzero.append((k, y))
    # ordered products y_{k1}...y_{kl}, k1 < ... < kl, within degree budget
    products = []

    def build(start, current, degree):
        for pos in range(start, len(nonzero)):
            k, y = nonzero[pos]
            d = degree + y.degree()
            if d > nstar:
                continue
            prod = current * y if current is not None else y
            products.append((tuple(), prod))
            build(pos + 1, prod, d)

    build(0, None, 0)
    vectors = []
    for _, prod in products:
        n = prod.degree()
        vec = trunc.normal_form_vector(prod, n)
        vectors.append({(n,) + w: c for w, c in vec.items()})
    # independence by elimination
    pivots = {}
    dependent = 0
    for vec in vectors:
        img = dict(vec)
        while img:
            key = max(img)
            hit = pivots.get(key)
            if hit is None:
                break
            alpha = img.pop(key)
            for kk, v in hit.items():
                if kk == key:
                    continue
                s = img.get(kk)
                t = (-alpha) * v if s is None else s - alpha * v
                if t.is_zero():
                    img.pop(kk, None)
                else:
                    img[kk] = t
        if not img:
            dependent += 1
        else:
            lead = max(img)
            inv = img[lead].inverse()
            pivots[lead] = {k: v * inv for k, v in img.items()}
    evidence = "INFINITE" if (dependent == 0 and len(nonzero) >= 2
                              and len(products) > len(nonzero)) \
        else "INCONCLUSIVE"
    return {
        "evidence": evidence,
        "nonzero_y": [k for k, _ in nonzero],
        "products_tested": len(products),
        "dependencies": dependent,
    }
