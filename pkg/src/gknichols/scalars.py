"""Exact coefficient arithmetic.

Scalars live in Q(zeta_N) optionally extended by transcendental parameters;
every value is stored as a normalized rational function so that equality is
decidable.  Internally three representations are used and coerced on demand:

* a plain rational (the common fast path),
* a vector of rationals of length phi(N) in the basis 1, z, ..., z^{phi-1}
  reduced modulo the N-th cyclotomic polynomial,
* a pair numerator/denominator of multivariate polynomials in the declared
  parameters with cyclotomic coefficients, kept coprime with monic
  denominator (leading coefficient 1 under graded-lex order).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _igcd

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _Q


class ScalarError(Exception):
    pass


class DivisionByZero(ScalarError):
    pass


class RingMismatch(ScalarError):
    pass


class ZeroInput(ScalarError):
    pass


class ParseError(ScalarError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownParameter(ParseError):
    pass


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple:
    """Integer coefficients of Phi_n, low degree first."""
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            den = list(cyclotomic_coeffs(d))
            quo = [0] * (len(num) - len(den) + 1)
            rem = list(num)
            for k in range(len(quo) - 1, -1, -1):
                c = rem[k + len(den) - 1]
                quo[k] = c
                if c:
                    for j, dj in enumerate(den):
                        rem[k + j] -= c * dj
            num = quo
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


# ---------------------------------------------------------------------------
# cyclotomic constants: tuples of rationals of length phi(N)


def _cyc_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _cyc_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cyc_neg(a):
    return tuple(-x for x in a)


def _cyc_is_zero(a):
    return all(x == 0 for x in a)


class ScalarRing:
    """Q(zeta_N) with an ordered list of transcendental parameters."""

    def __init__(self, cyclotomic_order: int = 1, params=()):
        if cyclotomic_order < 1:
            raise ScalarError("cyclotomic order must be >= 1")
        params = tuple(params)
        if len(set(params)) != len(params):
            raise ScalarError("parameter names must be distinct")
        self.cyclotomic_order = cyclotomic_order
        self.params = params
        self.phi = euler_phi(cyclotomic_order)
        # reduction table: z^k for phi <= k <= 2*phi - 2 as basis vectors
        mod = cyclotomic_coeffs(cyclotomic_order)
        head = [_Q(-c) for c in mod[:-1]]  # z^phi = head (Phi monic)
        table = []
        prev = head
        table.append(tuple(prev))
        for _ in range(self.phi - 2):
            shifted = [_Q(0)] + prev[:-1]
            top = prev[-1]
            if top:
                shifted = [s + top * h for s, h in zip(shifted, head)]
            prev = shifted
            table.append(tuple(prev))
        self._red = table  # _red[k - phi] = vector of z^k
        self._zero_vec = tuple(_Q(0) for _ in range(self.phi))

    # -- constructors -------------------------------------------------------

    def zero(self) -> "Scalar":
        return Scalar(self, "q", _Q(0))

    def one(self) -> "Scalar":
        return Scalar(self, "q", _Q(1))

    def from_int(self, n) -> "Scalar":
        return Scalar(self, "q", _Q(n))

    def from_rational(self, p, q=1) -> "Scalar":
        return Scalar(self, "q", _Q(p, q))

    def zeta(self, power: int = 1) -> "Scalar":
        n = self.cyclotomic_order
        power %= n
        if self.phi == 1:
            # zeta_1 = 1, zeta_2 = -1
            return self.from_int(1 if n == 1 or power == 0 else (-1) ** power)
        if power < self.phi:
            vec = [_Q(0)] * self.phi
            vec[power] = _Q(1)
            return Scalar(self, "c", tuple(vec))._demote()
        cur = self._red[0]  # z^phi reduced
        for _ in range(power - self.phi):
            cur = self._cyc_mul_z(cur)
        return Scalar(self, "c", cur)._demote()

    def param(self, name: str) -> "Scalar":
        if name not in self.params:
            raise ScalarError(f"unknown parameter {name!r}")
        i = self.params.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.params)))
        num = {exps: self._one_vec()}
        return Scalar(self, "f", (num, self._const_poly(self._one_vec())))

    def _one_vec(self):
        return (_Q(1),) + (_Q(0),) * (self.phi - 1)

    def _const_poly(self, vec):
        if _cyc_is_zero(vec):
            return {}
        return {(0,) * len(self.params): vec}

    # -- cyclotomic multiplication -----------------------------------------

    def _cyc_mul_z(self, a):
        """Multiply by z, reducing mod Phi_N."""
        shifted = [_Q(0)] + list(a[:-1])
        top = a[-1]
        if top:
            red = self._red[0]
            shifted = [s + top * r for s, r in zip(shifted, red)]
        return tuple(shifted)

    def cyc_mul(self, a, b):
        phi = self.phi
        if phi == 1:
            return (a[0] * b[0],)
        conv = [_Q(0)] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                red = self._red[k - phi]
                for j in range(phi):
                    if red[j]:
                        out[j] += c * red[j]
        return tuple(out)

    def cyc_inv(self, a):
        if _cyc_is_zero(a):
            raise DivisionByZero("cyclotomic inverse of zero")
        phi = self.phi
        if phi == 1:
            return (1 / a[0],)
        # solve (mult-by-a matrix) x = e0 by Gaussian elimination
        cols = []
        basis = (_Q(1),) + (_Q(0),) * (phi - 1)
        vec = basis
        for j in range(phi):
            cols.append(self.cyc_mul(a, vec))
            vec = self._cyc_mul_z(vec)
        rows = [[cols[j][i] for j in range(phi)] + [_Q(1) if i == 0 else _Q(0)]
                for i in range(phi)]
        for c in range(phi):
            piv = next((r for r in range(c, phi) if rows[r][c] != 0), None)
            if piv is None:
                raise DivisionByZero("singular cyclotomic element")
            rows[c], rows[piv] = rows[piv], rows[c]
            inv = 1 / rows[c][c]
            rows[c] = [x * inv for x in rows[c]]
            for r in range(phi):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return tuple(rows[i][phi] for i in range(phi))

    def __eq__(self, other):
        return (isinstance(other, ScalarRing)
                and self.cyclotomic_order == other.cyclotomic_order
                and self.params == other.params)

    def __hash__(self):
        return hash((self.cyclotomic_order, self.params))

    def __repr__(self):
        return f"ScalarRing(N={self.cyclotomic_order}, params={list(self.params)})"


# ---------------------------------------------------------------------------
# polynomial helpers (dict exponent-tuple -> cyc vector, no zero entries)


def _grlex_key(exps):
    return (sum(exps), exps)


def _poly_add(ring, a, b):
    out = dict(a)
    for e, c in b.items():
        if e in out:
            s = _cyc_add(out[e], c)
            if _cyc_is_zero(s):
                del out[e]
            else:
                out[e] = s
        else:
            out[e] = c
    return out


def _poly_neg(a):
    return {e: _cyc_neg(c) for e, c in a.items()}


def _poly_mul(ring, a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = ring.cyc_mul(ca, cb)
            if e in out:
                s = _cyc_add(out[e], c)
                if _cyc_is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            elif not _cyc_is_zero(c):
                out[e] = c
    return out


def _poly_scale(ring, a, c):
    if _cyc_is_zero(c):
        return {}
    out = {}
    for e, v in a.items():
        w = ring.cyc_mul(v, c)
        if not _cyc_is_zero(w):
            out[e] = w
    return out


def _poly_lt(a):
    return max(a, key=_grlex_key)


def _poly_divmod(ring, a, b):
    """Multivariate division of a by the single divisor b (grlex)."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    quo = {}
    rem = dict(a)
    eb = _poly_lt(b)
    cb_inv = ring.cyc_inv(b[eb])
    while rem:
        er = _poly_lt(rem)
        diff = tuple(x - y for x, y in zip(er, eb))
        if any(d < 0 for d in diff):
            break
        c = ring.cyc_mul(rem[er], cb_inv)
        quo = _poly_add(ring, quo, {diff: c})
        rem = _poly_add(ring, rem, _poly_neg(_poly_mul(ring, {diff: c}, b)))
    return quo, rem


def _poly_divexact(ring, a, b):
    q, r = _poly_divmod(ring, a, b)
    if r:
        raise ScalarError("inexact polynomial division")
    return q


def _active_vars(*polys):
    vs = set()
    for p in polys:
        for e in p:
            vs.update(i for i, d in enumerate(e) if d > 0)
    return vs


def _poly_to_univar(a, var):
    """Coefficients of a viewed in K[other vars][x_var], as dict deg -> poly."""
    out = {}
    for e, c in a.items():
        d = e[var]
        rest = e[:var] + (0,) + e[var + 1:]
        coeff = out.setdefault(d, {})
        if rest in coeff:
            s = _cyc_add(coeff[rest], c)
            if _cyc_is_zero(s):
                del coeff[rest]
            else:
                coeff[rest] = s
        else:
            coeff[rest] = c
    return {d: c for d, c in out.items() if c}


def _univar_to_poly(u, var):
    out = {}
    for d, poly in u.items():
        for e, c in poly.items():
            full = e[:var] + (d,) + e[var + 1:]
            out[full] = c
    return out


def _poly_gcd(ring, a, b):
    """Monic gcd under grlex; gcd(0, b) = monic(b)."""
    if not a:
        return _poly_monic(ring, b)
    if not b:
        return _poly_monic(ring, a)
    vs = _active_vars(a, b)
    if not vs:
        return {(0,) * len(ring.params): ring._one_vec()}
    var = max(vs)
    ua, ub = _poly_to_univar(a, var), _poly_to_univar(b, var)
    rest_a = _active_vars(*ua.values())
    rest_b = _active_vars(*ub.values())
    if not rest_a and not rest_b:
        g = _univar_field_gcd(ring, ua, ub)
        return _poly_monic(ring, _univar_to_poly(g, var))
    # primitive PRS in K[rest][x_var]
    ca = _content(ring, ua)
    cb = _content(ring, ub)
    cg = _poly_gcd(ring, ca, cb)
    pa = {d: _poly_divexact(ring, p, ca) for d, p in ua.items()}
    pb = {d: _poly_divexact(ring, p, cb) for d, p in ub.items()}
    g = _univar_prs(ring, pa, pb)
    g = {d: p for d, p in g.items() if p}
    cgg = _content(ring, g)
    g = {d: _poly_divexact(ring, p, cgg) for d, p in g.items()}
    result = _poly_mul(ring, _univar_to_poly(g, var), cg)
    return _poly_monic(ring, result)


def _content(ring, u):
    g = {}
    for p in u.values():
        g = _poly_gcd(ring, g, p)
    return g


def _univar_deg(u):
    return max(u) if u else -1


def _univar_field_gcd(ring, a, b):
    """Euclid for univariate polys with cyclotomic-constant coefficients."""
    const = (0,) * len(ring.params)
    while b:
        da, db = _univar_deg(a), _univar_deg(b)
        if da < db:
            a, b = b, a
            continue
        lb_inv = ring.cyc_inv(b[db][const])
        while a and _univar_deg(a) >= db:
            da = _univar_deg(a)
            f = ring.cyc_mul(a[da][const], lb_inv)
            new = dict(a)
            for d, c in b.items():
                k = d + da - db
                cur = new.get(k, {const: ring._zero_vec})
                val = _cyc_sub(cur.get(const, ring._zero_vec),
                               ring.cyc_mul(f, c[const]))
                if _cyc_is_zero(val):
                    new.pop(k, None)
                else:
                    new[k] = {const: val}
            a = new
        a, b = b, a
    return a


def _univar_prs(ring, a, b):
    """Primitive pseudo-remainder sequence; coefficients are polynomials."""
    while b:
        da, db = _univar_deg(a), _univar_deg(b)
        if da < db:
            a, b = b, a
            continue
        lb = b[db]
        # pseudo-divide: multiply a by lb^(da-db+1) then divide
        r = dict(a)
        for _ in range(da - db + 1):
            dr = _univar_deg(r)
            if dr < db or not r:
                break
            lr = r[dr]
            new = {}
            for d, c in r.items():
                new[d] = _poly_mul(ring, c, lb)
            for d, c in b.items():
                k = d + dr - db
                term = _poly_mul(ring, c, lr)
                cur = new.get(k, {})
                val = _poly_add(ring, cur, _poly_neg(term))
                if val:
                    new[k] = val
                else:
                    new.pop(k, None)
            r = new
        # make remainder primitive to control growth
        r = {d: p for d, p in r.items() if p}
        if r:
            c = _content(ring, r)
            r = {d: _poly_divexact(ring, p, c) for d, p in r.items()}
        a, b = b, r
    return a


def _poly_monic(ring, a):
    if not a:
        return a
    lc = a[_poly_lt(a)]
    if lc == ring._one_vec():
        return a
    return _poly_scale(ring, a, ring.cyc_inv(lc))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultOrder:
    """Finite(m) or NotRootOfUnity (order is None)."""

    order: object  # int or None

    @classmethod
    def finite(cls, m: int) -> "MultOrder":
        return cls(int(m))

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def __repr__(self):
        return f"Finite({self.order})" if self.is_finite else "NotRootOfUnity"


NOT_ROOT_OF_UNITY = MultOrder(None)


class Scalar:
    """An exact element of the ring, immutable.

    kind 'q': payload is a rational; kind 'c': cyclotomic vector;
    kind 'f': (numerator, denominator) polynomial pair, normalized.
    """

    __slots__ = ("ring", "kind", "payload", "_hash")

    def __init__(self, ring, kind, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "payload", payload)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- normalization ------------------------------------------------------

    def _demote(self):
        ring, kind, payload = self.ring, self.kind, self.payload
        if kind == "f":
            num, den = payload
            nvars = len(ring.params)
            const = (0,) * nvars
            if set(den) == {const} and den[const] == ring._one_vec():
                if not num:
                    return ring.zero()
                if set(num) == {const}:
                    return Scalar(ring, "c", num[const])._demote()
            return self
        if kind == "c":
            vec = payload
            if all(x == 0 for x in vec[1:]):
                return Scalar(ring, "q", vec[0])
            return self
        return self

    def _as_cyc(self):
        if self.kind == "q":
            return (self.payload,) + (_Q(0),) * (self.ring.phi - 1)
        return self.payload

    def _as_frac(self):
        ring = self.ring
        if self.kind == "f":
            return self.payload
        vec = self._as_cyc()
        return ring._const_poly(vec), ring._const_poly(ring._one_vec())

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        if self.kind == "q":
            return self.payload == 0
        if self.kind == "c":
            return _cyc_is_zero(self.payload)
        return not self.payload[0]

    def is_one(self) -> bool:
        return self == self.ring.one()

    def is_constant(self) -> bool:
        """True when no parameter occurs in the reduced form."""
        return self.kind in ("q", "c")

    def is_rational(self) -> bool:
        return self.kind == "q"

    def as_rational(self):
        if self.kind != "q":
            raise ScalarError("not a rational scalar")
        return self.payload

    def is_integer(self) -> bool:
        return self.kind == "q" and self.payload.denominator == 1

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                return self.ring.from_int(other)
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.kind == "q" and b.kind == "q":
            return Scalar(a.ring, "q", a.payload + b.payload)
        if a.kind != "f" and b.kind != "f":
            return Scalar(a.ring, "c", _cyc_add(a._as_cyc(), b._as_cyc()))._demote()
        ring = a.ring
        (na, da), (nb, db) = a._as_frac(), b._as_frac()
        num = _poly_add(ring, _poly_mul(ring, na, db), _poly_mul(ring, nb, da))
        den = _poly_mul(ring, da, db)
        return _make_frac(ring, num, den)

    __radd__ = __add__

    def __neg__(self):
        if self.kind == "q":
            return Scalar(self.ring, "q", -self.payload)
        if self.kind == "c":
            return Scalar(self.ring, "c", _cyc_neg(self.payload))
        num, den = self.payload
        return Scalar(self.ring, "f", (_poly_neg(num), den))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.kind == "q" and b.kind == "q":
            return Scalar(a.ring, "q", a.payload * b.payload)
        if a.kind == "q" or b.kind == "q":
            # rational times anything: scale cheaply
            if b.kind == "q":
                a, b = b, a
            r = a.payload
            if r == 0:
                return a.ring.zero()
            if b.kind == "c":
                return Scalar(a.ring, "c",
                              tuple(r * x for x in b.payload))._demote()
            num, den = b.payload
            vec = (r,) + (_Q(0),) * (a.ring.phi - 1)
            return Scalar(a.ring, "f",
                          (_poly_scale(a.ring, num, vec), den))._demote()
        if a.kind == "c" and b.kind == "c":
            return Scalar(a.ring, "c",
                          a.ring.cyc_mul(a.payload, b.payload))._demote()
        ring = a.ring
        (na, da), (nb, db) = a._as_frac(), b._as_frac()
        return _make_frac(ring, _poly_mul(ring, na, nb), _poly_mul(ring, da, db))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("scalar inverse of zero")
        if self.kind == "q":
            return Scalar(self.ring, "q", 1 / self.payload)
        if self.kind == "c":
            return Scalar(self.ring, "c",
                          self.ring.cyc_inv(self.payload))._demote()
        num, den = self.payload
        return _make_frac(self.ring, den, num)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- equality / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.ring != other.ring:
            return False
        a, b = self, other
        if a.kind == b.kind:
            if a.kind != "f":
                return a.payload == b.payload
            return a.payload[0] == b.payload[0] and a.payload[1] == b.payload[1]
        if a.kind != "f" and b.kind != "f":
            return a._as_cyc() == b._as_cyc()
        return (a - b).is_zero()

    def __hash__(self):
        if self._hash is None:
            if self.kind == "f":
                num, den = self.payload
                key = ("f", _freeze_poly(num), _freeze_poly(den))
            elif self.kind == "c":
                key = ("c", self.payload)
            else:
                key = ("q", self.payload)
            object.__setattr__(self, "_hash", hash((self.ring, key)))
        return self._hash

    # -- queries ------------------------------------------------------------

    def mult_order(self) -> MultOrder:
        if self.is_zero():
            raise ZeroInput("multiplicative order of zero")
        if self.kind == "f":
            return NOT_ROOT_OF_UNITY
        n = _lcm(2, self.ring.cyclotomic_order)
        if (self ** n) != self.ring.one():
            return NOT_ROOT_OF_UNITY
        for d in sorted(_divisors(n)):
            if (self ** d) == self.ring.one():
                return MultOrder.finite(d)
        raise AssertionError("unreachable")

    # -- printing -----------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return print_scalar(self)


def _freeze_poly(p):
    return tuple(sorted(p.items(), key=lambda kv: _grlex_key(kv[0])))


def _lcm(a, b):
    return a * b // _igcd(a, b)


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _make_frac(ring, num, den):
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return ring.zero()
    g = _poly_gcd(ring, num, den)
    const = (0,) * len(ring.params)
    if set(g) != {const} or g[const] != ring._one_vec():
        num = _poly_divexact(ring, num, g)
        den = _poly_divexact(ring, den, g)
    lc = den[_poly_lt(den)]
    if lc != ring._one_vec():
        inv = ring.cyc_inv(lc)
        num = _poly_scale(ring, num, inv)
        den = _poly_scale(ring, den, inv)
    return Scalar(ring, "f", (num, den))._demote()


# ---------------------------------------------------------------------------
# q-numbers


def qnum(n: int, q: Scalar) -> Scalar:
    """(n)_q = 1 + q + ... + q^{n-1}."""
    total = q.ring.zero()
    power = q.ring.one()
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def qfactorial(n: int, q: Scalar) -> Scalar:
    out = q.ring.one()
    for j in range(1, n + 1):
        out = out * qnum(j, q)
    return out


def qbinom(n: int, i: int, q: Scalar) -> Scalar:
    """Gaussian binomial via the Pascal recursion (never divides)."""
    if not 0 <= i <= n:
        raise ScalarError(f"binom({n},{i}) out of range")
    row = [q.ring.one()]
    for m in range(1, n + 1):
        new = [q.ring.one()]
        for k in range(1, m):
            new.append(row[k - 1] + (q ** k) * row[k])
        new.append(q.ring.one())
        row = new
    return row[i]


# ---------------------------------------------------------------------------
# parsing and printing


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_name(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def take_int(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])


def parse_scalar(text: str, ring: ScalarRing) -> Scalar:
    """Parse the scalar grammar: integers, `p/r`, `z`, params, + - * / ^ ()."""
    toks = _Tokens(text)
    value = _parse_sum(toks, ring)
    toks.skip_ws()
    if toks.pos != len(text):
        raise ParseError(f"unexpected {text[toks.pos]!r}", toks.pos)
    return value


def _parse_sum(toks, ring):
    value = _parse_product(toks, ring)
    while True:
        ch = toks.peek()
        if ch == "+":
            toks.pos += 1
            value = value + _parse_product(toks, ring)
        elif ch == "-":
            toks.pos += 1
            value = value - _parse_product(toks, ring)
        else:
            return value


def _parse_product(toks, ring):
    value = _parse_power(toks, ring)
    while True:
        ch = toks.peek()
        if ch == "*":
            toks.pos += 1
            value = value * _parse_power(toks, ring)
        elif ch == "/":
            toks.pos += 1
            divisor = _parse_power(toks, ring)
            if divisor.is_zero():
                raise DivisionByZero("division by zero in scalar expression")
            value = value / divisor
        else:
            return value


def _parse_power(toks, ring):
    # unary minus binds weaker than ^, so -z^2 means -(z^2)
    if toks.peek() == "-":
        toks.pos += 1
        return -_parse_power(toks, ring)
    value = _parse_atom(toks, ring)
    if toks.peek() == "^":
        toks.pos += 1
        neg = False
        if toks.peek() == "-":
            toks.pos += 1
            neg = True
        if not toks.peek().isdigit():
            raise ParseError("integer exponent expected", toks.pos)
        exp = toks.take_int()
        value = value ** (-exp if neg else exp)
    return value


def _parse_atom(toks, ring):
    ch = toks.peek()
    if ch == "(":
        toks.pos += 1
        value = _parse_sum(toks, ring)
        if toks.peek() != ")":
            raise ParseError("expected ')'", toks.pos)
        toks.pos += 1
        return value
    if ch.isdigit():
        return ring.from_int(toks.take_int())
    if ch.isalpha() or ch == "_":
        pos = toks.pos
        name = toks.take_name()
        if name == "z":
            return ring.zeta()
        if name in ring.params:
            return ring.param(name)
        raise UnknownParameter(f"unknown name {name!r}", pos)
    raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input",
                     toks.pos)


def _print_q(r):
    return str(r)


def _print_cyc(vec, as_factor=False):
    parts = []
    for i, c in enumerate(vec):
        if c == 0:
            continue
        if i == 0:
            parts.append(_print_q(c))
        else:
            var = "z" if i == 1 else f"z^{i}"
            if c == 1:
                parts.append(var)
            elif c == -1:
                parts.append(f"-{var}")
            else:
                parts.append(f"{_print_q(c)}*{var}")
    if not parts:
        return "0"
    body = parts[0]
    for p in parts[1:]:
        body += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    if as_factor and (len(parts) > 1 or "/" in body or body.startswith("-")):
        return f"({body})"
    return body


def _print_poly(ring, p):
    if not p:
        return "0"
    terms = []
    for e in sorted(p, key=_grlex_key, reverse=True):
        factors = []
        for name, d in zip(ring.params, e):
            if d == 1:
                factors.append(name)
            elif d > 1:
                factors.append(f"{name}^{d}")
        coeff = _print_cyc(p[e], as_factor=bool(factors))
        if factors:
            if coeff == "1":
                terms.append("*".join(factors))
            elif coeff == "-1":
                terms.append("-" + "*".join(factors))
            else:
                terms.append(coeff + "*" + "*".join(factors))
        else:
            terms.append(coeff)
    body = terms[0]
    for t in terms[1:]:
        body += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return body


def print_scalar(s: Scalar) -> str:
    if s.kind == "q":
        return _print_q(s.payload)
    if s.kind == "c":
        return _print_cyc(s.payload)
    num, den = s.payload
    ring = s.ring
    const = (0,) * len(ring.params)
    den_is_one = set(den) == {const} and den[const] == ring._one_vec()
    num_str = _print_poly(ring, num)
    if den_is_one:
        return num_str
    den_str = _print_poly(ring, den)
    if len(num) > 1:
        num_str = f"({num_str})"
    if len(den) > 1:
        den_str = f"({den_str})"
    return f"{num_str}/{den_str}"
