"""The braided tensor algebra T(V).

Elements are exact linear combinations of words in the spec's letters; a word
is stored as a tuple of letter indices.  Words are ordered by length, then
lexicographically on indices, which is the term order used for all pivoting
downstream.
"""

from __future__ import annotations

from .braidings import Letter, SpecError
from .scalars import ParseError, Scalar, parse_scalar


class ElementError(Exception):
    pass


class SpecMismatch(ElementError):
    pass


class NonHomogeneous(ElementError):
    pass


def word_key(word):
    return (len(word), word)


class TensorElement:
    """Exact element of T(V): map word -> nonzero Scalar."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec, terms=None):
        self.spec = spec
        self.terms = {}
        if terms:
            for word, coeff in terms.items():
                if not coeff.is_zero():
                    self.terms[word] = coeff

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, spec):
        return cls(spec)

    @classmethod
    def unit(cls, spec):
        return cls(spec, {(): spec.ring.one()})

    @classmethod
    def letter(cls, spec, key):
        lt = spec.letter(key)
        return cls(spec, {(lt.idx,): spec.ring.one()})

    # -- basic queries ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def coeff(self, word):
        return self.terms.get(word, self.spec.ring.zero())

    def degrees(self):
        return sorted({len(w) for w in self.terms})

    def is_length_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        if len(degs) != 1:
            raise NonHomogeneous("element is not length-homogeneous")
        return degs[0]

    def group_degree(self):
        """The Z^theta degree (letter counts per group index), if homogeneous."""
        deg = None
        for word in self.terms:
            d = [0] * self.spec.ngroups
            for idx in word:
                d[self.spec.group_of(idx) - 1] += 1
            d = tuple(d)
            if deg is None:
                deg = d
            elif deg != d:
                raise NonHomogeneous("element is not Z^theta-homogeneous")
        return deg if deg is not None else (0,) * self.spec.ngroups

    def homogeneous_component(self, n):
        return TensorElement(self.spec,
                             {w: c for w, c in self.terms.items()
                              if len(w) == n})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise SpecMismatch("expected a TensorElement")
        if other.spec is not self.spec:
            raise SpecMismatch("elements from different specs")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            if w in terms:
                s = terms[w] + c
                if s.is_zero():
                    del terms[w]
                else:
                    terms[w] = s
            else:
                terms[w] = c
        out = TensorElement(self.spec)
        out.terms = terms
        return out

    def __neg__(self):
        out = TensorElement(self.spec)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if not isinstance(coeff, Scalar):
            coeff = self.spec.ring.from_rational(coeff)
        if coeff.is_zero():
            return TensorElement(self.spec)
        out = TensorElement(self.spec)
        out.terms = {w: c * coeff for w, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(self.spec.ring.from_int(other))
        self._check(other)
        terms = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = wa + wb
                c = ca * cb
                if w in terms:
                    s = terms[w] + c
                    if s.is_zero():
                        del terms[w]
                    else:
                        terms[w] = s
                else:
                    terms[w] = c
        out = TensorElement(self.spec)
        out.terms = terms
        return out

    def __rmul__(self, coeff):
        if isinstance(coeff, (Scalar, int)):
            return self.scale(coeff)
        return NotImplemented

    def __pow__(self, n: int):
        out = TensorElement.unit(self.spec)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.spec is other.spec and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.spec),
                     tuple(sorted(self.terms.items(),
                                  key=lambda kv: word_key(kv[0])))))

    def __repr__(self):
        return f"TensorElement({print_element(self)})"

    def __str__(self):
        return print_element(self)


# ---------------------------------------------------------------------------
# group action, braiding, commutators, derivations


def act_on_word(spec, group: int, word, coeff=None):
    """g_group . (word) as a dict word -> Scalar."""
    ring = spec.ring
    if coeff is None:
        coeff = ring.one()
    out = {(): coeff}
    for idx in word:
        expansion = spec.act_letter(group, idx)
        new = {}
        for w, c in out.items():
            for tgt, a in expansion:
                key = w + (tgt,)
                v = c * a
                if key in new:
                    s = new[key] + v
                    if s.is_zero():
                        del new[key]
                    else:
                        new[key] = s
                else:
                    new[key] = v
        out = new
    return out


def group_act(spec, group: int, e: TensorElement) -> TensorElement:
    terms = {}
    for word, coeff in e.terms.items():
        for w, c in act_on_word(spec, group, word, coeff).items():
            if w in terms:
                s = terms[w] + c
                if s.is_zero():
                    del terms[w]
                else:
                    terms[w] = s
            else:
                terms[w] = c
    out = TensorElement(spec)
    out.terms = terms
    return out


def act_by_degree(spec, degree, e: TensorElement) -> TensorElement:
    """Apply the group element g_1^{d_1} ... g_theta^{d_theta}."""
    for g, d in enumerate(degree, start=1):
        for _ in range(d):
            e = group_act(spec, g, e)
    return e


def braid_tensors(u: TensorElement, v: TensorElement) -> TensorElement:
    """c(u (x) v) = (g_{deg u} . v) (x) u, as concatenated words."""
    deg = u.group_degree()  # raises NonHomogeneous when needed
    spec = u.spec
    acted = act_by_degree(spec, deg, v)
    out = TensorElement(spec)
    for wv, cv in acted.terms.items():
        for wu, cu in u.terms.items():
            w = wv + wu
            c = cv * cu
            if w in out.terms:
                s = out.terms[w] + c
                if s.is_zero():
                    del out.terms[w]
                else:
                    out.terms[w] = s
            else:
                out.terms[w] = c
    return out


def braided_commutator(u: TensorElement, v: TensorElement) -> TensorElement:
    """[u, v]_c = uv - m(c(u (x) v)); u must be Z^theta-homogeneous."""
    return u * v - braid_tensors(u, v)


def ad_letter(spec, i, v: TensorElement) -> TensorElement:
    return braided_commutator(TensorElement.letter(spec, i), v)


def skew_derivation(spec, i, e: TensorElement) -> TensorElement:
    """partial_i with partial_i(x_j) = delta_ij and the twisted Leibniz rule
    partial_i(xy) = partial_i(x)(g_i . y) + x partial_i(y)."""
    lt = spec.letter(i)
    target, group = lt.idx, lt.group
    terms = {}
    for word, coeff in e.terms.items():
        for pos, idx in enumerate(word):
            if idx != target:
                continue
            prefix = word[:pos]
            suffix = word[pos + 1:]
            for w, c in act_on_word(spec, group, suffix, coeff).items():
                key = prefix + w
                if key in terms:
                    s = terms[key] + c
                    if s.is_zero():
                        del terms[key]
                    else:
                        terms[key] = s
                else:
                    terms[key] = c
    out = TensorElement(spec)
    out.terms = {w: c for w, c in terms.items() if not c.is_zero()}
    return out


# ---------------------------------------------------------------------------
# parsing / printing


def parse_element(text: str, spec, macros=None) -> TensorElement:
    """Parse the element grammar.

    Letters by name (`x1`, `x1h`, ...), `*`, `+`, `-`, `^`, parentheses,
    `{scalar}` coefficients, `ad(x, e)`, `[e1, e2]`, and names from the
    supplied macro table (strings expanded recursively, or elements).
    """
    macros = macros or {}
    pos = [0]

    def skip():
        while pos[0] < len(text) and text[pos[0]].isspace():
            pos[0] += 1

    def peek():
        skip()
        return text[pos[0]] if pos[0] < len(text) else ""

    def expect(ch):
        if peek() != ch:
            raise ParseError(f"expected {ch!r}", pos[0])
        pos[0] += 1

    def parse_sum():
        value = parse_product()
        while True:
            ch = peek()
            if ch == "+":
                pos[0] += 1
                value = value + parse_product()
            elif ch == "-":
                pos[0] += 1
                value = value - parse_product()
            else:
                return value

    def parse_product():
        value = parse_power()
        while True:
            ch = peek()
            if ch == "*":
                pos[0] += 1
                value = value * parse_power()
            elif ch and (ch in "([{" or ch.isalpha() or ch.isdigit()):
                value = value * parse_power()
            else:
                return value

    def parse_power():
        value = parse_atom()
        if peek() == "^":
            pos[0] += 1
            if not peek().isdigit():
                raise ParseError("positive integer exponent expected", pos[0])
            start = pos[0]
            while pos[0] < len(text) and text[pos[0]].isdigit():
                pos[0] += 1
            value = value ** int(text[start:pos[0]])
        return value

    def take_name():
        skip()
        start = pos[0]
        while pos[0] < len(text) and (text[pos[0]].isalnum()
                                      or text[pos[0]] == "_"):
            pos[0] += 1
        return text[start:pos[0]], start

    def parse_atom():
        ch = peek()
        if ch == "(":
            pos[0] += 1
            value = parse_sum()
            expect(")")
            return value
        if ch == "[":
            pos[0] += 1
            left = parse_sum()
            expect(",")
            right = parse_sum()
            expect("]")
            return braided_commutator(left, right)
        if ch == "{":
            start = pos[0]
            depth = 0
            while pos[0] < len(text):
                if text[pos[0]] == "{":
                    depth += 1
                elif text[pos[0]] == "}":
                    depth -= 1
                    if depth == 0:
                        break
                pos[0] += 1
            if depth != 0:
                raise ParseError("unterminated scalar literal", start)
            literal = text[start + 1:pos[0]]
            pos[0] += 1
            coeff = parse_scalar(literal, spec.ring)
            return TensorElement.unit(spec).scale(coeff)
        if ch == "-":
            pos[0] += 1
            return -parse_atom()
        if ch.isdigit():
            start = pos[0]
            while pos[0] < len(text) and text[pos[0]].isdigit():
                pos[0] += 1
            tail = text[pos[0]:pos[0] + 1]
            value = int(text[start:pos[0]])
            if tail == "/":
                pos[0] += 1
                dstart = pos[0]
                while pos[0] < len(text) and text[pos[0]].isdigit():
                    pos[0] += 1
                den = int(text[dstart:pos[0]])
                coeff = spec.ring.from_rational(value, den)
            else:
                coeff = spec.ring.from_int(value)
            return TensorElement.unit(spec).scale(coeff)
        if ch.isalpha() or ch == "_":
            name, start = take_name()
            if name == "ad":
                expect("(")
                inner = parse_sum()
                expect(",")
                arg = parse_sum()
                expect(")")
                return braided_commutator(inner, arg)
            if name in spec.name_to_idx:
                return TensorElement.letter(spec, name)
            if name in macros:
                value = macros[name]
                if isinstance(value, str):
                    value = parse_element(value, spec, macros)
                    macros[name] = value
                return value
            raise ParseError(f"unknown letter or macro {name!r}", start)
        raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end",
                         pos[0])

    value = parse_sum()
    skip()
    if pos[0] != len(text):
        raise ParseError(f"unexpected {text[pos[0]]!r}", pos[0])
    return value


def expression_degree(text: str, spec, macros=None) -> int:
    """Length degree of an element expression, without building the element.

    Walks the same grammar as :func:`parse_element` but only adds up word
    lengths; a sum reports the maximum degree of its terms (scalar-only
    terms count as 0).  Useful for deciding whether an expression is worth
    expanding at a given truncation degree.
    """
    macros = macros or {}
    cache = {}
    pos = [0]

    def skip():
        while pos[0] < len(text) and text[pos[0]].isspace():
            pos[0] += 1

    def peek():
        skip()
        return text[pos[0]] if pos[0] < len(text) else ""

    def expect(ch):
        if peek() != ch:
            raise ParseError(f"expected {ch!r}", pos[0])
        pos[0] += 1

    def parse_sum():
        value = parse_product()
        while True:
            ch = peek()
            if ch == "+" or ch == "-":
                pos[0] += 1
                value = max(value, parse_product())
            else:
                return value

    def parse_product():
        value = parse_power()
        while True:
            ch = peek()
            if ch == "*":
                pos[0] += 1
                value += parse_power()
            elif ch and (ch in "([{" or ch.isalpha() or ch.isdigit()):
                value += parse_power()
            else:
                return value

    def parse_power():
        value = parse_atom()
        if peek() == "^":
            pos[0] += 1
            if not peek().isdigit():
                raise ParseError("positive integer exponent expected", pos[0])
            start = pos[0]
            while pos[0] < len(text) and text[pos[0]].isdigit():
                pos[0] += 1
            value *= int(text[start:pos[0]])
        return value

    def take_name():
        skip()
        start = pos[0]
        while pos[0] < len(text) and (text[pos[0]].isalnum()
                                      or text[pos[0]] == "_"):
            pos[0] += 1
        return text[start:pos[0]], start

    def macro_degree(name):
        if name not in cache:
            value = macros[name]
            if isinstance(value, str):
                cache[name] = expression_degree(value, spec, macros)
            else:
                cache[name] = value.degree()
        return cache[name]

    def parse_atom():
        ch = peek()
        if ch == "(":
            pos[0] += 1
            value = parse_sum()
            expect(")")
            return value
        if ch == "[":
            pos[0] += 1
            left = parse_sum()
            expect(",")
            right = parse_sum()
            expect("]")
            return left + right
        if ch == "{":
            depth = 0
            start = pos[0]
            while pos[0] < len(text):
                if text[pos[0]] == "{":
                    depth += 1
                elif text[pos[0]] == "}":
                    depth -= 1
                    if depth == 0:
                        break
                pos[0] += 1
            if depth != 0:
                raise ParseError("unterminated scalar literal", start)
            pos[0] += 1
            return 0
        if ch == "-":
            pos[0] += 1
            return parse_atom()
        if ch.isdigit():
            while pos[0] < len(text) and text[pos[0]].isdigit():
                pos[0] += 1
            if pos[0] < len(text) and text[pos[0]] == "/":
                pos[0] += 1
                while pos[0] < len(text) and text[pos[0]].isdigit():
                    pos[0] += 1
            return 0
        if ch.isalpha() or ch == "_":
            name, start = take_name()
            if name == "ad":
                expect("(")
                left = parse_sum()
                expect(",")
                right = parse_sum()
                expect(")")
                return left + right
            if name in spec.name_to_idx:
                return 1
            if name in macros:
                return macro_degree(name)
            raise ParseError(f"unknown letter or macro {name!r}", start)
        raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end",
                         pos[0])

    value = parse_sum()
    skip()
    if pos[0] != len(text):
        raise ParseError(f"unexpected {text[pos[0]]!r}", pos[0])
    return value


def print_element(e: TensorElement) -> str:
    if not e.terms:
        return "0"
    parts = []
    names = [l.name for l in e.spec.letters]
    for word in sorted(e.terms, key=word_key):
        coeff = e.terms[word]
        mono = "*".join(names[i] for i in word) if word else "1"
        cs = str(coeff)
        if cs == "1" and word:
            parts.append(mono)
        elif cs == "-1" and word:
            parts.append(f"-{mono}")
        elif word:
            parts.append(f"{{{cs}}}*{mono}")
        else:
            parts.append(f"{{{cs}}}")
    body = parts[0]
    for p in parts[1:]:
        body += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return body
