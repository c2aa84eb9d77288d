"""Sparse multivariate polynomials with exact coefficients.

A `Ring` fixes an ordered variable tuple and a `FieldSpec`; a
`Polynomial` is a map from exponent tuples to nonzero scalars of that
field.  Zero coefficients are never stored, so structural equality of
the term maps is polynomial equality.  Values are immutable once built
and can be shared freely.

The text grammar (used by `Ring.parse` and `Polynomial.__str__`): terms
joined by ``+``/``-``; a term is an optional ``int`` or ``int/int``
coefficient ``*``-joined with powers ``var^nat``; parentheses may be
exponentiated.  Formatting then reparsing is the identity.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .fields import FieldSpec, QQ
from .orders import GREVLEX, MonomialOrder


class ParseError(ValueError):
    """Syntax or lookup failure while reading polynomial text."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Ring:
    """A polynomial ring k[v1, ..., vn] with a fixed variable order."""

    __slots__ = ("variables", "field", "_index")

    def __init__(self, variables: Iterable[str], field: FieldSpec = QQ) -> None:
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variables in {vs}")
        self.variables = vs
        self.field = field
        self._index = {name: i for i, name in enumerate(vs)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r} in ring {self.variables}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.field.one())

    def constant(self, c) -> "Polynomial":
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Polynomial":
        exp = [0] * self.nvars
        exp[self.index(name)] = 1
        return Polynomial(self, {tuple(exp): self.field.one()})

    def monomial(self, exp: Iterable[int], coeff=None) -> "Polynomial":
        e = tuple(exp)
        if len(e) != self.nvars or any(k < 0 for k in e):
            raise ValueError(f"bad exponent vector {e} for {self.nvars} variables")
        c = self.field.one() if coeff is None else coeff
        if not c:
            return self.zero()
        return Polynomial(self, {e: c})

    def extend(self, *names: str) -> "Ring":
        """The ring with `names` appended after the existing variables."""
        return Ring(self.variables + names, self.field)

    def prepend(self, *names: str) -> "Ring":
        """The ring with `names` placed in front (used for elimination blocks)."""
        return Ring(names + self.variables, self.field)

    def parse(self, text: str) -> "Polynomial":
        return _parse(text, self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ring)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((self.variables, self.field))

    def __repr__(self) -> str:
        return f"Ring({', '.join(self.variables)}; {self.field!r})"


class Polynomial:
    """An element of a `Ring`, stored as {exponent tuple: nonzero scalar}.

    >>> R = Ring(("x", "y"))
    >>> p = R.parse("(x+y)^2")
    >>> str(p)
    'x^2 + 2*x*y + y^2'
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[tuple, object]) -> None:
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_one(self) -> bool:
        n = self.ring.nvars
        return self.terms == {(0,) * n: self.ring.field.one()}

    def constant_value(self):
        """The scalar value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        if not self.terms:
            return self.ring.field.zero()
        return next(iter(self.terms.values()))

    # -- degrees and support --------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def support_variables(self) -> tuple:
        """Names of the variables that actually occur."""
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.variables, used) if u)

    # -- leading data ----------------------------------------------------

    def leading_exponent(self, order: MonomialOrder = GREVLEX) -> tuple:
        if not self.terms:
            raise ValueError("leading term of the zero polynomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.leading_exponent(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        field = self.ring.field
        if lc == field.one():
            return self
        inv = field.inv(lc)
        return Polynomial(self.ring, {e: field.mul(c, inv) for e, c in self.terms.items()})

    # -- ring operations -------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return self.ring.constant(self.ring.field.from_integer(other))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = field.add(terms.get(e, field.zero()), c)
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        field = self.ring.field
        return Polynomial(self.ring, {e: field.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        acc: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                p = field.mul(ca, cb)
                s = field.add(acc.get(e, field.zero()), p)
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ring.constant(self.ring.field.from_integer(other))
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None  # type: ignore[assignment]

    # -- exact division and substitution ----------------------------------

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial":
        """The quotient self/divisor; raises if the division leaves a remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        key = GREVLEX.key
        lt = divisor.leading_exponent(GREVLEX)
        lc = divisor.terms[lt]
        work = dict(self.terms)
        quotient: dict = {}
        while work:
            e = max(work, key=key)
            c = work.pop(e)
            diff = tuple(a - b for a, b in zip(e, lt))
            if any(d < 0 for d in diff):
                raise ValueError("exact_divide: divisor does not divide exactly")
            q = field.div(c, lc)
            quotient[diff] = q
            for ed, cd in divisor.terms.items():
                if ed == lt:
                    continue
                et = tuple(a + b for a, b in zip(diff, ed))
                s = field.sub(work.get(et, field.zero()), field.mul(q, cd))
                if s:
                    work[et] = s
                else:
                    work.pop(et, None)
        return Polynomial(self.ring, quotient)

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Apply the ring map sending each occurring variable to its image.

        Every variable that occurs in the polynomial must be mapped
        (identity entries are fine); all images must share one ring.
        """
        support = self.support_variables()
        target: Ring | None = None
        for v in support:
            if v not in images:
                raise ValueError(f"substitute: variable {v!r} is not mapped")
            r = images[v].ring
            if target is None:
                target = r
            elif r != target:
                raise ValueError("substitute: images live in different rings")
        if target is None:
            # constant polynomial: reinterpret in the common image ring if any
            rings = {img.ring for img in images.values()}
            target = rings.pop() if len(rings) == 1 else self.ring
        field = self.ring.field
        src_index = {v: self.ring.index(v) for v in support}
        powers: dict = {v: {0: target.one(), 1: images[v]} for v in support}

        def power(v: str, n: int) -> "Polynomial":
            cache = powers[v]
            if n not in cache:
                cache[n] = cache[1] ** n
            return cache[n]

        result = target.zero()
        for e, c in self.terms.items():
            term = target.constant(c)
            for v in support:
                k = e[src_index[v]]
                if k:
                    term = term * power(v, k)
            result = result + term
        return result

    # -- ring changes ------------------------------------------------------

    def in_ring(self, target: Ring) -> "Polynomial":
        """Reinterpret in `target`, which must contain all occurring variables."""
        if target == self.ring:
            return self
        if target.field != self.ring.field:
            raise ValueError("in_ring: coefficient fields differ")
        positions = []
        for i, v in enumerate(self.ring.variables):
            positions.append(target._index.get(v, -1))
        n = target.nvars
        terms: dict = {}
        for e, c in self.terms.items():
            out = [0] * n
            for i, k in enumerate(e):
                if k:
                    j = positions[i]
                    if j < 0:
                        raise ValueError(
                            f"in_ring: variable {self.ring.variables[i]!r} missing from target"
                        )
                    out[j] = k
            terms[tuple(out)] = c
        return Polynomial(target, terms)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"<{format_polynomial(self)}>"


# ---------------------------------------------------------------------------
# formatting


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: terms in descending grevlex, grammar-compatible."""
    if not p.terms:
        return "0"
    field = p.ring.field
    names = p.ring.variables
    pieces = []
    for e in sorted(p.terms, key=GREVLEX.key, reverse=True):
        c = p.terms[e]
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        negative = (not p.ring.field.characteristic) and c < 0
        mag = field.format_scalar(field.neg(c) if negative else c)
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = "*".join([mag] + factors)
        pieces.append(("-" if negative else "+", body))
    sign0, body0 = pieces[0]
    out = body0 if sign0 == "+" else "-" + body0
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# parsing (recursive descent over the shared grammar)


class _Parser:
    def __init__(self, text: str, ring: Ring) -> None:
        self.text = text
        self.ring = ring
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def natural(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        return int(self.text[start:self.pos])

    def expression(self) -> Polynomial:
        sign = 1
        if self.peek() == "+":
            self.pos += 1
        elif self.peek() == "-":
            self.pos += 1
            sign = -1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                acc = acc + self.term()
            elif ch == "-":
                self.pos += 1
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            return base ** self.natural()
        return base

    def base(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expression()
            self.take(")")
            return inner
        if ch.isdigit():
            num = self.natural()
            if self.peek() == "/":
                self.pos += 1
                den = self.natural()
                if den == 0:
                    self.error("zero denominator")
                try:
                    return self.ring.constant(self.ring.field.from_fraction(num, den))
                except ValueError as exc:
                    self.error(str(exc))
            return self.ring.constant(self.ring.field.from_integer(num))
        if ch.isalpha():
            self.pos += 1
            name = ch
            if name not in self.ring._index:
                self.pos -= 1
                self.error(f"unknown variable {name!r}")
            return self.ring.variable(name)
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")


def _parse(text: str, ring: Ring) -> Polynomial:
    parser = _Parser(text, ring)
    result = parser.expression()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input")
    return result


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse `text` in `ring` (terms of ints/fractions, ``*``, ``^``, parens)."""
    return _parse(text, ring)


# ---------------------------------------------------------------------------
# greatest common divisors (primitive remainder sequence on the main variable)


def _variable_degree(p: Polynomial, i: int) -> int:
    return max((e[i] for e in p.terms), default=0)


def _coefficients_in(p: Polynomial, i: int) -> dict:
    """View p as univariate in variable i: {exponent: coefficient polynomial}."""
    split: dict = {}
    for e, c in p.terms.items():
        k = e[i]
        stripped = e[:i] + (0,) + e[i + 1:]
        split.setdefault(k, {})[stripped] = c
    return {k: Polynomial(p.ring, terms) for k, terms in split.items()}

def _from_coefficients(ring: Ring, i: int, coeffs: dict) -> Polynomial:
    terms: dict = {}
    for k, poly in coeffs.items():
        for e, c in poly.terms.items():
            terms[e[:i] + (k,) + e[i + 1:]] = c
    return Polynomial(ring, terms)


def _content_and_primitive(p: Polynomial, i: int) -> tuple:
    coeffs = _coefficients_in(p, i)
    content = None
    for poly in coeffs.values():
        content = poly if content is None else _gcd(content, poly)
        if content.is_constant():
            break
    assert content is not None
    if content.is_constant():
        return content, p
    return content, p.exact_divide(content)


def _pseudo_remainder(a: Polynomial, b: Polynomial, i: int) -> Polynomial:
    """Pseudo-remainder of a by b in the variable i (degrees must satisfy a >= b)."""
    ring = a.ring
    cb = _coefficients_in(b, i)
    n = max(cb)
    lead_b = cb[n]
    r = a
    while not r.is_zero():
        cr = _coefficients_in(r, i)
        m = max(cr)
        if m < n:
            break
        lead_r = cr[m]
        shift = ring.monomial(tuple(m - n if j == i else 0 for j in range(ring.nvars)))
        r = lead_b * r - lead_r * shift * b
    return r


def _gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return a.ring.one()
    # main variable: the first ring variable occurring in either operand
    ring = a.ring
    main = None
    for idx in range(ring.nvars):
        if _variable_degree(a, idx) or _variable_degree(b, idx):
            main = idx
            break
    assert main is not None
    da, db = _variable_degree(a, main), _variable_degree(b, main)
    if da == 0 or db == 0:
        # one operand is free of the main variable: only content can be shared
        free, other = (a, b) if da == 0 else (b, a)
        content, _ = _content_and_primitive(other, main)
        return _gcd(free, content)
    if da < db:
        a, b = b, a
    content_a, prim_a = _content_and_primitive(a, main)
    content_b, prim_b = _content_and_primitive(b, main)
    shared = _gcd(content_a, content_b)
    u, v = prim_a, prim_b
    while True:
        r = _pseudo_remainder(u, v, main)
        if r.is_zero():
            result = v
            break
        if _variable_degree(r, main) == 0:
            result = u.ring.one()
            break
        _, r = _content_and_primitive(r, main)
        u, v = v, r
    if not result.is_constant():
        _, result = _content_and_primitive(result, main)
    return shared * result


def gcd_poly(a: Polynomial, b: Polynomial) -> Polynomial:
    """A gcd of a and b, normalized monic under grevlex; gcd with 0 is the
    normalization of the other argument, and gcd(0, 0) = 0."""
    if a.ring != b.ring:
        raise ValueError("gcd of polynomials from different rings")
    g = _gcd(a, b)
    return g.monic(GREVLEX)
