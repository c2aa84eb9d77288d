"""The curve-induced bigrading on k[w,x,y,z] and bihomogeneous decomposition.

A symmetric monomial curve [s^d : s^a t^b : s^b t^a : t^d] induces the
bigrading  w -> (d,0), x -> (a,b), y -> (b,a), z -> (0,d).  Under it any
polynomial splits into bihomogeneous components, ordered here by
ascending first coordinate; the first and last components are the
extremal pieces that drive all downstream gcd and radical conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd

from .fields import FieldSpec, QQ
from .poly import Polynomial, Ring

#: the base ring variables every candidate polynomial lives in
CURVE_VARIABLES = ("w", "x", "y", "z")


@dataclass(frozen=True)
class CurveSpec:
    """Parameters (d, a, b) of the curve [s^d : s^a t^b : s^b t^a : t^d].

    Requires a + b = d, a > b >= 1 and gcd(a, b) = 1.  The classical
    (4, 3, 1) case is the default throughout the command-line tool.
    """

    d: int
    a: int
    b: int
    field: FieldSpec = QQ

    def __post_init__(self) -> None:
        if self.b < 1:
            raise ValueError("curve requires b >= 1")
        if self.a <= self.b:
            raise ValueError("curve requires a > b")
        if self.a + self.b != self.d:
            raise ValueError("curve requires a + b = d")
        if int_gcd(self.a, self.b) != 1:
            raise ValueError("gcd(a,b) must be 1")

    @property
    def ring(self) -> Ring:
        return Ring(CURVE_VARIABLES, self.field)

    def generator_bidegrees(self) -> dict:
        return {
            "w": (self.d, 0),
            "x": (self.a, self.b),
            "y": (self.b, self.a),
            "z": (0, self.d),
        }

    def parametrization(self, target: Ring) -> dict:
        """The map w -> s^d, x -> s^a t^b, y -> s^b t^a, z -> t^d into `target`."""
        s, t = target.variable("s"), target.variable("t")
        return {
            "w": s ** self.d,
            "x": (s ** self.a) * (t ** self.b),
            "y": (s ** self.b) * (t ** self.a),
            "z": t ** self.d,
        }


@dataclass(frozen=True)
class BiDegree:
    i: int
    j: int

    def as_pair(self) -> tuple:
        return (self.i, self.j)


class Decomposition:
    """The bihomogeneous components of a polynomial, ascending in i."""

    __slots__ = ("curve", "components")

    def __init__(self, curve: CurveSpec, components) -> None:
        self.curve = curve
        self.components = tuple(components)

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def i_min(self) -> int:
        return self.components[0][0].i

    @property
    def i_max(self) -> int:
        return self.components[-1][0].i

    @property
    def min_component(self) -> Polynomial:
        return self.components[0][1]

    @property
    def max_component(self) -> Polynomial:
        return self.components[-1][1]

    def total(self) -> Polynomial:
        acc = self.components[0][1].ring.zero()
        for _, part in self.components:
            acc = acc + part
        return acc

    def bidegrees(self) -> tuple:
        return tuple(bd.as_pair() for bd, _ in self.components)


def monomial_bidegree(curve: CurveSpec, ring: Ring, exp: tuple) -> BiDegree:
    weights = curve.generator_bidegrees()
    i = j = 0
    for name, k in zip(ring.variables, exp):
        if not k:
            continue
        if name not in weights:
            raise ValueError(f"variable {name!r} carries no bidegree on this curve")
        wi, wj = weights[name]
        i += wi * k
        j += wj * k
    return BiDegree(i, j)


def bidegree(curve: CurveSpec, monomial: Polynomial) -> BiDegree:
    """Bidegree of a single-term polynomial in w, x, y, z."""
    if len(monomial.terms) != 1:
        raise ValueError("bidegree is defined for a single monomial")
    (exp,) = monomial.terms
    return monomial_bidegree(curve, monomial.ring, exp)


def decompose_bihomogeneous(curve: CurveSpec, f: Polynomial) -> Decomposition:
    """Split f into bihomogeneous components; their sum reproduces f exactly."""
    if f.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    buckets: dict = {}
    for exp, coeff in f.terms.items():
        bd = monomial_bidegree(curve, f.ring, exp)
        buckets.setdefault(bd.as_pair(), {})[exp] = coeff
    parts = [
        (BiDegree(*pair), Polynomial(f.ring, terms))
        for pair, terms in sorted(buckets.items())
    ]
    return Decomposition(curve, parts)


def extremal_components(dec: Decomposition) -> tuple:
    """(min component, max component, i_min, i_max, component count)."""
    return (dec.min_component, dec.max_component, dec.i_min, dec.i_max, dec.count)
