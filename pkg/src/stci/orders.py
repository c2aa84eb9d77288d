"""Monomial orders: lex, graded reverse lex, and elimination block orders.

An order exposes a `key` function mapping an exponent tuple to something
totally ordered by Python tuple comparison, with larger keys meaning
larger monomials.  All orders here are compatible with multiplication,
so they are legal for Groebner basis computations.
"""

from __future__ import annotations

from typing import Sequence


def _grevlex_key(exp: Sequence[int]):
    # Higher total degree wins; ties are broken by the smaller exponent on
    # the last variable where they differ (reverse lexicographic).
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _lex_key(exp: Sequence[int]):
    return tuple(exp)


class MonomialOrder:
    """A total monomial order identified by kind and, for blocks, a front size.

    ``block`` orders compare the leading ``front`` exponents by grevlex
    first and the remaining ones by grevlex second; they eliminate
    exactly the front variables.
    """

    __slots__ = ("kind", "front")

    def __init__(self, kind: str, front: int = 0) -> None:
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and front < 1:
            raise ValueError("block order needs a nonempty front block")
        self.kind = kind
        self.front = front if kind == "block" else 0

    def key(self, exp: Sequence[int]):
        if self.kind == "grevlex":
            return _grevlex_key(exp)
        if self.kind == "lex":
            return _lex_key(exp)
        k = self.front
        return (_grevlex_key(exp[:k]), _grevlex_key(exp[k:]))

    def signature(self) -> tuple:
        return (self.kind, self.front)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        if self.kind == "block":
            return f"MonomialOrder(block, front={self.front})"
        return f"MonomialOrder({self.kind})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(front: int) -> MonomialOrder:
    """Elimination order whose front block is the first `front` ring variables."""
    return MonomialOrder("block", front)
