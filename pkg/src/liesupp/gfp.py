"""Exact arithmetic in prime fields GF(p).

Scalars are plain Python ints in [0, p); the modulus lives on the
containing PrimeField so that coefficient tables stay compact.
"""
from __future__ import annotations


class NotPrimeError(ValueError):
    """Raised when a PrimeField is requested for a composite modulus."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field GF(p) for a prime p.

    All operations take and return ints reduced mod p.
    """

    __slots__ = ("p", "_squares")

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        self.p = p
        self._squares = frozenset((x * x) % p for x in range(p))

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def is_square(self, a: int) -> bool:
        return a % self.p in self._squares

    def elements(self) -> range:
        return range(self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"
