"""Coefficient fields: prime fields F_p and the rationals."""

from __future__ import annotations

from fractions import Fraction


class PrimeField:
    """The field Z/pZ, elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def name(self) -> str:
        return f"F{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def norm(self, a):
        return a % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def signed(self, a) -> int:
        # symmetric representative, used for printing
        a %= self.p
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return self.name


class RationalField:
    """The rationals, elements stored as Fraction."""

    p = 0
    name = "Q"
    characteristic = 0

    def norm(self, a):
        return a if isinstance(a, Fraction) else Fraction(a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def elements(self):
        raise ValueError("Q is infinite")

    def signed(self, a):
        return Fraction(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


def field_from_name(name: str):
    """Parse ``F<p>`` or ``Q``."""
    name = name.strip()
    if name == "Q":
        return RationalField()
    if name.startswith("F") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise ValueError(f"unknown field {name!r}; expected F<p> or Q")
