"""Truncated 3-adic arithmetic with explicit precision tracking.

A Padic3 is 3^valuation * (unit + O(3^precision)) with 1 <= unit < 3^precision
and 3 not dividing unit.  Two degenerate shapes are allowed: the exact zero
(valuation EXACT_ZERO_VAL), and an indeterminate zero O(3^valuation) whose
unit digits are all uncertain (unit 0, precision 0).  Operations never guess
digits: when a needed digit cannot be certified they raise PrecisionExhausted
or degrade to an indeterminate zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratio import Rational, fr

DEFAULT_PRECISION = 48
EXACT_ZERO_VAL = 10 ** 9


class PrecisionExhausted(ArithmeticError):
    """A required digit could not be certified at the working precision."""


def val3(n: int) -> int:
    """3-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    while n % 3 == 0:
        n //= 3
        v += 1
    return v


@dataclass(frozen=True)
class Padic3:
    valuation: int
    unit: int
    precision: int

    def __post_init__(self) -> None:
        if self.unit == 0:
            ok = (self.valuation == EXACT_ZERO_VAL or self.precision == 0)
            if not ok:
                raise ValueError("zero unit needs exact or indeterminate shape")
        else:
            if self.precision <= 0:
                raise ValueError("nonzero unit needs positive precision")
            if not 0 < self.unit < 3 ** self.precision:
                raise ValueError("unit out of range")
            if self.unit % 3 == 0:
                raise ValueError("unit divisible by 3")

    # shape predicates ------------------------------------------------------

    def is_exact_zero(self) -> bool:
        return self.valuation == EXACT_ZERO_VAL

    def is_indeterminate(self) -> bool:
        return self.unit == 0 and not self.is_exact_zero()

    def known_nonzero(self) -> bool:
        return self.unit != 0

    # constructors ----------------------------------------------------------

    @classmethod
    def zero(cls) -> "Padic3":
        return cls(EXACT_ZERO_VAL, 0, 0)

    @classmethod
    def indeterminate(cls, valuation_bound: int) -> "Padic3":
        return cls(valuation_bound, 0, 0)

    @classmethod
    def from_int(cls, n: int, precision: int = DEFAULT_PRECISION) -> "Padic3":
        if n == 0:
            return cls.zero()
        v = val3(n)
        return cls(v, (n // 3 ** v) % 3 ** precision, precision)

    @classmethod
    def from_rational(cls, x: Rational | str,
                      precision: int = DEFAULT_PRECISION) -> "Padic3":
        x = fr(x)
        if x == 0:
            return cls.zero()
        num, den = x.numerator, x.denominator
        v = val3(num) - val3(den)
        num //= 3 ** max(val3(num), 0)
        den //= 3 ** max(val3(den), 0)
        mod = 3 ** precision
        return cls(v, num * pow(den, -1, mod) % mod, precision)

    # arithmetic ------------------------------------------------------------

    def shift(self, k: int) -> "Padic3":
        """Multiply by 3^k."""
        if self.is_exact_zero():
            return self
        return Padic3(self.valuation + k, self.unit, self.precision)

    def __neg__(self) -> "Padic3":
        if self.unit == 0:
            return self
        return Padic3(self.valuation, 3 ** self.precision - self.unit,
                      self.precision)

    def __add__(self, other: "Padic3") -> "Padic3":
        a, b = self, other
        if a.is_exact_zero():
            return b
        if b.is_exact_zero():
            return a
        if a.is_indeterminate() or b.is_indeterminate():
            if a.is_indeterminate() and not b.is_indeterminate() \
                    and b.valuation < a.valuation:
                cut = a.valuation - b.valuation
                return _normalized(b.valuation, b.unit,
                                   min(b.precision, cut))
            if b.is_indeterminate() and not a.is_indeterminate() \
                    and a.valuation < b.valuation:
                cut = b.valuation - a.valuation
                return _normalized(a.valuation, a.unit,
                                   min(a.precision, cut))
            return Padic3.indeterminate(min(a.valuation, b.valuation))
        if a.valuation > b.valuation:
            a, b = b, a
        gap = b.valuation - a.valuation
        prec = min(a.precision, b.precision + gap)
        total = (a.unit + b.unit * 3 ** gap) % 3 ** prec
        return _normalized(a.valuation, total, prec)

    def __sub__(self, other: "Padic3") -> "Padic3":
        return self + (-other)

    def __mul__(self, other: "Padic3") -> "Padic3":
        a, b = self, other
        if a.is_exact_zero() or b.is_exact_zero():
            return Padic3.zero()
        if a.is_indeterminate() or b.is_indeterminate():
            return Padic3.indeterminate(a.valuation + b.valuation)
        prec = min(a.precision, b.precision)
        return Padic3(a.valuation + b.valuation,
                      (a.unit * b.unit) % 3 ** prec, prec)

    def invert(self) -> "Padic3":
        if self.is_exact_zero():
            raise ZeroDivisionError("exact zero has no inverse")
        if self.is_indeterminate():
            raise PrecisionExhausted(
                "cannot invert: value not certified nonzero"
            )
        mod = 3 ** self.precision
        return Padic3(-self.valuation, pow(self.unit, -1, mod),
                      self.precision)

    def __truediv__(self, other: "Padic3") -> "Padic3":
        return self * other.invert()

    # digit access ----------------------------------------------------------

    def residue(self, k: int = 1) -> int:
        """The value modulo 3^k, as an integer in [0, 3^k); needs the first
        k digits above the valuation to be certified (or nonnegative exact
        shape)."""
        if self.is_exact_zero():
            return 0
        if self.valuation >= k:
            # certified divisible by 3^k, indeterminate or not
            return 0
        if self.valuation < 0:
            raise ValueError("negative valuation has no residue")
        if self.is_indeterminate() or \
                self.valuation + self.precision < k:
            raise PrecisionExhausted(f"residue mod 3^{k} not certified")
        return self._lift_mod(k)

    def _lift_mod(self, k: int) -> int:
        return (self.unit * 3 ** self.valuation) % 3 ** k

    def digits(self) -> tuple[int, ...]:
        """Base-3 digits of the unit, least significant first."""
        out = []
        u = self.unit
        for _ in range(self.precision):
            out.append(u % 3)
            u //= 3
        return tuple(out)

    def same(self, other: "Padic3") -> bool:
        """Indistinguishable at the shared precision."""
        return not (self - other).known_nonzero()

    def __repr__(self) -> str:
        if self.is_exact_zero():
            return "Padic3(0)"
        if self.is_indeterminate():
            return f"Padic3(O(3^{self.valuation}))"
        return (f"Padic3(3^{self.valuation} * "
                f"({self.unit} + O(3^{self.precision})))")


def _normalized(valuation: int, total: int, prec: int) -> Padic3:
    """Renormalize a sum's raw digits into a valid Padic3."""
    if prec <= 0:
        return Padic3.indeterminate(valuation)
    total %= 3 ** prec
    if total == 0:
        return Padic3.indeterminate(valuation + prec)
    s = val3(total)
    return Padic3(valuation + s, total // 3 ** s % 3 ** (prec - s), prec - s)


def sqrt_hensel(u: Padic3) -> Padic3:
    """Square root of a 3-adic unit, on the branch congruent to 1 mod 3.

    The input must have valuation 0 and leading digit 1 (the quadratic
    residues mod 3); the result carries the input's precision.
    """
    if not u.known_nonzero() or u.valuation != 0:
        raise ValueError("square root needs a certified unit")
    if u.unit % 3 != 1:
        raise ValueError("leading digit is not a quadratic residue mod 3")
    target = u.unit
    prec = u.precision
    x, k = 1, 1
    while k < prec:
        k = min(2 * k, prec)
        mod = 3 ** k
        # Newton step for f(t) = t^2 - target; f'(t) = 2t is a unit
        x = (x - (x * x - target) * pow(2 * x, -1, mod)) % mod
    if x % 3 != 1:
        x = 3 ** prec - x
    return Padic3(0, x, prec)


def sqrt_minus_two(precision: int = DEFAULT_PRECISION) -> Padic3:
    """The square root of -2 congruent to 1 mod 3 (and to 4 mod 9)."""
    return sqrt_hensel(Padic3.from_int(-2, precision))
