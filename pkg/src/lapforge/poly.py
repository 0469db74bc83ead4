"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Union

import mpmath

Scalar = Union[int, Fraction]


class RatPoly:
    """Polynomial with ``Fraction`` coefficients in ascending degree.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and equality is coefficient-wise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> RatPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], leading: Scalar = 1) -> RatPoly:
        p = cls([leading])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @classmethod
    def interpolate(cls, xs: Sequence[Scalar], ys: Sequence[Scalar]) -> RatPoly:
        """Lagrange interpolation through ``(xs[i], ys[i])``, exactly."""
        if len(xs) != len(ys):
            raise ValueError("xs and ys differ in length")
        xs = [Fraction(x) for x in xs]
        result = cls()
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            if yi == 0:
                continue
            basis = cls([1])
            denom = Fraction(1)
            for j, xj in enumerate(xs):
                if j != i:
                    basis = basis * cls([-xj, 1])
                    denom *= xi - xj
            result = result + basis * (Fraction(yi) / denom)
        return result

    # -- queries ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t):
        acc = 0 * t
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: RatPoly | Scalar) -> RatPoly:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other: RatPoly | Scalar) -> RatPoly:
        return self + (-_lift(other))

    def __rsub__(self, other: Scalar) -> RatPoly:
        return _lift(other) - self

    def __mul__(self, other: RatPoly | Scalar) -> RatPoly:
        if not isinstance(other, RatPoly):
            c = Fraction(other)
            return RatPoly(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> RatPoly:
        c = Fraction(c)
        return RatPoly(a / c for a in self.coeffs)

    def divmod(self, divisor: RatPoly) -> tuple[RatPoly, RatPoly]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        lead = divisor.leading
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / lead
            if q:
                quot[k - dd] = q
                for j, b in enumerate(divisor.coeffs):
                    rem[k - dd + j] -= q * b
        return RatPoly(quot), RatPoly(rem[:dd] if dd > 0 else [])

    def __floordiv__(self, divisor: RatPoly) -> RatPoly:
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: RatPoly) -> RatPoly:
        return self.divmod(divisor)[1]

    def monic(self) -> RatPoly:
        return self / self.leading if self.coeffs else self

    def derivative(self) -> RatPoly:
        return RatPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def scale_argument(self, c: Scalar) -> RatPoly:
        """Return ``t -> p(c t)``."""
        c = Fraction(c)
        return RatPoly(a * c**k for k, a in enumerate(self.coeffs))

    def gcd(self, other: RatPoly) -> RatPoly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_factors(self) -> list[tuple[RatPoly, int]]:
        """Yun's decomposition: ``p = lc * prod(f_i ** i)`` with each f_i squarefree."""
        if self.degree < 1:
            return []
        p = self.monic()
        dp = p.derivative()
        a = p.gcd(dp)
        b = p // a
        c = dp // a - b.derivative()
        out = []
        i = 1
        while b.degree > 0:
            d = b.gcd(c)
            b, c = b // d, c // d - (b // d).derivative()
            if d.degree > 0:
                out.append((d, i))
            i += 1
        return out

    def real_roots(self, dps: int = 50) -> list[float]:
        """Real roots with multiplicity, ascending.

        Roots of each squarefree factor are found in high precision so that
        repeated roots do not lose accuracy.
        """
        roots: list[float] = []
        for factor, mult in self.squarefree_factors():
            with mpmath.workdps(dps):
                cs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(factor.coeffs)]
                found = mpmath.polyroots(cs, maxsteps=200, extraprec=4 * dps) if len(cs) > 2 else [-cs[1] / cs[0]]
            for r in found:
                if isinstance(r, mpmath.mpc):
                    if abs(r.imag) > mpmath.mpf(10) ** (-dps // 3):
                        continue
                    r = r.real
                roots.extend([float(r)] * mult)
        return sorted(roots)

    # -- value semantics ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatPoly([other])
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "RatPoly(0)"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return "RatPoly(" + " + ".join(terms).replace("+ -", "- ") + ")"


def _lift(x: RatPoly | Scalar) -> RatPoly:
    return x if isinstance(x, RatPoly) else RatPoly([x])
