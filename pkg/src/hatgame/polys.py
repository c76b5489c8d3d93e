"""Exact univariate polynomials over Q and numbers in the field Q(sqrt 2).

Everything the analysis layer proves - dominance between loss classes,
location of the optimal-strategy threshold, continuity of the piecewise win
probability - reduces to exact sign questions about low-degree polynomials
with rational coefficients, sometimes at quadratic-irrational points.
This module supplies the two primitives those proofs need:

* :class:`Poly` - dense rational-coefficient polynomials with Sturm-chain
  root counting, isolation and bisection refinement.  Endpoints of the
  intervals may be rational or quadratic (``Sqrt2Num``), so strict sign
  claims on intervals like (1/2, 2 - sqrt 2) are decided exactly.
* :class:`Sqrt2Num` - numbers a + b*sqrt(2) with rational a, b.  Ordering
  is exact (no floating point): the sign of a + b*sqrt(2) is determined by
  comparing a^2 with 2 b^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union


@dataclass(frozen=True)
class Sqrt2Num:
    """Exact number a + b*sqrt(2), a and b rational."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Sqrt2Num":
        if isinstance(value, Sqrt2Num):
            return value
        if isinstance(value, (int, Fraction)):
            return Sqrt2Num(Fraction(value))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Sqrt2Num(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Sqrt2Num(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Sqrt2Num(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Sqrt2Num(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # 1/(a + b sqrt2) = (a - b sqrt2)/(a^2 - 2 b^2)
        norm = other.a * other.a - 2 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        inv = Sqrt2Num(other.a / norm, -other.b / norm)
        return self * inv

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Sqrt2Num(Fraction(1))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- exact ordering -----------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare |a| with |b| sqrt2 via squares
        if a * a == 2 * b * b:
            return 0
        if a > 0:  # b < 0: positive iff a > |b| sqrt2
            return 1 if a * a > 2 * b * b else -1
        # a < 0, b > 0: positive iff b sqrt2 > |a|
        return 1 if 2 * b * b > a * a else -1

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("%r is irrational" % (self,))
        return self.a

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 2**0.5

    def __repr__(self):
        if self.b == 0:
            return "Sqrt2Num(%s)" % (self.a,)
        return "Sqrt2Num(%s, %s)" % (self.a, self.b)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "%s*sqrt(2)" % (self.b,)
        op = "+" if self.b > 0 else "-"
        return "%s %s %s*sqrt(2)" % (self.a, op, abs(self.b))


#: sqrt(2) - 1 and 2 - sqrt(2): the two irrational breakpoints of the
#: five-player win-probability curve.
SQRT2 = Sqrt2Num(0, 1)
SQRT2_MINUS_1 = Sqrt2Num(-1, 1)
TWO_MINUS_SQRT2 = Sqrt2Num(2, -1)

Number = Union[int, Fraction, Sqrt2Num]


def number_sign(x: Number) -> int:
    if isinstance(x, Sqrt2Num):
        return x.sign()
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial with Fraction coefficients, ascending powers."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "Poly":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    # -- ring operations ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(tuple(Fraction(other) * c for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Poly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; works for Fraction, int and Sqrt2Num."""
        result = x * 0  # zero of the right type
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def compose_one_minus_x(self) -> "Poly":
        """p(1 - x): the color-swap substitution p <-> q."""
        one_minus_x = Poly((Fraction(1), Fraction(-1)))
        result = Poly(())
        power = Poly.constant(1)
        for c in self.coeffs:
            result = result + power * c
            power = power * one_minus_x
        return result

    # -- euclidean machinery -------------------------------------------------

    def _divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        dq = len(rem) - len(den)
        if dq < 0:
            return Poly(()), self
        quo = [Fraction(0)] * (dq + 1)
        lead = den[-1]
        for k in range(dq, -1, -1):
            coeff = rem[k + len(den) - 1] / lead
            quo[k] = coeff
            if coeff:
                for j, d in enumerate(den):
                    rem[k + j] -= coeff * d
        return Poly(tuple(quo)), Poly(tuple(rem[: len(den) - 1]))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a._divmod(b)[1]
        if a.is_zero:
            return a
        return a * (1 / a.coeffs[-1])  # monic

    def squarefree_part(self) -> "Poly":
        if self.degree <= 0:
            return self
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self
        return self._divmod(g)[0]

    # -- Sturm chains and real roots ----------------------------------------

    def sturm_chain(self) -> tuple["Poly", ...]:
        """Sturm chain of the squarefree part."""
        f = self.squarefree_part()
        chain = [f, f.derivative()]
        while not chain[-1].is_zero:
            chain.append(-(chain[-2]._divmod(chain[-1])[1]))
        chain.pop()
        return tuple(chain)

    @staticmethod
    def _variations(chain: Sequence["Poly"], x: Number) -> int:
        signs = [number_sign(f(x)) for f in chain]
        signs = [s for s in signs if s != 0]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def count_roots_open(self, lo: Number, hi: Number) -> int:
        """Number of distinct real roots in the open interval (lo, hi).

        Endpoints may be Fraction or Sqrt2Num; both are handled exactly.
        """
        if number_sign(hi - lo) <= 0:
            raise ValueError("need lo < hi")
        if self.is_zero:
            raise ValueError("the zero polynomial has no root count")
        chain = self.sturm_chain()
        f = chain[0]
        # Sturm counts roots in (lo, hi]; drop hi if it is a root itself.
        count = self._variations(chain, lo) - self._variations(chain, hi)
        if number_sign(f(hi)) == 0:
            count -= 1
        return count

    def isolate_roots_open(
        self, lo: Fraction, hi: Fraction
    ) -> list[tuple[Fraction, Fraction]]:
        """Disjoint rational intervals, one per distinct root in (lo, hi).

        Exact rational roots are returned as degenerate intervals (r, r).
        Non-degenerate intervals are normalized so that neither endpoint is
        itself a root, which makes them directly usable by
        :meth:`refine_root`.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        total = self.count_roots_open(lo, hi)
        if total == 0:
            return []
        sf = self.squarefree_part()
        out: list[tuple[Fraction, Fraction]] = []

        def shrink(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
            # (a, b) holds exactly one root; move root endpoints inward
            # without losing it
            while sf(a) == 0:
                step = (b - a) / 2
                while self.count_roots_open(a + step, b) != 1:
                    step /= 2
                a = a + step
            while sf(b) == 0:
                step = (b - a) / 2
                while self.count_roots_open(a, b - step) != 1:
                    step /= 2
                b = b - step
            return a, b

        def recurse(a: Fraction, b: Fraction, k: int) -> None:
            if k == 0:
                return
            if k == 1:
                out.append(shrink(a, b))
                return
            mid = (a + b) / 2
            if sf(mid) == 0:
                left = self.count_roots_open(a, mid)
                recurse(a, mid, left)
                out.append((mid, mid))
                recurse(mid, b, k - left - 1)
            else:
                left = self.count_roots_open(a, mid)
                recurse(a, mid, left)
                recurse(mid, b, k - left)

        recurse(lo, hi, total)
        out.sort()
        return out

    def refine_root(
        self, lo: Fraction, hi: Fraction, width: Fraction
    ) -> tuple[Fraction, Fraction]:
        """Shrink an isolating interval below ``width`` by sign bisection.

        Requires that (lo, hi) isolates exactly one root and that the
        squarefree part changes sign across it (always true for an interval
        produced by :meth:`isolate_roots_open` with non-root endpoints).
        """
        lo, hi = Fraction(lo), Fraction(hi)
        if lo == hi:
            return lo, hi
        sf = self.squarefree_part()
        slo = number_sign(sf(lo))
        shi = number_sign(sf(hi))
        if slo == 0 or shi == 0 or slo == shi:
            raise ValueError("interval endpoints must straddle a sign change")
        while hi - lo >= width:
            mid = (lo + hi) / 2
            smid = number_sign(sf(mid))
            if smid == 0:
                return mid, mid
            if smid == slo:
                lo = mid
            else:
                hi = mid
        return lo, hi

    def sign_on_open_interval(self, lo: Number, hi: Number) -> int:
        """Constant exact sign of the polynomial on (lo, hi).

        Returns +1 or -1 when the polynomial has that strict sign on the
        whole open interval, 0 when it is identically zero, and raises
        ValueError when the sign is not constant (a root lies inside).
        """
        if self.is_zero:
            return 0
        if self.count_roots_open(lo, hi) > 0:
            raise ValueError("polynomial changes sign or vanishes on the interval")
        witness = _rational_inside(lo, hi)
        s = number_sign(self(witness))
        # no roots inside, so the sign at any interior point is the sign
        # everywhere on the open interval
        assert s != 0
        return s

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*p" % (c,))
            else:
                parts.append("%s*p^%d" % (c, i))
        return " + ".join(parts).replace("+ -", "- ")


def _rational_inside(lo: Number, hi: Number) -> Fraction:
    """Some exact rational strictly between lo and hi."""
    lo_s = lo if isinstance(lo, Sqrt2Num) else Sqrt2Num(Fraction(lo))
    hi_s = hi if isinstance(hi, Sqrt2Num) else Sqrt2Num(Fraction(hi))
    if lo_s.is_rational and hi_s.is_rational:
        return (lo_s.as_fraction() + hi_s.as_fraction()) / 2
    # binary search on denominators: halve an enclosing rational bracket
    # until its midpoint falls strictly inside (lo, hi)
    a = lo_s.a - abs(lo_s.b) * 2  # rational below lo: a + b*sqrt2 >= a - 2|b|
    b = hi_s.a + abs(hi_s.b) * 2
    for _ in range(200):
        mid = (a + b) / 2
        mid_s = Sqrt2Num(mid)
        if lo_s < mid_s < hi_s:
            return mid
        if mid_s <= lo_s:
            a = mid
        else:
            b = mid
    raise RuntimeError("failed to find a rational inside the interval")


def decimal_str(value, significant: int = 12) -> str:
    """Decimal rendering with at most ``significant`` significant digits.

    Fractions with terminating decimal expansions shorter than the limit
    print exactly (0.09 stays "0.09"); everything else is rounded half-even
    at the requested number of significant digits.
    """
    if isinstance(value, Sqrt2Num):
        if value.is_rational:
            value = value.as_fraction()
        else:
            return _irrational_decimal(value, significant)
    value = Fraction(value)
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    value = abs(value)
    num, den = value.numerator, value.denominator
    # terminating decimal? den = 2^a 5^b
    d = den
    for base in (2, 5):
        while d % base == 0:
            d //= base
    if d == 1:
        # value = n / 10^exp exactly
        exp = 0
        n, dd = num, den
        while dd % 2 == 0:
            dd //= 2
            n *= 5
            exp += 1
        while dd % 5 == 0:
            dd //= 5
            n *= 2
            exp += 1
        if len(str(n).rstrip("0")) <= significant:
            if exp == 0:
                return sign + str(n)
            digits = str(n).rjust(exp + 1, "0")
            text = digits[:-exp] + "." + digits[-exp:]
            return sign + text.rstrip("0").rstrip(".")
    # round half-even to `significant` digits
    from decimal import Decimal, getcontext

    ctx = getcontext().copy()
    ctx.prec = significant
    d_val = ctx.divide(Decimal(num), Decimal(den))
    text = format(d_val, "f")
    return sign + text


def _irrational_decimal(value: Sqrt2Num, significant: int) -> str:
    """Decimal approximation of a + b*sqrt(2), correctly rounded-ish
    (computed with 10 guard digits)."""
    from decimal import Decimal, getcontext

    ctx = getcontext().copy()
    ctx.prec = significant + 10
    sqrt2 = ctx.sqrt(Decimal(2))
    a = ctx.divide(Decimal(value.a.numerator), Decimal(value.a.denominator))
    b = ctx.divide(Decimal(value.b.numerator), Decimal(value.b.denominator))
    raw = ctx.add(a, ctx.multiply(b, sqrt2))
    ctx.prec = significant
    return format(ctx.plus(raw), "f")
