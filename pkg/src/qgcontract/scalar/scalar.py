"""
Exact arithmetic in Q(s, h), where s is the square root of the deformation
parameter q, with an optional formal sqrt(2) part.

Numerators and denominators are sparse polynomials of the ring
``QQ[s, h]`` (degree-lexicographic order, s before h). A value is stored as a
rational part ``num/den`` and an optional radical part ``rnum/rden``, meaning
``num/den + sqrt(2) * rnum/rden``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

_RING, _S, _H = ring("s,h", QQ, grlex)

Pair = tuple[PolyElement, PolyElement]
Operand = Union["ScalarQH", int, Fraction]


class DivisionByZero(ZeroDivisionError):
    """
    Raised when dividing by the canonical zero.
    """


class PoleError(ArithmeticError):
    """
    Raised when a q -> 1 limit does not exist (pole at s = 1).
    """


class NonPolynomialError(ArithmeticError):
    """
    Raised when a q -> 1 limit exists only as a rational function of h.
    """


def _to_poly(value: int | Fraction | PolyElement) -> PolyElement:
    if isinstance(value, PolyElement):
        return value
    if isinstance(value, Fraction):
        return _RING.ground_new(QQ(value.numerator, value.denominator))
    if isinstance(value, int):
        return _RING.ground_new(QQ(value))
    raise TypeError(f"Cannot convert {type(value).__name__} to a polynomial.")


def _canonical(num: PolyElement, den: PolyElement) -> Pair:
    """
    Coprime numerator and monic denominator.
    """
    if not den:
        raise DivisionByZero("Denominator is the zero polynomial.")
    if not num:
        return _RING.zero, _RING.one
    if den.is_ground:
        return num.quo_ground(den.LC), _RING.one
    num, den = num.cancel(den)
    lead = den.LC
    if lead != 1:
        num = num.quo_ground(lead)
        den = den.quo_ground(lead)
    return num, den


def _add(a: Pair, b: Pair) -> Pair:
    if a[1] == b[1]:
        return _canonical(a[0] + b[0], a[1])
    return _canonical(a[0] * b[1] + b[0] * a[1], a[1] * b[1])


def _mul(a: Pair, b: Pair) -> Pair:
    if a[1].is_ground and b[1].is_ground:
        return a[0] * b[0], _RING.one
    return _canonical(a[0] * b[0], a[1] * b[1])


def _neg(a: Pair) -> Pair:
    return -a[0], a[1]


_ZERO_PAIR: Pair = (_RING.zero, _RING.one)


class ScalarQH:
    """
    Immutable element of Q(s, h)[sqrt(2)] in canonical form.

    Construct from integers, fractions or ring polynomials:
    ``ScalarQH(num, den)``. Use :meth:`with_radical` to build values with a
    sqrt(2) part.
    """

    __slots__ = ("_r", "_t")

    def __init__(
        self,
        num: int | Fraction | PolyElement = 0,
        den: int | Fraction | PolyElement = 1,
    ) -> None:
        self._r: Pair = _canonical(_to_poly(num), _to_poly(den))
        self._t: Pair | None = None

    @classmethod
    def _from_parts(cls, rational: Pair, radical: Pair | None) -> ScalarQH:
        obj = cls.__new__(cls)
        obj._r = rational
        obj._t = radical if radical is not None and radical[0] else None
        return obj

    @classmethod
    def with_radical(cls, rational: Operand, radical: Operand) -> ScalarQH:
        """
        Build ``rational + sqrt(2) * radical`` from two radical-free scalars.
        """
        r, t = _coerce(rational), _coerce(radical)
        if r._t is not None or t._t is not None:
            raise ValueError("Both parts must be free of sqrt(2).")
        return cls._from_parts(r._r, t._r)

    @property
    def numerator(self) -> PolyElement:
        return self._r[0]

    @property
    def denominator(self) -> PolyElement:
        return self._r[1]

    @property
    def rational_part(self) -> ScalarQH:
        return ScalarQH._from_parts(self._r, None)

    @property
    def radical_part(self) -> ScalarQH:
        """
        Get the coefficient of sqrt(2) as a radical-free scalar.
        """
        return ScalarQH._from_parts(self._t or _ZERO_PAIR, None)

    @property
    def has_radical(self) -> bool:
        return self._t is not None

    def _parts(self) -> list[Pair]:
        return [self._r] if self._t is None else [self._r, self._t]

    def is_zero(self) -> bool:
        return not self._r[0] and self._t is None

    def __bool__(self) -> bool:
        return not self.is_zero()

    ### Arithmetic ###

    def __add__(self, other: Operand) -> ScalarQH:
        try:
            b = _coerce(other)
        except TypeError:
            return NotImplemented
        if b.is_zero():
            return self
        if self.is_zero():
            return b
        rad: Pair | None
        if self._t is None:
            rad = b._t
        elif b._t is None:
            rad = self._t
        else:
            rad = _add(self._t, b._t)
        return ScalarQH._from_parts(_add(self._r, b._r), rad)

    __radd__ = __add__

    def __neg__(self) -> ScalarQH:
        return ScalarQH._from_parts(
            _neg(self._r), None if self._t is None else _neg(self._t)
        )

    def __sub__(self, other: Operand) -> ScalarQH:
        try:
            b = _coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other: Operand) -> ScalarQH:
        return _coerce(other) - self

    def __mul__(self, other: Operand) -> ScalarQH:
        try:
            b = _coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or b.is_zero():
            return ZERO
        if self._t is None and b._t is None:
            return ScalarQH._from_parts(_mul(self._r, b._r), None)
        a_t = self._t or _ZERO_PAIR
        b_t = b._t or _ZERO_PAIR
        two_tt = _mul(_mul(a_t, b_t), (_RING(2), _RING.one))
        rational = _add(_mul(self._r, b._r), two_tt)
        radical = _add(_mul(self._r, b_t), _mul(a_t, b._r))
        return ScalarQH._from_parts(rational, radical)

    __rmul__ = __mul__

    def inverse(self) -> ScalarQH:
        """
        Multiplicative inverse; ``(r - t sqrt2) / (r**2 - 2 t**2)`` for radical values.
        """
        if self.is_zero():
            raise DivisionByZero("Division by zero.")
        if self._t is None:
            return ScalarQH._from_parts(_canonical(self._r[1], self._r[0]), None)
        norm = self.rational_part * self.rational_part - 2 * (
            self.radical_part * self.radical_part
        )
        inv_norm = norm.inverse()
        conj = ScalarQH._from_parts(self._r, _neg(self._t))
        return conj * inv_norm

    def __truediv__(self, other: Operand) -> ScalarQH:
        try:
            b = _coerce(other)
        except TypeError:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other: Operand) -> ScalarQH:
        return _coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> ScalarQH:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        k = abs(exponent)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    ### Comparison ###

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (ScalarQH, int, Fraction)):
            return NotImplemented
        b = _coerce(other)
        if (self._t is None) != (b._t is None):
            return False
        for x, y in zip(self._parts(), b._parts()):
            if x[0] * y[1] != y[0] * x[1]:
                return False
        return True

    def __hash__(self) -> int:
        # rational constants hash like the equal int or Fraction
        if self._t is None and self._r[0].is_ground:
            c = self._r[0].LC
            return hash(Fraction(int(QQ.numer(c)), int(QQ.denom(c))))
        return hash((self._r, self._t))

    ### Substitution and limits ###

    def subs_h(self, value: int | Fraction) -> ScalarQH:
        """
        Substitute a rational value for h.
        """
        point = QQ(Fraction(value).numerator, Fraction(value).denominator)
        parts = []
        for num, den in self._parts():
            new_den = den.subs(_H, point)
            if not new_den:
                raise DivisionByZero(f"Denominator vanishes at h = {value}.")
            parts.append(_canonical(num.subs(_H, point), new_den))
        return ScalarQH._from_parts(parts[0], parts[1] if len(parts) > 1 else None)

    def is_polyh(self) -> bool:
        """
        Check whether the value is a polynomial in h alone.
        """
        return all(
            den.is_ground and all(monom[0] == 0 for monom in num.monoms())
            for num, den in self._parts()
        )

    def has_pole_at_one(self) -> bool:
        """
        Check whether a denominator vanishes identically at s = 1.
        """
        return any(not den.subs(_S, 1) for _, den in self._parts())

    def h_degree(self) -> int:
        """
        Get the degree in h of a polynomial value (0 for zero).
        """
        if not self.is_polyh():
            raise ValueError(f"{self} is not a polynomial in h.")
        return max(
            (monom[1] for num, _ in self._parts() for monom in num.monoms()),
            default=0,
        )

    def coeff_h(self, k: int) -> ScalarQH:
        """
        Get the coefficient of h**k of a polynomial value.
        """
        if not self.is_polyh():
            raise ValueError(f"{self} is not a polynomial in h.")
        parts = [
            _RING.ground_new(num.get((0, k), QQ.zero)) for num, _ in self._parts()
        ]
        return ScalarQH.with_radical(
            ScalarQH(parts[0]), ScalarQH(parts[1]) if len(parts) > 1 else 0
        )

    ### Rendering ###

    def __str__(self) -> str:
        rational = _pair_str(self._r)
        if self._t is None:
            return rational
        radical = f"sqrt2*({_pair_str(self._t)})"
        if not self._r[0]:
            return radical
        return f"{rational} + {radical}"

    def __repr__(self) -> str:
        return f"ScalarQH('{self}')"

    def to_latex(self) -> str:
        """
        Render in LaTeX math notation.
        """
        rational = _pair_latex(self._r)
        if self._t is None:
            return rational
        radical = rf"\sqrt{{2}}\left({_pair_latex(self._t)}\right)"
        if not self._r[0]:
            return radical
        return f"{rational} + {radical}"


# PolyH is the subset of ScalarQH accepted by ScalarQH.is_polyh()
PolyH = ScalarQH


def _coerce(value: Operand) -> ScalarQH:
    if isinstance(value, ScalarQH):
        return value
    if isinstance(value, (int, Fraction)):
        return ScalarQH(value)
    raise TypeError(f"Cannot use {type(value).__name__} as a scalar.")


def _coeff_str(coeff) -> tuple[bool, str]:
    num, den = int(QQ.numer(coeff)), int(QQ.denom(coeff))
    text = str(abs(num)) if den == 1 else f"{abs(num)}/{den}"
    return num < 0, text


def _monom_str(monom: tuple[int, ...], latex: bool = False) -> str:
    factors = []
    for name, exp in zip(("s", "h"), monom):
        if exp == 0:
            continue
        if exp == 1:
            factors.append(name)
        else:
            factors.append(f"{name}^{{{exp}}}" if latex else f"{name}^{exp}")
    return (" " if latex else "*").join(factors)


def _poly_str(poly: PolyElement) -> str:
    if not poly:
        return "0"
    out = ""
    for i, (monom, coeff) in enumerate(poly.terms()):
        negative, ctext = _coeff_str(coeff)
        mtext = _monom_str(monom)
        if mtext:
            body = mtext if ctext == "1" else f"{ctext}*{mtext}"
        else:
            body = ctext
        if i == 0:
            out = f"-{body}" if negative else body
        else:
            out += f" - {body}" if negative else f" + {body}"
    return out


def _pair_str(pair: Pair) -> str:
    num, den = pair
    ntext = _poly_str(num)
    if den == 1:
        return ntext
    if len(num) > 1:
        ntext = f"({ntext})"
    dtext = _poly_str(den)
    if len(den) > 1:
        dtext = f"({dtext})"
    return f"{ntext}/{dtext}"


def _poly_latex(poly: PolyElement) -> str:
    if not poly:
        return "0"
    out = ""
    for i, (monom, coeff) in enumerate(poly.terms()):
        num, den = int(QQ.numer(coeff)), int(QQ.denom(coeff))
        ctext = str(abs(num)) if den == 1 else rf"\frac{{{abs(num)}}}{{{den}}}"
        mtext = _monom_str(monom, latex=True)
        if mtext:
            body = mtext if ctext == "1" else f"{ctext} {mtext}"
        else:
            body = ctext
        if i == 0:
            out = f"-{body}" if num < 0 else body
        else:
            out += f" - {body}" if num < 0 else f" + {body}"
    return out


def _pair_latex(pair: Pair) -> str:
    num, den = pair
    if den == 1:
        return _poly_latex(num)
    return rf"\frac{{{_poly_latex(num)}}}{{{_poly_latex(den)}}}"


def _limit_pair(pair: Pair) -> Pair:
    num, den = pair
    divisor = _S - 1
    while not den.subs(_S, 1) and not num.subs(_S, 1):
        num = num.exquo(divisor)
        den = den.exquo(divisor)
    at_one = den.subs(_S, 1)
    if not at_one:
        raise PoleError(f"Pole at q = 1 in {_pair_str(pair)}.")
    if not at_one.is_ground:
        raise NonPolynomialError(
            f"Limit of {_pair_str(pair)} at q = 1 depends rationally on h."
        )
    return num.subs(_S, 1).quo_ground(at_one.LC), _RING.one


def limit_q_to_1(a: ScalarQH) -> PolyH:
    """
    Limit q -> 1 (equivalently s -> 1) of a scalar.

    Arguments:
        a (ScalarQH): Value to contract.

    Returns:
        PolyH: The limit, a polynomial in h.

    Raises:
        PoleError: If the denominator still vanishes at s = 1 after cancellation.
        NonPolynomialError: If the denominator at s = 1 still depends on h.
    """
    if a.is_zero():
        return ZERO
    rational = _limit_pair(a._r)
    radical = None if a._t is None else _limit_pair(a._t)
    return ScalarQH._from_parts(rational, radical)


def substitute_h_zero(p: ScalarQH) -> ScalarQH:
    """
    Constant term of a value, i.e. its h = 0 specialization.
    """
    return p.subs_h(0)


def ring_arithmetic(
    a: ScalarQH, b: ScalarQH, op: Literal["add", "sub", "mul", "div"]
) -> ScalarQH:
    """
    Dispatch one field operation by name.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"Unknown operation '{op}'.")


def s_power(k: int) -> ScalarQH:
    """
    Laurent monomial s**k; q**(k/2) in terms of the deformation parameter.
    """
    if k >= 0:
        return ScalarQH(_S**k)
    return ScalarQH(1, _S ** (-k))


ZERO = ScalarQH(0)
ONE = ScalarQH(1)
S = ScalarQH(_S)
H = ScalarQH(_H)
Q = ScalarQH(_S**2)
ETA = ScalarQH(_H, _S**2 - 1)
SQRT2 = ScalarQH.with_radical(0, 1)
