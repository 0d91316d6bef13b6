"""Exact arithmetic in Q(i)[x, 1/x] with x = q^(1/4).

Every quantity in the package lives in this ring or its fraction field.
A :class:`QLaurent` is stored as ``x**shift * (re(x) + i*im(x))`` where
``re`` and ``im`` are flint ``fmpq_poly`` objects; the shift is chosen so
that the Gaussian constant term is nonzero, which makes the storage
canonical and lets products skip renormalization.

Colors and states throughout the package are *doubled* integers: a color
``a`` in N/2 is passed around as ``2a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import flint

_ZERO = flint.fmpq_poly([])
_ONE = flint.fmpq_poly([1])


@dataclass(frozen=True)
class GaussRat:
    """A Gaussian rational ``re + i*im``."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = _as_gauss(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_gauss(other))

    def __mul__(self, other):
        o = _as_gauss(other)
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * _as_gauss(other).inverse()

    def is_integral(self):
        return self.re.denominator == 1 and self.im.denominator == 1

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _im_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{_im_str(abs(self.im))})"


def _im_str(v: Fraction) -> str:
    if v == 1:
        return "i"
    if v == -1:
        return "-i"
    return f"{v}*i"


def _as_gauss(v) -> GaussRat:
    if isinstance(v, GaussRat):
        return v
    if isinstance(v, complex):
        return GaussRat(Fraction(v.real), Fraction(v.imag))
    return GaussRat(Fraction(v), Fraction(0))


_UNITS = (GaussRat(1, 0), GaussRat(0, 1), GaussRat(-1, 0), GaussRat(0, -1))


def i_power(k: int) -> GaussRat:
    """``i**k`` for any integer ``k``."""
    return _UNITS[k % 4]


def _valuation(re, im) -> int:
    k = 0
    while not re[k] and not im[k]:
        k += 1
    return k


def _flint_coeff(v: Fraction):
    return flint.fmpq(v.numerator, v.denominator)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


class QLaurent:
    """Laurent polynomial in ``x = q^(1/4)`` with Gaussian rational coefficients.

    Immutable. Supports ``+``, ``-``, ``*``, integer powers and equality.
    """

    __slots__ = ("_re", "_im", "_shift", "_hash")

    def __init__(self, re=_ZERO, im=_ZERO, shift: int = 0):
        if re.is_zero() and im.is_zero():
            re, im, shift = _ZERO, _ZERO, 0
        elif not re[0] and not im[0]:
            v = _valuation(re, im)
            re, im, shift = re.right_shift(v), im.right_shift(v), shift + v
        self._re = re
        self._im = im
        self._shift = shift
        self._hash = None

    @classmethod
    def _raw(cls, re, im, shift):
        # caller guarantees normal form
        obj = object.__new__(cls)
        obj._re, obj._im, obj._shift, obj._hash = re, im, shift, None
        return obj

    # -- constructors -------------------------------------------------
    @classmethod
    def from_terms(cls, terms: dict) -> "QLaurent":
        """Build from ``{x_exponent: coefficient}``; coefficients may be
        ints, Fractions, complex numbers with integral parts, or GaussRat."""
        terms = {e: _as_gauss(c) for e, c in terms.items() if _as_gauss(c)}
        if not terms:
            return ZERO
        lo = min(terms)
        hi = max(terms)
        re = [Fraction(0)] * (hi - lo + 1)
        im = [Fraction(0)] * (hi - lo + 1)
        for e, c in terms.items():
            re[e - lo] = c.re
            im[e - lo] = c.im
        return cls(
            flint.fmpq_poly([_flint_coeff(c) for c in re]),
            flint.fmpq_poly([_flint_coeff(c) for c in im]),
            lo,
        )

    @classmethod
    def monomial(cls, exp: int, coeff=1, phase: int = 0) -> "QLaurent":
        """``coeff * i**phase * x**exp``."""
        c = _as_gauss(coeff) * i_power(phase)
        return cls.from_terms({exp: c})

    @classmethod
    def constant(cls, c) -> "QLaurent":
        return cls.monomial(0, c)

    # -- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return self._re.is_zero() and self._im.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return self._im.is_zero()

    @property
    def valuation(self) -> int:
        """Lowest x-exponent (0 for the zero polynomial)."""
        return self._shift

    @property
    def degree(self) -> int:
        """Highest x-exponent."""
        return self._shift + max(self._re.degree(), self._im.degree(), 0)

    def terms(self) -> dict:
        """``{x_exponent: GaussRat}`` of the nonzero terms."""
        out = {}
        n = max(self._re.length(), self._im.length())
        for k in range(n):
            r, j = self._re[k], self._im[k]
            if r or j:
                out[self._shift + k] = GaussRat(_to_fraction(r), _to_fraction(j))
        return out

    def coeff(self, exp: int) -> GaussRat:
        k = exp - self._shift
        if k < 0:
            return GaussRat()
        return GaussRat(_to_fraction(self._re[k]), _to_fraction(self._im[k]))

    def at_one(self) -> GaussRat:
        """Evaluate at ``x = 1`` (hence ``q = 1``)."""
        return GaussRat(_to_fraction(self._re(1)), _to_fraction(self._im(1)))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QLaurent):
            other = QLaurent.constant(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = self, other
        if a._shift > b._shift:
            a, b = b, a
        d = b._shift - a._shift
        if d:
            re = a._re + b._re.left_shift(d)
            im = a._im + b._im.left_shift(d)
        else:
            re = a._re + b._re
            im = a._im + b._im
        return QLaurent(re, im, a._shift)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent._raw(-self._re, -self._im, self._shift)

    def __sub__(self, other):
        if not isinstance(other, QLaurent):
            other = QLaurent.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QLaurent):
            if isinstance(other, (int, Fraction, GaussRat, complex)):
                other = QLaurent.constant(other)
            else:
                return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        ar, ai, br, bi = self._re, self._im, other._re, other._im
        if ai.is_zero() and bi.is_zero():
            return QLaurent._raw(ar * br, _ZERO, self._shift + other._shift)
        if ai.is_zero():
            return QLaurent._raw(ar * br, ar * bi, self._shift + other._shift)
        if bi.is_zero():
            return QLaurent._raw(ar * br, ai * br, self._shift + other._shift)
        return QLaurent._raw(ar * br - ai * bi, ar * bi + ai * br, self._shift + other._shift)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial; use QRatio")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "QLaurent":
        """Multiply by ``x**k``."""
        if self.is_zero():
            return self
        return QLaurent._raw(self._re, self._im, self._shift + k)

    def times_i(self, k: int = 1) -> "QLaurent":
        """Multiply by ``i**k``."""
        k %= 4
        re, im = self._re, self._im
        for _ in range(k):
            re, im = -im, re
        return QLaurent._raw(re, im, self._shift)

    def scale(self, c) -> "QLaurent":
        c = _as_gauss(c)
        if not c:
            return ZERO
        r = flint.fmpq(c.re.numerator, c.re.denominator)
        j = flint.fmpq(c.im.numerator, c.im.denominator)
        return QLaurent(self._re * r - self._im * j, self._re * j + self._im * r, self._shift)

    def invert_variable(self) -> "QLaurent":
        """Substitute ``x -> 1/x`` (so ``q -> 1/q``)."""
        if self.is_zero():
            return self
        n = max(self._re.length(), self._im.length())
        re = self._re.coeffs() + [0] * (n - self._re.length())
        im = self._im.coeffs() + [0] * (n - self._im.length())
        return QLaurent(
            flint.fmpq_poly(re[::-1]), flint.fmpq_poly(im[::-1]), -(self._shift + n - 1)
        )

    # -- equality -----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, QLaurent):
            if isinstance(other, (int, Fraction, GaussRat)):
                other = QLaurent.constant(other)
            else:
                return NotImplemented
        return self._shift == other._shift and self._re == other._re and self._im == other._im

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._shift, str(self._re), str(self._im)))
        return self._hash

    def __repr__(self):
        return f"QLaurent({render_laurent(self)})"

    __str__ = lambda self: render_laurent(self)


ZERO = QLaurent()
ONE = QLaurent(_ONE, _ZERO, 0)


def render_laurent(p: QLaurent) -> str:
    """Human-readable form with exponents as powers of q."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.terms().items(), reverse=True):
        parts.append(_render_term(c, _q_power_str(e)))
    return _join_terms(parts)


def _q_power_str(x_exp: int) -> str:
    """Render ``x**x_exp`` as a power of q; empty for exponent 0."""
    if x_exp == 0:
        return ""
    fr = Fraction(x_exp, 4)
    if fr == 1:
        return "q"
    if fr.denominator == 1:
        return f"q^{fr.numerator}"
    return f"q^({fr.numerator}/{fr.denominator})"


def _render_term(c: GaussRat, mono: str) -> tuple[bool, str]:
    """Returns (negative, text-without-sign)."""
    if not c.im:
        neg = c.re < 0
        mag = abs(c.re)
        if not mono:
            return neg, str(mag)
        if mag == 1:
            return neg, mono
        return neg, f"{mag}*{mono}"
    if not c.re:
        neg = c.im < 0
        mag = abs(c.im)
        coef = "i" if mag == 1 else f"{mag}*i"
        return neg, coef if not mono else f"{coef}*{mono}"
    return False, str(c) if not mono else f"{c}*{mono}"


def _join_terms(parts) -> str:
    out = ""
    for k, (neg, txt) in enumerate(parts):
        if k == 0:
            out = ("-" if neg else "") + txt
        else:
            out += (" - " if neg else " + ") + txt
    return out


# ---------------------------------------------------------------------------
# quantum integers and friends
# ---------------------------------------------------------------------------


def q_pow(k) -> QLaurent:
    """``q**k`` for ``k`` an integer or a Fraction with denominator dividing 4."""
    k = Fraction(k) * 4
    if k.denominator != 1:
        raise ValueError(f"q^{k / 4} is not a power of q^(1/4)")
    return QLaurent.monomial(int(k))


@lru_cache(maxsize=None)
def qint(n: int) -> QLaurent:
    """Balanced quantum integer ``[n] = (q^n - q^-n)/(q - q^-1)``."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    return QLaurent.from_terms({4 * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def qfact(n: int) -> QLaurent:
    """``[n]! = [1][2]...[n]``, ``[0]! = 1``."""
    if n < 0:
        raise ValueError(f"quantum factorial of negative integer {n}")
    if n == 0:
        return ONE
    return qfact(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QLaurent:
    """Quantum binomial ``[n]!/([k]![n-k]!)``; zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    # Pascal-type recursion keeps everything polynomial
    return qbinom(n - 1, k - 1).shift(-4 * (n - k)) + qbinom(n - 1, k).shift(4 * k)


def qmultinom(parts: Iterable[int]) -> QLaurent:
    """Quantum multinomial ``[sum parts]! / prod [part]!``."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        return ZERO
    out = ONE
    total = 0
    for p in parts:
        total += p
        out = out * qbinom(total, p)
    return out


# ---------------------------------------------------------------------------
# fraction field
# ---------------------------------------------------------------------------


def _is_real_multiple(p: QLaurent):
    """If ``p = c * r`` with ``c`` a Gaussian scalar and ``r`` real, return
    ``(c, r_re_poly)``; otherwise None."""
    re, im = p._re, p._im
    if im.is_zero():
        return GaussRat(1, 0), re
    if re.is_zero():
        return GaussRat(0, 1), im
    lr = re.leading_coefficient()
    li = im.leading_coefficient()
    if re.degree() == im.degree() and im * lr == re * li:
        c = GaussRat(1, Fraction(_to_fraction(li) / _to_fraction(lr)))
        return c, re
    return None


def _poly_gcd(a: QLaurent, b: QLaurent):
    """Monic gcd of the polynomial parts (shifts ignored), as (re, im) pair."""
    ra = _is_real_multiple(a)
    rb = _is_real_multiple(b)
    if ra is not None and rb is not None:
        return ra[1].gcd(rb[1]), _ZERO
    return _gauss_gcd(_to_lists(a), _to_lists(b))


def _to_lists(p: QLaurent) -> list:
    n = max(p._re.length(), p._im.length())
    return [GaussRat(_to_fraction(p._re[k]), _to_fraction(p._im[k])) for k in range(n)]


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _gauss_divmod(a: list, b: list):
    a = list(a)
    q = [GaussRat()] * max(len(a) - len(b) + 1, 1)
    inv = b[-1].inverse()
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] * inv
        q[shift] = f
        for k, c in enumerate(b):
            a[k + shift] = a[k + shift] - f * c
        a.pop()
    return q, a


def _gauss_gcd(a: list, b: list):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _gauss_divmod(a, b)
        a, b = b, _trim(r)
    inv = a[-1].inverse()
    a = [c * inv for c in a]
    re = flint.fmpq_poly([_flint_coeff(c.re) for c in a])
    im = flint.fmpq_poly([_flint_coeff(c.im) for c in a])
    return re, im


def _divexact_pair(p: QLaurent, g_re, g_im) -> QLaurent:
    """Exact division of the polynomial part of ``p`` by ``g``."""
    if g_im.is_zero():
        if g_re.is_one():
            return p
        qr, rr = divmod(p._re, g_re)
        qi, ri = divmod(p._im, g_re)
        assert rr.is_zero() and ri.is_zero()
        return QLaurent(qr, qi, p._shift)
    g = [GaussRat(_to_fraction(g_re[k]), _to_fraction(g_im[k]))
         for k in range(max(g_re.length(), g_im.length()))]
    q, r = _gauss_divmod(_to_lists(p), g)
    assert not _trim(r)
    return QLaurent(
        flint.fmpq_poly([_flint_coeff(c.re) for c in q]),
        flint.fmpq_poly([_flint_coeff(c.im) for c in q]),
        p._shift,
    )


class QRatio:
    """Reduced fraction ``num/den`` of Laurent polynomials.

    The denominator has lowest exponent 0 and leading coefficient 1, and
    shares no nonunit factor with the numerator, so equality is structural.
    Build instances with :func:`ratio_reduce` or the arithmetic operators.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QLaurent, den: QLaurent, _reduced: bool = False):
        if not _reduced:
            r = ratio_reduce(num, den)
            num, den = r.num, r.den
        self.num = num
        self.den = den

    @classmethod
    def of(cls, v) -> "QRatio":
        if isinstance(v, QRatio):
            return v
        if not isinstance(v, QLaurent):
            v = QLaurent.constant(v)
        return cls(v, ONE, _reduced=True)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def __add__(self, other):
        o = QRatio.of(other)
        if self.den == o.den:
            return ratio_reduce(self.num + o.num, self.den)
        return ratio_reduce(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QRatio(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-QRatio.of(other))

    def __rsub__(self, other):
        return QRatio.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, (QRatio, QLaurent, int, Fraction, GaussRat)):
            return NotImplemented
        o = QRatio.of(other)
        if self.den == ONE and o.den == ONE:
            return QRatio(self.num * o.num, ONE, _reduced=True)
        return ratio_reduce(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = QRatio.of(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero in QRatio")
        return ratio_reduce(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return QRatio.of(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return QRatio.of(ONE) / (self ** (-n))
        return QRatio(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, (QLaurent, int, Fraction, GaussRat)):
            other = QRatio.of(other)
        if not isinstance(other, QRatio):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"QRatio({render_ratio(self)})"

    def __str__(self):
        return render_ratio(self)


def render_ratio(r: QRatio) -> str:
    if r.den == ONE:
        return render_laurent(r.num)
    return f"({render_laurent(r.num)}) / ({render_laurent(r.den)})"


def ratio_reduce(num: QLaurent, den: QLaurent) -> QRatio:
    """Canonical reduced fraction ``num/den``."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return QRatio(ZERO, ONE, _reduced=True)
    # move the monomial part of den into num
    num = num.shift(-den._shift)
    den = QLaurent._raw(den._re, den._im, 0)
    if den._re.degree() > 0 or den._im.degree() > 0:
        g_re, g_im = _poly_gcd(num, den)
        if g_re.degree() > 0 or g_im.degree() > 0:
            num = _divexact_pair(num, g_re, g_im)
            den = _divexact_pair(den, g_re, g_im)
    lead = den.coeff(den.degree)
    if lead != GaussRat(1, 0):
        inv = lead.inverse()
        num = num.scale(inv)
        den = den.scale(inv)
    return QRatio(num, den, _reduced=True)


# ---------------------------------------------------------------------------
# integrality normal form
# ---------------------------------------------------------------------------


class NotIntegral(ArithmeticError):
    """Raised when a value is not of the form ``i^m q^(n/4) P`` with
    ``P`` in ``Z[q, 1/q]``. ``witness`` names the offending term."""

    def __init__(self, message: str, witness=None, value=None):
        super().__init__(message)
        self.witness = witness
        self.value = value


@dataclass(frozen=True)
class BracketValue:
    """``i**phase_m * q**(quarter_shift_n/4) * body(q)``.

    ``phase_m`` is 0 (real) or 1 (imaginary); signs stay in the body.
    ``quarter_shift_n`` is in ``0..3``. ``body`` is a tuple of
    ``(q_exponent, integer_coefficient)`` pairs in decreasing exponent order.
    """

    phase_m: int
    quarter_shift_n: int
    body: tuple

    def body_laurent(self) -> QLaurent:
        """The body as an element of Z[q, 1/q] (stored in x = q^(1/4))."""
        return QLaurent.from_terms({4 * e: c for e, c in self.body})

    def reconstruct(self) -> QLaurent:
        return self.body_laurent().shift(self.quarter_shift_n).times_i(self.phase_m)

    def is_zero(self):
        return not self.body

    def render(self) -> str:
        return render_bracket(self)

    def __str__(self):
        return render_bracket(self)


def canonicalize(v) -> BracketValue:
    """Normal form ``i^m q^(n/4) P`` of a value, or raise :class:`NotIntegral`.

    Zero maps to ``BracketValue(0, 0, ())`` by convention.
    """
    if isinstance(v, QRatio):
        if not v.is_laurent():
            raise NotIntegral(
                f"not a Laurent polynomial: denominator {render_laurent(v.den)}",
                witness=("denominator", v.den), value=v,
            )
        v = v.num
    if v.is_zero():
        return BracketValue(0, 0, ())
    terms = v.terms()
    exps = sorted(terms)
    n = exps[0] % 4
    off = next((e for e in exps if e % 4 != n), None)
    if off is not None:
        raise NotIntegral(
            f"exponents q^({exps[0]}/4) and q^({off}/4) differ by a non-integral power of q",
            witness=("exponent", off), value=v,
        )
    real = all(not c.im for c in terms.values())
    imag = all(not c.re for c in terms.values())
    if not (real or imag):
        # first term whose unit disagrees with the lowest term's
        first = terms[exps[0]]
        lead_real = not first.im
        e = next(e for e in exps if (terms[e].re and terms[e].im) or (not terms[e].im) != lead_real)
        raise NotIntegral(f"coefficients mix real and imaginary units (at q^({e}/4))",
                          witness=("coefficient", e, terms[e]), value=v)
    m = 0 if real else 1
    body = []
    for e, c in sorted(terms.items(), reverse=True):
        k = c.re if real else c.im
        if k.denominator != 1:
            raise NotIntegral(f"non-integral coefficient {k} at q^({e}/4)",
                              witness=("coefficient", e, c), value=v)
        body.append(((e - n) // 4, int(k)))
    return BracketValue(m, n, tuple(body))


def render_bracket(b: BracketValue) -> str:
    """Canonical text: ``i * q^(n/4) * (c_k*q^k + ...)`` with trivial factors dropped."""
    if not b.body:
        return "0"
    parts = []
    for e, c in b.body:
        mono = _q_power_str(4 * e)
        neg = c < 0
        mag = abs(c)
        if not mono:
            parts.append((neg, str(mag)))
        elif mag == 1:
            parts.append((neg, mono))
        else:
            parts.append((neg, f"{mag}*{mono}"))
    poly = _join_terms(parts)
    prefix = []
    if b.phase_m % 4 == 1:
        prefix.append("i")
    if b.quarter_shift_n:
        prefix.append(_q_power_str(b.quarter_shift_n))
    if not prefix:
        return poly
    return " * ".join(prefix) + f" * ({poly})"


def _body_fmpz(body: QLaurent):
    """Integer polynomial in q (exponents shifted to start at 0)."""
    terms = body.terms()
    lo = min(terms) // 4
    hi = max(terms) // 4
    coeffs = [0] * (hi - lo + 1)
    for e, c in terms.items():
        coeffs[e // 4 - lo] = int(c.re)
    return flint.fmpz_poly(coeffs)


def divides(d: QLaurent, v) -> bool:
    """True iff the body of ``v`` is divisible by ``d`` in Z[q, 1/q].

    ``d`` must be a nonzero integer Laurent polynomial in q; ``v`` a
    :class:`BracketValue` (or anything :func:`canonicalize` accepts).
    """
    if not isinstance(v, BracketValue):
        v = canonicalize(v)
    if v.is_zero():
        return True
    if d.is_zero():
        raise ValueError("division by zero polynomial")
    if any(e % 4 for e in d.terms()) or not d.is_real():
        raise ValueError("divisor must be an integer Laurent polynomial in q")
    num = flint.fmpq_poly(_body_fmpz(v.body_laurent()).coeffs())
    den = flint.fmpq_poly(_body_fmpz(d).coeffs())
    quo, rem = divmod(num, den)
    return rem.is_zero() and quo.denom() == 1
