"""Exact scalars: the field Q(q) of rational functions in one formal parameter.

A Scalar is stored in the canonical form  q^shift * num(q) / den(q)  where
num and den are polynomials over Q with nonzero constant term, den is monic
and gcd(num, den) = 1.  Equality is therefore syntactic.  q is never
specialised: identities proved here hold at every q != 0.
"""

from __future__ import annotations

import re
from fractions import Fraction

_ZERO_POLY = (Fraction(0),)
_ONE_POLY = (Fraction(1),)


def _trim(coeffs):
    """Drop trailing zero coefficients, keeping at least one entry."""
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _is_zero_poly(p):
    return len(p) == 1 and p[0] == 0


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ])


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if _is_zero_poly(a) or _is_zero_poly(b):
        return _ZERO_POLY
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a, b):
    """Polynomial division over Q; b must be nonzero."""
    if _is_zero_poly(b):
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and not (len(r) == 1 and r[0] == 0):
        k = len(r) - 1 - db
        c = r[-1] / lb
        q[k] = c
        for j in range(len(b)):
            r[k + j] -= c * b[j]
        r = list(_trim(r))
        if len(r) - 1 < db:
            break
    return _trim(q), _trim(r)


def _pgcd(a, b):
    """Monic gcd over Q[q]."""
    while not _is_zero_poly(b):
        a, b = b, _pdivmod(a, b)[1]
    if _is_zero_poly(a):
        return _ONE_POLY
    lead = a[-1]
    return tuple(c / lead for c in a)


class Scalar:
    """An element of Q(q) in canonical Laurent form."""

    __slots__ = ("shift", "num", "den")

    def __init__(self, shift=0, num=_ZERO_POLY, den=_ONE_POLY, _normalized=False):
        if _normalized:
            self.shift, self.num, self.den = shift, num, den
            return
        num = _trim(tuple(Fraction(c) for c in num))
        den = _trim(tuple(Fraction(c) for c in den))
        if _is_zero_poly(den):
            raise ZeroDivisionError("scalar with zero denominator")
        if _is_zero_poly(num):
            self.shift, self.num, self.den = 0, _ZERO_POLY, _ONE_POLY
            return
        # factor plain q powers out of num and den into the shift
        t = next(i for i, c in enumerate(num) if c != 0)
        if t:
            shift += t
            num = num[t:]
        t = next(i for i, c in enumerate(den) if c != 0)
        if t:
            shift -= t
            den = den[t:]
        g = _pgcd(num, den)
        if g != _ONE_POLY:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            den = tuple(c / lead for c in den)
            num = tuple(c / lead for c in num)
        self.shift, self.num, self.den = shift, num, den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value):
        value = Fraction(value)
        if value == 0:
            return ZERO
        return cls(0, (value,), _ONE_POLY)

    @classmethod
    def q_power(cls, k):
        return cls(int(k), _ONE_POLY, _ONE_POLY)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return _is_zero_poly(self.num)

    def is_one(self):
        return self.shift == 0 and self.num == _ONE_POLY and self.den == _ONE_POLY

    def is_sign(self):
        """True iff the scalar equals +1 or -1."""
        return self.den == _ONE_POLY and self.shift == 0 and self.num in (
            _ONE_POLY, (Fraction(-1),))

    def is_rational(self):
        return len(self.num) == 1 and self.den == _ONE_POLY and (
            self.shift == 0 or self.is_zero())

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"scalar {self} is not a plain rational")
        return self.num[0]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        shift = min(self.shift, other.shift)
        a = self.num
        if self.shift > shift:
            a = (Fraction(0),) * (self.shift - shift) + a
        b = other.num
        if other.shift > shift:
            b = (Fraction(0),) * (other.shift - shift) + b
        if self.den == other.den:
            return Scalar(shift, _padd(a, b), self.den)
        num = _padd(_pmul(a, other.den), _pmul(b, self.den))
        return Scalar(shift, num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.shift, _pneg(self.num), self.den, _normalized=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        return Scalar(self.shift + other.shift,
                      _pmul(self.num, other.num),
                      _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(-self.shift, self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.shift, self.num, self.den) == (other.shift, other.num, other.den)

    def __hash__(self):
        if self.is_rational():
            return hash(self.num[0])
        return hash((self.shift, self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- serialization -----------------------------------------------------

    def __str__(self):
        num, den = self._integer_pair()
        s = _poly_str(num)
        if den == (1,):
            return s
        if _is_multiterm(s):
            s = f"({s})"
        d = _poly_str(den)
        if _is_multiterm(d):
            d = f"({d})"
        return f"{s}/{d}"

    def __repr__(self):
        return f"Scalar({self})"

    def _integer_pair(self):
        """Clear denominators: the value as P(q)/R(q) with coprime integer
        coefficient vectors and positive leading coefficient on R."""
        num, den = self.num, self.den
        if self.shift >= 0:
            num = (Fraction(0),) * self.shift + num
        else:
            den = (Fraction(0),) * (-self.shift) + den
        mult = 1
        for c in num + den:
            mult = mult * c.denominator // _gcd_int(mult, c.denominator)
        n = [int(c * mult) for c in num]
        d = [int(c * mult) for c in den]
        content = 0
        for c in n + d:
            content = _gcd_int(content, abs(c))
        if content > 1:
            n = [c // content for c in n]
            d = [c // content for c in d]
        if d[-1] < 0:
            n = [-c for c in n]
            d = [-c for c in d]
        return tuple(n), tuple(d)

    @classmethod
    def parse(cls, text):
        """Parse strings of the form "p(q)" or "p(q)/r(q)"."""
        text = text.strip()
        num_s, den_s = _split_fraction(text)
        num = _parse_poly(num_s)
        den = _parse_poly(den_s) if den_s is not None else {0: Fraction(1)}
        return _from_exp_map(num) / _from_exp_map(den)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar.from_rational(value)
    return NotImplemented


def _is_multiterm(rendered):
    return any(ch in rendered[1:] for ch in "+-")


def _poly_str(coeffs):
    """Render an integer coefficient vector, descending powers of q."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "q" if mag == 1 else f"{mag}*q"
        else:
            body = f"q^{k}" if mag == 1 else f"{mag}*q^{k}"
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


def _split_fraction(text):
    """Split "a/b" at the top-level slash, honouring parentheses."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return text[:i], text[i + 1:]
    return text, None


_TERM_RE = re.compile(
    r"([+-]?)\s*("
    r"(?P<coef>\d+(?:/\d+)?)\s*\*?\s*(?:q(?:\^(?P<exp1>-?\d+))?)?"
    r"|q(?:\^(?P<exp2>-?\d+))?"
    r")\s*")


def _parse_poly(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        inner, depth = text[1:-1], 0
        for ch in inner:
            depth += {"(": 1, ")": -1}.get(ch, 0)
            if depth < 0:
                break
        else:
            text = inner
    out = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group("coef") is not None:
            coef = Fraction(m.group("coef"))
            has_q = "q" in m.group(2)
            exp = int(m.group("exp1") or (1 if has_q else 0)) if has_q else 0
        else:
            coef = Fraction(1)
            exp = int(m.group("exp2") or 1)
        out[exp] = out.get(exp, Fraction(0)) + sign * coef
        pos = m.end()
    if not out:
        raise ValueError(f"empty scalar expression {text!r}")
    return out


def _from_exp_map(exps):
    lo = min(exps)
    coeffs = [Fraction(0)] * (max(exps) - lo + 1)
    for e, c in exps.items():
        coeffs[e - lo] = c
    return Scalar(lo, tuple(coeffs))


ZERO = Scalar(0, _ZERO_POLY, _ONE_POLY, _normalized=True)
ONE = Scalar(0, _ONE_POLY, _ONE_POLY, _normalized=True)
MINUS_ONE = Scalar(0, (Fraction(-1),), _ONE_POLY, _normalized=True)
Q = Scalar(1, _ONE_POLY, _ONE_POLY, _normalized=True)
