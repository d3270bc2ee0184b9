"""Exact one-variable Laurent polynomials over the integers.

Two variables are used: ``s`` (a square root of ``t``) and ``z = s^-1 - s``,
the Conway variable.  Both share one class, tagged by ``var``; arithmetic
across tags is refused.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Tuple

VARIABLES = ("s", "z")


class VariableMismatch(ValueError):
    pass


class NotExpressibleInZ(ValueError):
    """An s-polynomial is not symmetric under s -> -1/s, so it has no z form."""


class LaurentPoly:
    __slots__ = ("var", "_c")

    def __init__(self, coeffs: Mapping[int, int] = None, var: str = "z"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable {var!r}")
        c = {int(e): int(v) for e, v in (coeffs or {}).items() if v}
        if var == "z" and any(e < 0 for e in c):
            raise ValueError("z-polynomials have nonnegative exponents only")
        self.var = var
        self._c = c

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int, var: str = "z") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "z") -> "LaurentPoly":
        return cls({exponent: coeff}, var)

    @classmethod
    def gen(cls, var: str = "z") -> "LaurentPoly":
        return cls({1: 1}, var)

    # -- inspection ---------------------------------------------------
    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def items(self) -> Iterable[Tuple[int, int]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    # -- ring operations ----------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.var != self.var:
            raise VariableMismatch(f"cannot combine {self.var}- and {other.var}-polynomials")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                if abs(v) == 1:
                    return LaurentPoly({e * n: v ** -n}, self.var)
            raise ValueError("only units have negative powers")
        result = LaurentPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self._c == other._c

    def __hash__(self):
        return hash((self.var, frozenset(self._c.items())))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var^k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()}, self.var)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Quotient ``p / q`` in Z[var, var^-1]; raises if the division is not exact."""
    if p.var != q.var:
        raise VariableMismatch("variable tags differ")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly({}, p.var)
    rem = dict(p._c)
    qlo, qhi = q.min_exp(), q.max_exp()
    lead = q._c[qhi]
    quot: Dict[int, int] = {}
    while rem:
        top = max(rem)
        if top - qhi < min(rem) - qlo:
            raise ArithmeticError("inexact Laurent polynomial division")
        c, r = divmod(rem[top], lead)
        if r:
            raise ArithmeticError("inexact Laurent polynomial division")
        k = top - qhi
        quot[k] = c
        for e, v in q._c.items():
            nv = rem.get(e + k, 0) - c * v
            if nv:
                rem[e + k] = nv
            else:
                rem.pop(e + k, None)
    return LaurentPoly(quot, p.var)


def format_poly(p: LaurentPoly) -> str:
    """Increasing exponent order: ``1 + 2*z^6 + z^12``, ``-2*z^7``, ``s^-2 - 2 + s^2``."""
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.items():
        if e == 0:
            mono = None
        elif e == 1:
            mono = p.var
        else:
            mono = f"{p.var}^{e}"
        a = abs(c)
        if mono is None:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\*([sz])(?:\^(-?\d+))?|([sz])(?:\^(-?\d+))?|(\d+))")


def parse_poly(text: str, var: str = None) -> LaurentPoly:
    """Inverse of :func:`format_poly`.  The variable is inferred when not given."""
    coeffs: Dict[int, int] = {}
    pos, first = 0, True
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not first and not m.group(1)):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(3):
            v, c, e = m.group(3), int(m.group(2)), int(m.group(4) or 1)
        elif m.group(5):
            v, c, e = m.group(5), 1, int(m.group(6) or 1)
        else:
            v, c, e = None, int(m.group(7)), 0
        if v is not None:
            if var is not None and v != var:
                raise VariableMismatch(f"mixed variables in {text!r}")
            var = v
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos, first = m.end(), False
    if first:
        raise ValueError("empty polynomial text")
    return LaurentPoly(coeffs, var or "z")


# -- z <-> s change of variable ------------------------------------------

def _z_in_s() -> LaurentPoly:
    return LaurentPoly({-1: 1, 1: -1}, "s")


def z_to_s(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``z = s^-1 - s``."""
    if p.var != "z":
        raise VariableMismatch("z_to_s expects a z-polynomial")
    out = LaurentPoly({}, "s")
    zs = _z_in_s()
    power = LaurentPoly.const(1, "s")
    for e in range(0, (p.max_exp() + 1) if not p.is_zero() else 0):
        if p[e]:
            out = out + power * p[e]
        power = power * zs
    return out


def s_to_z(p: LaurentPoly) -> LaurentPoly:
    """Write an s-polynomial as a polynomial in ``z = s^-1 - s``.

    Peels off the most negative power: if the lowest term is ``c*s^-d`` then
    ``c*z^d`` accounts for it.  A nonzero remainder that cannot be peeled
    means ``p(s) != p(-1/s)``.
    """
    if p.var != "s":
        raise VariableMismatch("s_to_z expects an s-polynomial")
    rem = p
    out: Dict[int, int] = {}
    zs = _z_in_s()
    while not rem.is_zero():
        lo = rem.min_exp()
        d = -lo
        if d < 0 or rem.max_exp() != d:
            raise NotExpressibleInZ(f"{format_poly(p)} is not a polynomial in s^-1 - s")
        c = rem[lo]
        out[d] = c
        rem = rem - (zs ** d) * c
    return LaurentPoly(out, "z")


def truncate(p: LaurentPoly, m: int) -> LaurentPoly:
    """Drop every term of exponent >= m (work modulo z^m)."""
    if p.var != "z":
        raise VariableMismatch("truncate expects a z-polynomial")
    return LaurentPoly({e: v for e, v in p.coeffs.items() if e < m}, "z")


def skein_combine(parts) -> LaurentPoly:
    """Sum of ``coefficient * poly`` over ``(coefficient, poly)`` pairs."""
    total = LaurentPoly({}, "z")
    for coefficient, poly in parts:
        total = total + poly * coefficient
    return total


def coefficient_a(p: LaurentPoly, k: int) -> int:
    """``a_k``, the z^k coefficient."""
    if p.var != "z":
        raise VariableMismatch("coefficient_a expects a z-polynomial")
    return p[k]
