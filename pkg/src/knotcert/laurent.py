"""Exact integer Laurent polynomials in one variable t.

This is the shared coefficient language of the certifier: Alexander
polynomials live here, and the formal Seiberg-Witten calculus consumes
these polynomials as surgery multipliers.  Coefficients are Python ints,
so nothing ever overflows; the canonical form stores no zero
coefficients, so ``==`` is exact structural equality.
"""

from __future__ import annotations

import json


class ZeroPolynomial(ValueError):
    """Raised by operations that are undefined for the zero polynomial."""


class NotSymmetrizable(ValueError):
    """No unit multiple +/- t^k of the polynomial is palindromic.

    For Alexander-polynomial input this signals a malformed knot; the
    certifier refuses to guess a normalization.
    """


class LaurentPoly:
    """An element of Z[t, t^-1], stored as {exponent: nonzero coefficient}.

    >>> p = LaurentPoly({1: 1, 0: -1, -1: 1})
    >>> str(p * p)
    't^2 - 2t + 3 - 2t^-1 + t^-2'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        clean: dict[int, int] = {}
        if coeffs:
            for exp, c in coeffs.items():
                if not isinstance(exp, int) or isinstance(exp, bool):
                    raise TypeError(f"exponent {exp!r} is not an int")
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficient {c!r} is not an int")
                if c != 0:
                    clean[exp] = c
        self._coeffs = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def t(cls, exponent: int = 1) -> "LaurentPoly":
        return cls({exponent: 1})

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LaurentPoly":
        return cls({exponent: coeff})

    # -- basic queries -----------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """A copy of the exponent -> coefficient map (zeros absent)."""
        return dict(self._coeffs)

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def min_exp(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exp(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return max(self._coeffs)

    def degree_span(self) -> int:
        """max exponent - min exponent; rejects the zero polynomial."""
        return self.max_exp() - self.min_exp()

    def eval_at_one(self) -> int:
        """Sum of all coefficients, i.e. the value at t = 1."""
        return sum(self._coeffs.values())

    def term_count(self) -> int:
        return len(self._coeffs)

    # -- ring structure ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly({0: other})
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute t -> t^-1."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def is_palindromic(self) -> bool:
        return self._coeffs == self.mirror()._coeffs

    # -- normalization and division ----------------------------------

    def symmetric_normalize(self) -> "LaurentPoly":
        """The unit multiple +/- t^k with r(t) = r(1/t) and positive top coefficient.

        Only the exponent shift centering the support can make the
        polynomial palindromic, so symmetrization fails exactly when the
        exponent span is odd or the centered polynomial is not its own
        mirror.  Failure raises NotSymmetrizable rather than passing
        silently: it means the input was not a valid Alexander polynomial.
        """
        if not self._coeffs:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lo, hi = self.min_exp(), self.max_exp()
        if (lo + hi) % 2 != 0:
            raise NotSymmetrizable(
                f"exponent span {hi - lo} is odd; support cannot be centered"
            )
        centered = self.shifted(-(lo + hi) // 2)
        if not centered.is_palindromic():
            raise NotSymmetrizable("no unit multiple of the polynomial is palindromic")
        if centered.coefficient(centered.max_exp()) < 0:
            centered = -centered
        return centered

    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError when the quotient is not in Z[t, t^-1]."""
        if divisor.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        shift = self.min_exp() - divisor.min_exp()
        num = _dense(self)
        den = _dense(divisor)
        quot = [0] * (len(num) - len(den) + 1)
        if len(num) < len(den):
            raise ValueError("division is not exact (degree too small)")
        rem = list(num)
        lead = den[-1]
        for k in range(len(quot) - 1, -1, -1):
            head = rem[k + len(den) - 1]
            if head % lead != 0:
                raise ValueError("division is not exact (coefficient not divisible)")
            q = head // lead
            quot[k] = q
            if q:
                for i, d in enumerate(den):
                    rem[k + i] -= q * d
        if any(rem):
            raise ValueError("division is not exact (nonzero remainder)")
        return LaurentPoly({k + shift: c for k, c in enumerate(quot) if c})

    # -- serialization ------------------------------------------------

    def to_text(self) -> str:
        """Strict round-trip form: terms ascending, explicit "c*t^e"."""
        if not self._coeffs:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in sorted(self._coeffs.items()))

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls.zero()
        coeffs: dict[int, int] = {}
        for term in text.split(" + "):
            try:
                c_str, e_str = term.split("*t^")
                exp = int(e_str)
                coeff = int(c_str)
            except ValueError:
                raise ValueError(f"malformed Laurent term {term!r}") from None
            if exp in coeffs:
                raise ValueError(f"duplicate exponent {exp} in {text!r}")
            coeffs[exp] = coeff
        return cls(coeffs)

    def to_json_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._coeffs.items())}

    @classmethod
    def from_json_dict(cls, data: dict[str, int]) -> "LaurentPoly":
        return cls({int(e): c for e, c in data.items()})

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_dict(json.loads(text))

    # -- display -----------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for exp in sorted(self._coeffs, reverse=True):
            c = self._coeffs[exp]
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                var = "t" if exp == 1 else f"t^{exp}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._coeffs.items()))!r})"


def _dense(p: LaurentPoly) -> list[int]:
    """Coefficients of t^min..t^max as a dense list."""
    lo, hi = p.min_exp(), p.max_exp()
    out = [0] * (hi - lo + 1)
    for e, c in p._coeffs.items():
        out[e - lo] = c
    return out


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
