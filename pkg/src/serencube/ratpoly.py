"""Exact multivariate polynomial arithmetic over the rationals.

A polynomial in 1 to 3 variables is stored as a map from exponent tuples to
nonzero ``Fraction`` coefficients.  All operations are exact; no floating
point ever enters.  Two polynomials are equal iff their canonical term maps
are equal, which makes identity testing fully reliable.

Values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Exponents = tuple[int, ...]
RationalLike = Union[int, Fraction]

VAR_NAMES = ("x", "y", "z")


def superlinear_degree(exponents: Sequence[int]) -> int:
    """Degree of a monomial counting only variables with exponent >= 2."""
    return sum(e for e in exponents if e != 1)


def monomial_total_degree(exponents: Sequence[int]) -> int:
    return sum(exponents)


@dataclass(frozen=True)
class AffineMap1D:
    """One-variable map x -> scale*x + shift, scale != 0."""

    scale: Fraction
    shift: Fraction

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))
        object.__setattr__(self, "shift", Fraction(self.shift))
        if self.scale == 0:
            raise ValueError("affine map must be invertible (scale != 0)")

    def __call__(self, x: RationalLike) -> Fraction:
        return self.scale * Fraction(x) + self.shift

    def inverse(self) -> "AffineMap1D":
        return AffineMap1D(1 / self.scale, -self.shift / self.scale)

    @staticmethod
    def interval_to_unit(a: RationalLike, b: RationalLike) -> "AffineMap1D":
        """The map sending [a, b] onto [0, 1]."""
        a, b = Fraction(a), Fraction(b)
        if a == b:
            raise ValueError("degenerate interval")
        w = b - a
        return AffineMap1D(1 / w, -a / w)


class MultiPoly:
    """Immutable polynomial with Fraction coefficients in 1..3 variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, RationalLike] = ()):
        if nvars not in (1, 2, 3):
            raise ValueError(f"nvars must be 1, 2 or 3, got {nvars}")
        canonical: dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for nvars={nvars}")
            c = canonical.get(exps, Fraction(0)) + Fraction(coeff)
            if c == 0:
                canonical.pop(exps, None)
            else:
                canonical[exps] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", canonical)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "MultiPoly":
        return MultiPoly(nvars, {})

    @staticmethod
    def const(nvars: int, value: RationalLike) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def variable(nvars: int, var: int) -> "MultiPoly":
        if not 0 <= var < nvars:
            raise IndexError(f"variable index {var} out of range for nvars={nvars}")
        exps = [0] * nvars
        exps[var] = 1
        return MultiPoly(nvars, {tuple(exps): Fraction(1)})

    @staticmethod
    def variables(nvars: int) -> tuple["MultiPoly", ...]:
        return tuple(MultiPoly.variable(nvars, i) for i in range(nvars))

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        """Copy of the canonical term map (no zero coefficients)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def total_degree(self) -> int | None:
        """Max total degree over terms; None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: int) -> int:
        if not self._terms:
            return 0
        return max(e[var] for e in self._terms)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable-count mismatch: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for exps, c in other._terms.items():
            merged[exps] = merged.get(exps, Fraction(0)) + c
        return MultiPoly(self.nvars, merged)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.nvars, {e: c * v for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- evaluation and calculus -------------------------------------------

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.nvars:
            raise ValueError(f"point length {len(point)} != nvars {self.nvars}")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            v = c
            for x, e in zip(pt, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def substitute_affine(self, var: int, m: AffineMap1D) -> "MultiPoly":
        """Replace variable ``var`` by scale*var + shift."""
        if not 0 <= var < self.nvars:
            raise IndexError(f"variable index {var} out of range")
        # Precompute (scale*x + shift)^e expansions up to the needed degree.
        maxdeg = self.degree_in(var)
        lin = MultiPoly(1, {(1,): m.scale, (0,): m.shift})
        powers = [MultiPoly.const(1, 1)]
        for _ in range(maxdeg):
            powers.append(powers[-1] * lin)
        out: dict[Exponents, Fraction] = {}
        for exps, c in self._terms.items():
            e = exps[var]
            for (k,), ck in powers[e]._terms.items():
                new = list(exps)
                new[var] = k
                key = tuple(new)
                out[key] = out.get(key, Fraction(0)) + c * ck
        return MultiPoly(self.nvars, out)

    def partial(self, var: int) -> "MultiPoly":
        """Exact partial derivative with respect to variable ``var``."""
        if not 0 <= var < self.nvars:
            raise IndexError(f"variable index {var} out of range")
        out: dict[Exponents, Fraction] = {}
        for exps, c in self._terms.items():
            e = exps[var]
            if e == 0:
                continue
            new = list(exps)
            new[var] = e - 1
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + c * e
        return MultiPoly(self.nvars, out)

    def restrict(self, var: int, value: RationalLike) -> "MultiPoly":
        """Pin variable ``var`` to a rational value, dropping it.

        The result has nvars-1 variables; remaining variables keep their
        relative order.  Restricting a univariate polynomial is not
        supported (evaluate instead).
        """
        if not 0 <= var < self.nvars:
            raise IndexError(f"variable index {var} out of range")
        if self.nvars == 1:
            raise ValueError("cannot restrict a univariate polynomial; use evaluate")
        v = Fraction(value)
        out: dict[Exponents, Fraction] = {}
        for exps, c in self._terms.items():
            coeff = c * v ** exps[var]
            key = exps[:var] + exps[var + 1 :]
            out[key] = out.get(key, Fraction(0)) + coeff
        return MultiPoly(self.nvars - 1, out)

    def integrate_box(
        self, bounds: Sequence[tuple[RationalLike, RationalLike]]
    ) -> Fraction:
        """Exact definite integral over an axis-aligned box.

        ``bounds`` gives one (lower, upper) pair per variable.
        """
        if len(bounds) != self.nvars:
            raise ValueError(f"need {self.nvars} bounds, got {len(bounds)}")
        bnds = [(Fraction(a), Fraction(b)) for a, b in bounds]
        total = Fraction(0)
        for exps, c in self._terms.items():
            v = c
            for (a, b), e in zip(bnds, exps):
                v *= (b ** (e + 1) - a ** (e + 1)) / (e + 1)
            total += v
        return total

    # -- formatting ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded lexicographic order of the exponent tuple."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = [
                VAR_NAMES[i] if e == 1 else f"{VAR_NAMES[i]}^{e}"
                for i, e in enumerate(exps)
                if e > 0
            ]
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self!s})"


def poly_from_terms(nvars: int, terms: Iterable[tuple[Exponents, RationalLike]]) -> MultiPoly:
    return MultiPoly(nvars, dict(terms))
