"""The two cubic bases on [0,1] that everything else is built from.

``bernstein_like`` returns the unscaled family (1-x)^3, (1-x)^2 x, (1-x) x^2,
x^3 (the classical Bernstein basis carries extra factors of 3 on the middle
two; the coefficient matrices downstream are written against the unscaled
family, so that is what we store).  ``hermite`` returns the cubic Hermite
basis.  Both are Lagrange-like at the endpoints and share the symmetry
f_k(1-x) = f_{5-k}(x).

The change of basis [bernstein] = V [hermite] and the derived weight table
eps(r, i) drive every reproduction identity in the 2D/3D modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from serencube.ratpoly import AffineMap1D, MultiPoly, RationalLike

BERNSTEIN_LIKE = "bernstein-like"
HERMITE = "hermite"


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def bernstein_weight(r: int, i: int) -> int:
    """Weight C(3-r, 4-i) of basis function i in the expansion of x^r."""
    return binom(3 - r, 4 - i)


@dataclass(frozen=True)
class Matrix4:
    """Exact 4x4 rational matrix."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("Matrix4 needs 4x4 entries")
        object.__setattr__(self, "entries", rows)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.entries[r][c]

    def row(self, r: int) -> tuple[Fraction, ...]:
        return self.entries[r]

    def col(self, c: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[r][c] for r in range(4))

    def __matmul__(self, other: "Matrix4") -> "Matrix4":
        return Matrix4(
            tuple(
                tuple(
                    sum(self.entries[r][k] * other.entries[k][c] for k in range(4))
                    for c in range(4)
                )
                for r in range(4)
            )
        )

    def apply(self, funcs: tuple[MultiPoly, ...]) -> tuple[MultiPoly, ...]:
        """Matrix-vector product against a 4-vector of polynomials."""
        return tuple(
            sum(
                (funcs[c] * self.entries[r][c] for c in range(4)),
                MultiPoly.zero(funcs[0].nvars),
            )
            for r in range(4)
        )

    @staticmethod
    def identity() -> "Matrix4":
        return Matrix4(
            tuple(
                tuple(Fraction(1 if r == c else 0) for c in range(4))
                for r in range(4)
            )
        )


@dataclass(frozen=True)
class Basis1D:
    """Ordered family of four univariate cubics on an interval."""

    functions: tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]
    kind: str
    domain: tuple[Fraction, Fraction]
    derivative_scaled: bool = False

    def __post_init__(self):
        if self.kind not in (BERNSTEIN_LIKE, HERMITE):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        a, b = self.domain
        object.__setattr__(self, "domain", (Fraction(a), Fraction(b)))
        if len(self.functions) != 4:
            raise ValueError("Basis1D needs exactly 4 functions")


def bernstein_like() -> Basis1D:
    """(1-x)^3, (1-x)^2 x, (1-x) x^2, x^3 on [0,1]."""
    x = MultiPoly.variable(1, 0)
    one = MultiPoly.const(1, 1)
    return Basis1D(
        functions=(
            (one - x) ** 3,
            (one - x) ** 2 * x,
            (one - x) * x**2,
            x**3,
        ),
        kind=BERNSTEIN_LIKE,
        domain=(Fraction(0), Fraction(1)),
    )


def hermite() -> Basis1D:
    """1-3x^2+2x^3, x-2x^2+x^3, x^2-x^3, 3x^2-2x^3 on [0,1]."""
    x = MultiPoly.variable(1, 0)
    return Basis1D(
        functions=(
            1 - 3 * x**2 + 2 * x**3,
            x - 2 * x**2 + x**3,
            x**2 - x**3,
            3 * x**2 - 2 * x**3,
        ),
        kind=HERMITE,
        domain=(Fraction(0), Fraction(1)),
    )


def matrix_V() -> tuple[Matrix4, Matrix4]:
    """The change of basis [bernstein] = V [hermite], with its inverse."""
    V = Matrix4(
        (
            (1, -3, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, 0, -3, 1),
        )
    )
    Vinv = Matrix4(
        (
            (1, 3, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, 0, 3, 1),
        )
    )
    return V, Vinv


def _eps_table() -> tuple[tuple[Fraction, ...], ...]:
    V, _ = matrix_V()
    return tuple(
        tuple(
            sum(
                (Fraction(binom(3 - r, 4 - a)) * V[(a - 1, i - 1)] for a in range(1, 5)),
                Fraction(0),
            )
            for i in range(1, 5)
        )
        for r in range(4)
    )


@dataclass(frozen=True)
class EpsTable:
    """Hermite reproduction weights: eps(r, i) expands x^r over the basis."""

    values: tuple[tuple[Fraction, ...], ...]

    def __call__(self, r: int, i: int) -> Fraction:
        if r not in (0, 1, 2, 3):
            raise IndexError(f"r must be in 0..3, got {r}")
        if i not in (1, 2, 3, 4):
            raise IndexError(f"i must be in 1..4, got {i}")
        return self.values[r][i - 1]


EPS = EpsTable(_eps_table())


def eps(r: int, i: int) -> Fraction:
    """Weight of hermite function i in the expansion of x^r on [0,1]."""
    return EPS(r, i)


def reproduce_monomial(basis: Basis1D, r: int) -> MultiPoly:
    """The weighted sum over the basis that reproduces x^r on [0,1]."""
    if basis.domain != (Fraction(0), Fraction(1)):
        raise ValueError("reproduction weights apply to the [0,1] basis")
    if r not in (0, 1, 2, 3):
        raise ValueError(f"r must be in 0..3, got {r}")
    if basis.kind == BERNSTEIN_LIKE:
        weights = [Fraction(bernstein_weight(r, i)) for i in range(1, 5)]
    else:
        weights = [eps(r, i) for i in range(1, 5)]
    return sum(
        (f * w for f, w in zip(basis.functions, weights)),
        MultiPoly.zero(1),
    )


def scale_to_interval(
    basis: Basis1D,
    a: RationalLike,
    b: RationalLike,
    derivative_preserving: bool = False,
) -> Basis1D:
    """Carry a basis to [a, b] by composing with the affine interval map.

    With ``derivative_preserving`` and a hermite basis, functions 2 and 3
    additionally pick up the width ratio so their coefficient slots stay
    true endpoint derivatives.
    """
    a, b = Fraction(a), Fraction(b)
    if a == b:
        raise ValueError("degenerate interval")
    c, d = basis.domain
    # new_f(x) = old_f(T(x)) with T sending [a,b] onto the old domain [c,d]
    to_unit = AffineMap1D.interval_to_unit(a, b)
    T = AffineMap1D((d - c) * to_unit.scale, (d - c) * to_unit.shift + c)
    funcs = [f.substitute_affine(0, T) for f in basis.functions]
    scaled = derivative_preserving and basis.kind == HERMITE
    if scaled:
        ratio = (b - a) / (d - c)
        funcs[1] = funcs[1] * ratio
        funcs[2] = funcs[2] * ratio
    return Basis1D(
        functions=tuple(funcs),
        kind=basis.kind,
        domain=(a, b),
        derivative_scaled=scaled,
    )


def hermite_interpolate(
    u: MultiPoly, domain: tuple[RationalLike, RationalLike] = (0, 1)
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients (u(a), (b-a)u'(a), -(b-a)u'(b), u(b)) for a cubic u.

    Pairing these with the hermite basis carried to [a, b] (plain scaling,
    no derivative factor) reproduces u exactly.
    """
    if u.nvars != 1:
        raise ValueError("hermite interpolation needs a univariate polynomial")
    deg = u.total_degree()
    if deg is not None and deg > 3:
        raise ValueError(f"degree {deg} > 3")
    a, b = Fraction(domain[0]), Fraction(domain[1])
    if a == b:
        raise ValueError("degenerate interval")
    w = b - a
    du = u.partial(0)
    return (
        u.evaluate([a]),
        w * du.evaluate([a]),
        -w * du.evaluate([b]),
        u.evaluate([b]),
    )
