"""f-vector invariants: generating functions, h-vectors, X and Y valuations.

Everything is exact.  Polynomials carry ``Fraction`` coefficients, where
index i is the coefficient of t^i.  Valuations are integer vectors acting
on f-vectors padded on the right with zeros.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd

from .core import Complex, unit_sphere
from .linalg import rank, solve_rational

__all__ = [
    "IntPolynomial",
    "SpanReport",
    "Valuation",
    "barycentric_operator",
    "curvature_lemma_check",
    "ds_symmetry_test",
    "euler_valuation",
    "expand_in_x",
    "f_polynomial",
    "functional_gauss_bonnet_check",
    "gauss_bonnet_check",
    "gauss_bonnet_curvature",
    "h_polynomial",
    "h_vector",
    "is_palindromic",
    "polynomial_from_fvector",
    "reflection_commutes",
    "reflection_matrix",
    "span_equality_check",
    "stirling2",
    "x_valuation",
    "y_valuation",
]


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Exact polynomial with trailing zeros trimmed (zero is ``()``)."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Sequence = ()):
        c = [Fraction(v) for v in coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def t(cls) -> IntPolynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def __add__(self, other) -> IntPolynomial:
        other = _poly(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coefficients])

    def __sub__(self, other) -> IntPolynomial:
        return self + (-_poly(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _poly(other) - self

    def __mul__(self, other) -> IntPolynomial:
        other = _poly(other)
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        """Evaluate at a number, or compose with another polynomial."""
        acc = _poly(0) if isinstance(x, IntPolynomial) else Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def antiderivative(self) -> IntPolynomial:
        """Integral from 0 to t."""
        return IntPolynomial([0] + [c / (i + 1) for i, c in enumerate(self.coefficients)])

    def reflect(self) -> IntPolynomial:
        """t -> -1 - t."""
        return self(IntPolynomial((-1, -1)))

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coefficients[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coefficients[0::2])

    def integer_coefficients(self) -> tuple[int, ...]:
        if any(c.denominator != 1 for c in self.coefficients):
            raise ValueError("polynomial has non-integer coefficients")
        return tuple(int(c) for c in self.coefficients)

    def __repr__(self) -> str:
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) if terms else "0"


def _poly(x) -> IntPolynomial:
    return x if isinstance(x, IntPolynomial) else IntPolynomial((x,))


def polynomial_from_fvector(f: Sequence[int]) -> IntPolynomial:
    return IntPolynomial([1, *f])


def f_polynomial(G: Complex | Sequence[int]) -> IntPolynomial:
    """1 + sum_k f_k t^(k+1); accepts a complex or a raw f-vector."""
    f = G.f_vector if isinstance(G, Complex) else tuple(G)
    return polynomial_from_fvector(f)


def h_polynomial(G: Complex | Sequence[int]) -> IntPolynomial:
    """(t - 1)^(q+1) f(1/(t - 1)) = sum_k f_{k-1} (t - 1)^(q+1-k), f_{-1} = 1."""
    f = G.f_vector if isinstance(G, Complex) else tuple(G)
    if not f:
        raise ValueError("h-polynomial of the void complex is undefined")
    q = len(f) - 1
    tm1 = IntPolynomial((-1, 1))
    full = (1, *f)
    out = IntPolynomial()
    for k, c in enumerate(full):
        out = out + c * tm1 ** (q + 1 - k)
    return out


def h_vector(G: Complex | Sequence[int]) -> tuple[int, ...]:
    f = G.f_vector if isinstance(G, Complex) else tuple(G)
    h = h_polynomial(f)
    return tuple(int(h[i]) for i in range(len(f) + 1))


def is_palindromic(p: IntPolynomial | Sequence, length: int | None = None) -> bool:
    """Coefficient list (padded to ``length``) reads the same backwards."""
    c = list(p.coefficients) if isinstance(p, IntPolynomial) else [Fraction(v) for v in p]
    if length is not None:
        c = c + [Fraction(0)] * (length - len(c))
    return c == c[::-1]


def ds_symmetry_test(G: Complex | Sequence[int]) -> bool:
    """f(t) = (-1)^(q+1) f(-1 - t), i.e. f is even or odd about t = -1/2.

    The sign is the parity of deg f = q + 1; this is the form equivalent to
    a palindromic h-vector, and the equivalence is re-checked on each call.
    """
    f = G.f_vector if isinstance(G, Complex) else tuple(G)
    p = polynomial_from_fvector(f)
    q = len(f) - 1
    sym = p == (-1) ** (q + 1) * p.reflect()
    if f:
        pal = is_palindromic(h_polynomial(f), q + 2)
        if pal != sym:
            raise ArithmeticError("h-palindrome and reflection symmetry disagree")
        shifted = p(IntPolynomial((Fraction(-1, 2), 1)))
        if sym != (shifted.is_even() if (q + 1) % 2 == 0 else shifted.is_odd()):
            raise ArithmeticError("centered generating function parity disagrees")
    return sym


@dataclass(frozen=True)
class Valuation:
    """Linear functional X(G) = X . f(G) on complexes of dimension <= q."""

    coeffs: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, G: Complex | Sequence[int]):
        f = G.f_vector if isinstance(G, Complex) else tuple(G)
        if len(f) > len(self.coeffs):
            raise ValueError(f"f-vector of length {len(f)} exceeds valuation length {len(self.coeffs)}")
        return sum(a * b for a, b in zip(self.coeffs, f))

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)


def euler_valuation(q: int) -> Valuation:
    return Valuation(tuple((-1) ** k for k in range(q + 1)))


def x_valuation(k: int, q: int) -> Valuation:
    """X_{k,q} = sum_{j=k}^q (-1)^(j+q) C(j+1, k+1) e_j - e_k."""
    if not (0 <= k < q):
        raise ValueError(f"need 0 <= k < q, got k={k}, q={q}")
    v = [0] * (q + 1)
    for j in range(k, q + 1):
        v[j] += (-1) ** (j + q) * comb(j + 1, k + 1)
    v[k] -= 1
    return Valuation(tuple(v))


def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind by inclusion-exclusion."""
    if n < 0 or k < 0:
        return 0
    return sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1)) // factorial(k)


def barycentric_operator(q: int) -> list[list[int]]:
    """A[i][j] = S2(j, i) i! with 1-based i, j; f(G_1) = A f(G)."""
    if q < 0:
        raise ValueError("q must be >= 0")
    n = q + 1
    return [[stirling2(j, i) * factorial(i) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _primitive_sign(v: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    last = next(x for x in reversed(ints) if x)
    return tuple(-x for x in ints) if last < 0 else tuple(ints)


def y_valuation(k: int, q: int) -> Valuation:
    """Eigenvector of A_q^T for the eigenvalue (k+1)!.

    A^T is lower triangular, so the eigenvector vanishes above position k
    and the rest follows by forward substitution.  Scaled to a primitive
    integer vector whose last nonzero entry is positive.
    """
    if not (0 <= k <= q):
        raise ValueError(f"need 0 <= k <= q, got k={k}, q={q}")
    A = barycentric_operator(q)
    lam = factorial(k + 1)
    y = [Fraction(0)] * (q + 1)
    y[k] = Fraction(1)
    for i in range(k + 1, q + 1):
        # row i of A^T is column i of A
        s = sum(A[l][i] * y[l] for l in range(k, i))
        y[i] = s / (lam - A[i][i])
    return Valuation(_primitive_sign(y))


def reflection_matrix(q: int) -> list[list[int]]:
    """t -> -1 - t on span{t, ..., t^(q+1)}, constant term dropped.

    Column j holds the coefficients of (-1 - t)^(j+1) at t^(i+1).
    """
    n = q + 1
    return [[comb(j + 1, i + 1) * (-1) ** (j + 1) for j in range(n)] for i in range(n)]


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def reflection_commutes(q: int) -> bool:
    A, T = barycentric_operator(q), reflection_matrix(q)
    return _matmul(T, A) == _matmul(A, T)


def gauss_bonnet_curvature(G: Complex, X: Valuation | Sequence[int], v: int) -> Fraction:
    """K(v) = sum_k X_k f_{k-1}(S(v)) / (k+1), where f_{-1} = 1."""
    if (v,) not in G:
        raise ValueError(f"{v} is not a vertex of the complex")
    X = tuple(X)
    fs = (1, *unit_sphere(G, (v,)).f_vector)
    return sum((Fraction(X[k] * fs[k], k + 1) for k in range(min(len(X), len(fs)))), Fraction(0))


def gauss_bonnet_check(G: Complex, X: Valuation | Sequence[int]) -> bool:
    X = tuple(X)
    return sum(gauss_bonnet_curvature(G, X, v) for v in G.vertices) == Valuation(X)(G)


def curvature_lemma_check(G: Complex, k: int, q: int) -> bool:
    """(k+1) K_{X_{k,q}}(v) = X_{k-1,q-1}(S(v)) at every vertex, 1 <= k < q."""
    X = x_valuation(k, q)
    Xs = x_valuation(k - 1, q - 1)
    for v in G.vertices:
        f = unit_sphere(G, (v,)).f_vector
        f = f + (0,) * (q - len(f))
        if (k + 1) * gauss_bonnet_curvature(G, X, v) != Xs(f[:q]):
            return False
    return True


def functional_gauss_bonnet_check(G: Complex) -> bool:
    """f'_G(t) = sum over vertices of f_{S(v)}(t)."""
    lhs = f_polynomial(G).derivative()
    rhs = IntPolynomial()
    for v in G.vertices:
        rhs = rhs + f_polynomial(unit_sphere(G, (v,)))
    if lhs != rhs:
        return False
    # integrated form, f_G = 1 + sum F_{S(v)}
    F = IntPolynomial((1,))
    for v in G.vertices:
        F = F + f_polynomial(unit_sphere(G, (v,))).antiderivative()
    return F == f_polynomial(G)


@dataclass(frozen=True)
class SpanReport:
    q: int
    x_rank: int
    y_rank: int
    joint_rank: int
    expansions: dict[int, tuple[Fraction, ...]]

    @property
    def equal(self) -> bool:
        return self.x_rank == self.y_rank == self.joint_rank


def expand_in_x(y: Sequence[int], q: int, ks: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Coefficients c with y = sum_i c_i X_{ks[i], q}, or None."""
    cols = [x_valuation(k, q).coeffs for k in ks]
    A = [[c[r] for c in cols] for r in range(q + 1)]
    sol = solve_rational(A, list(y))
    if sol is None:
        return None
    check = [sum(s * c[r] for s, c in zip(sol, cols)) for r in range(q + 1)]
    return tuple(sol) if check == list(y) else None


def span_equality_check(q: int) -> SpanReport:
    """span{X_{k,q} : k+q odd} against span{Y_{k,q} : k+q odd}, exactly."""
    if q < 1:
        raise ValueError("q must be >= 1")
    xk = [k for k in range(q) if (k + q) % 2 == 1]
    yk = [k for k in range(q + 1) if (k + q) % 2 == 1]
    X = [list(x_valuation(k, q).coeffs) for k in xk]
    Y = [list(y_valuation(k, q).coeffs) for k in yk]
    exp = {k: expand_in_x(y_valuation(k, q).coeffs, q, xk) for k in yk}
    return SpanReport(q, rank(X), rank(Y), rank(X + Y), exp)
