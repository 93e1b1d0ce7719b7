"""Finite-dimensional associative unital algebras over Q.

An algebra is given by structure constants c[i,j,k] with
e_i e_j = sum_k c[i,j,k] e_k, plus the coordinates of the unit.  On top of
that sit the predicates this package revolves around: which functionals are
Frobenius forms, which hyperplanes certify syntacticity, whether the algebra
is semisimple, and the explicit Wedderburn block data when it splits over Q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from syntaft import linalg
from syntaft.errors import (
    DimensionMismatch,
    InvalidAlgebra,
    NonSquareBlock,
    NotSemisimple,
    NotSplitOverQ,
    ZeroFunctional,
)
from syntaft.linalg import ONE, ZERO, Subspace


@dataclass(frozen=True, eq=False)
class FinAlgebra:
    basis_names: tuple[str, ...]
    structure: np.ndarray  # (n, n, n) object array; structure[i, j, k]
    unit: np.ndarray  # (n,)

    def __post_init__(self):
        n = len(self.basis_names)
        if self.structure.shape != (n, n, n):
            raise DimensionMismatch("structure constant tensor has wrong shape")
        if self.unit.shape != (n,):
            raise DimensionMismatch("unit vector has wrong length")
        if len(set(self.basis_names)) != n:
            raise InvalidAlgebra("duplicate basis names")
        self.structure.flags.writeable = False
        self.unit.flags.writeable = False

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def basis_vector(self, i: int) -> np.ndarray:
        v = linalg.zvec(self.dim)
        v[i] = ONE
        return v

    def __repr__(self):
        return f"FinAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


def make_algebra(basis_names, triples, unit) -> FinAlgebra:
    """Algebra from sparse structure triples (i, j, k, value)."""
    names = tuple(basis_names)
    n = len(names)
    c = linalg.zeros(n, n).reshape(n, n, 1) if n == 0 else np.empty((n, n, n), dtype=object)
    c[:] = ZERO
    for i, j, k, val in triples:
        c[i, j, k] = linalg.rational(val)
    return FinAlgebra(names, c, linalg.ratvec(unit))


@dataclass(frozen=True)
class LinearFunctional:
    """Functional on an algebra, stored by its coefficient row."""

    coefficients: np.ndarray

    def __post_init__(self):
        self.coefficients.flags.writeable = False

    @property
    def dim(self) -> int:
        return self.coefficients.shape[0]

    def __call__(self, v: np.ndarray) -> Fraction:
        if v.shape != self.coefficients.shape:
            raise DimensionMismatch("vector length does not match functional")
        return sum((a * b for a, b in zip(self.coefficients, v)), ZERO)

    def is_zero(self) -> bool:
        return linalg.is_zero(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, LinearFunctional):
            return NotImplemented
        return np.array_equal(self.coefficients, other.coefficients)


def functional(coeffs) -> LinearFunctional:
    return LinearFunctional(linalg.ratvec(coeffs))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate(alg: FinAlgebra) -> ValidationReport:
    """Check associativity and the unit laws, naming the first failure."""
    n = alg.dim
    c = alg.structure
    for j in range(n):
        ej = alg.basis_vector(j)
        if not np.array_equal(multiply(alg, alg.unit, ej), ej):
            return ValidationReport(False, f"unit * {alg.basis_names[j]} != {alg.basis_names[j]}")
        if not np.array_equal(multiply(alg, ej, alg.unit), ej):
            return ValidationReport(False, f"{alg.basis_names[j]} * unit != {alg.basis_names[j]}")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = sum((c[i, j, m] * c[m, k, l] for m in range(n)), ZERO)
                    rhs = sum((c[j, k, m] * c[i, m, l] for m in range(n)), ZERO)
                    if lhs != rhs:
                        names = alg.basis_names
                        return ValidationReport(
                            False,
                            f"associativity fails on ({names[i]}, {names[j]}, {names[k]}) "
                            f"in coordinate {names[l]}",
                        )
    return ValidationReport(True)


def multiply(alg: FinAlgebra, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != (alg.dim,) or b.shape != (alg.dim,):
        raise DimensionMismatch("operand length does not match algebra dimension")
    # out_k = sum_ij a_i b_j c[i,j,k]
    return np.dot(np.dot(a, alg.structure.reshape(alg.dim, -1)).reshape(alg.dim, alg.dim).T, b)


def left_regular(alg: FinAlgebra, a: np.ndarray) -> np.ndarray:
    """Matrix of x -> a x acting on column coordinate vectors."""
    if a.shape != (alg.dim,):
        raise DimensionMismatch("operand length does not match algebra dimension")
    n = alg.dim
    m = linalg.zeros(n, n)
    for j in range(n):
        col = np.dot(a, alg.structure[:, j, :])
        m[:, j] = col
    return m


def right_regular(alg: FinAlgebra, a: np.ndarray) -> np.ndarray:
    """Matrix of x -> x a, as a matrix acting on row vectors from the right."""
    if a.shape != (alg.dim,):
        raise DimensionMismatch("operand length does not match algebra dimension")
    n = alg.dim
    m = linalg.zeros(n, n)
    for j in range(n):
        # row j: coordinates of e_j a
        m[j, :] = np.dot(alg.structure[j, :, :].T, a)
    return m


def trace(m: np.ndarray) -> Fraction:
    return sum((m[i, i] for i in range(m.shape[0])), ZERO)


def is_commutative(alg: FinAlgebra) -> bool:
    c = alg.structure
    n = alg.dim
    return all(np.array_equal(c[i, j], c[j, i]) for i in range(n) for j in range(i + 1, n))


def largest_ideal_in_kernel(alg: FinAlgebra, f: LinearFunctional, side: str = "two-sided") -> Subspace:
    """Maximal ideal of the given sidedness inside ker f.

    a lies in the two-sided version iff f(e_i a e_j) = 0 for all basis pairs;
    each pair contributes one linear condition on the coordinates of a.  The
    unit being among the e_i makes the result a subset of ker f itself.
    """
    if f.dim != alg.dim:
        raise DimensionMismatch("functional does not match algebra dimension")
    n = alg.dim
    c = alg.structure
    coeffs = f.coefficients
    # fmat[i, m] = f(e_i e_m), gmat[m, j] = f(e_m e_j)
    pair_values = np.dot(c, coeffs)  # (n, n): f(e_i e_j)
    rows = []
    if side == "left":
        rows = [pair_values[i, :] for i in range(n)]
    elif side == "right":
        rows = [pair_values[:, j] for j in range(n)]
    elif side == "two-sided":
        for i in range(n):
            # row of f(e_i e_m e_j) over m, for each j
            left_mul = c[i, :, :]  # (m, k): coords of e_i e_m
            for j in range(n):
                rows.append(np.dot(left_mul, pair_values[:, j]))
    else:
        raise ValueError(f"unknown side {side!r}")
    m = linalg.zeros(len(rows), n)
    for r, row in enumerate(rows):
        m[r, :] = row
    return linalg.kernel(m)


def is_frobenius(alg: FinAlgebra, f: LinearFunctional) -> bool:
    """True iff ker f contains no nonzero left ideal and no nonzero right ideal."""
    return (
        largest_ideal_in_kernel(alg, f, "left").dim == 0
        and largest_ideal_in_kernel(alg, f, "right").dim == 0
    )


def is_symmetric(alg: FinAlgebra, f: LinearFunctional) -> bool:
    """True iff f(ab) = f(ba), i.e. f is a trace."""
    if f.dim != alg.dim:
        raise DimensionMismatch("functional does not match algebra dimension")
    pair_values = np.dot(alg.structure, f.coefficients)
    return np.array_equal(pair_values, pair_values.T)


def is_syntactic_hyperplane(alg: FinAlgebra, f: LinearFunctional) -> bool:
    """True iff ker f contains no nonzero two-sided ideal."""
    if f.is_zero():
        raise ZeroFunctional("the zero functional defines no hyperplane")
    return largest_ideal_in_kernel(alg, f, "two-sided").dim == 0


def canonical_form(alg: FinAlgebra) -> LinearFunctional:
    """The regular-representation trace a -> tr(L_a).

    For semisimple algebras this is a symmetric Frobenius form; in general it
    is always a trace, possibly degenerate.
    """
    n = alg.dim
    coeffs = linalg.zvec(n)
    for i in range(n):
        coeffs[i] = sum((alg.structure[i, j, j] for j in range(n)), ZERO)
    return LinearFunctional(coeffs)


def trace_gram(alg: FinAlgebra) -> np.ndarray:
    """Gram matrix T[i,j] = tr(L_{e_i e_j}) of the regular trace form."""
    lam = canonical_form(alg).coefficients
    return np.dot(alg.structure, lam)


def is_semisimple(alg: FinAlgebra) -> bool:
    """Dickson's criterion: the regular trace form is nondegenerate (char 0)."""
    return linalg.rank(trace_gram(alg)) == alg.dim


def center(alg: FinAlgebra) -> tuple[Subspace, FinAlgebra]:
    """The subspace {a : ax = xa for all x} and the algebra it carries."""
    n = alg.dim
    c = alg.structure
    rows = []
    for i in range(n):
        # constraint per i, per output coordinate k: sum_m v_m (c[m,i,k] - c[i,m,k]) = 0
        diff = c[:, i, :] - c[i, :, :]  # (m, k)
        for k in range(n):
            rows.append(diff[:, k])
    m = linalg.zeros(len(rows), n)
    for r, row in enumerate(rows):
        m[r, :] = row
    sub = linalg.kernel(m)
    d = sub.dim
    basis = sub.basis
    struct = np.empty((d, d, d), dtype=object)
    struct[:] = ZERO
    for i in range(d):
        for j in range(d):
            prod = multiply(alg, basis[i], basis[j])
            coords = sub.coordinates(prod)
            if coords is None:
                raise InvalidAlgebra("center is not closed under multiplication")
            struct[i, j, :] = coords
    unit_coords = sub.coordinates(alg.unit)
    if unit_coords is None:
        raise InvalidAlgebra("unit does not lie in the center")
    names = tuple(f"z{i}" for i in range(d))
    return sub, FinAlgebra(names, struct, unit_coords)


@dataclass(frozen=True)
class BlockData:
    """Central idempotents and per-block dimensions of a split semisimple algebra."""

    idempotents: tuple[np.ndarray, ...]
    block_dims: tuple[int, ...]  # dim of each simple block, n_i^2
    matrix_sizes: tuple[int, ...]  # n_i


def _minimal_polynomial(alg: FinAlgebra, a: np.ndarray) -> list[Fraction]:
    """Monic minimal polynomial of a, as coefficient list c_0..c_d (c_d = 1)."""
    span = linalg.SpanBuilder(alg.dim)
    powers = [alg.unit.copy()]
    span.add(alg.unit)
    current = alg.unit
    while True:
        current = multiply(alg, current, a)
        if not span.add(current):
            break
        powers.append(current)
    d = len(powers)
    m = linalg.zeros(alg.dim, d)
    for j, p in enumerate(powers):
        m[:, j] = p
    coords = linalg.solve(m, current)
    assert coords is not None
    coeffs = [-x for x in coords] + [ONE]
    return coeffs


def _poly_derivative(p: list[Fraction]) -> list[Fraction]:
    return [p[i] * i for i in range(1, len(p))]


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    while len(a) >= len(b) > 0:
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i in range(len(b)):
            a[shift + i] -= q * b[i]
        while a and a[-1] == 0:
            a.pop()
    return a


def _poly_is_squarefree(p: list[Fraction]) -> bool:
    g = list(p)
    h = _poly_derivative(p)
    while h:
        g, h = h, _poly_mod(g, h)
    return len(g) == 1  # gcd is a nonzero constant


def _rational_roots(p: list[Fraction]) -> list[Fraction]:
    """All rational roots of p (each squarefree root listed once)."""
    den_lcm = 1
    for c in p:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ip = [int(c * den_lcm) for c in p]
    while ip and ip[-1] == 0:
        ip.pop()
    shift = 0
    while ip and ip[0] == 0:
        ip.pop(0)
        shift = 1
    roots = set([ZERO]) if shift else set()

    def divisors(n: int) -> list[int]:
        n = abs(n)
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return out

    if ip:
        lead, const = ip[-1], ip[0]
        for num in divisors(const):
            for den in divisors(lead):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if sum(c * cand**k for k, c in enumerate(ip)) == 0:
                        roots.add(cand)
    return sorted(roots)


def split_blocks(alg: FinAlgebra) -> BlockData:
    """Wedderburn data over Q: central idempotents and block sizes.

    Factors the minimal polynomial of a separating central element into
    distinct rational roots; a root count below dim(center), or a block whose
    dimension is not a perfect square, means a simple factor is not split
    over Q and the computation refuses rather than extending scalars.
    """
    if not is_semisimple(alg):
        raise NotSemisimple("split_blocks requires a semisimple algebra")
    sub, _ = center(alg)
    r = sub.dim
    # deterministic search for a central element with squarefree degree-r
    # minimal polynomial: coefficients (1, t, t^2, ...) for t = 1, 2, ...
    for t in range(1, 200):
        u = linalg.zvec(alg.dim)
        w = ONE
        for i in range(r):
            u = u + w * sub.basis[i]
            w *= t
        minpoly = _minimal_polynomial(alg, u)
        if len(minpoly) == r + 1 and _poly_is_squarefree(minpoly):
            break
    else:
        raise NotSplitOverQ("no separating central element found")
    roots = _rational_roots(minpoly)
    if len(roots) < r:
        raise NotSplitOverQ(
            f"minimal polynomial of the separating element has an irreducible "
            f"factor of degree > 1 (found {len(roots)} rational roots, need {r})"
        )
    idempotents = []
    dims = []
    sizes = []
    for theta in roots:
        p = alg.unit.copy()
        denom = ONE
        for other in roots:
            if other == theta:
                continue
            p = multiply(alg, p, u) - other * p
            denom *= theta - other
        p = p * (ONE / denom)
        d = trace(left_regular(alg, p))
        if d.denominator != 1:
            raise NonSquareBlock("block dimension is not an integer")
        d = int(d)
        s = math.isqrt(d)
        if s * s != d:
            raise NonSquareBlock(f"block of dimension {d} is not a matrix algebra over Q")
        idempotents.append(p)
        dims.append(d)
        sizes.append(s)
    return BlockData(tuple(idempotents), tuple(dims), tuple(sizes))


def letter_isomorphism_check(alg: FinAlgebra, target: FinAlgebra, images) -> bool:
    """Does e_i -> images[i] extend to an algebra isomorphism alg -> target?

    images assigns a target coordinate vector to every basis element of alg;
    the linear extension must be bijective, send unit to unit, and send each
    product e_i e_j to images[i] * images[j].
    """
    images = list(images)
    if len(images) != alg.dim:
        raise DimensionMismatch("need one image per basis element")
    for v in images:
        if v.shape != (target.dim,):
            raise DimensionMismatch("image vector does not match target dimension")
    if alg.dim != target.dim:
        return False
    m = linalg.zeros(alg.dim, target.dim)
    for i, v in enumerate(images):
        m[i, :] = v
    if linalg.rank(m) != target.dim:
        return False

    def phi(v: np.ndarray) -> np.ndarray:
        return np.dot(v, m)

    if not np.array_equal(phi(alg.unit), target.unit):
        return False
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = multiply(target, images[i], images[j])
            rhs = phi(alg.structure[i, j, :])
            if not np.array_equal(lhs, rhs):
                return False
    return True
