"""Exact spectra and energies.

Two independent routes to the same eigenvalues live here:

* structural closed forms for a disjoint union of cliques (a K_s block
  contributes adjacency eigenvalues s-1 and -1, Laplacian 0 and s,
  signless Laplacian 2s-2 and s-2, with the obvious multiplicities), and
* an exact characteristic-polynomial engine for arbitrary integer
  matrices, followed by bounded integer root extraction.

The verify harness requires the two routes to agree as multisets on every
group-derived graph.  All energies are exact rationals; no floating point
appears anywhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .ccc import CCCGraph, CliqueDecomposition
from .errors import (
    DimensionCapExceededError,
    EmptyGraphError,
    NotMonicError,
    WrongSpectrumKindError,
)

#: Default ceiling on matrix dimension for the characteristic polynomial.
DEFAULT_MATRIX_CAP = 512

SpectrumKind = Literal["adjacency", "laplacian", "signless"]


@dataclass(frozen=True)
class Spectrum:
    """Exact (eigenvalue, multiplicity) pairs, sorted by descending value."""

    kind: SpectrumKind
    pairs: tuple[tuple[Fraction, int], ...]

    @classmethod
    def from_pairs(cls, kind: SpectrumKind, pairs) -> "Spectrum":
        merged: Counter[Fraction] = Counter()
        for value, mult in pairs:
            if mult < 0:
                raise ValueError(f"negative multiplicity for eigenvalue {value}")
            if mult:
                merged[Fraction(value)] += mult
        ordered = tuple(
            (value, merged[value]) for value in sorted(merged, reverse=True)
        )
        return cls(kind=kind, pairs=ordered)

    @property
    def size(self) -> int:
        return sum(mult for _, mult in self.pairs)

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value, _ in self.pairs)


def adjacency_spectrum(decomp: CliqueDecomposition) -> Spectrum:
    pairs = []
    for count, size in decomp.parts:
        pairs.append((size - 1, count))
        pairs.append((-1, count * (size - 1)))
    return Spectrum.from_pairs("adjacency", pairs)


def laplacian_spectrum(decomp: CliqueDecomposition) -> Spectrum:
    pairs = []
    for count, size in decomp.parts:
        pairs.append((0, count))
        pairs.append((size, count * (size - 1)))
    return Spectrum.from_pairs("laplacian", pairs)


def signless_spectrum(decomp: CliqueDecomposition) -> Spectrum:
    pairs = []
    for count, size in decomp.parts:
        pairs.append((2 * size - 2, count))
        pairs.append((size - 2, count * (size - 1)))
    return Spectrum.from_pairs("signless", pairs)


def energy(spec: Spectrum) -> Fraction:
    """Sum of absolute adjacency eigenvalues."""
    if spec.kind != "adjacency":
        raise WrongSpectrumKindError("adjacency", spec.kind)
    return sum((abs(value) * mult for value, mult in spec.pairs), Fraction(0))


def _mean_deviation_energy(spec: Spectrum, num_vertices: int, num_edges: int) -> Fraction:
    if num_vertices <= 0:
        raise EmptyGraphError("graph has no vertices")
    mean_degree = Fraction(2 * num_edges, num_vertices)
    return sum(
        (abs(value - mean_degree) * mult for value, mult in spec.pairs), Fraction(0)
    )


def laplacian_energy(spec: Spectrum, num_vertices: int, num_edges: int) -> Fraction:
    """Sum of |eigenvalue - mean degree| over the Laplacian spectrum."""
    if spec.kind != "laplacian":
        raise WrongSpectrumKindError("laplacian", spec.kind)
    return _mean_deviation_energy(spec, num_vertices, num_edges)


def signless_energy(spec: Spectrum, num_vertices: int, num_edges: int) -> Fraction:
    """Sum of |eigenvalue - mean degree| over the signless Laplacian spectrum."""
    if spec.kind != "signless":
        raise WrongSpectrumKindError("signless", spec.kind)
    return _mean_deviation_energy(spec, num_vertices, num_edges)


@dataclass(frozen=True)
class EnergyTriple:
    """The three graph energies with their |V|, |e| context, all exact."""

    e: Fraction
    le: Fraction
    le_plus: Fraction
    num_vertices: int
    num_edges: int

    @property
    def mean_degree(self) -> Fraction:
        return Fraction(2 * self.num_edges, self.num_vertices)


def energies_from_decomposition(decomp: CliqueDecomposition) -> EnergyTriple:
    v, e = decomp.total_vertices, decomp.total_edges
    return EnergyTriple(
        e=energy(adjacency_spectrum(decomp)),
        le=laplacian_energy(laplacian_spectrum(decomp), v, e),
        le_plus=signless_energy(signless_spectrum(decomp), v, e),
        num_vertices=v,
        num_edges=e,
    )


# --- exact characteristic polynomial over the integers -----------------------

IntegerMatrix = list[list[int]]


def matrices_from_graph(graph: CCCGraph) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Adjacency A, Laplacian D - A and signless Laplacian D + A."""
    adj = graph.adjacency.astype(np.int64)
    degrees = adj.sum(axis=1)
    a = adj.tolist()
    lap = (np.diag(degrees) - adj).tolist()
    q = (np.diag(degrees) + adj).tolist()
    return a, lap, q


def gershgorin_bound(matrix: IntegerMatrix) -> int:
    """Max absolute row sum; every eigenvalue lies in [-bound, bound]."""
    return max((sum(abs(x) for x in row) for row in matrix), default=0)


def _is_small_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _modular_primes(count: int, floor: int) -> list[int]:
    primes = []
    q = floor
    while len(primes) < count:
        if _is_small_prime(q):
            primes.append(q)
        q += 1
    return primes


def _char_poly_mod(matrix: np.ndarray, q: int) -> list[int]:
    """Faddeev-LeVerrier recurrence over Z/qZ (q prime, q > dimension).

    With M_1 = A and c_k = -tr(A M_{k-1} + c_{k-1} A)/k the division by k
    is exact over the integers, so modulo q it becomes multiplication by
    the inverse of k (q > k guarantees invertibility).
    """
    d = matrix.shape[0]
    a = matrix % q
    mk = a.copy()
    coeffs = [1]
    for k in range(1, d + 1):
        ck = (-int(np.trace(mk)) * pow(k, -1, q)) % q
        coeffs.append(ck)
        if k < d:
            mk = (a @ ((mk + ck * np.eye(d, dtype=np.int64)).astype(np.int64) % q)) % q
    return coeffs


def _coefficient_bound(dimension: int, max_abs: int) -> int:
    # Hadamard-style: |c_k| <= C(d, k) * (sqrt(d) * M)^d <= 2^d (sqrt(d) M)^d
    m = max(1, max_abs)
    root = 1
    while root * root < dimension:
        root += 1
    return (2 * root * m) ** max(1, dimension)


def char_poly(matrix: IntegerMatrix, cap: int = DEFAULT_MATRIX_CAP) -> list[int]:
    """Exact characteristic polynomial coefficients, highest power first.

    Computed by the Faddeev-LeVerrier recurrence modulo a set of machine
    primes and reconstructed by the Chinese remainder theorem; the prime
    set is sized from an a-priori coefficient bound, so the result is
    exact over the integers.  The recurrence itself is division-exact, so
    no fractions ever appear.
    """
    d = len(matrix)
    if any(len(row) != d for row in matrix):
        raise ValueError("matrix must be square")
    if d > cap:
        raise DimensionCapExceededError(d, cap)
    if d == 0:
        return [1]
    max_abs = max(abs(x) for row in matrix for x in row)
    bound = 2 * _coefficient_bound(d, max_abs)
    # primes stay below 2^26 so int64 matmul accumulation cannot overflow
    prime_floor = max(d + 1, 1 << 25)
    n_primes = 1
    prod = prime_floor
    while prod <= bound:
        n_primes += 1
        prod *= prime_floor
    primes = _modular_primes(n_primes, prime_floor)

    mat = np.array(matrix, dtype=np.int64)
    residues = [_char_poly_mod(mat, q) for q in primes]

    coeffs = []
    modulus = 1
    for q in primes:
        modulus *= q
    for i in range(d + 1):
        x = 0
        for q, res in zip(primes, residues):
            mq = modulus // q
            x = (x + res[i] * mq * pow(mq % q, -1, q)) % modulus
        if x > modulus // 2:
            x -= modulus
        coeffs.append(x)
    return coeffs


def _poly_eval(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _synthetic_divide(coeffs: Sequence[int], root: int) -> list[int]:
    """Divide by (lambda - root); assumes zero remainder."""
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + out[-1] * root)
    return out


@dataclass(frozen=True)
class IntegerRootResult:
    """Integer roots with multiplicities plus whatever would not factor.

    ``residual`` is the monic integer polynomial left after extracting all
    integer roots; a nonconstant residual means the matrix has irrational
    (or non-real) eigenvalues, i.e. the spectrum is not integral.
    """

    roots: tuple[tuple[int, int], ...]
    residual: tuple[int, ...]

    @property
    def is_integral(self) -> bool:
        return len(self.residual) == 1

    def to_spectrum(self, kind: SpectrumKind) -> Spectrum:
        if not self.is_integral:
            raise ValueError(f"non-integral spectrum, residual {list(self.residual)}")
        return Spectrum.from_pairs(kind, self.roots)


def integer_spectrum(coeffs: Sequence[int], root_bound: int) -> IntegerRootResult:
    """Extract all integer roots of a monic integer polynomial.

    Candidate roots are the integers in [-root_bound, root_bound]; for a
    characteristic polynomial the Gershgorin bound (max absolute row sum)
    is a valid choice and stays small, unlike rational-root trial on the
    constant term.
    """
    coeffs = [int(c) for c in coeffs]
    if not coeffs or coeffs[0] != 1:
        raise NotMonicError(f"leading coefficient must be 1, got {coeffs[:1]}")
    roots: Counter[int] = Counter()
    for candidate in range(-root_bound, root_bound + 1):
        while len(coeffs) > 1 and _poly_eval(coeffs, candidate) == 0:
            coeffs = _synthetic_divide(coeffs, candidate)
            roots[candidate] += 1
    ordered = tuple((r, roots[r]) for r in sorted(roots, reverse=True))
    return IntegerRootResult(roots=ordered, residual=tuple(coeffs))
