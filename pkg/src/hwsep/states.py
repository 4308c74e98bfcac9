"""Example states and randomized test-state constructors.

Randomness comes from ``numpy.random.default_rng`` (PCG64) seeded per call,
so every constructor is a pure function of its arguments: a fixed seed gives
bit-identical output across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ValidationError
from .linalg import DensityMatrix


@dataclass(frozen=True)
class SeparableEnsemble:
    """Explicit convex combination of product pure states.

    ``factors[i]`` holds the per-party unit vectors of term i; the assembled
    state sum_i p_i |psi_i^(1) ... psi_i^(N)><...| is separable by
    construction.
    """

    dims: tuple[int, ...]
    weights: np.ndarray
    factors: tuple[tuple[np.ndarray, ...], ...]

    def assemble(self) -> DensityMatrix:
        total = int(np.prod(self.dims))
        rho = np.zeros((total, total), dtype=complex)
        for p, vecs in zip(self.weights, self.factors):
            psi = vecs[0]
            for v in vecs[1:]:
                psi = np.kron(psi, v)
            rho += p * np.outer(psi, psi.conj())
        return DensityMatrix(rho, self.dims)


@dataclass(frozen=True)
class StateFamily:
    """One-parameter family x in [0, 1] -> DensityMatrix."""

    name: str
    params: dict = field(default_factory=dict)
    generator: Callable[[float], DensityMatrix] = None

    def state(self, x: float) -> DensityMatrix:
        return self.generator(x)

    def describe(self) -> dict:
        return {"family": self.name, **self.params}


def horodecki_2x4(b: float) -> DensityMatrix:
    """The 2x4 bound entangled state with parameter 0 < b < 1.

    PPT for every b in (0, 1) yet entangled, which makes it the standard
    hard case for correlation-based criteria.
    """
    if not 0 < b < 1:
        raise ValidationError(f"b must lie in (0, 1), got {b}")
    mat = np.zeros((8, 8))
    for i in range(3):
        mat[i, i] = mat[i + 5, i + 5] = b
        mat[i, i + 5] = mat[i + 5, i] = b
    mat[3, 3] = b
    mat[4, 4] = mat[7, 7] = (1 + b) / 2
    c = np.sqrt(1 - b * b) / 2
    mat[4, 7] = mat[7, 4] = c
    return DensityMatrix(mat / (7 * b + 1), (2, 4))


def xi_state() -> DensityMatrix:
    """Pure state (|0>|0> + |1>|1>)/sqrt(2) in C^2 x C^4."""
    psi = np.zeros(8)
    psi[0] = psi[5] = 1 / np.sqrt(2)
    return DensityMatrix(np.outer(psi, psi), (2, 4))


def mix(x: float, sigma: DensityMatrix, rho: DensityMatrix) -> DensityMatrix:
    """Convex combination x*sigma + (1-x)*rho."""
    if not 0 <= x <= 1:
        raise ValidationError(f"mixing weight must lie in [0, 1], got {x}")
    if sigma.dims != rho.dims:
        raise ValidationError(f"dimension mismatch: {sigma.dims} vs {rho.dims}")
    return DensityMatrix(x * sigma.matrix + (1 - x) * rho.matrix, rho.dims)


def horodecki_mix_family(b: float) -> StateFamily:
    """x -> x |xi><xi| + (1-x) * horodecki_2x4(b)."""
    base = horodecki_2x4(b)
    xi = xi_state()
    return StateFamily(
        name="horodecki-mix",
        params={"b": float(b)},
        generator=lambda x: mix(x, xi, base),
    )


def ghz(n: int) -> DensityMatrix:
    """(|0...0> + |1...1>)/sqrt(2) on n qubits."""
    if n < 2:
        raise ValidationError(f"ghz requires n >= 2, got {n}")
    psi = np.zeros(2**n)
    psi[0] = psi[-1] = 1 / np.sqrt(2)
    return DensityMatrix(np.outer(psi, psi), (2,) * n)


def product(factors) -> DensityMatrix:
    """Tensor product of density matrices."""
    factors = list(factors)
    if not factors:
        raise ValidationError("product requires at least one factor")
    mat = factors[0].matrix
    dims: tuple[int, ...] = factors[0].dims
    for f in factors[1:]:
        mat = np.kron(mat, f.matrix)
        dims = dims + f.dims
    return DensityMatrix(mat, dims)


def _unit_vector(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_pure(d: int, seed) -> DensityMatrix:
    """Haar-random pure state as a density matrix."""
    if d < 2:
        raise ValidationError(f"dimension must be >= 2, got {d}")
    v = _unit_vector(d, np.random.default_rng(seed))
    return DensityMatrix(np.outer(v, v.conj()), (d,))


def random_density(d: int, seed) -> DensityMatrix:
    """Random full-rank mixed state G G^dag / Tr(G G^dag)."""
    if d < 2:
        raise ValidationError(f"dimension must be >= 2, got {d}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = g @ g.conj().T
    return DensityMatrix(rho / rho.trace().real, (d,))


def random_separable(dims, k_terms: int, seed) -> tuple[SeparableEnsemble, DensityMatrix]:
    """Random separable state as k_terms product pure states.

    Weights are Dirichlet(1, ..., 1) distributed, realized as normalized
    exponential draws.
    """
    dims = tuple(int(d) for d in dims)
    if any(d < 2 for d in dims):
        raise ValidationError(f"subsystem dimensions must be >= 2, got {dims}")
    if k_terms < 1:
        raise ValidationError(f"k_terms must be >= 1, got {k_terms}")
    rng = np.random.default_rng(seed)
    weights = rng.exponential(size=k_terms)
    weights /= weights.sum()
    factors = tuple(tuple(_unit_vector(d, rng) for d in dims) for _ in range(k_terms))
    ensemble = SeparableEnsemble(dims=dims, weights=weights, factors=factors)
    return ensemble, ensemble.assemble()
