"""Trace-norm separability criteria.

The central object is the block matrix

    S^m_{alpha,beta}(rho) = [ alpha*beta*E_mxm   beta*omega_m(s)^t ]
                            [ alpha*omega_m(r)   T                 ]

where (r, s, T) is the Bloch data of a bipartite state, omega_m(x) stacks m
copies of x as columns and E is the all-ones matrix.  For separable states

    ||S||_tr <= sqrt((m beta^2 + d1 - 1)(m alpha^2 + d2 - 1))      (standard)
    ||S||_tr <= (1/2) sqrt((2m beta^2 + d1^2 - d1)(2m alpha^2 + d2^2 - d2))
                                                                   (rescaled)

so a larger trace norm certifies entanglement; a smaller one is
inconclusive.  The rescaled variant coincides with the criterion usually
stated in a generalized Gell-Mann basis (trace norms are invariant under
real orthogonal changes of the operator basis, so the value is
basis-independent once Tr{Q Q'} = 2 delta delta is fixed).

Baselines on the same machinery:

* ``check_vb``  - correlation matrix only: rescaled, m = 0.
* ``check_lb``  - rescaled with m = 1, alpha = beta = 1.
* ``check_isc`` - rescaled with caller parameters, m >= 1.
* ``check_ppt`` - positivity of the partial transpose (independent of the
  Bloch machinery; detects nothing on bound entangled states).

The multipartite generalization replaces S by the A|A-bar matricization of
the coefficient tensor W; for fully separable states every bipartition obeys

    ||W^(A|A-bar)||_tr <= prod_k sqrt(m alpha_k^2 + d_k - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import bloch
from .bloch import BlochDecomposition, CoefficientTensor
from .errors import ValidationError
from .linalg import DensityMatrix, eig_hermitian, partial_transpose, trace_norm

# Violation margin added to every bound before declaring ENTANGLED, so that
# floating-point noise on equality cases (pure product states) never
# produces a false certificate.
VIOLATION_EPS = 1e-9

ENTANGLED = "ENTANGLED"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CriterionVerdict:
    """Outcome of one criterion evaluation."""

    criterion: str
    value: float
    bound: float
    verdict: str
    params: dict

    @property
    def entangled(self) -> bool:
        return self.verdict == ENTANGLED

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "value": self.value,
            "bound": self.bound,
            "verdict": self.verdict,
            "params": self.params,
        }


def _verdict(criterion: str, value: float, bound: float, params: dict) -> CriterionVerdict:
    flag = ENTANGLED if value > bound + VIOLATION_EPS else INCONCLUSIVE
    return CriterionVerdict(criterion, float(value), float(bound), flag, params)


@dataclass(frozen=True)
class SMatrix:
    """S matrix together with its block layout."""

    matrix: np.ndarray
    m: int
    alpha: float
    beta: float
    dims: tuple[int, int]
    normalization: str

    @property
    def e_block(self) -> np.ndarray:
        return self.matrix[: self.m, : self.m]

    @property
    def s_block(self) -> np.ndarray:
        """beta * omega_m(s)^t, the top-right m x (d2^2-1) block."""
        return self.matrix[: self.m, self.m :]

    @property
    def r_block(self) -> np.ndarray:
        """alpha * omega_m(r), the bottom-left (d1^2-1) x m block."""
        return self.matrix[self.m :, : self.m]

    @property
    def t_block(self) -> np.ndarray:
        return self.matrix[self.m :, self.m :]


def build_S(dec: BlochDecomposition, alpha: float, beta: float, m: int) -> SMatrix:
    """Assemble S^m_{alpha,beta} from a Bloch decomposition (m = 0 gives T)."""
    if alpha < 0 or beta < 0:
        raise ValidationError(f"alpha and beta must be nonnegative, got ({alpha}, {beta})")
    if m < 0:
        raise ValidationError(f"m must be >= 0, got {m}")
    r, s, t = dec.r.coeffs, dec.s.coeffs, dec.t
    n1, n2 = len(r), len(s)
    out = np.empty((m + n1, m + n2))
    out[:m, :m] = alpha * beta
    out[:m, m:] = beta * s[None, :]
    out[m:, :m] = alpha * r[:, None]
    out[m:, m:] = t
    return SMatrix(out, int(m), float(alpha), float(beta), dec.dims, dec.normalization)


def theorem1_bound(
    d1: int, d2: int, alpha: float, beta: float, m: int, normalization: str = "standard"
) -> float:
    """Separable upper bound on ||S||_tr for the given normalization."""
    if normalization == "standard":
        return math.sqrt((m * beta**2 + d1 - 1) * (m * alpha**2 + d2 - 1))
    if normalization == "rescaled":
        return 0.5 * math.sqrt((2 * m * beta**2 + d1 * d1 - d1) * (2 * m * alpha**2 + d2 * d2 - d2))
    raise ValidationError(f"unknown normalization {normalization!r}")


def check_theorem1(
    rho: DensityMatrix,
    alpha: float,
    beta: float,
    m: int,
    normalization: str = "standard",
) -> CriterionVerdict:
    """Trace-norm criterion on the bipartite S matrix."""
    dec = bloch.decompose_bipartite(rho, normalization)
    value = trace_norm(build_S(dec, alpha, beta, m).matrix)
    bound = theorem1_bound(*rho.dims, alpha, beta, m, normalization)
    params = {"alpha": float(alpha), "beta": float(beta), "m": int(m), "normalization": normalization}
    return _verdict("hw", value, bound, params)


def check_vb(rho: DensityMatrix) -> CriterionVerdict:
    """Correlation-matrix criterion: ||T'||_tr vs (1/2) sqrt(d1 d2 (d1-1)(d2-1))."""
    dec = bloch.decompose_bipartite(rho, "rescaled")
    d1, d2 = rho.dims
    value = trace_norm(dec.t)
    bound = 0.5 * math.sqrt(d1 * d2 * (d1 - 1) * (d2 - 1))
    return _verdict("vb", value, bound, {"m": 0, "normalization": "rescaled"})


def check_isc(rho: DensityMatrix, alpha: float, beta: float, m: int) -> CriterionVerdict:
    """Rescaled-basis S-matrix criterion with free parameters (m >= 1)."""
    if m < 1:
        raise ValidationError("check_isc requires m >= 1; use check_vb for the m = 0 case")
    v = check_theorem1(rho, alpha, beta, m, "rescaled")
    return CriterionVerdict("isc", v.value, v.bound, v.verdict, v.params)


def check_lb(rho: DensityMatrix) -> CriterionVerdict:
    """Bloch-vector-augmented correlation criterion: rescaled, m = 1, alpha = beta = 1."""
    v = check_theorem1(rho, 1.0, 1.0, 1, "rescaled")
    return CriterionVerdict("lb", v.value, v.bound, v.verdict, v.params)


def check_ppt(rho: DensityMatrix, subsystem: int = 2) -> CriterionVerdict:
    """Positive-partial-transpose test; value is -(min eigenvalue of rho^PT)."""
    min_eig = float(eig_hermitian(partial_transpose(rho, subsystem))[0])
    return _verdict("ppt", -min_eig, 0.0, {"subsystem": subsystem})


def matricize(w: CoefficientTensor, parties) -> np.ndarray:
    """A|A-bar matricization of the coefficient tensor.

    ``parties`` is a 1-based subset of 1..N selecting the row axes; both row
    and column multi-indices are composed in row-major order over ascending
    party index.
    """
    n = w.n_parties
    a = sorted(set(int(p) for p in parties))
    if not a or len(a) == n:
        raise ValidationError("parties must be a nonempty proper subset of 1..N")
    if a[0] < 1 or a[-1] > n:
        raise ValidationError(f"party indices must lie in 1..{n}, got {a}")
    axes_a = [p - 1 for p in a]
    axes_b = [k for k in range(n) if k not in axes_a]
    perm = w.tensor.transpose(axes_a + axes_b)
    rows = int(np.prod([w.tensor.shape[k] for k in axes_a]))
    return perm.reshape(rows, -1)


def theorem2_bound(dims, alphas, m: int, normalization: str = "standard") -> float:
    """Fully-separable upper bound, a product over parties."""
    if normalization == "standard":
        return math.prod(math.sqrt(m * a * a + d - 1) for d, a in zip(dims, alphas))
    if normalization == "rescaled":
        return math.prod(math.sqrt(m * a * a + d * (d - 1) / 2) for d, a in zip(dims, alphas))
    raise ValidationError(f"unknown normalization {normalization!r}")


def all_bipartitions(n: int) -> list[tuple[int, ...]]:
    """The 2^(n-1) - 1 distinct bipartitions, as the 1-based subset containing party 1."""
    out = []
    rest = range(2, n + 1)
    for k in range(0, n - 1):
        for combo in combinations(rest, k):
            out.append((1, *combo))
    return out


def check_theorem2(
    rho: DensityMatrix,
    alphas,
    m: int,
    partitions=None,
    normalization: str = "standard",
) -> list[CriterionVerdict]:
    """Evaluate the multipartite criterion, one verdict per bipartition.

    ``partitions`` is an iterable of 1-based party subsets; None enumerates
    all distinct bipartitions.  The state is certified not fully separable
    as soon as any single partition is violated.
    """
    if rho.n_parties < 2:
        raise ValidationError("check_theorem2 requires at least two parties")
    if m < 1:
        raise ValidationError(f"check_theorem2 requires m >= 1, got {m}")
    w = bloch.build_W(rho, alphas, m, normalization)
    bound = theorem2_bound(rho.dims, w.alphas, m, normalization)
    if partitions is None:
        partitions = all_bipartitions(rho.n_parties)
    verdicts = []
    for part in partitions:
        part = tuple(sorted(int(p) for p in part))
        value = trace_norm(matricize(w, part))
        params = {
            "alphas": list(w.alphas),
            "m": int(m),
            "partition": list(part),
            "normalization": normalization,
        }
        verdicts.append(_verdict("thm2", value, bound, params))
    return verdicts
