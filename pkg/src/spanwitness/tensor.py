"""Tensor-product structure over parties.

Index convention is big-endian throughout: for local dimensions
(d_1, ..., d_n), the flat index of (i_1, ..., i_n) is
i_1 * (d_2 ... d_n) + ... + i_n, i.e. party 1 is most significant.
Party subsets are tuples of 1-based party indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, InvalidCutError
from .linalg import (
    HERMITICITY_ATOL,
    RANK_RTOL,
    hermitian_eigenvalues,
    matrix_rank_hermitian,
    require_hermitian,
)


@dataclass(frozen=True)
class TensorShape:
    """Ordered local dimensions (d_1, ..., d_n), n >= 2, each d_j >= 2."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) < 2 or any(d < 2 for d in dims):
            raise DimensionMismatchError(f"need n >= 2 parties of dimension >= 2, got {dims}")

    @property
    def n_parties(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return math.prod(self.dims)

    def flat_index(self, multi: Sequence[int]) -> int:
        if len(multi) != self.n_parties:
            raise DimensionMismatchError("multi-index length does not match party count")
        flat = 0
        for i, d in zip(multi, self.dims):
            if not 0 <= i < d:
                raise DimensionMismatchError(f"index {i} out of range for dimension {d}")
            flat = flat * d + i
        return flat

    def multi_index(self, flat: int) -> tuple[int, ...]:
        if not 0 <= flat < self.total_dim:
            raise DimensionMismatchError(f"flat index {flat} out of range")
        out = []
        for d in reversed(self.dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))

    def basis_label(self, flat: int) -> str:
        return "".join(str(i) for i in self.multi_index(flat))


THREE_QUBITS = TensorShape((2, 2, 2))


def all_subsets(n: int) -> list[tuple[int, ...]]:
    """All 2^n party subsets, in bitmask order (party j <-> bit j-1)."""
    return [tuple(j + 1 for j in range(n) if mask >> j & 1) for mask in range(2**n)]


def subset_complement(subset: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(subset)
    return tuple(j for j in range(1, n + 1) if j not in s)


def _check_subset(subset: Iterable[int], n: int) -> tuple[int, ...]:
    s = tuple(sorted(set(int(j) for j in subset)))
    if any(j < 1 or j > n for j in s):
        raise InvalidCutError(f"party subset {s} out of range for {n} parties")
    return s


@dataclass
class ProductVector:
    """One local vector per party; the flattened vector is their Kronecker product."""

    factors: list[np.ndarray]

    def __post_init__(self):
        self.factors = [np.asarray(f, dtype=complex).reshape(-1) for f in self.factors]
        if len(self.factors) < 2:
            raise DimensionMismatchError("a product vector needs at least two factors")

    @property
    def shape(self) -> TensorShape:
        return TensorShape(tuple(f.shape[0] for f in self.factors))


def product_vector(*factors) -> ProductVector:
    return ProductVector(list(factors))


def flatten(pv: ProductVector) -> np.ndarray:
    """Kronecker product of the factors under the big-endian convention."""
    return reduce(np.kron, pv.factors)


@dataclass
class State:
    """A Hermitian matrix on the full tensor space, possibly unnormalized."""

    matrix: np.ndarray
    shape: TensorShape
    normalized: bool = False

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=complex)
        if self.matrix.shape != (self.shape.total_dim, self.shape.total_dim):
            raise DimensionMismatchError(
                f"matrix shape {self.matrix.shape} does not match dims {self.shape.dims}"
            )


def state_from(matrix, dims: Sequence[int]) -> State:
    """Wrap a matrix as a State, flagging it normalized when tr = 1 within 1e-10."""
    shape = TensorShape(tuple(dims))
    m = np.asarray(matrix, dtype=complex)
    tr = complex(np.trace(m)) if m.size else 0.0
    return State(matrix=m, shape=shape, normalized=abs(tr - 1.0) < 1e-10)


def product_state(pv: ProductVector) -> State:
    """Projector onto the flattened product vector (unnormalized if pv is)."""
    v = flatten(pv)
    return state_from(np.outer(v, v.conj()), pv.shape.dims)


def normalize(state: State) -> State:
    tr = complex(np.trace(state.matrix)).real
    if tr <= 0:
        raise DimensionMismatchError("cannot normalize a state with non-positive trace")
    return State(matrix=state.matrix / tr, shape=state.shape, normalized=True)


def partial_transpose(state: State, subset: Iterable[int]) -> np.ndarray:
    """Transpose the tensor factors indexed by `subset` (1-based), leave the rest.

    The empty subset is the identity, the full subset the ordinary transpose.
    """
    dims = state.shape.dims
    n = len(dims)
    sub = _check_subset(subset, n)
    t = state.matrix.reshape(dims + dims)
    axes = list(range(2 * n))
    for party in sub:
        k = party - 1
        axes[k], axes[n + k] = axes[n + k], axes[k]
    return t.transpose(axes).reshape(state.matrix.shape).copy()


def partial_conjugate(pv: ProductVector, subset: Iterable[int]) -> ProductVector:
    """Conjugate the factors indexed by `subset` entrywise; on pure product
    states this realizes the partial transpose of the projector."""
    n = len(pv.factors)
    sub = set(_check_subset(subset, n))
    return ProductVector(
        [f.conj() if (j + 1) in sub else f.copy() for j, f in enumerate(pv.factors)]
    )


@dataclass
class PptReport:
    """Verdict plus the smallest partial-transpose eigenvalue per subset."""

    is_ppt: bool
    min_eigenvalues: dict[tuple[int, ...], float] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.is_ppt


def is_ppt(state: State, tol: float = 1e-10, atol: float = HERMITICITY_ATOL) -> PptReport:
    """Check positivity of every partial transpose, all 2^n subsets.

    The empty subset (positivity of the state itself) is included, and so are
    complementary pairs even though they carry equal spectra; the redundancy
    is cheap and doubles as a self-check.
    """
    require_hermitian(state.matrix, atol)
    table: dict[tuple[int, ...], float] = {}
    for sub in all_subsets(state.shape.n_parties):
        evals = hermitian_eigenvalues(partial_transpose(state, sub), atol)
        table[sub] = float(evals[0])
    return PptReport(is_ppt=all(v >= -tol for v in table.values()), min_eigenvalues=table)


@dataclass
class InteriorReport:
    """Partial-transpose ranks; full_rank means every rank equals the total dimension.

    Together with a PPT verdict this certifies an interior point of the PPT cone.
    """

    full_rank: bool
    ranks: dict[tuple[int, ...], int] = field(default_factory=dict)
    dimension: int = 0

    def __bool__(self) -> bool:
        return self.full_rank


def ppt_interior_check(
    state: State, rank_tol: float = RANK_RTOL, atol: float = HERMITICITY_ATOL
) -> InteriorReport:
    require_hermitian(state.matrix, atol)
    d = state.shape.total_dim
    ranks: dict[tuple[int, ...], int] = {}
    for sub in all_subsets(state.shape.n_parties):
        ranks[sub] = matrix_rank_hermitian(partial_transpose(state, sub), rank_tol)
    return InteriorReport(full_rank=all(r == d for r in ranks.values()), ranks=ranks, dimension=d)
