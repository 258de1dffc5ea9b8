"""See-saw search for the minimum of <xi|W|xi> over unit product vectors.

Holding every factor but one fixed, the objective is a quadratic form
xi_k^H H_k xi_k in the remaining factor, where H_k is the contraction of W
against the other factors. Each step replaces xi_k by the eigenvector of the
smallest eigenvalue of H_k, so the value is nonincreasing sweep by sweep.
The search restarts from several random product vectors; restarts draw from
split seeds so the result is independent of execution order.

A negative minimum certifies failure of block positivity; a minimum at zero
(within tolerance) is what a witness with a nonempty zero set must show.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from string import ascii_lowercase
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, InvalidCutError
from .linalg import HERMITICITY_ATOL, require_hermitian
from .maps import Witness
from .tensor import ProductVector, TensorShape, subset_complement


@dataclass
class SeeSawResult:
    min_value: float
    argmin: ProductVector
    restarts: int
    converged: bool
    history: list[float] = field(default_factory=list)


def _contraction_scripts(n: int) -> list[str]:
    """einsum script per party k contracting all factors but the k-th."""
    rows = ascii_lowercase[:n]
    cols = ascii_lowercase[n : 2 * n]
    scripts = []
    for k in range(n):
        subs = [rows + cols]
        for j in range(n):
            if j == k:
                continue
            subs.append(rows[j])
            subs.append(cols[j])
        scripts.append(",".join(subs) + "->" + rows[k] + cols[k])
    return scripts


def _random_unit_factors(dims: Sequence[int], rng: np.random.Generator) -> list[np.ndarray]:
    factors = []
    for d in dims:
        v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        factors.append(v / np.linalg.norm(v))
    return factors


def _canonical_phase(v: np.ndarray) -> np.ndarray:
    idx = int(np.argmax(np.abs(v)))
    mag = abs(v[idx])
    if mag == 0:
        return v
    return v * (v[idx].conjugate() / mag)


def seesaw_block_positivity(
    witness: Witness,
    restarts: int = 64,
    max_iters: int = 500,
    seed: int = 0,
    improvement_tol: float = 1e-12,
) -> SeeSawResult:
    """Best product-vector minimum over `restarts` random starts.

    Deterministic for a fixed (seed, restarts) pair: restart r draws its
    start from the r-th child of SeedSequence(seed), and ties between
    restarts break toward the lower restart index.
    """
    require_hermitian(witness.matrix, HERMITICITY_ATOL)
    if restarts < 1:
        raise DimensionMismatchError("see-saw needs at least one restart")
    dims = witness.shape.dims
    n = len(dims)
    tensor = witness.matrix.reshape(dims + dims)
    scripts = _contraction_scripts(n)
    children = np.random.SeedSequence(seed).spawn(restarts)

    best_value = math.inf
    best_factors: list[np.ndarray] | None = None
    best_history: list[float] = []
    all_converged = True

    for ridx in range(restarts):
        rng = np.random.default_rng(children[ridx])
        factors = _random_unit_factors(dims, rng)
        value = _product_value(tensor, factors, n)
        history = [value]
        converged = False
        for _ in range(max_iters):
            for k in range(n):
                operands = [tensor]
                for j in range(n):
                    if j == k:
                        continue
                    operands.append(factors[j].conj())
                    operands.append(factors[j])
                h = np.einsum(scripts[k], *operands)
                h = (h + h.conj().T) / 2
                evals, evecs = np.linalg.eigh(h)
                factors[k] = evecs[:, 0]
                value = float(evals[0])
            history.append(value)
            if history[-2] - value < improvement_tol:
                converged = True
                break
        all_converged = all_converged and converged
        if value < best_value:
            best_value = value
            best_factors = factors
            best_history = history

    assert best_factors is not None
    argmin = ProductVector([_canonical_phase(f) for f in best_factors])
    return SeeSawResult(
        min_value=best_value,
        argmin=argmin,
        restarts=restarts,
        converged=all_converged,
        history=best_history,
    )


def _product_value(tensor: np.ndarray, factors: Sequence[np.ndarray], n: int) -> float:
    rows = ascii_lowercase[:n]
    cols = ascii_lowercase[n : 2 * n]
    subs = [rows + cols]
    operands = [tensor]
    for j in range(n):
        subs.append(rows[j])
        operands.append(factors[j].conj())
        subs.append(cols[j])
        operands.append(factors[j])
    return float(np.einsum(",".join(subs) + "->", *operands).real)


def regroup_for_cut(witness: Witness, cut: Iterable[int]) -> tuple[Witness, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Merge the parties into the two groups of a bipartite cut.

    `cut` lists the parties (1-based) of the first group; the second group is
    the complement. Tensor legs are permuted so the cut becomes contiguous,
    then each group is flattened into a single party.
    """
    dims = witness.shape.dims
    n = len(dims)
    group1 = tuple(sorted(set(int(p) for p in cut)))
    if not group1 or any(p < 1 or p > n for p in group1):
        raise InvalidCutError(f"cut {group1} is not a nonempty subset of 1..{n}")
    group2 = subset_complement(group1, n)
    if not group2:
        raise InvalidCutError("cut must leave a nonempty complement")
    perm = [p - 1 for p in group1 + group2]
    tensor = witness.matrix.reshape(dims + dims)
    axes = perm + [n + q for q in perm]
    d = witness.shape.total_dim
    merged = tensor.transpose(axes).reshape(d, d)
    d_left = math.prod(dims[p - 1] for p in group1)
    d_right = d // d_left
    regrouped = Witness(
        matrix=merged,
        shape=TensorShape((d_left, d_right)),
        meta=dict(witness.meta, cut=(group1, group2)),
    )
    return regrouped, (group1, group2)


def cut_block_positivity(
    witness: Witness,
    cut: Iterable[int],
    restarts: int = 64,
    seed: int = 0,
    max_iters: int = 500,
) -> SeeSawResult:
    """Two-party see-saw across one bipartite cut of the parties."""
    regrouped, _ = regroup_for_cut(witness, cut)
    return seesaw_block_positivity(regrouped, restarts=restarts, max_iters=max_iters, seed=seed)


def _qubit_candidates(phases: int, moduli: Sequence[float]) -> np.ndarray:
    """Deterministic unit vectors (1, m e^{i phi}) / norm, plus both poles."""
    out = [np.array([1.0, 0.0], dtype=complex), np.array([0.0, 1.0], dtype=complex)]
    for m in moduli:
        for k in range(phases):
            z = m * np.exp(2j * np.pi * k / phases)
            v = np.array([1.0, z], dtype=complex)
            out.append(v / np.linalg.norm(v))
    return np.array(out)


def product_grid_minimum(
    witness: Witness, phases: int = 24, moduli: Sequence[float] = (0.5, 1.0, 2.0)
) -> float:
    """Exhaustive minimum of <xi|W|xi> over a deterministic grid of unit
    product vectors; a coarse lower-bound companion to the see-saw.

    Only qubit factors are supported (each candidate set covers both poles
    and `phases` points per circle at each modulus).
    """
    dims = witness.shape.dims
    if any(d != 2 for d in dims):
        raise DimensionMismatchError("grid search is implemented for qubit factors only")
    n = len(dims)
    cand = _qubit_candidates(phases, moduli)
    tensor = witness.matrix.reshape(dims + dims)
    rows = ascii_lowercase[:n]
    cols = ascii_lowercase[n : 2 * n]
    grid = ascii_lowercase[2 * n : 3 * n]
    subs = [rows + cols]
    operands = [tensor]
    for j in range(n):
        subs.append(grid[j] + rows[j])
        operands.append(cand.conj())
        subs.append(grid[j] + cols[j])
        operands.append(cand)
    values = np.einsum(",".join(subs) + "->" + grid, *operands, optimize=True)
    return float(values.real.min())
