"""Composition of linear quantum stochastic systems.

Implements the concatenation product (side-by-side, independent fields), the
series product (output fields of one system feeding the inputs of the next),
the collapse of a chain of one-mode stages into a single system, and the
residual direct-interaction Hamiltonian that measures how far a system is
from being a pure cascade of its own one-mode stages.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import block_diag

from .errors import BadResidual, FieldCountMismatch
from .model import RealMatrix, SlhSystem, max_abs


@dataclass(frozen=True, eq=False)
class CascadeChain:
    """Ordered chain of one-mode stages plus an optional residual interaction.

    stages[0] receives the input field first; stages[-1] emits the output.
    residual_r, when present, is a real symmetric 2n x 2n matrix with zero
    2x2 diagonal blocks that couples distinct stages directly (a bilinear
    interaction on top of the field-mediated cascade).
    """

    stages: tuple[SlhSystem, ...]
    residual_r: Optional[RealMatrix] = None

    def __post_init__(self):
        stages = tuple(self.stages)
        if not stages:
            raise ValueError("a chain needs at least one stage")
        for idx, stage in enumerate(stages):
            if stage.n != 1:
                raise ValueError(f"stage {idx} has {stage.n} modes, expected 1")
            if stage.m != stages[0].m:
                raise FieldCountMismatch(
                    f"stage {idx} has {stage.m} fields, stage 0 has {stages[0].m}"
                )
        object.__setattr__(self, "stages", stages)
        if self.residual_r is not None:
            rd = np.array(self.residual_r, dtype=float)
            rd.setflags(write=False)
            nn = 2 * len(stages)
            if rd.shape != (nn, nn):
                raise BadResidual(f"residual must be {nn} x {nn}, got {rd.shape}")
            if not np.array_equal(rd, rd.T):
                raise BadResidual("residual matrix must be symmetric")
            for j in range(len(stages)):
                if max_abs(rd[2 * j : 2 * j + 2, 2 * j : 2 * j + 2]) != 0.0:
                    raise BadResidual(f"residual diagonal block {j} must be zero")
            object.__setattr__(self, "residual_r", rd)

    @property
    def n(self) -> int:
        return len(self.stages)

    @property
    def m(self) -> int:
        return self.stages[0].m


def concatenation(g1: SlhSystem, g2: SlhSystem) -> SlhSystem:
    """Side-by-side composition: block-diagonal S, K, R with no interaction.

    The result acts on x = (x_g1, x_g2) and m = m1 + m2 independent fields.
    """
    n1, m1 = g1.n, g1.m
    k = np.zeros((m1 + g2.m, 2 * (n1 + g2.n)), dtype=complex)
    k[:m1, : 2 * n1] = g1.k
    k[m1:, 2 * n1 :] = g2.k
    return SlhSystem(
        s=block_diag(g1.s, g2.s).astype(complex),
        k=k,
        r=block_diag(g1.r, g2.r).astype(float),
    )


def series(g2: SlhSystem, g1: SlhSystem) -> SlhSystem:
    """Series composition: the output fields of g1 drive the inputs of g2.

    Requires equal field counts and disjoint mode sets; the result acts on
    x = (x_g1, x_g2) with S = S2 S1, K = [S2 K1  K2], R block-diagonal in
    (R1, R2) plus the field-mediated coupling Im(K2^dag S2 K1) between the
    downstream and upstream modes.
    """
    if g1.m != g2.m:
        raise FieldCountMismatch(f"field counts differ: {g1.m} vs {g2.m}")
    n1, n2 = g1.n, g2.n
    r = np.zeros((2 * (n1 + n2), 2 * (n1 + n2)))
    r[: 2 * n1, : 2 * n1] = g1.r
    r[2 * n1 :, 2 * n1 :] = g2.r
    coupling = np.imag(g2.k.conj().T @ g2.s @ g1.k)
    r[2 * n1 :, : 2 * n1] = coupling
    r[: 2 * n1, 2 * n1 :] = coupling.T
    return SlhSystem(
        s=g2.s @ g1.s,
        k=np.hstack([g2.s @ g1.k, g2.k]),
        r=r,
    )


def cascade(chain: CascadeChain) -> SlhSystem:
    """Collapse a chain into a single n-mode system.

    Equivalent to folding the series product over the stages (plus the
    residual interaction, if any), assembled directly: S is the product of
    the stage scatterings, column block j of K is the stage coupling K_j
    premultiplied by the scatterings downstream of stage j, the diagonal
    blocks of R are the stage Hamiltonians, and the lower block (j, k),
    j > k, is Im(K_j^dag S_j ... S_{k+1} K_k).
    """
    stages = chain.stages
    n, m = chain.n, chain.m
    k = np.zeros((m, 2 * n), dtype=complex)
    acc = np.eye(m, dtype=complex)
    for j in reversed(range(n)):
        k[:, 2 * j : 2 * j + 2] = acc @ stages[j].k
        acc = acc @ stages[j].s
    s = acc
    r = np.zeros((2 * n, 2 * n))
    for j in range(n):
        r[2 * j : 2 * j + 2, 2 * j : 2 * j + 2] = stages[j].r
    for j in range(1, n):
        acc = stages[j].s
        for kk in range(j - 1, -1, -1):
            blk = np.imag(stages[j].k.conj().T @ acc @ stages[kk].k)
            r[2 * j : 2 * j + 2, 2 * kk : 2 * kk + 2] = blk
            r[2 * kk : 2 * kk + 2, 2 * j : 2 * j + 2] = blk.T
            if kk > 0:
                acc = acc @ stages[kk].s
    if chain.residual_r is not None:
        r = r + chain.residual_r
    return SlhSystem(s=s, k=k, r=r)


def one_mode_stages(sys: SlhSystem) -> tuple[SlhSystem, ...]:
    """Split a system into its n one-mode stages.

    Stage 0 carries the full scattering matrix; later stages get identity
    scattering.  Stage j takes the j-th column pair of K and the j-th
    diagonal 2x2 block of R.  Cascading the stages reproduces (S, K, R)
    exactly once the residual interaction is added back, and with no
    residual at all when the drift matrix is lower 2x2-block triangular.
    """
    stages = []
    eye = np.eye(sys.m, dtype=complex)
    for j in range(sys.n):
        stages.append(
            SlhSystem(
                s=sys.s if j == 0 else eye,
                k=sys.k[:, 2 * j : 2 * j + 2],
                r=sys.r[2 * j : 2 * j + 2, 2 * j : 2 * j + 2],
            )
        )
    return tuple(stages)


def residual_interaction(sys: SlhSystem) -> RealMatrix:
    """Return the direct-interaction Hamiltonian matrix left over after
    splitting a system into its one-mode stages.

    The result has zero 2x2 diagonal blocks; the block above the diagonal at
    (j, k), j < k, equals R_jk - Im(K_k^dag K_j)^T, completed symmetrically
    below.  It vanishes exactly when the system is a pure cascade of its own
    stages (first stage carrying S, identity scattering afterwards).
    """
    n = sys.n
    rd = np.zeros((2 * n, 2 * n))
    for j in range(n):
        kj = sys.k[:, 2 * j : 2 * j + 2]
        for kk in range(j + 1, n):
            blk = sys.r[2 * j : 2 * j + 2, 2 * kk : 2 * kk + 2] - np.imag(
                sys.k[:, 2 * kk : 2 * kk + 2].conj().T @ kj
            ).T
            rd[2 * j : 2 * j + 2, 2 * kk : 2 * kk + 2] = blk
            rd[2 * kk : 2 * kk + 2, 2 * j : 2 * j + 2] = blk.T
    return rd
