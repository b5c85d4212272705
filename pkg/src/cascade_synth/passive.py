"""Symplectic cascade synthesis for passive systems.

Every passive system admits a cascade realization after a change of
canonical variables: reduce the Hamiltonian and coupling to the n x n mode
matrix M, lower-triangularize M with a complex Schur decomposition, embed
the Schur unitary as a real orthogonal symplectic matrix V on the
quadratures, and split the transformed system (S, K V^T, V R V^T) into
one-mode passive stages.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg

from .composition import CascadeChain
from .errors import ConvergenceFailure, NonUnitaryInput, NotPassive
from .model import (
    DEFAULT_TOL,
    ComplexMatrix,
    J2,
    PassiveForm,
    RealMatrix,
    SlhSystem,
    annihilation_map,
    is_passive,
    max_abs,
    symplectic_form,
    to_passive_form,
)
from .realizability import decompose_cascade


@dataclass(frozen=True, eq=False)
class SchurLower:
    """Lower-triangular Schur factorization M = U^dag M_hat U with U unitary
    and M_hat lower triangular; the eigenvalues of M sit on diag(M_hat)."""

    u: ComplexMatrix
    m_hat: ComplexMatrix

    def __post_init__(self):
        for name in ("u", "m_hat"):
            a = np.array(getattr(self, name), dtype=complex)
            a.setflags(write=False)
            object.__setattr__(self, name, a)


@dataclass(frozen=True, eq=False)
class SymplecticTransform:
    """Real linear change of canonical variables x' = V x.

    Construction checks realness and even dimension only; orthogonality and
    preservation of the symplectic form are measured, not assumed, so that
    the verification ops can report residuals of arbitrary candidates.
    """

    v: RealMatrix

    def __post_init__(self):
        if np.iscomplexobj(np.asarray(self.v)):
            raise ValueError("V must be real")
        v = np.array(self.v, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] % 2:
            raise ValueError(f"V must be square with even dimension, got {v.shape}")
        if v.size and not np.all(np.isfinite(v)):
            raise ValueError("V contains non-finite entries")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)

    @property
    def n(self) -> int:
        return self.v.shape[0] // 2


class PassiveRealization(NamedTuple):
    """Result of the passive synthesis pipeline: the transformed system with
    lower block-triangular drift, the symplectic transform that produced it,
    and its cascade chain of one-mode passive stages."""

    system: SlhSystem
    transform: SymplecticTransform
    chain: CascadeChain


def mode_matrix(pf: PassiveForm) -> ComplexMatrix:
    """Return the n x n mode matrix M = (1/2) Sigma Theta Sigma^dag
    (r_tilde - i k_tilde^dag k_tilde) driving the annihilation variables.

    The drift matrix A of the corresponding quadrature system is similar to
    diag(2M, 2M^#): stacking Sigma over Sigma^# block-diagonalizes A into
    diag(M, M^#) against the inverse 2 [Sigma^dag  Sigma^T].
    """
    sg = annihilation_map(pf.n)
    th = symplectic_form(pf.n)
    return (
        0.5
        * sg
        @ th
        @ sg.conj().T
        @ (pf.r_tilde - 1j * pf.k_tilde.conj().T @ pf.k_tilde)
    )


def schur_lower(m: ComplexMatrix) -> SchurLower:
    """Factor M = U^dag M_hat U with M_hat lower triangular and U unitary.

    Obtained from the standard upper-triangular complex Schur decomposition
    by conjugating with the antidiagonal permutation P: if M = Z T Z^dag with
    T upper triangular, then U = P Z^dag and M_hat = P T P.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"M must be square, got {m.shape}")
    if m.size and not np.all(np.isfinite(m)):
        raise ValueError("M contains non-finite entries")
    n = m.shape[0]
    if n == 0:
        empty = np.zeros((0, 0), dtype=complex)
        return SchurLower(u=empty, m_hat=empty.copy())
    try:
        t, z = scipy.linalg.schur(m, output="complex")
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"Schur iteration failed to converge: {exc}") from exc
    p = np.eye(n)[::-1]
    return SchurLower(u=p @ z.conj().T, m_hat=p @ t @ p)


def build_symplectic(u: ComplexMatrix, tol_unitary=DEFAULT_TOL) -> SymplecticTransform:
    """Embed a unitary on the annihilation variables as a real orthogonal
    symplectic matrix on the quadratures.

    Block (j, k) of V is [[Re u_jk, -Im u_jk], [Im u_jk, Re u_jk]], i.e.
    V = 4 Re(Sigma^dag U Sigma), so that a' = U a and x' = V x describe the
    same change of variables.  V inherits orthogonality from the unitarity
    of U and commutes with the symplectic form.
    """
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"U must be square, got {u.shape}")
    if max_abs(u.conj().T @ u - np.eye(u.shape[0])) > tol_unitary:
        raise NonUnitaryInput(f"U fails unitarity at tolerance {tol_unitary:.1e}")
    v = np.kron(u.real, np.eye(2)) - np.kron(u.imag, J2)
    return SymplecticTransform(v=v)


def passive_realize(sys: SlhSystem, tol=DEFAULT_TOL) -> PassiveRealization:
    """Construct a cascade realization of a passive system.

    Returns the transformed system G' = (S, K V^T, V R V^T), which has the
    same transfer function as the input and a lower 2x2-block-triangular
    drift matrix, together with the symplectic transform V and the cascade
    chain of one-mode stages.  Every stage is itself passive, with diagonal
    Hamiltonian blocks that are real multiples of the identity.
    """
    if not is_passive(sys, tol):
        raise NotPassive(f"system is not passive at tolerance {tol:.1e}")
    pf = to_passive_form(sys, tol)
    factored = schur_lower(mode_matrix(pf))
    transform = build_symplectic(factored.u, tol)
    v = transform.v
    transformed = SlhSystem(s=sys.s, k=sys.k @ v.T, r=v @ sys.r @ v.T)
    return PassiveRealization(
        system=transformed,
        transform=transform,
        chain=decompose_cascade(transformed, tol),
    )
