"""Domain types and state-space construction for linear quantum stochastic systems.

A system is the triple (S, K, R): a unitary scattering matrix S, a linear
coupling K of the canonical variables to the fields, and a real symmetric
Hamiltonian matrix R with H = (1/2) x^T R x.  Canonical variables are ordered
x = (q1, p1, ..., qn, pn), so each mode owns one consecutive 2x2 block and all
block indexing below is 2x2 on that ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import block_diag

from .errors import (
    NonHermitianRtilde,
    NonSymmetricR,
    NonUnitaryScattering,
    NotPassive,
)

ComplexMatrix = NDArray[np.complexfloating]
RealMatrix = NDArray[np.floating]

DEFAULT_TOL = 1e-9

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
J2.setflags(write=False)


def max_abs(a) -> float:
    """Max-norm of a matrix (0 for empty arrays)."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def symplectic_form(n: int) -> RealMatrix:
    """Return the 2n x 2n canonical symplectic form Theta = diag(J, ..., J),
    J = [[0, 1], [-1, 0]], fixing the commutation relations of (q, p) pairs."""
    return np.kron(np.eye(n), J2)


def annihilation_map(n: int) -> ComplexMatrix:
    """Return the n x 2n map Sigma from quadratures to annihilation variables,
    a_j = (q_j + i p_j) / 2, i.e. row j carries (1/2, i/2) in columns 2j, 2j+1.

    Constructed so that Sigma Sigma^dag = I/2, Sigma Sigma^T = 0 and
    2 [Sigma^dag  Sigma^T] [Sigma; Sigma^#] = I hold exactly in floating point.
    """
    sg = np.zeros((n, 2 * n), dtype=complex)
    for j in range(n):
        sg[j, 2 * j] = 0.5
        sg[j, 2 * j + 1] = 0.5j
    return sg


def _readonly(a):
    a.setflags(write=False)
    return a


def _as_complex(value, name):
    a = np.array(value, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"{name} must be a 2-d matrix, got ndim={a.ndim}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return _readonly(a)


def _as_real(value, name):
    if np.iscomplexobj(np.asarray(value)):
        raise ValueError(f"{name} must be real")
    a = np.array(value, dtype=float)
    if a.ndim != 2:
        raise ValueError(f"{name} must be a 2-d matrix, got ndim={a.ndim}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return _readonly(a)


@dataclass(frozen=True, eq=False)
class StructuralConstants:
    """The fixed matrices attached to an n-mode phase space.

    j is the 2x2 block [[0, 1], [-1, 0]], theta = diag(j, ..., j) is the
    symplectic form, and sigma maps quadratures to annihilation variables.
    """

    j: RealMatrix
    theta: RealMatrix
    sigma: ComplexMatrix

    @classmethod
    def for_modes(cls, n: int) -> "StructuralConstants":
        return cls(
            j=J2,
            theta=_readonly(symplectic_form(n)),
            sigma=_readonly(annihilation_map(n)),
        )

    @property
    def n(self) -> int:
        return self.sigma.shape[0]


@dataclass(frozen=True, eq=False)
class SlhSystem:
    """Linear quantum stochastic system (S, K, R).

    Parameters
    ----------
    s : (m, m) complex ndarray
        Unitary scattering matrix.
    k : (m, 2n) complex ndarray
        Coupling of the canonical variables x = (q1, p1, ..., qn, pn) to the
        m fields, L = K x.
    r : (2n, 2n) real ndarray
        Symmetric Hamiltonian matrix, H = (1/2) x^T R x.

    Construction checks shapes and finiteness only; the unitarity and
    symmetry tolerances are enforced by :meth:`validate`, which the
    state-space builder calls.
    """

    s: ComplexMatrix
    k: ComplexMatrix
    r: RealMatrix

    def __post_init__(self):
        s = _as_complex(self.s, "S")
        k = _as_complex(self.k, "K")
        r = _as_real(self.r, "R")
        m = s.shape[0]
        if s.shape != (m, m):
            raise ValueError(f"S must be square, got {s.shape}")
        if r.shape[0] != r.shape[1] or r.shape[0] % 2:
            raise ValueError(f"R must be square with even dimension, got {r.shape}")
        if k.shape != (m, r.shape[0]):
            raise ValueError(
                f"K must be {m} x {r.shape[0]} to match S and R, got {k.shape}"
            )
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "r", r)

    @property
    def n(self) -> int:
        """Number of modes."""
        return self.r.shape[0] // 2

    @property
    def m(self) -> int:
        """Number of input/output fields."""
        return self.s.shape[0]

    def validate(self, tol_unitary=DEFAULT_TOL, tol_sym=DEFAULT_TOL) -> "SlhSystem":
        """Check unitarity of S and symmetry of R, raising on failure."""
        if max_abs(self.s.conj().T @ self.s - np.eye(self.m)) > tol_unitary:
            raise NonUnitaryScattering(
                f"S fails unitarity at tolerance {tol_unitary:.1e}"
            )
        if max_abs(self.r - self.r.T) > tol_sym:
            raise NonSymmetricR(f"R fails symmetry at tolerance {tol_sym:.1e}")
        return self


def identity_system(m: int) -> SlhSystem:
    """The zero-mode system (I_m, nothing, 0): identity of the series product
    and of concatenation with m = 0."""
    return SlhSystem(
        s=np.eye(m, dtype=complex),
        k=np.zeros((m, 0), dtype=complex),
        r=np.zeros((0, 0)),
    )


@dataclass(frozen=True, eq=False)
class DoubledStateSpace:
    """State-space matrices of the doubled-up input-output dynamics.

    a is the real drift matrix of the canonical variables, b the complex
    input matrix for the doubled field vector (fields stacked over their
    conjugates), c stacks K over K^#, and d is diag(S, S^#).  The transfer
    function is G(s) = c (sI - a)^{-1} b + d.
    """

    a: RealMatrix
    b: ComplexMatrix
    c: ComplexMatrix
    d: ComplexMatrix

    def __post_init__(self):
        a = _as_real(self.a, "A")
        b = _as_complex(self.b, "B")
        c = _as_complex(self.c, "Cd")
        d = _as_complex(self.d, "Dd")
        nn = a.shape[0]
        if a.shape != (nn, nn) or nn % 2:
            raise ValueError(f"A must be square with even dimension, got {a.shape}")
        mm = d.shape[0]
        if d.shape != (mm, mm) or mm % 2:
            raise ValueError(f"Dd must be square with even dimension, got {d.shape}")
        if b.shape != (nn, mm):
            raise ValueError(f"B must be {nn} x {mm}, got {b.shape}")
        if c.shape != (mm, nn):
            raise ValueError(f"Cd must be {mm} x {nn}, got {c.shape}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return self.a.shape[0] // 2

    @property
    def m(self) -> int:
        return self.d.shape[0] // 2


@dataclass(frozen=True, eq=False)
class PassiveForm:
    """Annihilation-variable parametrization of a passive system.

    r_tilde is the Hermitian n x n Hamiltonian matrix and k_tilde the complex
    m x n coupling, H = (1/2) a^dag r_tilde a + offset and L = k_tilde a.  The
    real scalar offset equals trace(r_tilde)/4 when derived from a quadrature
    Hamiltonian, making the two Hamiltonians equal rather than merely
    equivalent.
    """

    r_tilde: ComplexMatrix
    k_tilde: ComplexMatrix
    offset: float = 0.0

    def __post_init__(self):
        r_tilde = _as_complex(self.r_tilde, "R_tilde")
        k_tilde = _as_complex(self.k_tilde, "K_tilde")
        n = r_tilde.shape[0]
        if r_tilde.shape != (n, n):
            raise ValueError(f"R_tilde must be square, got {r_tilde.shape}")
        if k_tilde.shape[1] != n:
            raise ValueError(
                f"K_tilde must have {n} columns to match R_tilde, got {k_tilde.shape}"
            )
        object.__setattr__(self, "r_tilde", r_tilde)
        object.__setattr__(self, "k_tilde", k_tilde)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def n(self) -> int:
        return self.r_tilde.shape[0]

    @property
    def m(self) -> int:
        return self.k_tilde.shape[0]

    def validate(self, tol_sym=DEFAULT_TOL) -> "PassiveForm":
        """Check Hermiticity of r_tilde, raising on failure."""
        if max_abs(self.r_tilde - self.r_tilde.conj().T) > tol_sym:
            raise NonHermitianRtilde(
                f"R_tilde fails Hermiticity at tolerance {tol_sym:.1e}"
            )
        return self


def drift_matrix(sys: SlhSystem) -> RealMatrix:
    """Return the drift matrix A = 2 Theta (R + Im(K^dag K)) of the canonical
    variables; lower 2x2-block triangularity of A is the exact criterion for
    pure-cascade realizability."""
    th = symplectic_form(sys.n)
    return 2.0 * th @ (sys.r + np.imag(sys.k.conj().T @ sys.k))


def build_state_space(
    sys: SlhSystem, tol_unitary=DEFAULT_TOL, tol_sym=DEFAULT_TOL
) -> DoubledStateSpace:
    """Assemble the doubled-up state-space matrices of a system.

    A = 2 Theta (R + Im(K^dag K)),  B = 2i Theta [-K^dag S   K^T S^#],
    Cd = [K; K^#],  Dd = diag(S, S^#).  A is real by construction since
    Im(.) is taken entrywise; B satisfies B^# = B P where P swaps its two
    column halves, mirroring the conjugate structure of the doubled fields.
    """
    sys.validate(tol_unitary, tol_sym)
    th = symplectic_form(sys.n)
    a = drift_matrix(sys)
    b = 2j * th @ np.hstack([-sys.k.conj().T @ sys.s, sys.k.T @ sys.s.conj()])
    c = np.vstack([sys.k, sys.k.conj()])
    d = block_diag(sys.s, sys.s.conj()).astype(complex)
    return DoubledStateSpace(a=a, b=b, c=c, d=d)


def is_passive(sys: SlhSystem, tol=DEFAULT_TOL) -> bool:
    """Test whether (S, K, R) is expressible in annihilation variables alone.

    True iff the coupling annihilates creation directions,
    |K Sigma^T|_max <= tol * max(1, |K|_max), and R is reconstructed from its
    Hermitian reduction, |R - Re(Sigma^dag (8 Sigma R Sigma^dag) Sigma)|_max
    <= tol * max(1, |R|_max).  The max(1, .) floor keeps the test meaningful
    for couplings that are zero up to rounding noise, where a purely relative
    threshold would compare noise against noise.
    """
    sg = annihilation_map(sys.n)
    if max_abs(sys.k @ sg.T) > tol * max(1.0, max_abs(sys.k)):
        return False
    rebuilt = np.real(sg.conj().T @ (8.0 * sg @ sys.r @ sg.conj().T) @ sg)
    return max_abs(sys.r - rebuilt) <= tol * max(1.0, max_abs(sys.r))


def to_passive_form(sys: SlhSystem, tol=DEFAULT_TOL) -> PassiveForm:
    """Reduce a passive system to annihilation variables.

    k_tilde = 2 K Sigma^dag and r_tilde = 8 Sigma R Sigma^dag invert the
    quadrature expansion K = k_tilde Sigma, R = Re(Sigma^dag r_tilde Sigma);
    offset = trace(r_tilde)/4 keeps the Hamiltonian scalar part.
    """
    if not is_passive(sys, tol):
        raise NotPassive(f"system is not passive at tolerance {tol:.1e}")
    sg = annihilation_map(sys.n)
    r_tilde = 8.0 * sg @ sys.r @ sg.conj().T
    k_tilde = 2.0 * sys.k @ sg.conj().T
    return PassiveForm(
        r_tilde=r_tilde, k_tilde=k_tilde, offset=float(np.trace(r_tilde).real) / 4.0
    )


def from_passive_form(pf: PassiveForm, s: ComplexMatrix, tol_sym=DEFAULT_TOL) -> SlhSystem:
    """Expand an annihilation-variable description into quadratures.

    K = k_tilde Sigma and R = Re(Sigma^dag r_tilde Sigma); the resulting
    diagonal 2x2 blocks of R are scalar multiples of the identity, the
    hallmark of a passive Hamiltonian.
    """
    pf.validate(tol_sym)
    sg = annihilation_map(pf.n)
    k = pf.k_tilde @ sg
    r = np.real(sg.conj().T @ pf.r_tilde @ sg)
    return SlhSystem(s=s, k=k, r=r)
