"""Fixed conventions for two-component spinor algebra.

Everything downstream relies on the constants and conversion rules defined
here:

* metric signature (+, -, -, -), natural units;
* epsilon spinor with eps_{01} = eps^{01} = +1, lowering kappa_A = kappa^B eps_{BA}
  and raising kappa^A = eps^{AB} kappa_B (so raise, then lower, is the identity and
  kappa_A lam^A = -kappa^A lam_A);
* world-vector <-> spinor-matrix translation g_a^{AA'} = sigma_a / sqrt(2) with
  sigma_a = (1, sigma_x, sigma_y, sigma_z), lower form fixed by epsilon lowering;
* Levi-Civita orientation e^{0123} = +1, which makes the self-dual relations
  *sigma = -i sigma, *sigmabar = +i sigmabar and the block form of gamma5 come out
  with the signs used throughout the package.

All operations broadcast over leading batch dimensions: a "vector" is an
array (..., 4), a spinor (..., 2), a dyad (..., 2, 2).
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import NegativeMass, NonUnitDeterminant

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

PAULI = np.stack([
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
])

# eps_{AB} and eps^{AB} share the same component matrix.
EPS = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)

# g_a^{AA'} and the epsilon-lowered g_{aAA'}; world index raised with the metric.
G_UP = PAULI / np.sqrt(2.0)
G_LOW = np.einsum('CA,aCD,DB->aAB', EPS, G_UP, EPS)
G_UP_W = np.einsum('ab,bij->aij', METRIC, G_UP)
G_LOW_W = np.einsum('ab,bij->aij', METRIC, G_LOW)


def _levi_civita_upper() -> np.ndarray:
    e = np.zeros((4, 4, 4, 4))
    for perm in itertools.permutations(range(4)):
        parity = sum(1 for i in range(4) for j in range(i + 1, 4)
                     if perm[i] > perm[j])
        e[perm] = (-1.0) ** parity
    return e


# e^{0123} = +1; the all-lower tensor is the negative of this.
LEVI_UP = _levi_civita_upper()
LEVI_LOW = -LEVI_UP


# ---------------------------------------------------------------------------
# vectors

def minkowski(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Minkowski product p.q with signature (+,-,-,-); broadcasts."""
    p = np.asarray(p)
    q = np.asarray(q)
    return (p[..., 0] * q[..., 0] - p[..., 1] * q[..., 1]
            - p[..., 2] * q[..., 2] - p[..., 3] * q[..., 3])


def lower_vector(p: np.ndarray) -> np.ndarray:
    return np.asarray(p) @ METRIC


def mass_squared(p: np.ndarray) -> np.ndarray:
    return minkowski(p, p)


# ---------------------------------------------------------------------------
# spinors

def lower_spinor(k: np.ndarray) -> np.ndarray:
    """kappa_A = kappa^B eps_{BA}: (k0, k1) -> (-k1, k0)."""
    k = np.asarray(k)
    return np.stack([-k[..., 1], k[..., 0]], axis=-1)


def raise_spinor(k: np.ndarray) -> np.ndarray:
    """kappa^A = eps^{AB} kappa_B: (k0, k1) -> (k1, -k0)."""
    k = np.asarray(k)
    return np.stack([k[..., 1], -k[..., 0]], axis=-1)


def spinor_contract(a_lower: np.ndarray, b_upper: np.ndarray) -> np.ndarray:
    """a_A b^A (plain sum over the index)."""
    return np.einsum('...A,...A->...', a_lower, b_upper)


# ---------------------------------------------------------------------------
# dyads (rank-2 spinor matrices attached to world vectors)

def vector_to_dyad(p: np.ndarray, valence: str = "up") -> np.ndarray:
    """Spinor matrix of a world vector.

    valence "up" gives p^{AA'} = p^a g_a^{AA'}, "low" gives p_{AA'}; the mixed
    forms "lu" (p_A^{A'}) and "ul" (p^A_{A'}) follow by epsilon raising.
    """
    p = np.asarray(p).astype(complex)
    if valence == "up":
        return np.einsum('aij,...a->...ij', G_UP, p)
    if valence == "low":
        return np.einsum('aij,...a->...ij', G_LOW, p)
    if valence == "lu":
        low = np.einsum('aij,...a->...ij', G_LOW, p)
        return np.einsum('ac,...Ac->...Aa', EPS, low)
    if valence == "ul":
        low = np.einsum('aij,...a->...ij', G_LOW, p)
        return np.einsum('AB,...Ba->...Aa', EPS, low)
    raise ValueError(f"unknown valence {valence!r}")


def dyad_to_vector(d: np.ndarray, valence: str = "up") -> np.ndarray:
    """Inverse of vector_to_dyad for the "up" and "low" valences.

    Returns contravariant components p^a in both cases.
    """
    d = np.asarray(d)
    if valence == "up":
        return np.einsum('aij,...ij->...a', G_LOW_W, d)
    if valence == "low":
        low = np.einsum('aij,...ij->...a', G_UP, d)
        return low @ METRIC
    raise ValueError(f"unknown valence {valence!r}")


def flagpole(k_upper: np.ndarray) -> np.ndarray:
    """Null future-pointing world vector kappa^A kappabar^{A'} of a spinor."""
    d = np.einsum('...A,...B->...AB', k_upper, np.conj(k_upper))
    return np.real(dyad_to_vector(d, "up"))


def hermiticity_residual(d: np.ndarray) -> float:
    return float(np.max(np.abs(d - np.conj(np.swapaxes(d, -1, -2)))))


def trace_reversal_residual(p: np.ndarray) -> float:
    """Max deviation of p_{AB'} p_{BA'} = p_a p_b - (p.p/2) g_{ab} in world components."""
    p = np.asarray(p, dtype=float)
    pl = vector_to_dyad(p, "low")
    lhs_spinor = np.einsum('...Ab,...Ba->...AaBb', pl, pl)
    lhs = np.einsum('...imjn,aim,bjn->...ab', lhs_spinor, G_UP, G_UP)
    plow = lower_vector(p)
    rhs = (np.einsum('...a,...b->...ab', plow, plow)
           - 0.5 * mass_squared(p)[..., None, None] * METRIC)
    scale = np.maximum(1.0, np.max(np.abs(plow), axis=-1) ** 2)
    return float(np.max(np.abs(lhs - rhs) / scale[..., None, None]))


# ---------------------------------------------------------------------------
# Infeld-van der Waerden generator tables

def iw_generators() -> tuple[np.ndarray, np.ndarray]:
    """Generators sigma^{ab}_X^Y and sigmabar^{ab}_{X'}^{Y'}, shape (4,4,2,2)."""
    s = (np.einsum('aXE,bYE->abXY', G_LOW_W, G_UP_W)
         - np.einsum('bXE,aYE->abXY', G_LOW_W, G_UP_W)) / 2j
    sb = (np.einsum('aEX,bEY->abXY', G_LOW_W, G_UP_W)
          - np.einsum('bEX,aEY->abXY', G_LOW_W, G_UP_W)) / 2j
    return s, sb


SIGMA, SIGMABAR = iw_generators()


def lower_world_pair(t: np.ndarray) -> np.ndarray:
    """T^{ab...} -> T_{ab...} on the two leading world indices."""
    return np.einsum('ac,bd,cd...->ab...', METRIC, METRIC, t)


def dual_pair(t: np.ndarray) -> np.ndarray:
    """*T^{ab} = (1/2) e^{abcd} T_{cd} on the two leading world indices."""
    return 0.5 * np.einsum('abcd,cd...->ab...', LEVI_UP, lower_world_pair(t))


def generator_spinor_form() -> tuple[np.ndarray, np.ndarray]:
    """The all-epsilon expressions the generator tables must reproduce."""
    s = np.zeros((2, 2, 2, 2, 2, 2), dtype=complex)
    sb = np.zeros((2, 2, 2, 2, 2, 2), dtype=complex)
    for idx in itertools.product(range(2), repeat=6):
        a, ap, b, bp, x, y = idx
        s[idx] = (EPS[ap, bp] * (EPS[a, x] * EPS[b, y] + EPS[b, x] * EPS[a, y])) / 2j
        sb[idx] = (EPS[a, b] * (EPS[ap, x] * EPS[bp, y] + EPS[bp, x] * EPS[ap, y])) / 2j
    return s, sb


# ---------------------------------------------------------------------------
# SL(2,C) and Lorentz transformations

def _check_unit_det(a: np.ndarray, tol: float = 1e-9) -> None:
    det = np.linalg.det(a)
    if np.max(np.abs(det - 1.0)) > tol:
        raise NonUnitDeterminant(f"|det A - 1| = {np.max(np.abs(det - 1.0)):.3e}")


def sl2c_lower_rep(a: np.ndarray) -> np.ndarray:
    """Matrix acting on lower-index unprimed spinors for A acting on upper ones."""
    return np.einsum('BA,...BC,CD->...AD', EPS, np.asarray(a), EPS)


def lorentz_from_sl2c(a: np.ndarray) -> np.ndarray:
    """Lorentz matrix Lambda with (Lambda p)^{AA'} = A p^{AA'} A^dagger."""
    a = np.asarray(a, dtype=complex)
    _check_unit_det(a)
    basis = vector_to_dyad(np.eye(4), "up")       # (4, 2, 2), one dyad per axis
    rotated = np.einsum('...ij,bjk,...lk->...bil', a, basis, np.conj(a))
    cols = dyad_to_vector(rotated, "up")          # (..., 4 cols, 4)
    return np.real(np.swapaxes(cols, -1, -2))


def transform_vector(a: np.ndarray, p: np.ndarray) -> np.ndarray:
    lam = lorentz_from_sl2c(a)
    return np.einsum('...ab,...b->...a', lam, np.asarray(p))


def transform_spinor(a: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Action on upper-index unprimed spinors."""
    _check_unit_det(np.asarray(a))
    return np.einsum('...AB,...B->...A', np.asarray(a), np.asarray(k))


def transform_dyad(a: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Action on p^{AA'}: D -> A D A^dagger."""
    a = np.asarray(a)
    _check_unit_det(a)
    return np.einsum('...ij,...jk,...lk->...il', a, np.asarray(d), np.conj(a))


# ---------------------------------------------------------------------------
# seeded generators

def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_future_momentum(m: float, seed, size=None, scale: float = 1.0) -> np.ndarray:
    """On-shell future-pointing momentum; p.p = m^2 holds by construction."""
    if m < 0:
        raise NegativeMass(f"m = {m}")
    rng = _rng(seed)
    shape = (3,) if size is None else (size, 3)
    pv = rng.normal(size=shape) * scale
    if m == 0.0:
        # keep the null momentum away from the coordinate origin
        norm = np.linalg.norm(pv, axis=-1, keepdims=True)
        pv = np.where(norm < 1e-6, pv + 0.5, pv)
    p0 = np.sqrt(m ** 2 + np.sum(pv ** 2, axis=-1))
    return np.concatenate([p0[..., None], pv], axis=-1)


def random_spinor(seed, size=None) -> np.ndarray:
    rng = _rng(seed)
    shape = (2,) if size is None else (size, 2)
    k = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    norm = np.linalg.norm(k, axis=-1, keepdims=True)
    return np.where(norm < 1e-8, k + 1.0, k)


def random_sl2c(seed, size=None, spread: float = 0.4) -> np.ndarray:
    """Unit-determinant 2x2 complex matrix; spread controls distance from identity."""
    rng = _rng(seed)
    shape = (2, 2) if size is None else (size, 2, 2)
    a = np.eye(2) + spread * (rng.normal(size=shape) + 1j * rng.normal(size=shape))
    det = np.linalg.det(a)
    small = np.abs(det) < 1e-3
    if np.any(small):
        a = np.where(np.broadcast_to(small[..., None, None], a.shape), np.eye(2) + a / 3.0, a)
        det = np.linalg.det(a)
    return a / np.sqrt(det)[..., None, None]


def random_timelike(seed, size=None, scale: float = 0.5) -> np.ndarray:
    """Future-pointing timelike vector, t.t > 0."""
    rng = _rng(seed)
    shape = (3,) if size is None else (size, 3)
    tv = rng.normal(size=shape) * scale
    t0 = np.sqrt(1.0 + np.sum(tv ** 2, axis=-1)) + 0.1
    return np.concatenate([t0[..., None], tv], axis=-1)
