"""Finite-dimensional quantum morphisms: unitaries, isometries, channels.

Channels are stored as Choi matrices with the input factor first:

    C = sum_{ij} |i><j| (x) L(|i><j|)

so C reshaped to (din, dout, din, dout) has C[i, m, j, n] = <m| L(|i><j|) |n>.
Trace preservation reads Tr_out C = I_din.

Tolerances: 1e-9 for structural invariants (unitarity, TP, Hermiticity),
1e-8 for round trips through two eigendecompositions, 1e-10 as the rank
cutoff on Choi eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

ATOL = 1e-9
ROUND_ATOL = 1e-8
RANK_CUTOFF = 1e-10


class DimensionError(ValueError):
    pass


class NotAnIsometryError(ValueError):
    pass


class NotAChannelError(ValueError):
    pass


def _dag(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def matrix_to_json(m: np.ndarray) -> dict:
    r, c = m.shape
    return {
        "rows": r,
        "cols": c,
        "entries": [[float(z.real), float(z.imag)] for z in m.reshape(-1)],
    }


def matrix_from_json(data: dict) -> np.ndarray:
    r, c = int(data["rows"]), int(data["cols"])
    flat = np.array([complex(re, im) for re, im in data["entries"]], dtype=complex)
    if flat.size != r * c:
        raise ValueError(f"expected {r * c} entries, got {flat.size}")
    return flat.reshape(r, c)


@dataclass(frozen=True, eq=False)
class Isometry:
    """V with V^dag V = I; rows may carry a (dout, env) factorization."""

    mat: np.ndarray

    def __post_init__(self) -> None:
        r, c = self.mat.shape
        if r < c:
            raise NotAnIsometryError(f"isometry needs rows >= cols, got {r}x{c}")
        if not np.allclose(_dag(self.mat) @ self.mat, np.eye(c), atol=ATOL):
            raise NotAnIsometryError("V^dag V != I within 1e-9")

    @property
    def rows(self) -> int:
        return self.mat.shape[0]

    @property
    def cols(self) -> int:
        return self.mat.shape[1]


@dataclass(frozen=True, eq=False)
class Unitary:
    mat: np.ndarray

    def __post_init__(self) -> None:
        r, c = self.mat.shape
        if r != c:
            raise NotAnIsometryError(f"unitary must be square, got {r}x{c}")
        if not np.allclose(_dag(self.mat) @ self.mat, np.eye(c), atol=ATOL):
            raise NotAnIsometryError("U^dag U != I within 1e-9")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


@dataclass(frozen=True, eq=False)
class Channel:
    """A CPTP map din -> dout as a Choi matrix (input factor first)."""

    din: int
    dout: int
    choi: np.ndarray

    def __post_init__(self) -> None:
        n = self.din * self.dout
        if self.choi.shape != (n, n):
            raise NotAChannelError(f"choi must be {n}x{n}, got {self.choi.shape}")
        if not np.allclose(self.choi, _dag(self.choi), atol=ATOL):
            raise NotAChannelError("choi not Hermitian within 1e-9")
        evals = np.linalg.eigvalsh(self.choi)
        if evals.min() < -ATOL:
            raise NotAChannelError(f"choi not PSD: min eigenvalue {evals.min():.2e}")
        tr_out = np.einsum("imjm->ij", self.blocks())
        if not np.allclose(tr_out, np.eye(self.din), atol=ATOL):
            raise NotAChannelError("partial trace over output != identity within 1e-9")

    def blocks(self) -> np.ndarray:
        return self.choi.reshape(self.din, self.dout, self.din, self.dout)

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """The action on a din x din operator."""
        if rho.shape != (self.din, self.din):
            raise DimensionError(f"state must be {self.din}x{self.din}")
        return np.einsum("ij,imjn->mn", rho, self.blocks())

    def close_to(self, other: "Channel", atol: float = ATOL) -> bool:
        return (
            self.din == other.din
            and self.dout == other.dout
            and bool(np.max(np.abs(self.choi - other.choi)) <= atol)
        )

    def to_json(self) -> dict:
        return {"din": self.din, "dout": self.dout, "choi": matrix_to_json(self.choi)}

    @classmethod
    def from_json(cls, data: dict) -> "Channel":
        return cls(int(data["din"]), int(data["dout"]), matrix_from_json(data["choi"]))


# -- constructors -------------------------------------------------------------

def choi_of_kraus(ks: list[np.ndarray]) -> Channel:
    """Assemble the Choi matrix of rho -> sum_k K rho K^dag."""
    if not ks:
        raise NotAChannelError("empty Kraus list")
    dout, din = ks[0].shape
    for k in ks:
        if k.shape != (dout, din):
            raise NotAChannelError("Kraus operators must share one shape")
    s = sum(_dag(k) @ k for k in ks)
    if not np.allclose(s, np.eye(din), atol=ROUND_ATOL):
        raise NotAChannelError("sum K^dag K != I within 1e-8")
    n = din * dout
    choi = np.zeros((n, n), dtype=complex)
    for k in ks:
        v = k.T.reshape(-1)  # v[i*dout + m] = K[m, i]
        choi += np.outer(v, v.conj())
    choi = (choi + _dag(choi)) / 2
    return Channel(din, dout, choi)


def kraus_of_choi(c: Channel, cutoff: float = RANK_CUTOFF) -> list[np.ndarray]:
    """Kraus operators from the eigenpairs of the Choi matrix."""
    w, vecs = np.linalg.eigh(c.choi)
    ks = []
    for i in range(len(w) - 1, -1, -1):  # largest eigenvalue first
        if w[i] > cutoff:
            v = vecs[:, i] * np.sqrt(w[i])
            ks.append(v.reshape(c.din, c.dout).T)
    return ks


def choi_rank(c: Channel, cutoff: float = RANK_CUTOFF) -> int:
    return int(np.sum(np.linalg.eigvalsh(c.choi) > cutoff))


def channel_of_isometry(v: Isometry, env_dim: int) -> Channel:
    """The channel rho -> Tr_env(V rho V^dag), output factor first in rows."""
    if env_dim <= 0 or v.rows % env_dim != 0:
        raise DimensionError(f"rows {v.rows} not divisible by env dim {env_dim}")
    dout = v.rows // env_dim
    blocks = v.mat.reshape(dout, env_dim, v.cols)
    ks = [blocks[:, e, :] for e in range(env_dim)]
    return choi_of_kraus(ks)


def channel_of_unitary(u: Unitary) -> Channel:
    return choi_of_kraus([u.mat])


def minimal_stinespring(c: Channel) -> tuple[Isometry, int]:
    """An isometry din -> dout * r with r the Choi rank; minimal dilation."""
    ks = kraus_of_choi(c)
    r = len(ks)
    v = np.stack(ks, axis=1).reshape(c.dout * r, c.din)
    return Isometry(v), r


def is_pure_choi(c: Channel, tol: float = ROUND_ATOL) -> bool:
    """True iff the normalized Choi matrix is a rank-one projector."""
    tr = np.trace(c.choi).real
    purity = np.trace(c.choi @ c.choi).real / tr**2
    return purity >= 1 - tol


def phase_fix(m: np.ndarray) -> np.ndarray:
    """Scale by a unit phase so the largest-modulus entry (first in row-major
    order among ties) is real positive."""
    flat = m.reshape(-1)
    mags = np.abs(flat)
    top = mags.max()
    idx = int(np.argmax(mags >= top - 1e-12))
    z = flat[idx]
    if abs(z) == 0:
        return m
    return m * (z.conj() / abs(z))


def extract_unitary(c: Channel) -> Unitary:
    """Recover the phase-fixed unitary from a pure, square Choi matrix."""
    if c.din != c.dout:
        raise DimensionError("a reversible channel must have equal dimensions")
    if not is_pure_choi(c):
        raise NotAChannelError("choi impure: channel is not a unitary conjugation")
    w, vecs = np.linalg.eigh(c.choi)
    v = vecs[:, -1] * np.sqrt(w[-1])
    k = v.reshape(c.din, c.dout).T
    return Unitary(phase_fix(nearest_unitary(k)))


def nearest_unitary(m: np.ndarray) -> np.ndarray:
    """Polar projection onto the unitary group (drops the positive factor)."""
    u, _, vh = np.linalg.svd(m)
    return u @ vh


def complete_to_unitary(v: Isometry) -> Unitary:
    """Extend the columns of V to an orthonormal basis; deterministic
    Gram-Schmidt over standard basis vectors, smallest index first."""
    n, k = v.rows, v.cols
    cols = [v.mat[:, j].astype(complex) for j in range(k)]
    for j in range(n):
        if len(cols) == n:
            break
        w = np.zeros(n, dtype=complex)
        w[j] = 1.0
        for _ in range(2):  # re-orthogonalize once for stability
            for c in cols:
                w = w - c * (c.conj() @ w)
        norm = np.linalg.norm(w)
        if norm > 1e-7:
            cols.append(w / norm)
    if len(cols) != n:
        raise NotAnIsometryError("completion failed: columns not independent")
    return Unitary(np.stack(cols, axis=1))


def channel_compose(g: Channel, f: Channel) -> Channel:
    """The composite channel g after f, via Kraus products."""
    if f.dout != g.din:
        raise DimensionError(f"cannot compose: dout {f.dout} != din {g.din}")
    ks = [kg @ kf for kg in kraus_of_choi(g) for kf in kraus_of_choi(f)]
    return choi_of_kraus(ks)


def channel_tensor(a: Channel, b: Channel) -> Channel:
    ks = [np.kron(ka, kb) for ka in kraus_of_choi(a) for kb in kraus_of_choi(b)]
    return choi_of_kraus(ks)


def identity_channel(d: int) -> Channel:
    return choi_of_kraus([np.eye(d, dtype=complex)])


def dephasing_channel(d: int = 2) -> Channel:
    """The completely dephasing channel in the standard basis."""
    ks = [np.zeros((d, d), dtype=complex) for _ in range(d)]
    for i in range(d):
        ks[i][i, i] = 1.0
    return choi_of_kraus(ks)


def depolarizing_channel(d: int = 2, p: float = 0.5) -> Channel:
    """rho -> (1-p) rho + p Tr(rho) I/d."""
    ident = identity_channel(d)
    n = d * d
    # Choi of the trace-and-replace channel rho -> Tr(rho) I/d.
    rep = np.zeros((n, n), dtype=complex)
    for i in range(d):
        for m in range(d):
            rep[i * d + m, i * d + m] = 1.0 / d
    choi = (1 - p) * ident.choi + p * rep
    return Channel(d, d, choi)


# -- random sampling ----------------------------------------------------------

def ginibre(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)


def haar_unitary(d: int, rng: np.random.Generator) -> Unitary:
    """Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal
    phase correction (plain QR is not Haar)."""
    z = ginibre(d, d, rng)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return Unitary(q * ph)


def haar_isometry(rows: int, cols: int, rng: np.random.Generator) -> Isometry:
    """First cols columns of a Haar unitary on rows dimensions."""
    u = haar_unitary(rows, rng)
    return Isometry(u.mat[:, :cols])


def random_channel(din: int, dout: int, k: int, rng: np.random.Generator) -> Channel:
    """Random full-support CPTP map: k Ginibre Kraus candidates normalized by
    S^{-1/2} with S = sum K^dag K.

    Trace preservation needs S invertible, so k is raised until k * dout >= din.
    """
    k = max(k, -(-din // dout))
    ks = [ginibre(dout, din, rng) for _ in range(k)]
    s = sum(_dag(m) @ m for m in ks)
    w, v = np.linalg.eigh(s)
    s_inv_sqrt = v @ np.diag(1 / np.sqrt(w)) @ _dag(v)
    return choi_of_kraus([m @ s_inv_sqrt for m in ks])
