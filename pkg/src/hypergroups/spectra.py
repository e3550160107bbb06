"""Character tables of abelian hypergroups and everything read off them.

The character table is found by simultaneously diagonalizing the commuting
left-multiplication matrices through a seeded random linear combination; every
value is then verified (eigen-residuals, homomorphism property, orthogonality)
before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._exact import exact_det
from .core import Element, FusionData, orders
from .errors import (
    DegenerateSpectrum,
    HomomorphismCheckFailed,
    IdempotentResidual,
    InexactTensor,
    MultiplePositiveColumns,
    NoPositiveColumn,
    NotAbelian,
    NotNormalizable,
    OrthogonalityResidualExceeded,
)
from .tolerance import DEFAULT_TOL, Tolerance, snap_value

__all__ = [
    "CharacterTable",
    "Tolerance",
    "character_table",
    "fp_character",
    "formal_codegrees",
    "order",
    "integral_element",
    "snap",
    "verify_integer_fpdim",
    "fp_dims",
    "integral_element_of_subset",
]

RETRY_BUDGET = 8

snap = snap_value


@dataclass(frozen=True)
class CharacterTable:
    """values[i, j] = mu_j(x_i); row 0 is all ones, column order is canonical."""

    values: np.ndarray  # (m, m) complex
    fp_index: int | None
    codegrees: np.ndarray  # (m,) float, n_j
    idempotents: np.ndarray  # (m, m) complex, row j = coordinates of F_j
    h: np.ndarray  # (m,) float, basis orders
    tol: Tolerance

    @property
    def rank(self) -> int:
        return self.values.shape[0]

    def fp_dims(self) -> np.ndarray:
        """d_i = FPdim(x_i), the entries of the unique positive column."""
        if self.fp_index is None:
            raise NoPositiveColumn("table has no positive column")
        return self.values[:, self.fp_index].real.copy()

    def column(self, j: int) -> np.ndarray:
        return self.values[:, j].copy()


def _simultaneous_diagonalization(L: np.ndarray, tol: Tolerance, seed: int):
    m = L.shape[0]
    rng = np.random.default_rng(seed)
    last_sep = np.inf
    for _ in range(RETRY_BUDGET):
        coeffs = rng.standard_normal(m)
        M = np.tensordot(coeffs, L, axes=(0, 0))
        w, V = np.linalg.eig(M)
        if m == 1:
            return V
        diffs = np.abs(w[:, None] - w[None, :])
        np.fill_diagonal(diffs, np.inf)
        sep = diffs.min()
        last_sep = min(last_sep, sep)
        if sep > 1e-8 * (1.0 + np.abs(w).max()) and np.linalg.cond(V) < 1e10:
            return V
    raise DegenerateSpectrum(
        f"no separating combination in {RETRY_BUDGET} attempts (min gap {last_sep:.3e})"
    )


def character_table(
    data: FusionData, tol: Tolerance = DEFAULT_TOL, seed: int = 0
) -> CharacterTable:
    """Diagonalize the regular representation of an abelian hypergroup.

    Columns are the characters mu_j, canonically ordered: the positive (FP)
    column first when there is exactly one, then lexicographically by rounded
    value vectors, so repeated runs produce identical tables.
    """
    if not data.flags.abelian:
        raise NotAbelian(f"{data.name}: tensor is not commutative")
    m = data.rank
    L = data.left_matrices_float()
    scale = 1.0 + float(np.abs(L).max())
    V = _simultaneous_diagonalization(L, tol, seed)
    Vinv = np.linalg.inv(V)
    values = np.empty((m, m), dtype=complex)
    for i in range(m):
        D = Vinv @ L[i] @ V
        values[i] = np.diag(D)
        off = D - np.diag(np.diag(D))
        if np.abs(off).max() > 1e5 * tol.zero(scale):
            raise DegenerateSpectrum(
                f"L_{i} not diagonalized (off-diagonal {np.abs(off).max():.3e})"
            )
    # row of the unit is identically 1
    if np.abs(values[0] - 1.0).max() > 1e3 * tol.zero(1.0):
        raise HomomorphismCheckFailed("unit row deviates from 1")

    # multiplicative check on all basis pairs, all characters
    N = data.float_tensor()
    lhs = np.einsum("ikl,lj->ikj", N, values)
    rhs = values[:, None, :] * values[None, :, :]
    resid = np.abs(lhs - rhs).max()
    vmax = 1.0 + np.abs(values).max()
    if resid > 1e4 * tol.zero(scale * vmax * vmax):
        raise HomomorphismCheckFailed(f"residual {resid:.3e}")

    values = values[:, _canonical_column_order(values, tol)]

    h = np.array([float(x) for x in orders(data)])
    inv = list(data.involution)
    # n_j from the pairing theorem, cross-checked against the |.|^2 form
    n_pairing = np.einsum("i,ij,ij->j", h, values, values[inv, :])
    codegrees = np.einsum("i,ij->j", h, np.abs(values) ** 2).real
    if np.abs(n_pairing - codegrees).max() > 1e4 * tol.zero(1.0 + codegrees.max()):
        raise OrthogonalityResidualExceeded(
            "codegree pairing disagrees with |mu|^2 form (non-normalizable data?)"
        )
    idempotents = (h[None, :] * values[inv, :].T) / codegrees[:, None]

    fp = _find_positive_column(values, tol)
    table = CharacterTable(
        values=values,
        fp_index=fp,
        codegrees=codegrees,
        idempotents=idempotents,
        h=h,
        tol=tol,
    )
    _verify_table(data, table)
    return table


def _canonical_column_order(values: np.ndarray, tol: Tolerance) -> list[int]:
    m = values.shape[0]
    fp = _find_positive_column(values, tol)
    cols = list(range(m))

    def key(j):
        col = np.round(values[:, j], 9)
        return tuple((float(c.real), float(c.imag)) for c in col)

    rest = sorted((j for j in cols if j != fp), key=key)
    return ([fp] if fp is not None else []) + rest


def _find_positive_column(values: np.ndarray, tol: Tolerance) -> int | None:
    m = values.shape[0]
    candidates = []
    for j in range(m):
        col = values[:, j]
        if np.abs(col.imag).max() <= tol.zero(1.0 + np.abs(col).max()) and (
            col.real > tol.zero(1.0)
        ).all():
            candidates.append(j)
    if len(candidates) == 1:
        return candidates[0]
    return None


def _verify_table(data: FusionData, table: CharacterTable):
    tol = table.tol
    m = table.rank
    values, h, n = table.values, table.h, table.codegrees
    # sum_j 1/n_j = tau(1) = 1
    if abs((1.0 / n).sum() - 1.0) > 1e3 * tol.zero(1.0):
        raise OrthogonalityResidualExceeded("sum 1/n_j != 1")
    # first orthogonality
    gram = np.einsum("i,ij,ik->jk", h, values, values.conj())
    resid = np.abs(gram - np.diag(n)).max()
    if resid > 1e4 * tol.zero(1.0 + np.abs(n).max()):
        raise OrthogonalityResidualExceeded(f"first orthogonality residual {resid:.3e}")
    # F_j F_k = delta_jk F_j and sum_j F_j = 1
    F = table.idempotents
    for j in range(m):
        # mu_l(F_j) must be delta_{jl}
        ev = np.einsum("il,i->l", values, F[j])
        target = np.zeros(m)
        target[j] = 1.0
        if np.abs(ev - target).max() > 1e4 * tol.zero(1.0):
            raise IdempotentResidual(f"F_{j} is not the {j}-th primitive idempotent")
    N = data.float_tensor()
    prods = np.einsum("ja,kb,abc->jkc", F, F, N, optimize=True)
    delta = np.zeros((m, m, m), dtype=complex)
    for j in range(m):
        delta[j, j] = F[j]
    if np.abs(prods - delta).max() > 1e4 * tol.zero(1.0):
        raise IdempotentResidual("F_j F_k != delta_jk F_j")
    if np.abs(F.sum(axis=0) - _unit_vector(m)).max() > 1e4 * tol.zero(1.0):
        raise IdempotentResidual("sum of idempotents != 1")


def _unit_vector(m: int) -> np.ndarray:
    e = np.zeros(m, dtype=complex)
    e[0] = 1.0
    return e


def fp_character(table: CharacterTable) -> int:
    """Index of the unique strictly positive column (the FP character)."""
    values, tol = table.values, table.tol
    m = table.rank
    candidates = []
    for j in range(m):
        col = values[:, j]
        if np.abs(col.imag).max() <= tol.zero(1.0 + np.abs(col).max()) and (
            col.real > tol.zero(1.0)
        ).all():
            candidates.append(j)
    if not candidates:
        raise NoPositiveColumn("no strictly positive character column")
    if len(candidates) > 1:
        raise MultiplePositiveColumns(f"positive columns {candidates}")
    return candidates[0]


def fp_dims(table: CharacterTable) -> np.ndarray:
    return table.fp_dims()


def formal_codegrees(data: FusionData, table: CharacterTable) -> np.ndarray:
    """n_j = sum_i h_i |mu_j(x_i)|^2, cross-checked against the tau expansion."""
    tol = table.tol
    n = np.einsum("i,ij->j", table.h, np.abs(table.values) ** 2).real
    # tau expansion: sum_j mu_j(x_i) / n_j = delta_{i,0}
    tau = np.einsum("ij,j->i", table.values, 1.0 / n)
    target = np.zeros(data.rank, dtype=complex)
    target[0] = 1.0
    resid = np.abs(tau - target).max()
    if resid > 1e4 * tol.zero(1.0):
        raise OrthogonalityResidualExceeded(f"tau expansion residual {resid:.3e}")
    return n


def order(data: FusionData, table: CharacterTable, mu1: int | None = None) -> float:
    """n(H, B, mu1) = sum_i h_i |mu1(x_i)|^2 for a non-vanishing character mu1."""
    tol = table.tol
    if mu1 is None:
        mu1 = fp_character(table)
    col = table.values[:, mu1]
    if (np.abs(col) <= tol.zero(1.0 + np.abs(col).max())).any():
        raise NotNormalizable(f"character {mu1} vanishes on a basis element")
    return float(np.einsum("i,i->", table.h, np.abs(col) ** 2).real)


def integral_element(data: FusionData, table: CharacterTable) -> Element:
    """The primitive idempotent at the FP character, lambda_H.

    Verified to be idempotent and to absorb every basis element:
    x_i lambda = d_i lambda.
    """
    from .core import multiply, basis_element

    tol = table.tol
    fp = fp_character(table)
    coords = table.idempotents[fp]
    if np.abs(coords.imag).max() > 1e3 * tol.zero(1.0):
        raise IdempotentResidual("integral has a complex coordinate")
    lam = Element(tuple(float(c) for c in coords.real))
    sq = multiply(data, lam, lam)
    if np.abs(sq.float_coords() - lam.float_coords()).max() > 1e4 * tol.zero(1.0):
        raise IdempotentResidual("lambda^2 != lambda")
    d = table.fp_dims()
    for i in range(data.rank):
        prod = multiply(data, basis_element(data, i), lam)
        resid = np.abs(prod.float_coords() - d[i] * lam.float_coords()).max()
        if resid > 1e4 * tol.zero(1.0 + d[i]):
            raise IdempotentResidual(f"x_{i} lambda != d_i lambda (residual {resid:.3e})")
    return lam


def integral_element_of_subset(
    data: FusionData, table: CharacterTable, indices
) -> Element:
    """Integral of the sub-hypergroup spanned by `indices`, embedded in the parent.

    lambda_S = (1/n(S)) sum_{i in S} h_{i*} d_{i*} x_i with n(S) = sum h_i d_i^2.
    """
    d = table.fp_dims()
    h = table.h
    inv = data.involution
    idx = sorted(indices)
    n_s = float(sum(h[i] * d[i] ** 2 for i in idx))
    coords = [0.0] * data.rank
    for i in idx:
        coords[i] = float(h[inv[i]] * d[inv[i]] / n_s)
    return Element(tuple(coords))


def verify_integer_fpdim(
    data: FusionData, candidate: int, tol: Tolerance = DEFAULT_TOL
) -> bool:
    """Exact confirmation that FPdim(H) equals the integer `candidate`.

    Builds I(1) = sum h_i x_i x_{i*} exactly, requires
    det(L_{I(1)} - candidate Id) = 0 in exact arithmetic, and requires the
    numeric Perron value of L_{I(1)} to match the candidate within tol.
    """
    if not data.is_exact:
        raise InexactTensor("exact tensor required")
    m = data.rank
    inv = data.involution
    hs = orders(data)
    coords = [Fraction(0)] * m
    for i in range(m):
        row = data.tensor[i, inv[i]]
        for k in range(m):
            if row[k] != 0:
                coords[k] += Fraction(hs[i]) * Fraction(row[k])
    # L_{I(1)}[k, j] = sum_l coords_l N_{lj}^k
    mat = np.empty((m, m), dtype=object)
    for k in range(m):
        for j in range(m):
            acc = Fraction(0)
            for l in range(m):
                if coords[l] != 0 and data.tensor[l, j, k] != 0:
                    acc += coords[l] * Fraction(data.tensor[l, j, k])
            mat[k, j] = acc
    shifted = np.empty((m, m), dtype=object)
    for k in range(m):
        for j in range(m):
            shifted[k, j] = mat[k, j] - (Fraction(candidate) if k == j else Fraction(0))
    if exact_det(shifted) != 0:
        return False
    fl = np.array([[float(mat[k, j]) for j in range(m)] for k in range(m)])
    perron = float(np.max(np.linalg.eigvals(fl).real))
    return abs(perron - candidate) <= tol.zero(1.0 + abs(candidate))
