"""Dual hypergroups of abelian normalizable hypergroups.

The dual lives on the characters; its structure constants come from the
orthogonality relations.  The dual tensor is materialized as a FusionData over
floats and opportunistically snapped to exact rationals, so the whole primal
tool chain applies to duals unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FusionData
from .errors import (
    CrossCheckFailed,
    DualAxiomViolation,
    HypergroupError,
    NoIsomorphismFound,
    NotNormalizable,
)
from .spectra import CharacterTable, character_table, fp_character, order
from .tolerance import DEFAULT_TOL, Tolerance, snap_value

__all__ = [
    "DualData",
    "DualFlags",
    "dual_hypergroup",
    "dual_flags",
    "dual_codegrees",
    "double_dual_check",
    "augmentation_index",
    "match_dual_characters",
]


@dataclass(frozen=True)
class DualData:
    """The dual hypergroup together with its bookkeeping.

    `base` is the dual as plain FusionData (unit = the normalizing character).
    `char_order[j]` is the primal character-table column sitting at dual basis
    position j, so position 0 always carries mu1.
    """

    base: FusionData
    orders_hat: np.ndarray
    involution_hat: tuple
    primal_name: str
    mu1: int
    char_order: tuple

    @property
    def rank(self) -> int:
        return self.base.rank


@dataclass(frozen=True)
class DualFlags:
    rn: bool
    rational: bool
    h_integral: bool


def augmentation_index(table: CharacterTable) -> int:
    """Column of the all-ones character (exists iff the data is normalized)."""
    dev = np.abs(table.values - 1.0).max(axis=0)
    j = int(dev.argmin())
    if dev[j] > 1e4 * table.tol.zero(1.0):
        raise NotNormalizable("no all-ones character column")
    return j


def dual_hypergroup(
    data: FusionData,
    table: CharacterTable,
    mu1: int | None = None,
    tol: Tolerance | None = None,
) -> DualData:
    """Build the dual of an abelian hypergroup normalizable via character mu1.

    Dual basis order: mu1 first (it is the dual's unit), then the remaining
    characters in canonical table order.
    """
    tol = tol or table.tol
    m = data.rank
    if mu1 is None:
        mu1 = fp_character(table)
    A = table.values
    d = A[:, mu1]
    if (np.abs(d) <= tol.zero(1.0 + np.abs(d).max())).any():
        raise NotNormalizable("normalizing character vanishes somewhere")
    n_primal = order(data, table, mu1)

    perm = [mu1] + [j for j in range(m) if j != mu1]
    Ap = A[:, perm]
    n = table.codegrees[perm]
    inv = list(data.involution)
    w = table.h / d
    phat = np.einsum("i,ij,ik,il->jkl", w, Ap, Ap, Ap[inv, :])
    phat = phat / n[None, None, :]

    imax = np.abs(phat.imag).max()
    if imax > 1e4 * tol.zero(1.0):
        raise DualAxiomViolation(f"dual tensor has imaginary part {imax:.3e}")
    real = phat.real

    snapped = np.empty(real.shape, dtype=object)
    all_exact = True
    for idx in np.ndindex(*real.shape):
        s = snap_value(float(real[idx]), tol)
        if isinstance(s, float):
            all_exact = False
            break
        snapped[idx] = s
    tensor = snapped if all_exact else real

    involution_hat = _involution_from_tensor(real, tol)
    base = FusionData(f"dual({data.name})", involution_hat, tensor)
    try:
        flags = base.flags
    except HypergroupError as exc:
        raise DualAxiomViolation(f"dual tensor fails hypergroup axioms: {exc}") from exc
    if not flags.normalized:
        raise DualAxiomViolation("dual of a normalized hypergroup must be normalized")

    hhat = np.array(
        [1.0 / float(real[j, involution_hat[j], 0]) for j in range(m)]
    )
    # Lemma 2.6 / Eq (2.11): h-hat_j = n(H)/n_j and sum h-hat_j = n(H)
    if np.abs(hhat - n_primal / n).max() > 1e5 * tol.zero(1.0 + n_primal):
        raise DualAxiomViolation("h-hat_j != n(H)/n_j")
    if abs(hhat.sum() - n_primal) > 1e5 * tol.zero(1.0 + n_primal):
        raise DualAxiomViolation("sum of dual orders != n(H)")
    _check_involution_conjugation(Ap, d, involution_hat, tol)
    return DualData(
        base=base,
        orders_hat=hhat,
        involution_hat=involution_hat,
        primal_name=data.name,
        mu1=mu1,
        char_order=tuple(perm),
    )


def _involution_from_tensor(real: np.ndarray, tol: Tolerance) -> tuple:
    """Def 1.1 on the dual: j# is the unique k with p-hat_1(j, k) != 0."""
    m = real.shape[0]
    thr = 1e4 * tol.zero(1.0 + np.abs(real[:, :, 0]).max())
    inv = []
    for j in range(m):
        hits = [k for k in range(m) if abs(real[j, k, 0]) > thr]
        if len(hits) != 1:
            raise DualAxiomViolation(
                f"dual involution ambiguous at character {j}: hits {hits}"
            )
        inv.append(hits[0])
    if sorted(inv) != list(range(m)):
        raise DualAxiomViolation("dual involution is not a permutation")
    return tuple(inv)


def _check_involution_conjugation(Ap, d, involution_hat, tol: Tolerance):
    """mu_{j#} of the normalized basis is the complex conjugate of mu_j."""
    norm = Ap / d[:, None]
    for j, js in enumerate(involution_hat):
        resid = np.abs(norm[:, js] - norm[:, j].conj()).max()
        if resid > 1e5 * tol.zero(1.0 + np.abs(norm).max()):
            raise DualAxiomViolation(
                f"dual involution {j} -> {js} does not match value conjugation"
            )


def dual_flags(dd: DualData, tol: Tolerance = DEFAULT_TOL) -> DualFlags:
    """RN / rational / h-integral classification of a built dual."""
    t = dd.base.float_tensor()
    rn = bool((t >= -tol.zero(1.0 + np.abs(t).max())).all())
    rational = dd.base.is_exact
    h_integral = all(
        isinstance(snap_value(float(h), tol), int) and snap_value(float(h), tol) > 0
        for h in dd.orders_hat
    )
    return DualFlags(rn=rn, rational=rational, h_integral=h_integral)


def dual_codegrees(
    dd: DualData, data: FusionData, table: CharacterTable
) -> np.ndarray:
    """n-hat_i = n(H) / (h_i d_i d_{i*}), cross-checked on the dual tensor.

    Indexed by the primal basis (the characters of the dual are evaluations at
    the normalized primal basis elements).
    """
    tol = table.tol
    d = table.values[:, dd.mu1].real
    h = table.h
    inv = list(data.involution)
    n_primal = order(data, table, dd.mu1)
    nhat = n_primal / (h * d * d[inv])
    # direct computation on the dual tensor
    dual_table = character_table(dd.base, tol=tol)
    match = match_dual_characters(dd, table, dual_table)
    direct = dual_table.codegrees[match]
    if np.abs(direct - nhat).max() > 1e5 * tol.zero(1.0 + np.abs(nhat).max()):
        raise CrossCheckFailed(
            f"dual codegrees: formula vs direct mismatch {np.abs(direct - nhat).max():.3e}"
        )
    return nhat


def match_dual_characters(
    dd: DualData, table: CharacterTable, dual_table: CharacterTable
) -> np.ndarray:
    """match[i] = dual-table column equal to evaluation at x_i / d_i.

    The characters of the dual are ev_{x_i/d_i}; this aligns the dual's own
    canonical character order with the primal basis.
    """
    tol = table.tol
    m = table.rank
    d = table.values[:, dd.mu1]
    rows = table.values[:, list(dd.char_order)] / d[:, None]  # rows[i] over dual basis
    match = np.full(m, -1, dtype=int)
    used = set()
    for i in range(m):
        diffs = np.abs(dual_table.values.T - rows[i][None, :]).max(axis=1)
        j = int(diffs.argmin())
        if diffs[j] > 1e6 * tol.zero(1.0 + np.abs(rows).max()) or j in used:
            raise CrossCheckFailed(
                f"cannot align dual character for basis element {i} (residual {diffs[j]:.3e})"
            )
        used.add(j)
        match[i] = j
    return match


def double_dual_check(
    data: FusionData,
    table: CharacterTable,
    mu1: int | None = None,
    tol: Tolerance | None = None,
) -> tuple:
    """Find the basis permutation identifying dual(dual(H)) with normalized H.

    Returns pi such that ddual.tensor[pi[a], pi[b], pi[c]] matches the
    normalized primal tensor entrywise within tol.
    """
    from .core import normalize

    tol = tol or table.tol
    if mu1 is None:
        mu1 = fp_character(table)
    dd = dual_hypergroup(data, table, mu1, tol)
    dual_table = character_table(dd.base, tol=tol)
    unit_col = augmentation_index(dual_table)
    dd2 = dual_hypergroup(dd.base, dual_table, unit_col, tol)
    match = match_dual_characters(dd, table, dual_table)

    # dd2 basis position a holds dual-table column dd2.char_order[a];
    # primal index i sits at dual-table column match[i].
    col_to_pos = {col: pos for pos, col in enumerate(dd2.char_order)}
    pi = np.array([col_to_pos[match[i]] for i in range(data.rank)], dtype=int)

    normalized = normalize(data, table.values[:, mu1], tol)
    T1 = normalized.float_tensor()
    T2 = dd2.base.float_tensor()
    resid = 0.0
    for a in range(data.rank):
        for b in range(data.rank):
            for c in range(data.rank):
                resid = max(resid, abs(T2[pi[a], pi[b], pi[c]] - T1[a, b, c]))
    if resid > 1e6 * tol.zero(1.0 + np.abs(T1).max()):
        raise NoIsomorphismFound(f"double dual mismatch, residual {resid:.3e}")
    return tuple(int(x) for x in pi)
