"""Sub-hypergroup machinery: generated closures, kernels, adjoint, supports,
universal grading, perp, quotients, central series and nilpotency.

Support membership uses exact positivity on exact tensors and a shared
threshold on floating ones, so the lattice laws tested downstream see one
consistent notion of "constituent".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Element, FusionData, multiply, rescale
from .errors import (
    BiperpMismatch,
    ClassInconsistency,
    ClosureViolation,
    GradingCrossCheckFailed,
    HypergroupError,
    IdempotentResidual,
    NotAbelian,
    NotPositive,
    SandwichViolation,
    SeriesDisagreement,
    SupportMismatch,
)
from .spectra import (
    CharacterTable,
    character_table,
    fp_character,
    integral_element_of_subset,
    order,
)
from .tolerance import DEFAULT_TOL, Tolerance, snap_value

__all__ = [
    "SubHypergroup",
    "GradingResult",
    "CentralSeries",
    "generated_sub",
    "kernel_of_character",
    "kernel_of_element",
    "center_of_element",
    "adjoint",
    "adjoint_indices",
    "support",
    "universal_grading",
    "perp",
    "perp_characters",
    "quotient",
    "commutator_sub",
    "commutator_indices",
    "central_series",
    "is_nilpotent",
    "restrict",
    "all_sub_hypergroups",
    "grouplike_indices",
    "exact_fp_dims",
]


@dataclass(frozen=True)
class SubHypergroup:
    indices: tuple
    parent: FusionData

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(set(self.indices))))

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def __len__(self):
        return len(self.indices)

    @property
    def is_whole(self) -> bool:
        return len(self.indices) == self.parent.rank

    @property
    def is_trivial(self) -> bool:
        return self.indices == (0,)


@dataclass(frozen=True)
class GradingResult:
    components: tuple  # tuple of sorted index tuples
    group_table: np.ndarray  # (g, g) int table on component labels
    identity_component: int
    iso_class: tuple  # invariant factors of the (abelian) grading group

    @property
    def group_order(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class CentralSeries:
    upper: tuple  # SubHypergroup, H = H^(0) >= H^(1) = H_ad >= ...
    lower: tuple  # SubHypergroup, {1} = H_(0) <= H_(1) = H_pt <= ...
    nilpotency_class: int | None


# ---------------------------------------------------------------- supports

def _support_threshold(data: FusionData, tol: Tolerance) -> float:
    if data.is_exact:
        return 0.0
    return tol.zero(1.0 + float(np.abs(data.float_tensor()).max()))


def _entry_positive(x, thr: float) -> bool:
    if isinstance(x, float):
        return x > thr
    return x > 0


def product_support(data: FusionData, i: int, j: int, thr: float) -> set:
    return {k for k in range(data.rank) if _entry_positive(data.tensor[i, j, k], thr)}


def closure(data: FusionData, seeds, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """Smallest involution- and product-closed index set containing 0 and seeds."""
    thr = _support_threshold(data, tol)
    inv = data.involution
    result = {0} | {inv[i] for i in seeds} | set(seeds)
    queue = list(result)
    while queue:
        a = queue.pop()
        for b in sorted(result):
            for prod in (product_support(data, a, b, thr), product_support(data, b, a, thr)):
                for k in prod:
                    for c in (k, inv[k]):
                        if c not in result:
                            result.add(c)
                            queue.append(c)
    return tuple(sorted(result))


def element_support(data: FusionData, x: Element, tol: Tolerance) -> set:
    thr = 0.0 if (data.is_exact and x.is_exact) else tol.zero(
        1.0 + float(np.abs(x.float_coords()).max())
    )
    out = set()
    for i, c in enumerate(x.coords):
        if isinstance(c, float):
            if c < -thr:
                raise NotPositive(f"coordinate {i} is negative")
            if c > thr:
                out.add(i)
        else:
            if c < 0:
                raise NotPositive(f"coordinate {i} is negative")
            if c > 0:
                out.add(i)
    return out


def generated_sub(data: FusionData, x: Element, tol: Tolerance = DEFAULT_TOL) -> SubHypergroup:
    """Sub-hypergroup generated by the constituents of a positive-cone element."""
    seeds = element_support(data, x, tol)
    return SubHypergroup(closure(data, seeds, tol), data)


def _check_sub(data: FusionData, indices, tol: Tolerance):
    got = closure(data, [i for i in indices if i != 0], tol)
    if got != tuple(sorted(set(indices) | {0})):
        raise ClosureViolation(
            f"indices {tuple(indices)} are not closed (closure {got})"
        )


# ---------------------------------------------------------------- kernels

def kernel_of_character(
    data: FusionData, table: CharacterTable, j: int, tol: Tolerance | None = None
) -> SubHypergroup:
    """ker(mu_j) = {i : mu_j(x_i) = FPdim(x_i)}; verified closed."""
    tol = tol or table.tol
    d = table.fp_dims()
    thr = 1e4 * tol.zero(1.0 + d.max())
    idx = tuple(
        i for i in range(data.rank) if abs(table.values[i, j] - d[i]) <= thr
    )
    _check_sub(data, idx, tol)
    return SubHypergroup(idx, data)


def kernel_of_element(
    data: FusionData, table: CharacterTable, x: Element, tol: Tolerance | None = None
) -> frozenset:
    """ker(x) = {j : mu_j(x) = FPdim(x)} for x in the positive cone.

    Asserts Lemma-style consistency: the kernel of a positive sum equals the
    intersection of the kernels of its constituents.
    """
    tol = tol or table.tol
    d = table.fp_dims()
    xv = x.float_coords()
    fp = float(xv @ d)
    vals = xv @ table.values
    thr = 1e4 * tol.zero(1.0 + fp)
    ker = frozenset(j for j in range(data.rank) if abs(vals[j] - fp) <= thr)
    supp = element_support(data, x, tol)
    inter = None
    for i in supp:
        ki = frozenset(
            j
            for j in range(data.rank)
            if abs(table.values[i, j] - d[i]) <= 1e4 * tol.zero(1.0 + d[i])
        )
        inter = ki if inter is None else (inter & ki)
    if inter is not None and inter != ker:
        raise ClosureViolation(
            f"kernel of sum {sorted(ker)} != intersection {sorted(inter)}"
        )
    return ker


def center_of_element(
    data: FusionData, table: CharacterTable, i: int, tol: Tolerance | None = None
) -> frozenset:
    """Z(x_i) = {j : |mu_j(x_i)| = FPdim(x_i)}."""
    tol = tol or table.tol
    d = table.fp_dims()
    thr = 1e4 * tol.zero(1.0 + d[i])
    return frozenset(
        j for j in range(data.rank) if abs(abs(table.values[i, j]) - d[i]) <= thr
    )


# ---------------------------------------------------------------- adjoint

def _regular_element(data: FusionData, tol: Tolerance) -> Element:
    """I(1) = sum_i h_i x_i x_{i*}."""
    from .core import orders

    m = data.rank
    hs = orders(data)
    inv = data.involution
    if data.is_exact:
        coords = [Fraction(0)] * m
        for i in range(m):
            row = data.tensor[i, inv[i]]
            for k in range(m):
                if row[k] != 0:
                    coords[k] += Fraction(hs[i]) * Fraction(row[k])
        return Element(tuple(coords))
    h = np.array([float(x) for x in hs])
    N = data.float_tensor()
    coords = np.einsum("i,ik->k", h, N[np.arange(m), inv, :])
    return Element(tuple(float(c) for c in coords))


def adjoint_indices(data: FusionData, indices=None, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """Adjoint of (the restriction to `indices` of) the ring, combinatorially."""
    if indices is None or len(indices) == data.rank:
        sub = data
        back = list(range(data.rank))
    else:
        sub, back = restrict(data, indices)
    el = _regular_element(sub, tol)
    cl = closure(sub, element_support(sub, el, tol), tol)
    return tuple(sorted(back[i] for i in cl))


def adjoint(
    data: FusionData, table: CharacterTable, tol: Tolerance | None = None
) -> SubHypergroup:
    """H_ad = <I(1)>, with the Prop-6.4 support cross-check J_ad = {j : n_j = FPdim}."""
    tol = tol or table.tol
    ad = SubHypergroup(adjoint_indices(data, None, tol), data)
    fpd = order(data, table, fp_character(table))
    thr = 1e4 * tol.zero(1.0 + fpd)
    by_codegree = frozenset(
        j for j in range(data.rank) if abs(table.codegrees[j] - fpd) <= thr
    )
    if support(data, table, ad, tol) != by_codegree:
        raise SupportMismatch(
            f"J_ad {sorted(support(data, table, ad, tol))} != codegree test {sorted(by_codegree)}"
        )
    return ad


def support(
    data: FusionData,
    table: CharacterTable,
    sub: SubHypergroup,
    tol: Tolerance | None = None,
) -> frozenset:
    """J_S: characters with mu_j(lambda_S) = 1; verified lambda_S = sum_{J_S} F_j."""
    tol = tol or table.tol
    lam = integral_element_of_subset(data, table, sub.indices)
    vals = lam.float_coords() @ table.values
    thr = 1e4 * tol.zero(1.0)
    js = frozenset(j for j in range(data.rank) if abs(vals[j] - 1.0) <= thr)
    rebuilt = table.idempotents[sorted(js)].sum(axis=0)
    if np.abs(rebuilt - lam.float_coords()).max() > 1e5 * tol.zero(1.0):
        raise IdempotentResidual(
            f"lambda_S != sum of F_j over its support for S = {sub.indices}"
        )
    return js


# ---------------------------------------------------------------- grading

def grouplike_indices(data: FusionData, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """Basis elements with x x* supported on the unit alone (Def of grouplike)."""
    thr = _support_threshold(data, tol)
    inv = data.involution
    out = []
    for i in range(data.rank):
        if product_support(data, i, inv[i], thr) == {0}:
            out.append(i)
    return tuple(out)


def _grouplike_character_indices(table: CharacterTable, n_order: float, tol: Tolerance) -> tuple:
    thr = tol.zero(1.0 + n_order) * 1e4
    return tuple(
        j for j in range(table.rank) if abs(table.codegrees[j] - n_order) <= thr
    )


def _abelian_invariants(table: np.ndarray) -> tuple:
    """Invariant factors of an abelian group given by its Cayley table."""
    n = table.shape[0]
    if n == 1:
        return ()
    orders_ = []
    for a in range(n):
        k, x = 1, a
        while x != 0:
            x = int(table[x, a])
            k += 1
        orders_.append(k)
    primes = []
    total = n
    p = 2
    while total > 1:
        if total % p == 0:
            primes.append(p)
            while total % p == 0:
                total //= p
        p += 1
    prime_powers: dict[int, list[int]] = {}
    for p in primes:
        # counts[t-1] = #{cyclic factors of p-part with exponent >= t},
        # read off #{a : a^(p^k) = e} = p^(sum_i min(k, lambda_i))
        ms = [0]
        k = 1
        while True:
            pk = p**k
            c = sum(1 for o in orders_ if pk % o == 0)
            mk = round(np.log(c) / np.log(p))
            if mk == ms[-1]:
                break
            ms.append(mk)
            k += 1
        counts = [ms[t] - ms[t - 1] for t in range(1, len(ms))]
        lam = []
        for i in range(counts[0] if counts else 0):
            lam.append(sum(1 for c_ in counts if c_ > i))
        prime_powers[p] = sorted((p**e for e in lam), reverse=True)
    factors = []
    while any(prime_powers.values()):
        f = 1
        for lst in prime_powers.values():
            if lst:
                f *= lst.pop(0)
        factors.append(f)
    return tuple(sorted(factors))


def universal_grading(
    data: FusionData,
    table: CharacterTable | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> GradingResult:
    """Universal grading from the adjoint-bimodule graph, with spectral cross-checks.

    The combinatorial path (components of the graph with an edge a-b whenever
    some adjoint element s has N_{sa}^b > 0) is authoritative; the
    character-side partition and the component count |G(H-hat)| are mandatory
    cross-checks.
    """
    if not data.flags.real_non_negative:
        raise HypergroupError("universal grading needs RN data")
    m = data.rank
    thr = _support_threshold(data, tol)
    ad = adjoint_indices(data, None, tol)
    # union-find over the bimodule graph
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for s in ad:
        for a in range(m):
            for b in product_support(data, s, a, thr):
                union(a, b)
            for b in product_support(data, a, s, thr):
                union(a, b)
    comp_of = {}
    components = []
    for a in range(m):
        r = find(a)
        if r not in comp_of:
            comp_of[r] = len(components)
            components.append([])
        components[comp_of[r]].append(a)
    # stable labels: component of the unit first, then by smallest member
    components.sort(key=lambda c: (0 not in c, min(c)))
    label_of = {}
    for lbl, comp in enumerate(components):
        for a in comp:
            label_of[a] = lbl
    if tuple(sorted(components[0])) != ad:
        raise GradingCrossCheckFailed(
            f"identity component {sorted(components[0])} != adjoint {ad}"
        )
    g = len(components)
    gtable = np.full((g, g), -1, dtype=int)
    for la, comp_a in enumerate(components):
        for lb, comp_b in enumerate(components):
            targets = set()
            for a in comp_a:
                for b in comp_b:
                    targets |= {label_of[k] for k in product_support(data, a, b, thr)}
            if len(targets) != 1:
                raise GradingCrossCheckFailed(
                    f"component product {la} * {lb} spreads over {sorted(targets)}"
                )
            gtable[la, lb] = targets.pop()
    _check_group_table(gtable)

    if table is not None:
        _grading_spectral_checks(data, table, components, label_of, gtable, tol)

    iso = _abelian_invariants(gtable) if (gtable == gtable.T).all() else ()
    return GradingResult(
        components=tuple(tuple(sorted(c)) for c in components),
        group_table=gtable,
        identity_component=0,
        iso_class=iso,
    )


def _check_group_table(t: np.ndarray):
    g = t.shape[0]
    if any(t[0, a] != a or t[a, 0] != a for a in range(g)):
        raise GradingCrossCheckFailed("grading table has no unit")
    for a in range(g):
        if 0 not in t[a, :]:
            raise GradingCrossCheckFailed(f"component {a} has no inverse")
    for a in range(g):
        for b in range(g):
            for c in range(g):
                if t[t[a, b], c] != t[a, t[b, c]]:
                    raise GradingCrossCheckFailed("grading table not associative")


def _grading_spectral_checks(data, table, components, label_of, gtable, tol):
    m = data.rank
    n_h = order(data, table, fp_character(table))
    gl_chars = _grouplike_character_indices(table, n_h, tol)
    if len(gl_chars) != len(components):
        raise GradingCrossCheckFailed(
            f"|components| = {len(components)} != |G(H-hat)| = {len(gl_chars)}"
        )
    # character-side partition: omega_i = (mu_j(x_i)/d_i)_{j grouplike}
    d = table.fp_dims()
    omega = table.values[:, list(gl_chars)] / d[:, None]
    keys = [tuple(np.round(omega[i], 6)) for i in range(m)]
    part_of = {}
    for i in range(m):
        part_of.setdefault(keys[i], set()).add(i)
    char_partition = {tuple(sorted(s)) for s in part_of.values()}
    comb_partition = {tuple(sorted(c)) for c in components}
    if char_partition != comb_partition:
        raise GradingCrossCheckFailed(
            "character-side grading partition differs from bimodule components"
        )
    # regular component dimensions: FPdim(R_g) = FPdim(H)/|U|
    h = table.h
    for comp in components:
        r = sum(h[i] * d[i] ** 2 for i in comp)
        if abs(r - n_h / len(components)) > 1e5 * tol.zero(1.0 + n_h):
            raise GradingCrossCheckFailed(
                f"FPdim(R_g) = {r} != FPdim(H)/|U| = {n_h / len(components)}"
            )


# ---------------------------------------------------------------- perp

def perp(
    data: FusionData,
    table: CharacterTable,
    sub: SubHypergroup,
    tol: Tolerance | None = None,
) -> frozenset:
    """S-perp: characters restricting to FPdim on S; biperp must return S."""
    tol = tol or table.tol
    d = table.fp_dims()
    out = set(range(data.rank))
    for i in sub.indices:
        thr = 1e4 * tol.zero(1.0 + d[i])
        out &= {j for j in out if abs(table.values[i, j] - d[i]) <= thr}
    back = perp_characters(data, table, out, tol)
    if back != frozenset(sub.indices):
        raise BiperpMismatch(
            f"(S-perp)-perp = {sorted(back)} != S = {list(sub.indices)}"
        )
    return frozenset(out)


def perp_characters(
    data: FusionData, table: CharacterTable, char_indices, tol: Tolerance | None = None
) -> frozenset:
    """Perp of a set of characters: basis elements where each acts like FPdim."""
    tol = tol or table.tol
    d = table.fp_dims()
    out = set()
    for i in range(data.rank):
        thr = 1e4 * tol.zero(1.0 + d[i])
        if all(abs(table.values[i, j] - d[i]) <= thr for j in char_indices):
            out.add(i)
    return frozenset(out)


# ---------------------------------------------------------------- quotient

def exact_fp_dims(data: FusionData, table: CharacterTable) -> list | None:
    """FP dimensions as exact scalars when they snap and satisfy the character
    equation exactly on an exact tensor; None otherwise."""
    if not data.is_exact:
        return None
    d = table.fp_dims()
    snapped = [snap_value(float(x), table.tol) for x in d]
    if any(isinstance(s, float) for s in snapped):
        return None
    m = data.rank
    for i in range(m):
        for j in range(m):
            lhs = sum(
                Fraction(data.tensor[i, j, k]) * Fraction(snapped[k]) for k in range(m)
            )
            if lhs != Fraction(snapped[i]) * Fraction(snapped[j]):
                return None
    return snapped


def quotient(
    data: FusionData,
    sub: SubHypergroup,
    table: CharacterTable | None = None,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 0,
) -> tuple:
    """H // S on FPdim-normalized representatives.

    Returns (quotient FusionData, classes).  Classes come from the overlap
    relation supp(aS) meets supp(bS); the quotient tensor entry on classes
    [a][b] -> [c] is the sum over w in [c] of the coefficient of w in the
    product of normalized representatives (representative independence is
    asserted).  Result validates as an ARN hypergroup; Harrison duality with
    S-perp is checked when a character table is available.
    """
    flags = data.flags
    if not flags.abelian:
        raise NotAbelian("quotients are defined for abelian data")
    if not flags.real_non_negative:
        raise HypergroupError("quotients are defined for RN data")
    if table is None:
        table = character_table(data, tol=tol, seed=seed)
    exact_d = exact_fp_dims(data, table)
    if exact_d is not None:
        normalized = rescale(data, exact_d) if any(x != 1 for x in exact_d) else data
    else:
        normalized = rescale(data, list(table.fp_dims()))
    thr = _support_threshold(normalized, tol)

    m = data.rank
    supp_s = []
    for a in range(m):
        s_union = set()
        for s in sub.indices:
            s_union |= product_support(normalized, a, s, thr)
        supp_s.append(s_union)
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(m):
        for b in range(a + 1, m):
            if supp_s[a] & supp_s[b]:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    classes_map: dict[int, list[int]] = {}
    for a in range(m):
        classes_map.setdefault(find(a), []).append(a)
    classes = sorted((tuple(sorted(c)) for c in classes_map.values()), key=lambda c: c[0])
    if classes[0][0] != 0:
        raise ClassInconsistency("unit class does not contain the unit")
    class_of = {}
    for lbl, cls in enumerate(classes):
        for a in cls:
            class_of[a] = lbl

    q = len(classes)
    exact = normalized.is_exact
    qt = np.zeros((q, q, q), dtype=object)
    for la, ca in enumerate(classes):
        for lb, cb in enumerate(classes):
            ref = None
            for a in ca:
                for b in cb:
                    row = normalized.tensor[a, b]
                    ent = [0] * q
                    for w in range(m):
                        v = row[w]
                        if exact:
                            ent[class_of[w]] += v
                        else:
                            ent[class_of[w]] += float(v)
                    if ref is None:
                        ref = ent
                    else:
                        if exact:
                            same = ref == ent
                        else:
                            same = max(abs(x - y) for x, y in zip(ref, ent)) <= 1e4 * tol.zero(1.0)
                        if not same:
                            raise ClassInconsistency(
                                f"class product [{la}][{lb}] depends on representatives"
                            )
            for lc in range(q):
                qt[la, lb, lc] = ref[lc]
    inv = data.involution
    qinv = [class_of[inv[cls[0]]] for cls in classes]
    result = FusionData(f"{data.name}//{list(sub.indices)}", qinv, qt)
    qflags = result.flags
    if not (qflags.abelian and qflags.real_non_negative):
        raise ClassInconsistency("quotient is not an ARN hypergroup")
    if table is not None:
        _harrison_check(data, table, sub, result, classes, tol, seed)
    return result, classes


def _harrison_check(data, table, sub, quot, classes, tol, seed):
    """Characters of H//S are the restrictions of the S-perp characters."""
    qtable = character_table(quot, tol=tol, seed=seed)
    sperp = perp(data, table, sub, tol)
    d = table.fp_dims()
    reps = [cls[0] for cls in classes]
    cols_needed = []
    for j in sorted(sperp):
        cols_needed.append(np.array([table.values[a, j] / d[a] for a in reps]))
    matched = set()
    for vec in cols_needed:
        diffs = np.abs(qtable.values.T - vec[None, :]).max(axis=1)
        jq = int(diffs.argmin())
        if diffs[jq] > 1e6 * tol.zero(1.0) or jq in matched:
            raise ClassInconsistency(
                "Harrison duality failed: S-perp restriction is not a quotient character"
            )
        matched.add(jq)
    if len(matched) != quot.rank:
        raise ClassInconsistency("Harrison duality failed: character counts differ")


# ---------------------------------------------------------------- commutator and series

def commutator_indices(data: FusionData, indices, tol: Tolerance = DEFAULT_TOL) -> tuple:
    thr = _support_threshold(data, tol)
    inv = data.involution
    sset = set(indices)
    seeds = [
        x
        for x in range(data.rank)
        if product_support(data, x, inv[x], thr) <= sset
    ]
    return closure(data, seeds, tol)


def commutator_sub(
    data: FusionData, sub: SubHypergroup, tol: Tolerance = DEFAULT_TOL
) -> SubHypergroup:
    """S^co: generated by all x with supp(x x*) inside S; sandwich law asserted."""
    co = commutator_indices(data, sub.indices, tol)
    # (S^co)_ad <= S <= (S_ad)^co
    co_ad = adjoint_indices(data, co, tol)
    s_ad = adjoint_indices(data, sub.indices, tol)
    s_ad_co = commutator_indices(data, s_ad, tol)
    if not (set(co_ad) <= set(sub.indices) <= set(s_ad_co)):
        raise SandwichViolation(
            f"(S^co)_ad = {co_ad}, S = {sub.indices}, (S_ad)^co = {s_ad_co}"
        )
    return SubHypergroup(co, data)


def central_series(data: FusionData, tol: Tolerance = DEFAULT_TOL) -> CentralSeries:
    """Upper series by iterated adjoints, lower by iterated commutators.

    The two characterizations of nilpotency must agree (H^(n) trivial iff
    H_(n) is everything).
    """
    m = data.rank
    upper = [tuple(range(m))]
    while True:
        nxt = adjoint_indices(data, upper[-1], tol)
        if nxt == upper[-1]:
            break
        upper.append(nxt)
        if nxt == (0,):
            break
    lower = [(0,)]
    while True:
        nxt = commutator_indices(data, lower[-1], tol)
        if nxt == lower[-1]:
            break
        lower.append(nxt)
        if len(nxt) == m:
            break
    cls = None
    if upper[-1] == (0,):
        cls = len(upper) - 1
    lower_cls = None
    if len(lower[-1]) == m:
        lower_cls = len(lower) - 1
    if (cls is None) != (lower_cls is None) or (cls is not None and cls != lower_cls):
        raise SeriesDisagreement(
            f"upper series class {cls} vs lower series class {lower_cls}"
        )
    return CentralSeries(
        upper=tuple(SubHypergroup(u, data) for u in upper),
        lower=tuple(SubHypergroup(l, data) for l in lower),
        nilpotency_class=cls,
    )


def is_nilpotent(data: FusionData, tol: Tolerance = DEFAULT_TOL) -> int | None:
    return central_series(data, tol).nilpotency_class


# ---------------------------------------------------------------- misc helpers

def restrict(data: FusionData, indices) -> tuple:
    """Sub-tensor on a closed index set; returns (FusionData, back-map)."""
    idx = sorted(set(indices) | {0})
    pos = {a: t for t, a in enumerate(idx)}
    k = len(idx)
    sub = np.empty((k, k, k), dtype=data.tensor.dtype)
    for a in idx:
        for b in idx:
            for c in idx:
                sub[pos[a], pos[b], pos[c]] = data.tensor[a, b, c]
    inv = [pos[data.involution[a]] for a in idx]
    return FusionData(f"{data.name}|{idx}", inv, sub), idx


def all_sub_hypergroups(data: FusionData, tol: Tolerance = DEFAULT_TOL) -> list:
    """Every sub-hypergroup, as the join-closure of singleton-generated subs."""
    gens = {closure(data, [i], tol) for i in range(data.rank)}
    subs = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for s in frontier:
            for t in gens:
                joined = closure(data, set(s) | set(t), tol)
                if joined not in subs:
                    new.add(joined)
        subs |= new
        frontier = new
    return [SubHypergroup(s, data) for s in sorted(subs, key=lambda s: (len(s), s))]


def multiply_elements(data: FusionData, elems) -> Element:
    """Left-to-right product of a list of elements."""
    from .core import basis_element

    out = basis_element(data, 0)
    for e in elems:
        out = multiply(data, out, e)
    return out
