"""Backtracking enumeration of fusion rings with a prescribed type.

Variables are the Frobenius-reciprocity orbits of tensor entries; the search
assigns them in row-major order with Frobenius-Perron row-sum pruning and
deduplicates the results by canonical form under dimension-preserving basis
relabelings.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from ..core import FusionData
from ..errors import BudgetExceeded

__all__ = ["enumerate_by_type", "normalize_type", "type_of"]

SIZE_BOUND = 64


def normalize_type(type_vector) -> list[int]:
    """Accept [[d, k], ...] pairs or a flat dimension list; return sorted dims."""
    tv = list(type_vector)
    if tv and isinstance(tv[0], (list, tuple)):
        dims = []
        for d, k in tv:
            dims.extend([int(d)] * int(k))
    else:
        dims = [int(d) for d in tv]
    dims.sort()
    if not dims or dims[0] != 1:
        raise ValueError("type must contain the unit dimension 1")
    if any(d < 1 for d in dims):
        raise ValueError("dimensions must be positive")
    return dims


def type_of(dims) -> list[list[int]]:
    """Multiset [[d, multiplicity], ...] of a dimension vector."""
    out = []
    for d in sorted(set(int(x) for x in dims)):
        out.append([d, sum(1 for x in dims if int(x) == d)])
    return out


def _involutions_of_block(block: list[int]):
    """All involutive permutations of a block, as lists of (a, b) swaps."""
    if not block:
        yield []
        return
    a = block[0]
    rest = block[1:]
    # a is a fixed point
    for tail in _involutions_of_block(rest):
        yield tail
    # a is swapped with some b
    for t, b in enumerate(rest):
        rem = rest[:t] + rest[t + 1:]
        for tail in _involutions_of_block(rem):
            yield [(a, b)] + tail


def _involution_candidates(dims: list[int]):
    m = len(dims)
    blocks = []
    for d in sorted(set(dims)):
        block = [i for i in range(m) if dims[i] == d and i != 0]
        blocks.append(block)

    def rec(idx, acc):
        if idx == len(blocks):
            sigma = list(range(m))
            for (a, b) in acc:
                sigma[a], sigma[b] = b, a
            yield tuple(sigma)
            return
        for swaps in _involutions_of_block(blocks[idx]):
            yield from rec(idx + 1, acc + swaps)

    yield from rec(0, [])


def _orbits(m: int, sigma: tuple):
    """Orbits of entry triples under N_{ij}^k = N_{i*k}^j = N_{kj*}^i."""
    seen = np.full((m, m, m), -1, dtype=int)
    orbits = []
    for i in range(m):
        for j in range(m):
            for k in range(m):
                if seen[i, j, k] >= 0:
                    continue
                orb = []
                stack = [(i, j, k)]
                oid = len(orbits)
                while stack:
                    t = stack.pop()
                    if seen[t] >= 0:
                        continue
                    seen[t] = oid
                    orb.append(t)
                    a, b, c = t
                    stack.append((sigma[a], c, b))
                    stack.append((c, sigma[b], a))
                orbits.append(orb)
    return orbits


def enumerate_by_type(type_vector, budget: int = 2_000_000) -> list[FusionData]:
    """All fusion rings with the given type, up to basis relabeling.

    `budget` caps the number of search nodes across all involution choices;
    exceeding it raises BudgetExceeded, as does a type with sum k d^2 > 64.
    """
    dims = normalize_type(type_vector)
    m = len(dims)
    if sum(d * d for d in dims) > SIZE_BOUND:
        raise BudgetExceeded(f"sum of d^2 exceeds {SIZE_BOUND}")
    d = np.array(dims, dtype=np.int64)
    nodes = {"n": 0}
    found: dict[tuple, FusionData] = {}
    relabelings = _relabelings(dims)

    for sigma in _involution_candidates(dims):
        tensors = _search_involution(m, d, sigma, nodes, budget)
        for tensor in tensors:
            key = _canonical_key(tensor, relabelings)
            if key not in found:
                arr = np.empty((m, m, m), dtype=object)
                canon = np.array(key, dtype=np.int64).reshape(m, m, m)
                inv = _involution_of_tensor(canon)
                for idx in np.ndindex(m, m, m):
                    arr[idx] = int(canon[idx])
                ring = FusionData(
                    f"enum{type_of(dims)}#{len(found)}", inv, arr
                )
                ring.flags  # validates
                found[key] = ring
    return [found[k] for k in sorted(found)]


def _involution_of_tensor(tensor: np.ndarray) -> list[int]:
    m = tensor.shape[0]
    inv = []
    for i in range(m):
        hits = [j for j in range(m) if tensor[i, j, 0] != 0]
        inv.append(hits[0])
    return inv


def _relabelings(dims: list[int]):
    m = len(dims)
    blocks = []
    for dv in sorted(set(dims)):
        block = [i for i in range(m) if dims[i] == dv and i != 0]
        blocks.append(block)
    perms = [list(range(m))]
    for block in blocks:
        new_perms = []
        for tail in permutations(block):
            mapping = dict(zip(block, tail))
            for base in perms:
                p = list(base)
                for a in block:
                    p[a] = mapping[a]
                new_perms.append(p)
        perms = new_perms
    return [tuple(p) for p in perms]


def _canonical_key(tensor: np.ndarray, relabelings) -> tuple:
    m = tensor.shape[0]
    best = None
    for p in relabelings:
        arr = tensor[np.ix_(p, p, p)]
        key = tuple(int(x) for x in arr.ravel())
        if best is None or key < best:
            best = key
    return best


def _search_involution(m, d, sigma, nodes, budget):
    orbits = _orbits(m, sigma)
    # forced entries: unit rows/columns and the N^0 column
    forced_value = {}
    for i in range(m):
        for j in range(m):
            for k in range(m):
                v = None
                if i == 0:
                    v = 1 if j == k else 0
                elif j == 0:
                    v = 1 if i == k else 0
                elif k == 0:
                    v = 1 if j == sigma[i] else 0
                if v is not None:
                    forced_value[(i, j, k)] = v

    orbit_value = [None] * len(orbits)
    variables = []
    for oid, orb in enumerate(orbits):
        vals = {forced_value[t] for t in orb if t in forced_value}
        if len(vals) > 1:
            return []
        if vals:
            orbit_value[oid] = vals.pop()
        else:
            variables.append(oid)
    caps = []
    for orb in orbits:
        caps.append(min(int(d[a] * d[b] // d[c]) for a, b, c in orb))
    for oid, v in enumerate(orbit_value):
        if v is not None and v > caps[oid]:
            return []

    # row bookkeeping: target and potential contributions
    target = {(i, j): int(d[i] * d[j]) for i in range(m) for j in range(m)}
    cur = {}
    rem = {}
    for (i, j) in target:
        cur[(i, j)] = 0
        rem[(i, j)] = 0
    members_by_orbit = []
    for oid, orb in enumerate(orbits):
        members_by_orbit.append([(a, b, c, int(d[c])) for a, b, c in orb])
        if orbit_value[oid] is not None:
            for a, b, c, w in members_by_orbit[oid]:
                cur[(a, b)] += orbit_value[oid] * w
        else:
            for a, b, c, w in members_by_orbit[oid]:
                rem[(a, b)] += caps[oid] * w
    for (i, j) in target:
        if cur[(i, j)] > target[(i, j)] or cur[(i, j)] + rem[(i, j)] < target[(i, j)]:
            return []

    variables.sort(key=lambda oid: min(orbits[oid]))
    results = []

    def leaf_check():
        tensor = np.zeros((m, m, m), dtype=np.int64)
        for oid, orb in enumerate(orbits):
            v = orbit_value[oid]
            for a, b, c in orb:
                tensor[a, b, c] = v
        lhs = np.tensordot(tensor, tensor, axes=(2, 0))
        rhs = np.tensordot(tensor, tensor, axes=(2, 1)).transpose(2, 0, 1, 3)
        if (lhs == rhs).all():
            results.append(tensor)

    def dfs(pos):
        nodes["n"] += 1
        if nodes["n"] > budget:
            raise BudgetExceeded(f"search exceeded {budget} nodes")
        if pos == len(variables):
            leaf_check()
            return
        oid = variables[pos]
        mem = members_by_orbit[oid]
        for v in range(caps[oid] + 1):
            ok = True
            for a, b, c, w in mem:
                cur[(a, b)] += v * w
                rem[(a, b)] -= caps[oid] * w
            for a, b, c, w in mem:
                if cur[(a, b)] > target[(a, b)] or cur[(a, b)] + rem[(a, b)] < target[(a, b)]:
                    ok = False
                    break
            if ok:
                orbit_value[oid] = v
                dfs(pos + 1)
                orbit_value[oid] = None
            for a, b, c, w in mem:
                cur[(a, b)] -= v * w
                rem[(a, b)] += caps[oid] * w
        return

    dfs(0)
    return results
