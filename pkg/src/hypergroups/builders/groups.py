"""Finite groups as Cayley tables, built from permutation generators.

The catalog ships generators only; every group-theoretic fact used in tests
(classes, centers, centralizers, nilpotency) is recomputed from the table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import OrderBoundExceeded

__all__ = [
    "FiniteGroup",
    "group_from_generators",
    "abelian_group",
    "catalog",
    "catalog_names",
    "CATALOG_GENERATORS",
]

ORDER_BOUND = 10**4


@dataclass
class FiniteGroup:
    name: str
    cayley: np.ndarray  # (n, n) int, cayley[i, j] = index of g_i g_j, unit = 0
    element_names: list[str] | None = None
    _inverse: np.ndarray | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return self.cayley.shape[0]

    def inverse(self, i: int) -> int:
        if self._inverse is None:
            n = self.order
            inv = np.full(n, -1, dtype=int)
            for a in range(n):
                for b in range(n):
                    if self.cayley[a, b] == 0:
                        inv[a] = b
                        break
            self._inverse = inv
        return int(self._inverse[i])

    def conj(self, a: int, g: int) -> int:
        """g a g^{-1}"""
        return int(self.cayley[self.cayley[g, a], self.inverse(g)])

    def conjugacy_classes(self) -> list[tuple]:
        """Classes as sorted index tuples; identity class first, then by (size, min)."""
        n = self.order
        seen = [False] * n
        classes = []
        for a in range(n):
            if seen[a]:
                continue
            cls = {a}
            frontier = [a]
            while frontier:
                x = frontier.pop()
                for g in range(n):
                    y = self.conj(x, g)
                    if y not in cls:
                        cls.add(y)
                        frontier.append(y)
            for x in cls:
                seen[x] = True
            classes.append(tuple(sorted(cls)))
        classes.sort(key=lambda c: (0 not in c, len(c), c))
        return classes

    def center(self) -> tuple:
        n = self.order
        return tuple(
            a
            for a in range(n)
            if all(self.cayley[a, b] == self.cayley[b, a] for b in range(n))
        )

    def centralizer_order(self, a: int) -> int:
        n = self.order
        return sum(1 for b in range(n) if self.cayley[a, b] == self.cayley[b, a])

    def commutator(self, a: int, b: int) -> int:
        ab = self.cayley[a, b]
        ba = self.cayley[b, a]
        return int(self.cayley[ab, self.inverse(int(ba))])

    def is_abelian(self) -> bool:
        return bool((self.cayley == self.cayley.T).all())

    def is_nilpotent(self) -> bool:
        """Ascending central series on the table."""
        n = self.order
        Z = {0}
        while True:
            Zn = {
                x
                for x in range(n)
                if all(self.commutator(x, y) in Z for y in range(n))
            }
            if len(Zn) == n:
                return True
            if Zn == Z:
                return False
            Z = Zn


def _compose(p: tuple, q: tuple) -> tuple:
    """(p o q)(x) = p(q(x))"""
    return tuple(p[q[x]] for x in range(len(p)))


def group_from_generators(perms, name: str = "G") -> FiniteGroup:
    """Breadth-first closure of permutations into a Cayley table.

    Permutations are tuples over a common finite set {0..deg-1}; the search is
    bounded at 10^4 elements.
    """
    perms = [tuple(int(x) for x in p) for p in perms]
    if not perms:
        return FiniteGroup(name, np.zeros((1, 1), dtype=int))
    deg = len(perms[0])
    if any(len(p) != deg or sorted(p) != list(range(deg)) for p in perms):
        raise ValueError("generators must be permutations of a common set")
    ident = tuple(range(deg))
    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in perms:
                prod = _compose(e, g)
                if prod not in index:
                    if len(elements) >= ORDER_BOUND:
                        raise OrderBoundExceeded(f"closure exceeds {ORDER_BOUND}")
                    index[prod] = len(elements)
                    elements.append(prod)
                    nxt.append(prod)
        frontier = nxt
    n = len(elements)
    cayley = np.empty((n, n), dtype=int)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            cayley[i, j] = index[_compose(p, q)]
    return FiniteGroup(name, cayley)


def abelian_group(cyclic_orders, name: str | None = None) -> FiniteGroup:
    """Direct product of cyclic groups given by their orders."""
    orders = [int(k) for k in cyclic_orders]
    if any(k < 1 for k in orders):
        raise ValueError("cyclic orders must be positive")
    if not orders:
        return FiniteGroup(name or "C1", np.zeros((1, 1), dtype=int))
    gens = []
    deg = sum(orders)
    offset = 0
    for k in orders:
        cycle = list(range(deg))
        for t in range(k):
            cycle[offset + t] = offset + (t + 1) % k
        gens.append(tuple(cycle))
        offset += k
    label = name or "x".join(f"C{k}" for k in orders)
    return group_from_generators(gens, label)


def _cycles(*cycles) -> tuple:
    deg = max(max(c) for c in cycles) + 1
    perm = list(range(deg))
    for c in cycles:
        for t in range(len(c)):
            perm[c[t]] = c[(t + 1) % len(c)]
    return tuple(perm)


def _pad(perm: tuple, deg: int) -> tuple:
    return tuple(list(perm) + list(range(len(perm), deg)))


def _sl23_generators() -> list[tuple]:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2 (a faithful action)."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(mat):
        out = []
        for (a, b) in vecs:
            v = ((mat[0][0] * a + mat[0][1] * b) % 3, (mat[1][0] * a + mat[1][1] * b) % 3)
            out.append(idx[v])
        return tuple(out)

    return [act([[1, 1], [0, 1]]), act([[0, -1], [1, 0]])]


def _catalog_generators() -> dict:
    gens = {}
    for k in range(2, 9):
        gens[f"C{k}"] = [_cycles(tuple(range(k)))]
    gens["C2xC2"] = [_cycles((0, 1)), _cycles((2, 3))]
    gens["C2xC2xC2"] = [_cycles((0, 1)), _cycles((2, 3)), _cycles((4, 5))]
    gens["S3"] = [_cycles((0, 1, 2)), _cycles((0, 1))]
    gens["D4"] = [_cycles((0, 1, 2, 3)), _cycles((1, 3))]
    gens["D5"] = [_cycles((0, 1, 2, 3, 4)), _cycles((1, 4), (2, 3))]
    gens["Q8"] = [_cycles((0, 2, 1, 3), (4, 6, 5, 7)), _cycles((0, 4, 1, 5), (2, 7, 3, 6))]
    gens["A4"] = [_cycles((0, 1, 2)), _cycles((0, 1), (2, 3))]
    gens["SL(2,3)"] = _sl23_generators()
    gens["S4"] = [_cycles((0, 1, 2, 3)), _cycles((0, 1))]
    gens["A5"] = [_cycles((0, 1, 2, 3, 4)), _cycles((0, 1, 2))]
    # pad generators of each group to a common degree
    for name, gs in gens.items():
        deg = max(len(g) for g in gs)
        gens[name] = [_pad(g, deg) for g in gs]
    return gens


CATALOG_GENERATORS = _catalog_generators()

_EXPECTED_ORDERS = {
    "C2": 2, "C3": 3, "C4": 4, "C5": 5, "C6": 6, "C7": 7, "C8": 8,
    "C2xC2": 4, "C2xC2xC2": 8, "S3": 6, "D4": 8, "D5": 10, "Q8": 8,
    "A4": 12, "SL(2,3)": 24, "S4": 24, "A5": 60,
}

_CACHE: dict = {}


def catalog_names() -> list[str]:
    return list(CATALOG_GENERATORS)


def catalog(name: str) -> FiniteGroup:
    """Expand a catalog entry into a FiniteGroup (cached)."""
    if name not in _CACHE:
        g = group_from_generators(CATALOG_GENERATORS[name], name)
        expected = _EXPECTED_ORDERS[name]
        if g.order != expected:
            raise OrderBoundExceeded(
                f"catalog group {name} expanded to order {g.order}, expected {expected}"
            )
        _CACHE[name] = g
    return _CACHE[name]
