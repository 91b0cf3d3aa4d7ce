"""Abstract root systems of the simple Lie types, in exact arithmetic.

Roots are integer coordinate tuples over the simple roots a_1..a_n, so every
root, inner product and Cartan integer is an exact integer or rational.  The
bilinear form comes from the symmetrised Cartan matrix, normalised so that
long roots have squared length 2.

Node numbering (chains drawn left to right; the arrow points at the short
root):

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n        node n short
    C_n   1 - 2 - ... - (n-1) <= n        node n long, the others short
    D_n   1 - 2 - ... - (n-2) < (n-1, n)  fork at node n-2
    E_n   1 - 3 - 4 - 5 - 6 (- 7)(- 8), node 2 attached to node 4
    F_4   1 - 2 => 3 - 4                  nodes 1,2 long; 3,4 short
    G_2   1 => 2 (triple edge)            node 1 long, node 2 short

In this numbering the highest root of G_2 is 2a1 + 3a2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Root = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class InternalConsistencyError(RuntimeError):
    """A structural cross-check failed; this signals a bug, not bad input."""


def radd(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def rsub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def rneg(a: Root) -> Root:
    return tuple(-x for x in a)


def height(a: Root) -> int:
    return sum(a)


def root_str(a: Root) -> str:
    """Render a coordinate vector as a combination of simple roots, e.g. 'a1+2a2'."""
    parts: list[str] = []
    for i, c in enumerate(a, 1):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}a{i}")
    return "".join(parts) or "0"


def is_valid_type(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family == "B":
        return rank >= 2
    if family == "C":
        return rank >= 3
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix c[i][j] = 2(a_i, a_j)/(a_j, a_j) in the numbering above."""
    if not is_valid_type(family, rank):
        hint = ""
        if (family, rank) == ("C", 2):
            hint = " (use B2: B2 and C2 are the same type)"
        elif (family, rank) == ("D", 3):
            hint = " (use A3: D3 and A3 are the same type)"
        raise ValueError(f"not a simple type: {family}{rank}{hint}")
    n = rank
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def join(i: int, j: int) -> None:
        c[i][j] = -1
        c[j][i] = -1

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            join(i, i + 1)
        if family == "B":
            c[n - 2][n - 1] = -2
        elif family == "C":
            c[n - 1][n - 2] = -2
    elif family == "D":
        for i in range(n - 3):
            join(i, i + 1)
        join(n - 3, n - 2)
        join(n - 3, n - 1)
    elif family == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            join(i, j)
        join(1, 3)
    elif family == "F":
        join(0, 1)
        join(1, 2)
        join(2, 3)
        c[1][2] = -2
    elif family == "G":
        c[0][1] = -3
        c[1][0] = -1
    return tuple(tuple(row) for row in c)


def _length_halves(cartan: tuple[tuple[int, ...], ...]) -> tuple[Fraction, ...]:
    """Half squared lengths d_i = (a_i,a_i)/2, normalised so long roots get d = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                # symmetry (a_i,a_j) = c_ij d_j = c_ji d_i fixes the ratio
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                queue.append(j)
    assert all(x is not None for x in d)
    top = max(d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[union-attr]


def _generate_positive(cartan: tuple[tuple[int, ...], ...]) -> list[Root]:
    """All positive roots by root-string extension from the simple roots."""
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    pos: set[Root] = set(simple)
    frontier: list[Root] = list(simple)
    while frontier:
        new: list[Root] = []
        for beta in frontier:
            for i, alpha in enumerate(simple):
                if beta == alpha:
                    continue  # 2a is never a root
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                p = 0
                v = rsub(beta, alpha)
                while v in pos:
                    p += 1
                    v = rsub(v, alpha)
                if p - pairing > 0:  # the string extends past beta
                    cand = radd(beta, alpha)
                    if cand not in pos:
                        pos.add(cand)
                        new.append(cand)
        frontier = new
    return sorted(pos, key=lambda r: (height(r), r))


@dataclass(frozen=True)
class Diagram:
    """Dynkin diagram (possibly extended): node 0, when present, is the affine
    node carrying the lowest root -theta.

    Edges are (a, b, multiplicity, short_end) with a < b; short_end names the
    node on the short-root side of a multiple bond ("both" for the degenerate
    affine A1 double bond, None for single bonds).
    """

    nodes: tuple
    edges: tuple

    def degree(self, v) -> int:
        return sum(1 for a, b, _, _ in self.edges if v in (a, b))

    def neighbors(self, v) -> list:
        out = []
        for a, b, _, _ in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out


def diagram_components(d: Diagram) -> list[Diagram]:
    seen: set = set()
    comps: list[Diagram] = []
    for start in d.nodes:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in d.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        nodes = tuple(sorted(comp, key=d.nodes.index))
        edges = tuple(e for e in d.edges if e[0] in comp)
        comps.append(Diagram(nodes, edges))
    return comps


def classify_connected(d: Diagram) -> tuple[str, int]:
    """Canonical (family, rank) of a connected finite Dynkin diagram.

    The label is canonical across the classical coincidences: a rank-2 double
    bond classifies as B2 (= C2) and a 3-node chain as A3 (= D3).
    """
    n = len(d.nodes)
    if n == 1:
        return ("A", 1)
    mults = [e[2] for e in d.edges]
    if any(e[3] == "both" for e in d.edges):
        raise ValueError("not a finite Dynkin diagram (affine A1 bond)")
    if len(d.edges) != n - 1:
        raise ValueError("not a finite Dynkin diagram (not a tree)")
    if max(mults) == 3:
        if n == 2:
            return ("G", 2)
        raise ValueError("triple bond in a diagram of size > 2")
    degrees = {v: d.degree(v) for v in d.nodes}
    if max(mults) == 2:
        doubles = [e for e in d.edges if e[2] == 2]
        if len(doubles) != 1 or max(degrees.values()) > 2:
            raise ValueError("not a finite Dynkin diagram (bad double bond)")
        if n == 2:
            return ("B", 2)
        a, b, _, short = doubles[0]
        ends = [v for v in (a, b) if degrees[v] == 1]
        if not ends:
            if n == 4:
                return ("F", 4)
            raise ValueError("interior double bond only occurs in F4")
        terminal = ends[0]
        if short == terminal:
            return ("B", n)
        other = b if terminal == a else a
        if short == other:
            return ("C", n)
        raise ValueError("double bond without orientation")
    # simply laced
    branch = [v for v in d.nodes if degrees[v] >= 3]
    if not branch:
        if max(degrees.values()) <= 2 and list(degrees.values()).count(1) == 2:
            return ("A", n)
        raise ValueError("not a finite Dynkin diagram (cycle)")
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise ValueError("more than one branch point")
    center = branch[0]
    arms = []
    for w in d.neighbors(center):
        length = 1
        prev, cur = center, w
        while degrees[cur] == 2:
            nxt = [x for x in d.neighbors(cur) if x != prev][0]
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    a1, a2, a3 = arms
    if a1 != 1:
        raise ValueError("branch arms too long for a finite diagram")
    if a2 == 1:
        return ("D", n)
    if a2 == 2 and a3 in (2, 3, 4):
        return ("E", n)
    raise ValueError("not a finite Dynkin diagram (branch shape)")


def diagram_isomorphic(d1: Diagram, d2: Diagram) -> bool:
    """Brute-force isomorphism test for small diagrams (test oracle)."""
    if len(d1.nodes) != len(d2.nodes) or len(d1.edges) != len(d2.edges):
        return False

    def edge_map(d: Diagram) -> dict:
        out = {}
        for a, b, m, short in d.edges:
            if short == "both":
                tag = "both"
            elif short is None:
                tag = None
            else:
                tag = short
            out[frozenset((a, b))] = (m, tag)
        return out

    e1, e2 = edge_map(d1), edge_map(d2)
    for perm in itertools.permutations(d2.nodes):
        phi = dict(zip(d1.nodes, perm))
        ok = True
        for key, (m, tag) in e1.items():
            a, b = tuple(key)
            got = e2.get(frozenset((phi[a], phi[b])))
            want_tag = tag if tag in (None, "both") else phi[tag]
            if got != (m, want_tag):
                ok = False
                break
        if ok:
            return True
    return False


class RootSystem:
    """Immutable root system of one simple type; all queries are exact.

    Construction is single threaded; instances are safe for concurrent reads.
    Use :func:`build_root_system` (cached) rather than the constructor.
    """

    def __init__(self, family: str, rank: int):
        self.cartan = cartan_matrix(family, rank)
        self.family = family
        self.rank = rank
        self._d = _length_halves(self.cartan)
        # (a_i, a_j) = c_ij * d_j
        self._bil = tuple(
            tuple(self.cartan[i][j] * self._d[j] for j in range(rank))
            for i in range(rank)
        )
        pos = _generate_positive(self.cartan)
        self.positive_roots: tuple[Root, ...] = tuple(pos)
        self.positive_set = frozenset(pos)
        self.roots: tuple[Root, ...] = tuple(pos) + tuple(rneg(r) for r in pos)
        self.root_set = frozenset(self.roots)
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)
        )
        self.highest: Root = pos[-1]
        if len(pos) > 1 and height(pos[-2]) == height(self.highest):
            raise InternalConsistencyError("highest root is not unique")
        self.lengths = {r: self.inner_product(r, r) for r in self.roots}
        self.heights = {r: height(r) for r in self.roots}
        self.sum_index: dict[tuple[Root, Root], Root] = {}
        for a in self.roots:
            for b in self.roots:
                s = radd(a, b)
                if s in self.root_set:
                    self.sum_index[(a, b)] = s

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def dimension(self) -> int:
        """dim g = |R| + rank."""
        return len(self.roots) + self.rank

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    def inner_product(self, a, b) -> Fraction:
        """Bilinear form on integer vectors over the simple roots; long roots
        have squared length 2."""
        total = Fraction(0)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    total += x * y * self._bil[i][j]
        return total

    def cartan_int(self, a, b) -> int:
        """Cartan integer 2(a,b)/(b,b)."""
        v = 2 * self.inner_product(a, b) / self.inner_product(b, b)
        if v.denominator != 1:
            raise InternalConsistencyError(f"non-integral Cartan pairing {v}")
        return int(v)

    def contains(self, v) -> bool:
        return tuple(v) in self.root_set

    def is_positive(self, r: Root) -> bool:
        return height(r) > 0

    def sum_root(self, a: Root, b: Root) -> Root | None:
        return self.sum_index.get((a, b))

    def root_string(self, a: Root, b: Root) -> tuple[int, int]:
        """The a-string through b: returns (p, q) with b - p*a .. b + q*a the
        maximal unbroken string of roots.  p - q equals the Cartan integer
        2(b,a)/(a,a)."""
        if a not in self.root_set or b not in self.root_set:
            raise ValueError("root_string arguments must be roots")
        if a == b or a == rneg(b):
            raise ValueError("degenerate root string through +/- itself")
        p = 0
        v = rsub(b, a)
        while v in self.root_set:
            p += 1
            v = rsub(v, a)
        q = 0
        v = radd(b, a)
        while v in self.root_set:
            q += 1
            v = radd(v, a)
        return p, q

    def coroot(self, r: Root) -> tuple[Fraction, ...]:
        """Coordinates of the coroot 2r/(r,r) over the simple coroots."""
        dr = self.lengths[r] / 2
        return tuple(r[i] * self._d[i] / dr for i in range(self.rank))

    def diagram_from_vectors(self, labeled: list[tuple[object, Root]]) -> Diagram:
        """Dynkin diagram of a set of pairwise non-positively paired vectors."""
        edges = []
        for (la, va), (lb, vb) in itertools.combinations(labeled, 2):
            cab = self.cartan_int(va, vb)
            cba = self.cartan_int(vb, va)
            if cab == 0:
                continue
            if cab > 0 or cba > 0:
                raise InternalConsistencyError(
                    f"positive pairing between diagram nodes {la}, {lb}"
                )
            if cab == cba == -2:
                edges.append((la, lb, 2, "both"))
                continue
            mult = cab * cba
            if abs(cab) > abs(cba):
                short = lb
            elif abs(cba) > abs(cab):
                short = la
            else:
                short = None
            edges.append((la, lb, mult, short))
        nodes = tuple(l for l, _ in labeled)
        norm = []
        index = {l: i for i, l in enumerate(nodes)}
        for a, b, m, s in edges:
            if index[a] > index[b]:
                a, b = b, a
            norm.append((a, b, m, s))
        return Diagram(nodes, tuple(sorted(norm, key=lambda e: (index[e[0]], index[e[1]]))))

    def dynkin_diagram(self) -> Diagram:
        return self.diagram_from_vectors(
            [(i + 1, s) for i, s in enumerate(self.simple_roots)]
        )

    def extended_diagram(self) -> Diagram:
        """Extended diagram: node 0 carries the lowest root -theta."""
        labeled = [(0, rneg(self.highest))] + [
            (i + 1, s) for i, s in enumerate(self.simple_roots)
        ]
        return self.diagram_from_vectors(labeled)


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system of a simple type.

    Raises ValueError for (family, rank) pairs that are not a simple type in
    the canonical numbering (C2 and D2/D3 are rejected in favour of their
    B2 / A-type aliases).
    """
    return RootSystem(family, rank)
