"""Integer structure constants of a Chevalley basis.

For every pair of roots with a + b again a root the table stores the integer
n(a, b) with [E_a, E_b] = n(a, b) E_{a+b}, together with the pairing weights
b(d) = 2/(d, d).  In this basis the Killing pairing of E_d with E_{-d} is
proportional to b(d), and for any zero-sum triple a + b + c = 0 the constants
satisfy the weighted cyclic identity

    n(a, b) b(c) = n(b, c) b(a) = n(c, a) b(b),

which collapses to n(a, b) = n(b, c) = n(c, a) on simply-laced systems.

Signs are fixed by the extraspecial-pair convention: positive roots are
ordered by (height, coordinates); for each non-simple positive root the
special decomposition with the smallest first summand gets n = +(p+1), and
every other constant is propagated from those choices through the Jacobi and
cyclic identities.  The construction is deterministic and reproducible.
"""

from __future__ import annotations

import csv
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .rootsystem import (
    InternalConsistencyError,
    Root,
    RootSystem,
    height,
    radd,
    rneg,
    rsub,
)


@dataclass
class ChevalleyTable:
    """Structure constants n and pairing weights b for one root system."""

    rs: RootSystem
    n: dict[tuple[Root, Root], int]
    b: dict[Root, Fraction]

    def n_of(self, a: Root, b: Root) -> int:
        """n(a, b); zero when a + b is not a root."""
        return self.n.get((a, b), 0)

    def b_of(self, d: Root) -> Fraction:
        return self.b[d]

    def dump_csv(self, path) -> None:
        """Write the constant table (root-index pair, constant) for audit."""
        index = {r: i for i, r in enumerate(self.rs.roots)}
        rows = sorted(
            (index[a], index[b], a, b, v) for (a, b), v in self.n.items()
        )
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["ia", "ib", "root_a", "root_b", "n"])
            for ia, ib, a, b, v in rows:
                writer.writerow([ia, ib, " ".join(map(str, a)), " ".join(map(str, b)), v])


def _string_down(rs: RootSystem, a: Root, base: Root) -> int:
    """p = max k with base - k*a a root (root strings are unbroken)."""
    p = 0
    v = rsub(base, a)
    while v in rs.root_set:
        p += 1
        v = rsub(v, a)
    return p


def build_constants(rs: RootSystem, verify: bool | None = None) -> ChevalleyTable:
    """Build the full constant table for ``rs``.

    ``verify`` controls the exhaustive Jacobi/cyclic audit after construction:
    None runs it for systems with at most 48 roots (rank <= 4), True forces
    it, False skips it.
    """
    pos = rs.positive_roots
    pos_set = rs.positive_set
    order = {r: i for i, r in enumerate(pos)}
    b = {r: Fraction(2) / rs.lengths[r] for r in rs.roots}

    special: dict[tuple[Root, Root], int] = {}

    def n_pos(x: Root, y: Root) -> int:
        return special[(x, y)] if order[x] < order[y] else -special[(y, x)]

    for gamma in pos:
        if height(gamma) < 2:
            continue
        pairs = []
        for a in pos:
            rest = rsub(gamma, a)
            if rest in pos_set and order[a] < order[rest]:
                pairs.append((a, rest))
        if not pairs:
            raise InternalConsistencyError(f"no decomposition for {gamma}")
        pairs.sort(key=lambda pr: order[pr[0]])
        eps, eta = pairs[0]  # the extraspecial pair: minimal first summand
        special[(eps, eta)] = _string_down(rs, eps, eta) + 1
        for al, be in pairs[1:]:
            # Jacobi on (E_{-al}, E_eps, E_eta) with every mixed-sign constant
            # eliminated through the weighted cyclic identity leaves one
            # unknown, n(al, be).
            acc = Fraction(0)
            nu = rsub(al, eps)
            if nu in pos_set:
                acc += n_pos(eps, nu) * n_pos(be, nu) * b[al] * b[eta] / b[nu]
            mu = rsub(eta, al)
            if mu in pos_set:
                acc += n_pos(al, mu) * n_pos(mu, eps) * b[eta] * b[be] / b[mu]
            x = -acc / (special[(eps, eta)] * b[gamma])
            expected = _string_down(rs, al, be) + 1
            if x.denominator != 1 or abs(x) != expected:
                raise InternalConsistencyError(
                    f"constant for ({al}, {be}) came out {x}, |.| != {expected}"
                )
            special[(al, be)] = int(x)

    full: dict[tuple[Root, Root], int] = {}
    mixed: list[tuple[Root, Root, Root]] = []
    for (x, y), s in rs.sum_index.items():
        px, py = rs.is_positive(x), rs.is_positive(y)
        if px and py:
            full[(x, y)] = n_pos(x, y)
        elif not px and not py:
            full[(x, y)] = -n_pos(rneg(x), rneg(y))
        else:
            mixed.append((x, y, s))
    for x, y, s in mixed:
        # close the zero-sum triple (x, y, z) and step to the same-sign pair
        z = rneg(s)
        if rs.is_positive(y) == rs.is_positive(z):
            val = full[(y, z)] * b[x] / b[z]
        else:
            val = full[(z, x)] * b[y] / b[z]
        if val.denominator != 1:
            raise InternalConsistencyError(f"non-integral constant for ({x}, {y})")
        full[(x, y)] = int(val)

    table = ChevalleyTable(rs, full, b)
    if verify is None:
        verify = len(rs.roots) <= 48
    if verify and not sign_convention_check(table, rs):
        raise InternalConsistencyError(f"{rs.name}: constant table fails the audit")
    return table


def _jacobi_defect(table: ChevalleyTable, rs: RootSystem, x: Root, y: Root, z: Root):
    """Coefficients of [[E_x,E_y],E_z] + [[E_y,E_z],E_x] + [[E_z,E_x],E_y].

    Returns (root_part, cartan_part); both must vanish.
    """
    roots: dict[Root, Fraction] = {}
    cart = [Fraction(0)] * rs.rank

    def add_term(a: Root, b: Root, c: Root) -> None:
        if a == rneg(b):
            # [H_{a^v}, E_c] = <c, a^v> E_c
            coef = rs.cartan_int(c, a)
            if coef:
                roots[c] = roots.get(c, Fraction(0)) + coef
            return
        s = rs.sum_root(a, b)
        if s is None:
            return
        m = table.n_of(a, b)
        if s == rneg(c):
            for i, v in enumerate(rs.coroot(s)):
                cart[i] += m * v
            return
        u = rs.sum_root(s, c)
        if u is not None:
            coef = m * table.n_of(s, c)
            if coef:
                roots[u] = roots.get(u, Fraction(0)) + coef

    add_term(x, y, z)
    add_term(y, z, x)
    add_term(z, x, y)
    return {r: c for r, c in roots.items() if c}, cart


def convention_violations(
    table: ChevalleyTable,
    rs: RootSystem | None = None,
    *,
    jacobi_samples: int | None = None,
    seed: int = 0,
    limit: int | None = None,
) -> list[str]:
    """Audit the table; returns human-readable witnesses (empty = clean).

    Checks antisymmetry, the negation rule, |n| = p+1, the weighted cyclic
    identity on every zero-sum triple, and the Jacobi identity (exhaustive
    when ``jacobi_samples`` is None, otherwise that many seeded triples).
    """
    rs = rs or table.rs
    out: list[str] = []

    def report(msg: str) -> bool:
        out.append(msg)
        return limit is not None and len(out) >= limit

    for (x, y), v in table.n.items():
        if v != -table.n_of(y, x):
            if report(f"antisymmetry fails at ({x}, {y})"):
                return out
        if v != -table.n_of(rneg(x), rneg(y)):
            if report(f"negation rule fails at ({x}, {y})"):
                return out
        p = _string_down(rs, x, y)
        if abs(v) != p + 1:
            if report(f"|n| != p+1 at ({x}, {y}): {v} vs {p + 1}"):
                return out
    for (x, y), s in rs.sum_index.items():
        z = rneg(s)
        lhs = table.n_of(x, y) * table.b_of(z)
        if lhs != table.n_of(y, z) * table.b_of(x) or lhs != table.n_of(z, x) * table.b_of(y):
            if report(f"weighted cyclic identity fails on ({x}, {y}, {z})"):
                return out

    if jacobi_samples is None:
        triples = itertools.combinations(rs.roots, 3)
    else:
        rng = random.Random(seed)
        triples = (
            tuple(rng.sample(rs.roots, 3)) for _ in range(jacobi_samples)
        )
    for x, y, z in triples:
        roots, cart = _jacobi_defect(table, rs, x, y, z)
        if roots or any(cart):
            if report(f"Jacobi fails on ({x}, {y}, {z})"):
                return out
    return out


def sign_convention_check(
    table: ChevalleyTable,
    rs: RootSystem | None = None,
    *,
    jacobi_samples: int | None = None,
    seed: int = 0,
) -> bool:
    """True iff the Jacobi and weighted cyclic audits pass."""
    return not convention_violations(
        table, rs, jacobi_samples=jacobi_samples, seed=seed, limit=1
    )
