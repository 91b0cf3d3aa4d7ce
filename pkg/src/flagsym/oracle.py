"""Brute-force transvection oracle via the Levi-Civita equations.

A root vector E_a (a in R_m+) generates a transvection exactly when, for
every decomposition -a = beta + gamma with beta, gamma in R_m, the cyclic sum

    n(beta, gamma) r(a) + n(a, gamma) r(beta) + n(beta, a) r(gamma)

vanishes, where r(d) = epsilon_d * d(xi) * b(d) is the pairing of E_d with
E_{-d} (a common factor -i is dropped; every significant term carries one).
Everything is exact rational arithmetic: a sum is zero or it is not.

The shortcut variant evaluates the equivalent scalar condition

    ((1 + epsilon_gamma) gamma + (1 + epsilon_beta) beta)(xi) = 0

without structure constants; the two must agree on every input.  Neither
reuses the combinatorial criterion (a + R_m+) n R = empty from the symmetry
module, so agreement with it is a genuine cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from .chevalley import ChevalleyTable
from .flag import FlagData, KahlerParam
from .rootsystem import Root, rneg, rsub


def pairing(flag: FlagData, xi: KahlerParam, table: ChevalleyTable, d: Root) -> Fraction:
    """r(d) = epsilon_d * d(xi) * b(d); strictly positive on all of R_m."""
    if d not in flag.r_m:
        raise ValueError("pairing is defined on tangent roots only")
    return flag.epsilon(d) * flag.eval_root(xi, d) * table.b_of(d)


def _r_values(flag: FlagData, xi: KahlerParam, table: ChevalleyTable) -> dict:
    return {d: pairing(flag, xi, table, d) for d in flag.r_m}


def _decompositions(flag: FlagData, a: Root):
    """Unordered pairs (beta, gamma) in R_m x R_m with beta + gamma = -a."""
    na = rneg(a)
    for beta in flag.r_m:
        gamma = rsub(na, beta)
        if gamma in flag.r_m and beta <= gamma:
            yield beta, gamma


def transvection_violations(
    flag: FlagData, xi: KahlerParam, table: ChevalleyTable, a: Root
) -> list[tuple[Root, Root, Fraction]]:
    """Witnessing (beta, gamma, sum) tuples where the cyclic sum is nonzero."""
    if a not in flag.r_m_plus_set:
        raise ValueError("transvection candidates live in R_m+")
    rs = flag.rs
    r = _r_values(flag, xi, table)

    def n_m(x: Root, y: Root) -> int:
        # m-projection: brackets landing in the isotropy algebra drop out
        s = rs.sum_root(x, y)
        if s is None or s in flag.r_h:
            return 0
        return table.n_of(x, y)

    out = []
    for beta, gamma in _decompositions(flag, a):
        total = (
            n_m(beta, gamma) * r[a]
            + n_m(a, gamma) * r[beta]
            + n_m(beta, a) * r[gamma]
        )
        if total != 0:
            out.append((beta, gamma, total))
    return out


def transvection_check(
    flag: FlagData, xi: KahlerParam, table: ChevalleyTable, a: Root
) -> bool:
    return not transvection_violations(flag, xi, table, a)


def shortcut_violations(
    flag: FlagData, xi: KahlerParam, a: Root
) -> list[tuple[Root, Root, Fraction]]:
    """Nonzero evaluations of ((1+eps_g) g + (1+eps_b) b)(xi) over decompositions."""
    if a not in flag.r_m_plus_set:
        raise ValueError("transvection candidates live in R_m+")
    out = []
    for beta, gamma in _decompositions(flag, a):
        val = (1 + flag.epsilon(gamma)) * flag.eval_root(xi, gamma) + (
            1 + flag.epsilon(beta)
        ) * flag.eval_root(xi, beta)
        if val != 0:
            out.append((beta, gamma, val))
    return out


def transvection_check_shortcut(flag: FlagData, xi: KahlerParam, a: Root) -> bool:
    return not shortcut_violations(flag, xi, a)


def transvection_set(
    flag: FlagData, xi: KahlerParam, table: ChevalleyTable
) -> frozenset:
    """All transvection roots for one Kahler parameter (structure constants)."""
    rs = flag.rs
    r = _r_values(flag, xi, table)
    rm = flag.r_m
    out = []
    for a in flag.r_m_plus:
        na = rneg(a)
        good = True
        for beta in rm:
            gamma = rsub(na, beta)
            if gamma not in rm or beta > gamma:
                continue
            sbg = rs.sum_root(beta, gamma)
            sag = rs.sum_root(a, gamma)
            sba = rs.sum_root(beta, a)
            total = Fraction(0)
            if sbg is not None and sbg not in flag.r_h:
                total += table.n_of(beta, gamma) * r[a]
            if sag is not None and sag not in flag.r_h:
                total += table.n_of(a, gamma) * r[beta]
            if sba is not None and sba not in flag.r_h:
                total += table.n_of(beta, a) * r[gamma]
            if total != 0:
                good = False
                break
        if good:
            out.append(a)
    return frozenset(out)


def shortcut_set(flag: FlagData, xi: KahlerParam) -> frozenset:
    """All transvection roots by the scalar condition (no structure constants)."""
    return frozenset(
        a for a in flag.r_m_plus if transvection_check_shortcut(flag, xi, a)
    )
