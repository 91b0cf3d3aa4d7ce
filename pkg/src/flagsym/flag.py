"""Painted Dynkin diagrams and the root data of the flag manifold G/H.

Painting a nonempty node set turns the roots supported on the white nodes
into the isotropy system R_h; the rest is R_m, identified with the tangent
space at the base point.  The canonical invariant ordering R_m+ = R+ n R_m
encodes the invariant complex structure, and a strictly positive rational
coefficient vector on the painted nodes is a Kahler parameter xi with
a(xi) > 0 exactly on R_m+.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .rootsystem import Diagram, Root, RootSystem, build_root_system, height, root_str

_PAINTED_RE = re.compile(r"\s*([A-G])\s*(\d+)\s*:\s*\{([0-9,\s]*)\}\s*\Z")


@dataclass(frozen=True)
class PaintedDiagram:
    rs: RootSystem
    painted: frozenset[int]

    def __post_init__(self):
        if not self.painted:
            raise ValueError("painted set must be nonempty (empty would give H = G)")
        bad = [i for i in self.painted if not 1 <= i <= self.rs.rank]
        if bad:
            raise ValueError(f"painted nodes out of range for {self.rs.name}: {bad}")

    @property
    def spec(self) -> str:
        inner = ",".join(str(i) for i in sorted(self.painted))
        return f"{self.rs.name}:{{{inner}}}"

    def __repr__(self) -> str:
        return f"PaintedDiagram({self.spec})"


def parse_painted(text: str) -> PaintedDiagram:
    """Parse the compact form '<Family><rank>:{i,j,...}', e.g. 'A3:{2,3}'."""
    m = _PAINTED_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse painted diagram {text!r}; expected e.g. 'A3:{{2,3}}'")
    family, rank = m.group(1), int(m.group(2))
    toks = [t.strip() for t in m.group(3).split(",") if t.strip()]
    rs = build_root_system(family, rank)
    return PaintedDiagram(rs, frozenset(int(t) for t in toks))


class KahlerParam:
    """Strictly positive rational coefficients of xi on the painted nodes."""

    def __init__(self, coeffs: dict[int, Fraction]):
        coeffs = {i: Fraction(v) for i, v in coeffs.items()}
        if not coeffs or any(v <= 0 for v in coeffs.values()):
            raise ValueError("Kahler parameter needs strictly positive coefficients")
        self.coeffs = dict(sorted(coeffs.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{i}: {v}" for i, v in self.coeffs.items())
        return f"KahlerParam({{{inner}}})"

    def __eq__(self, other) -> bool:
        return isinstance(other, KahlerParam) and self.coeffs == other.coeffs


class FlagData:
    """Root-level description of G/H for one painted diagram.

    Immutable after construction; safe for concurrent reads.
    """

    def __init__(self, pd: PaintedDiagram):
        self.pd = pd
        rs = pd.rs
        painted = sorted(pd.painted)
        self._painted = painted
        self.r_h = frozenset(
            r for r in rs.roots if all(r[i - 1] == 0 for i in painted)
        )
        self.r_m = frozenset(rs.roots) - self.r_h
        plus = sorted(
            (r for r in self.r_m if rs.is_positive(r)),
            key=lambda r: (height(r), r),
        )
        self.r_m_plus: tuple[Root, ...] = tuple(plus)
        self.r_m_plus_set = frozenset(plus)
        # T-root decomposition: fingerprint = restriction to the painted nodes
        cells: dict[tuple[int, ...], list[Root]] = {}
        for r in plus:
            cells.setdefault(tuple(r[i - 1] for i in painted), []).append(r)
        self.t_modules = {fp: tuple(rs_) for fp, rs_ in cells.items()}
        self._symmetric: bool | None = None

    @property
    def rs(self) -> RootSystem:
        return self.pd.rs

    @property
    def center_dim(self) -> int:
        return len(self._painted)

    @property
    def dim_m(self) -> int:
        return len(self.r_m)

    def eval_root(self, xi: KahlerParam, a: Root) -> Fraction:
        """a(xi): the pairing of a root with the Kahler parameter."""
        return sum(
            (a[i - 1] * xi.coeffs[i] for i in self._painted), Fraction(0)
        )

    def epsilon(self, a: Root) -> int:
        """+1 on R_m+, -1 on R_m-; undefined on isotropy roots."""
        if a in self.r_m_plus_set:
            return 1
        if a in self.r_m:
            return -1
        raise ValueError(f"epsilon undefined on isotropy root {root_str(a)}")

    def is_symmetric_coset(self) -> bool:
        """True iff no two roots of R_m+ sum to a root ([m, m] inside h)."""
        if self._symmetric is None:
            rset = self.rs.root_set
            self._symmetric = not any(
                tuple(x + y for x, y in zip(a, b)) in rset
                for a in self.r_m_plus
                for b in self.r_m_plus
            )
        return self._symmetric

    def __repr__(self) -> str:
        return f"FlagData({self.pd.spec})"


def make_flag(pd: PaintedDiagram) -> FlagData:
    return FlagData(pd)


def kahler_param(flag: FlagData, values) -> KahlerParam:
    """Kahler parameter from coefficients listed in increasing painted-node order."""
    painted = sorted(flag.pd.painted)
    vals = [Fraction(v) for v in values]
    if len(vals) != len(painted):
        raise ValueError(
            f"expected {len(painted)} coefficients for painted nodes {painted}, got {len(vals)}"
        )
    return KahlerParam(dict(zip(painted, vals)))


def random_kahler_param(flag: FlagData, seed) -> KahlerParam:
    """Deterministic pseudo-random parameter with coefficients in (0, 10]."""
    rng = random.Random(str(seed))
    coeffs = {}
    for i in sorted(flag.pd.painted):
        den = rng.randint(1, 12)
        coeffs[i] = Fraction(rng.randint(1, 10 * den), den)
    return KahlerParam(coeffs)


def to_dot(diagram: Diagram, painted=frozenset(), name: str = "dynkin") -> str:
    """DOT rendering of a (possibly extended) diagram with painted nodes filled."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in diagram.nodes:
        attrs = []
        if v == 0:
            attrs.append('label="0 (affine)"')
        if v in painted:
            attrs.append("style=filled fillcolor=black fontcolor=white")
        lines.append(f"  n{v}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    for a, b, mult, short in diagram.edges:
        attrs = []
        if mult > 1:
            attrs.append(f'label="{mult}"')
        if short == a:
            attrs.append("dir=back")
        elif short == b:
            attrs.append("dir=forward")
        elif short == "both":
            attrs.append("dir=both")
        lines.append(f"  n{a} -- n{b}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"
