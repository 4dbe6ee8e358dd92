"""Dynkin types, Cartan matrices and root systems in simple-root coordinates.

Node numbering is Bourbaki's.  The Cartan matrix is stored with
``cartan[i][j] = <alpha_i, alpha_j^vee>``, so the pairing of a root ``beta``
against the simple coroot ``alpha_i^vee`` is ``sum_j beta[j] * cartan[j][i]``.
With this convention G2 is ``[[2, -1], [-3, 2]]`` with ``alpha_1`` short.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

Root = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]

FAMILIES = "ABCDEFG"


class DynkinTypeError(ValueError):
    """Base class for rejected type labels."""


class TypeSyntaxError(DynkinTypeError):
    pass


class RankError(DynkinTypeError):
    pass


class TwistError(DynkinTypeError):
    pass


class CartanMatrixError(ValueError):
    pass


_RANK_RULES = {
    "A": (lambda n: n >= 1, "A needs rank >= 1"),
    "B": (lambda n: n >= 2, "B needs rank >= 2"),
    "C": (lambda n: n >= 3, "C needs rank >= 3 (C2 is written B2)"),
    "D": (lambda n: n >= 3, "D needs rank >= 3 (D2 = A1xA1 is not simple)"),
    "E": (lambda n: n in (6, 7, 8), "E needs rank 6, 7 or 8"),
    "F": (lambda n: n == 4, "F needs rank 4"),
    "G": (lambda n: n == 2, "G needs rank 2"),
}


def available_twists(family: str, rank: int) -> Tuple[int, ...]:
    """Orders of the diagram twists this artifact accepts for the type."""
    twists = [1]
    if (family == "A" and rank >= 2) or family == "D" or (family == "E" and rank == 6):
        twists.append(2)
    if family == "D" and rank == 4:
        twists.append(3)
    return tuple(twists)


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int
    twist: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise TypeSyntaxError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        ok, message = _RANK_RULES[self.family]
        if not ok(self.rank):
            raise RankError(f"rank {self.rank} out of range: {message}")
        if self.twist not in available_twists(self.family, self.rank):
            raise TwistError(
                f"twist {self.twist} unavailable for {self.family}{self.rank}; "
                f"allowed: {', '.join(map(str, available_twists(self.family, self.rank)))}"
            )

    @property
    def untwisted(self) -> "DynkinType":
        return DynkinType(self.family, self.rank)

    @property
    def label(self) -> str:
        """Type label without the twist, e.g. ``D4``."""
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.label if self.twist == 1 else f"{self.label}^{self.twist}"


_TYPE_RE = re.compile(r"^([A-Za-z])(\d+)(?:\^(\d+))?$")


def parse_type(text: str) -> DynkinType:
    """Parse ``FAMILY RANK [^TWIST]``, e.g. ``A2``, ``D4^3``, ``E6^2``."""
    match = _TYPE_RE.match(text.strip())
    if not match:
        raise TypeSyntaxError(f"cannot parse type {text!r}; expected e.g. A2, D4^3, E6^2")
    family, rank, twist = match.groups()
    if family not in FAMILIES:
        raise TypeSyntaxError(f"unknown family {family!r} in {text!r}; expected one of {FAMILIES}")
    return DynkinType(family, int(rank), int(twist) if twist else 1)


def all_types(max_rank: int, twists: bool = True) -> List[DynkinType]:
    """Every valid type with rank <= max_rank, ordered by (family, rank, twist)."""
    out = []
    for family in FAMILIES:
        for rank in range(1, max_rank + 1):
            if not _RANK_RULES[family][0](rank):
                continue
            for twist in available_twists(family, rank) if twists else (1,):
                out.append(DynkinType(family, rank, twist))
    return out


def _edges(family: str, n: int) -> List[Tuple[int, int]]:
    # 0-based Bourbaki edges
    if family in "ABC":
        return [(i, i + 1) for i in range(n - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if family == "E":
        return [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    if family == "F":
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]


def cartan_matrix(t: DynkinType) -> Matrix:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(t.family, n):
        a[i][j] = a[j][i] = -1
    # a[i][j] = 2(a_i, a_j)/(a_j, a_j); the long end of a multiple bond gets the big entry
    if t.family == "B":
        a[n - 2][n - 1] = -2
    elif t.family == "C":
        a[n - 1][n - 2] = -2
    elif t.family == "F":
        a[1][2] = -2
    elif t.family == "G":
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan: Matrix) -> Tuple[int, ...]:
    """Minimal positive integers ``d`` with ``cartan[i][j]*d[j]`` symmetric.

    ``(alpha_i, alpha_j) = cartan[i][j] * d[j]``, so ``d[i]`` is half the
    squared length of ``alpha_i`` and short roots have ``d = 1``.
    """
    n = len(cartan)
    d: List[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or cartan[i][j] == 0:
                    continue
                if cartan[j][i] == 0:
                    raise CartanMatrixError(f"zero pattern not symmetric at ({i}, {j})")
                want = d[i] * cartan[j][i] / cartan[i][j]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise CartanMatrixError("Cartan matrix is not symmetrizable")
    lcm_den = 1
    for v in d:
        lcm_den = lcm_den * v.denominator // gcd(lcm_den, v.denominator)
    ints = [int(v * lcm_den) for v in d]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def height(root: Root) -> int:
    return sum(root)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """All roots of a simple type, positives first.

    ``roots[k + n_pos] == -roots[k]`` for every positive index ``k``, and
    ``roots[i] == alpha_{i+1}`` for ``i < rank``.
    """

    dynkin: DynkinType
    cartan: Matrix
    roots: Tuple[Root, ...]
    sym: Tuple[int, ...]
    index: Dict[Root, int] = field(repr=False)
    parents: Dict[int, Tuple[int, int]] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def n_pos(self) -> int:
        return len(self.roots) // 2

    @property
    def positive_roots(self) -> Tuple[Root, ...]:
        return self.roots[: self.n_pos]

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return self.roots[: self.rank]

    def __len__(self):
        return len(self.roots)

    def __contains__(self, root) -> bool:
        return tuple(root) in self.index

    def is_positive(self, k: int) -> bool:
        return k < self.n_pos

    def negative_index(self, k: int) -> int:
        """Index of ``-roots[k]``."""
        p = self.n_pos
        return k + p if k < p else k - p

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Symmetric form with ``(alpha_i, alpha_i) = 2 * sym[i]``."""
        c, d = self.cartan, self.sym
        total = 0
        for i, ai in enumerate(a):
            if ai:
                row = c[i]
                for j, bj in enumerate(b):
                    if bj:
                        total += ai * bj * row[j] * d[j]
        return total

    def pairing(self, beta: Sequence[int], alpha: Sequence[int]) -> int:
        """``<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)``."""
        num = 2 * self.inner(beta, alpha)
        den = self.inner(alpha, alpha)
        if num % den:
            raise ArithmeticError(f"non-integral pairing <{beta}, {alpha}^vee>")
        return num // den

    def simple_pairing(self, beta: Sequence[int], i: int) -> int:
        """``<beta, alpha_i^vee>`` straight from the Cartan matrix."""
        return sum(b * self.cartan[j][i] for j, b in enumerate(beta) if b)

    def coroot(self, alpha: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of ``alpha^vee`` over the simple coroots."""
        la = self.inner(alpha, alpha)
        out = []
        for i, a in enumerate(alpha):
            num = a * 2 * self.sym[i]
            if num % la:
                raise ArithmeticError(f"non-integral coroot for {alpha}")
            out.append(num // la)
        return tuple(out)

    def highest_root(self) -> Root:
        return self.roots[self.n_pos - 1]

    def to_json(self) -> dict:
        return {
            "type": self.dynkin.label,
            "cartan": [list(row) for row in self.cartan],
            "positive_roots": [list(r) for r in self.positive_roots],
        }


def _sort_key(root: Root):
    # alpha_1 precedes alpha_2 within a height level
    return (height(root), tuple(-c for c in root))


def generate_roots(cartan: Sequence[Sequence[int]], dynkin: DynkinType | None = None) -> RootSystem:
    """Close the simple roots under simple reflections.

    Positives are ordered by (height, then lexicographically with larger
    leading coefficients first), so the simple roots come out in node order.
    """
    cartan = tuple(tuple(int(v) for v in row) for row in cartan)
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise CartanMatrixError("Cartan matrix must be square and non-empty")
    if any(cartan[i][i] != 2 for i in range(n)):
        raise CartanMatrixError("Cartan matrix diagonal must be 2")
    sym = symmetrizer(cartan)

    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    guard = 16 * n * n
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                c = sum(b * cartan[j][i] for j, b in enumerate(beta) if b)
                if c == 0:
                    continue
                image = list(beta)
                image[i] -= c
                image = tuple(image)
                if image not in found:
                    if any(v > 0 for v in image) and any(v < 0 for v in image):
                        raise CartanMatrixError(f"generated mixed-sign vector {image}; not a Cartan matrix")
                    found.add(image)
                    nxt.append(image)
                    if len(found) > guard:
                        raise CartanMatrixError(
                            f"root generation exceeded {guard} candidates without closure"
                        )
        frontier = nxt

    positives = sorted((r for r in found if sum(r) > 0), key=_sort_key)
    roots = tuple(positives) + tuple(tuple(-c for c in r) for r in positives)
    if len(roots) != len(found):
        raise CartanMatrixError("generated set is not closed under negation")
    index = {r: k for k, r in enumerate(roots)}

    parents: Dict[int, Tuple[int, int]] = {}
    for k, root in enumerate(positives):
        if height(root) == 1:
            continue
        for i in range(n):
            rest = list(root)
            rest[i] -= 1
            rest = tuple(rest)
            if rest in index and index[rest] < len(positives):
                parents[k] = (i, index[rest])
                break

    if dynkin is None:
        dynkin = _identify(cartan)
    return RootSystem(dynkin, cartan, roots, sym, index, parents)


def _identify(cartan: Matrix) -> DynkinType:
    n = len(cartan)
    for family in FAMILIES:
        if not _RANK_RULES[family][0](n):
            continue
        t = DynkinType(family, n)
        if cartan_matrix(t) == cartan:
            return t
    raise CartanMatrixError("Cartan matrix is not a standard Bourbaki-numbered simple type")


_CACHE: Dict[DynkinType, RootSystem] = {}


def root_system(t: DynkinType | str) -> RootSystem:
    """Cached root system for a type label (twist ignored)."""
    if isinstance(t, str):
        t = parse_type(t)
    t = t.untwisted
    rs = _CACHE.get(t)
    if rs is None:
        rs = _CACHE[t] = generate_roots(cartan_matrix(t), t)
    return rs


def root_string(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> Tuple[int, int]:
    """``(p, q)`` for the alpha-string ``beta - p alpha, ..., beta + q alpha``."""
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha not in rs or beta not in rs:
        raise ValueError("alpha and beta must be roots")
    if beta == alpha or beta == tuple(-a for a in alpha):
        raise ValueError("root string undefined for beta = +-alpha")

    def walk(sign):
        k = 0
        while tuple(b + sign * (k + 1) * a for a, b in zip(alpha, beta)) in rs.index:
            k += 1
        return k

    return walk(-1), walk(1)
