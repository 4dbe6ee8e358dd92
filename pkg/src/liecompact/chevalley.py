"""Chevalley basis: structure constants, the bracket, and the two involutions.

Basis vectors are indexed ``0 .. rank-1`` for ``H_i`` and ``rank + k`` for
``X_{roots[k]}``.  Signs follow the extraspecial-pair convention: the
extraspecial pair of every positive non-simple root gets ``N = +(p + 1)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .arith import GaussianRational
from .root_system import DynkinType, Root, RootSystem, root_string, root_system
from .weyl import DiagramAutomorphism, InvariantViolation, longest_element

Terms = Dict[int, object]


class ConditionVError(ValueError):
    """Raised when ``w0 o psi`` is not ``-1`` on the roots."""


@dataclass(frozen=True, eq=False)
class StructureConstants:
    rs: RootSystem
    N: Mapping[Tuple[int, int], int] = field(repr=False)
    _table: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]] = field(
        default_factory=dict, repr=False
    )

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def dim(self) -> int:
        return self.rs.rank + len(self.rs.roots)

    def x_index(self, root: Sequence[int]) -> int:
        """Basis index of ``X_root``."""
        return self.rs.rank + self.rs.index[tuple(root)]

    def root_of(self, b: int) -> Root | None:
        return None if b < self.rs.rank else self.rs.roots[b - self.rs.rank]

    def weight(self, b: int) -> Root:
        """Root-lattice weight of a basis vector (zero for ``H_i``)."""
        r = self.root_of(b)
        return r if r is not None else (0,) * self.rs.rank

    def n(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        """``N_{alpha,beta}``; zero when ``alpha + beta`` is not a root."""
        idx = self.rs.index
        return self.N.get((idx[tuple(alpha)], idx[tuple(beta)]), 0)

    def basis_bracket(self, a: int, b: int) -> Tuple[Tuple[int, int], ...]:
        """``[e_a, e_b]`` as integer ``(index, coefficient)`` pairs."""
        key = (a, b)
        hit = self._table.get(key)
        if hit is None:
            hit = self._table[key] = self._compute_basis_bracket(a, b)
        return hit

    def _compute_basis_bracket(self, a: int, b: int):
        rs, r = self.rs, self.rs.rank
        if a < r and b < r:
            return ()
        if a < r:
            c = rs.simple_pairing(rs.roots[b - r], a)
            return ((b, c),) if c else ()
        if b < r:
            c = rs.simple_pairing(rs.roots[a - r], b)
            return ((a, -c),) if c else ()
        ka, kb = a - r, b - r
        if kb == rs.negative_index(ka):
            return tuple((i, c) for i, c in enumerate(rs.coroot(rs.roots[ka])) if c)
        nab = self.N.get((ka, kb))
        if nab is None:
            return ()
        s = tuple(x + y for x, y in zip(rs.roots[ka], rs.roots[kb]))
        return ((r + rs.index[s], nab),)

    def rows(self) -> List[Tuple[Root, Root, int]]:
        """Summable pairs ``(alpha, beta)`` with alpha listed before beta."""
        roots = self.rs.roots
        return [(roots[i], roots[j], v) for (i, j), v in sorted(self.N.items()) if i < j]


def _mixed(pos: Dict[Tuple[int, int], int], rs: RootSystem, a: int, b: int) -> int:
    """``N_{a,b}`` for any summable pair, from constants on positive pairs.

    Uses ``N_{-a,-b} = -N_{a,b}`` and, for ``a + b + c = 0``,
    ``N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)``.
    """
    roots, idx, P = rs.roots, rs.index, rs.n_pos
    ra, rb = roots[a], roots[b]
    pa, pb = a < P, b < P
    if pa and pb:
        return pos[(a, b)]
    if not pa and not pb:
        return -pos[(a - P, b - P)]
    if not pa:
        return -_mixed(pos, rs, b, a)
    c = idx[tuple(-(x + y) for x, y in zip(ra, rb))]
    rc = roots[c]
    if c >= P:
        # c negative: (b, c) both negative
        val = Fraction(rs.inner(rc, rc), rs.inner(ra, ra)) * -pos[(b - P, c - P)]
    else:
        val = Fraction(rs.inner(rc, rc), rs.inner(rb, rb)) * pos[(c, a)]
    if val.denominator != 1:
        raise InvariantViolation(f"non-integral structure constant for {ra}, {rb}")
    return int(val)


def build_constants(rs: RootSystem) -> StructureConstants:
    """Structure constants by the extraspecial-pair method."""
    roots, idx, P = rs.roots, rs.index, rs.n_pos
    pos: Dict[Tuple[int, int], int] = {}

    for k in range(P):
        xi = roots[k]
        special = []
        for a in range(k):
            rest = tuple(x - y for x, y in zip(xi, roots[a]))
            b = idx.get(rest)
            if b is not None and b < P and a < b:
                special.append((a, b))
        if not special:
            continue
        g, d = special[0]
        if rs.parents.get(k) != (g, d):
            raise InvariantViolation(f"extraspecial pair of {xi} differs from its generation parent")
        p, _ = root_string(rs, roots[g], roots[d])
        pos[(g, d)] = p + 1
        pos[(d, g)] = -(p + 1)
        lxi = rs.inner(xi, xi)
        for a, b in special[1:]:
            ra, rb, rg = roots[a], roots[b], roots[g]
            total = Fraction(0)
            bg = tuple(x - y for x, y in zip(rb, rg))
            if bg in idx:
                total += Fraction(
                    _mixed(pos, rs, b, rs.negative_index(g)) * _mixed(pos, rs, a, rs.negative_index(d)),
                    rs.inner(bg, bg),
                )
            ag = tuple(x - y for x, y in zip(ra, rg))
            if ag in idx:
                total += Fraction(
                    _mixed(pos, rs, rs.negative_index(g), a) * _mixed(pos, rs, b, rs.negative_index(d)),
                    rs.inner(ag, ag),
                )
            val = total * lxi / pos[(g, d)]
            if val.denominator != 1 or val == 0:
                raise InvariantViolation(f"bad structure constant {val} for {ra}, {rb}")
            pos[(a, b)] = int(val)
            pos[(b, a)] = -int(val)

    table: Dict[Tuple[int, int], int] = {}
    n = len(roots)
    for a in range(n):
        for b in range(n):
            s = tuple(x + y for x, y in zip(roots[a], roots[b]))
            if s in idx:
                table[(a, b)] = _mixed(pos, rs, a, b)

    sc = StructureConstants(rs, table)
    _check_constants(sc)
    return sc


def _check_constants(sc: StructureConstants) -> None:
    rs = sc.rs
    for (a, b), v in sc.N.items():
        p, _ = root_string(rs, rs.roots[a], rs.roots[b])
        if abs(v) != p + 1:
            raise InvariantViolation(f"|N| = {abs(v)} != p + 1 = {p + 1} for {rs.roots[a]}, {rs.roots[b]}")
        if sc.N[(b, a)] != -v:
            raise InvariantViolation("N is not antisymmetric")
        if sc.N[(rs.negative_index(a), rs.negative_index(b))] != -v:
            raise InvariantViolation("N(-a,-b) != -N(a,b)")


@lru_cache(maxsize=None)
def _constants_for(t: DynkinType) -> StructureConstants:
    return build_constants(root_system(t))


def constants(t: DynkinType | str) -> StructureConstants:
    """Cached structure constants for a type label (twist ignored)."""
    rs = root_system(t)
    return _constants_for(rs.dynkin)


# ---------------------------------------------------------------------------
# sparse brackets


def bracket_terms(sc: StructureConstants, a: Mapping[int, object], b: Mapping[int, object]) -> Terms:
    """Bracket of two sparse coefficient maps; coefficients may be any ring scalars."""
    out: Terms = {}
    for p, cp in a.items():
        for q, cq in b.items():
            for k, c in sc.basis_bracket(p, q):
                v = cp * cq * c
                if k in out:
                    out[k] = out[k] + v
                else:
                    out[k] = v
    return {k: v for k, v in out.items() if v != 0}


def jacobiator(sc: StructureConstants, a: int, b: int, c: int) -> Terms:
    """``[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`` on basis vectors (integer)."""
    out: Terms = {}
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        inner = dict(sc.basis_bracket(y, z))
        if not inner:
            continue
        for k, v in bracket_terms(sc, {x: 1}, inner).items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def jacobi_failures(sc: StructureConstants, triples: Iterable[Tuple[int, int, int]]) -> List[Tuple[int, int, int]]:
    return [t for t in triples if jacobiator(sc, *t)]


def jacobi_sweep(label: str, samples: int | None = None, seed: int = 0) -> Tuple[str, int, int]:
    """Check the Jacobi identity for one type; returns (label, checked, failures).

    With ``samples=None`` every triple ``a < b < c`` of basis vectors is
    checked (enough, since the jacobiator is alternating); otherwise that
    many uniformly random ordered triples.  Top-level so process pools can
    pickle it.
    """
    sc = constants(label)
    if samples is None:
        triples = list(itertools.combinations(range(sc.dim), 3))
    else:
        rng = random.Random(seed)
        d = sc.dim
        triples = [(rng.randrange(d), rng.randrange(d), rng.randrange(d)) for _ in range(samples)]
    return label, len(triples), len(jacobi_failures(sc, triples))


# ---------------------------------------------------------------------------
# algebra elements


class AlgebraElement:
    """An element of the complex Lie algebra over the Chevalley basis.

    Coefficients are Gaussian rationals; only nonzero ones are stored.
    """

    __slots__ = ("sc", "terms")

    def __init__(self, sc: StructureConstants, terms: Mapping[int, object] = ()):
        clean = {}
        for k, v in dict(terms).items():
            if not 0 <= k < sc.dim:
                raise IndexError(f"basis index {k} out of range")
            g = GaussianRational.coerce(v)
            if g:
                clean[k] = g
        self.sc = sc
        self.terms = clean

    @classmethod
    def H(cls, sc: StructureConstants, i: int) -> "AlgebraElement":
        return cls(sc, {i: 1})

    @classmethod
    def X(cls, sc: StructureConstants, root: Sequence[int]) -> "AlgebraElement":
        return cls(sc, {sc.x_index(root): 1})

    @classmethod
    def basis(cls, sc: StructureConstants, k: int) -> "AlgebraElement":
        return cls(sc, {k: 1})

    @property
    def h(self) -> List[GaussianRational]:
        return [self.terms.get(i, GaussianRational()) for i in range(self.sc.rank)]

    @property
    def x(self) -> List[GaussianRational]:
        r = self.sc.rank
        return [self.terms.get(r + k, GaussianRational()) for k in range(len(self.sc.rs.roots))]

    def coefficient(self, k: int) -> GaussianRational:
        return self.terms.get(k, GaussianRational())

    def _check(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement):
            raise TypeError("expected an AlgebraElement")
        if other.sc.rs is not self.sc.rs and other.sc.rs.cartan != self.sc.rs.cartan:
            raise ValueError("elements belong to different root systems")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return AlgebraElement(self.sc, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.sc, {k: -v for k, v in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, AlgebraElement):
            return NotImplemented
        return AlgebraElement(self.sc, {k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__

    def conj(self) -> "AlgebraElement":
        """Conjugate every coefficient (the real structure of the split form)."""
        return AlgebraElement(self.sc, {k: v.conj() for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.sc.rs.cartan == other.sc.rs.cartan and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            name = f"H{k + 1}" if k < self.sc.rank else f"X{list(self.sc.root_of(k))}"
            parts.append(f"({self.terms[k]})*{name}")
        return " + ".join(parts)


def bracket(sc: StructureConstants, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    if a.sc.rs.cartan != sc.rs.cartan:
        raise ValueError("element does not belong to these structure constants")
    return AlgebraElement(sc, bracket_terms(sc, a.terms, b.terms))


# ---------------------------------------------------------------------------
# linear maps that permute basis vectors up to sign


@dataclass(frozen=True, eq=False)
class AlgebraMap:
    """A complex-linear map given by integer images of basis vectors."""

    sc: StructureConstants
    images: Tuple[Tuple[Tuple[int, int], ...], ...]

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        out: Terms = {}
        for k, v in a.terms.items():
            for j, c in self.images[k]:
                out[j] = out[j] + v * c if j in out else v * c
        return AlgebraElement(self.sc, out)

    def apply_terms(self, terms: Mapping[int, object]) -> Terms:
        out: Terms = {}
        for k, v in terms.items():
            for j, c in self.images[k]:
                out[j] = out.get(j, 0) + v * c
        return {k: v for k, v in out.items() if v != 0}

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """``self o other``."""
        return AlgebraMap(
            self.sc,
            tuple(tuple(sorted(self.apply_terms(dict(img)).items())) for img in other.images),
        )

    def power(self, k: int) -> "AlgebraMap":
        out = identity_map(self.sc)
        for _ in range(k):
            out = self.compose(out)
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraMap):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_identity(self) -> bool:
        return all(img == ((k, 1),) for k, img in enumerate(self.images))

    def order(self, limit: int = 24) -> int:
        g = self
        for k in range(1, limit + 1):
            if g.is_identity():
                return k
            g = self.compose(g)
        raise InvariantViolation(f"map order exceeds {limit}")

    def is_bracket_homomorphism(self) -> bool:
        sc = self.sc
        for a in range(sc.dim):
            fa = dict(self.images[a])
            for b in range(a + 1, sc.dim):
                lhs = self.apply_terms(dict(sc.basis_bracket(a, b)))
                rhs = bracket_terms(sc, fa, dict(self.images[b]))
                if lhs != rhs:
                    return False
        return True


def identity_map(sc: StructureConstants) -> AlgebraMap:
    return AlgebraMap(sc, tuple(((k, 1),) for k in range(sc.dim)))


def chevalley_involution_map(sc: StructureConstants) -> AlgebraMap:
    """``X_alpha -> -X_{-alpha}``, ``H_i -> -H_i``."""
    rs, r = sc.rs, sc.rank
    images = [((i, -1),) for i in range(r)]
    images += [((r + rs.negative_index(k), -1),) for k in range(len(rs.roots))]
    return AlgebraMap(sc, tuple(images))


def chevalley_involution(sc: StructureConstants, a: AlgebraElement) -> AlgebraElement:
    return chevalley_involution_map(sc)(a)


def diagram_automorphism_map(sc: StructureConstants, psi: DiagramAutomorphism) -> AlgebraMap:
    """The automorphism sending ``X_{+-alpha_i} -> X_{+-alpha_psi(i)}``.

    Non-simple root vectors follow the generation parent of each positive
    root: ``X_xi = [X_{alpha_i}, X_beta] / N_{alpha_i,beta}``, and likewise
    for ``-xi``.  The resulting per-root signs depend on the sign convention
    of the structure constants.
    """
    rs, r = sc.rs, sc.rank
    if not psi.preserves(rs.cartan):
        raise ValueError(f"permutation {psi.labels()} does not preserve the Cartan matrix")
    P = rs.n_pos
    target: Dict[int, Tuple[int, int]] = {}
    for i in range(r):
        target[i] = (psi.perm[i], 1)
        target[rs.negative_index(i)] = (rs.negative_index(psi.perm[i]), 1)
    for k in range(r, P):
        i, b = rs.parents[k]
        for sign in (1, -1):
            src_i = i if sign > 0 else rs.negative_index(i)
            src_b = b if sign > 0 else rs.negative_index(b)
            me = k if sign > 0 else rs.negative_index(k)
            ti, ei = target[src_i]
            tb, eb = target[src_b]
            num = ei * eb * sc.N[(ti, tb)]
            den = sc.N[(src_i, src_b)]
            if num % den or abs(num // den) != 1:
                raise InvariantViolation(f"diagram action sign is not +-1 at {rs.roots[me]}")
            image = rs.index[psi.apply_root(rs.roots[me])]
            target[me] = (image, num // den)
    images = [((psi.perm[i], 1),) for i in range(r)]
    for k in range(len(rs.roots)):
        t, e = target[k]
        images.append(((r + t, e),))
    return AlgebraMap(sc, tuple(images))


def diagram_action(sc: StructureConstants, psi: DiagramAutomorphism, a: AlgebraElement) -> AlgebraElement:
    return diagram_automorphism_map(sc, psi)(a)


def condition_v_holds(rs: RootSystem, psi: DiagramAutomorphism) -> bool:
    """``w0(psi(alpha_i)) = -alpha_i`` for every simple root."""
    w = longest_element(rs)
    return all(w.action[psi.perm[i]] == rs.negative_index(i) for i in range(rs.rank))


def weyl_involution(sc: StructureConstants, psi: DiagramAutomorphism) -> AlgebraMap:
    """``w* = phi o psi*^{-1}`` where ``phi`` is the Chevalley involution.

    Requires ``w0 o psi = -1`` on the roots.  Checks that
    ``w*(X_{alpha_i}) = -X_{w0(alpha_i)}``, that ``w*`` has order 2 and that
    it commutes with ``psi*``.
    """
    rs, r = sc.rs, sc.rank
    if not psi.preserves(rs.cartan):
        raise ValueError(f"permutation {psi.labels()} does not preserve the Cartan matrix")
    if not condition_v_holds(rs, psi):
        raise ConditionVError(
            f"w0 o psi is not -1 on the roots of {rs.dynkin.label} with psi = {psi.labels()}; "
            "this (type, twist) is an exception in the classification"
        )
    psi_star = diagram_automorphism_map(sc, psi)
    psi_inv = diagram_automorphism_map(sc, psi.inverse())
    w_star = chevalley_involution_map(sc).compose(psi_inv)
    w = longest_element(rs)
    for i in range(r):
        if w_star.images[r + i] != ((r + w.action[i], -1),):
            raise InvariantViolation(f"w*(X_alpha_{i + 1}) != -X_(w alpha_{i + 1})")
    if w_star.order() != 2:
        raise InvariantViolation("w* does not have order 2")
    if w_star.compose(psi_star) != psi_star.compose(w_star):
        raise InvariantViolation("w* does not commute with psi*")
    return w_star
