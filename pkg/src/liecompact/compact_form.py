"""The compact real form spanned by ``Y_a``, ``Z_a`` and ``W_i``.

For each positive root ``a``::

    Y_a = X_a - X_{-a}        Z_a = i (X_a + X_{-a})        W_i = i H_i

The real span of these is closed under the bracket, the Killing form is
negative definite on it, and it is the fixed set of the antilinear map
``theta(v) = phi(conj(v))`` with ``phi`` the Chevalley involution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple

from .arith import GaussianRational, I, SymMatrix, is_negative_definite
from .chevalley import (
    AlgebraElement,
    StructureConstants,
    bracket_terms,
    chevalley_involution_map,
    constants,
)
from .root_system import DynkinType
from .weyl import InvariantViolation

_HALF = Fraction(1, 2)


@dataclass(frozen=True, eq=False)
class CompactBasis:
    """Ordered as all ``Y``, then all ``Z`` (positive-root order), then ``W``."""

    sc: StructureConstants
    elements: Tuple[AlgebraElement, ...]
    labels: Tuple[Tuple[str, int], ...]

    def __len__(self):
        return len(self.elements)

    def label_text(self, k: int) -> str:
        kind, idx = self.labels[k]
        if kind == "W":
            return f"W({idx + 1})"
        return f"{kind}({list(self.sc.rs.roots[idx])})"

    def coordinates(self, a: AlgebraElement | Mapping[int, object]) -> List[GaussianRational]:
        """Coefficients of ``a`` over this basis.

        ``x_a X_a + x_-a X_-a = y Y_a + z Z_a`` gives ``y = (x_a - x_-a)/2``
        and ``z = (x_a + x_-a)/(2i)``; ``h H_i = w W_i`` gives ``w = -i h``.
        """
        terms = a.terms if isinstance(a, AlgebraElement) else a
        rs, r = self.sc.rs, self.sc.rank
        P = rs.n_pos
        zero = GaussianRational()
        out = [zero] * len(self.elements)
        minus_i = -I
        for k in range(P):
            xp = terms.get(r + k, 0)
            xm = terms.get(r + k + P, 0)
            if xp or xm:
                out[k] = GaussianRational.coerce((xp - xm) * _HALF)
                out[P + k] = GaussianRational.coerce((xp + xm) * _HALF) * minus_i
        for i in range(r):
            hv = terms.get(i, 0)
            if hv:
                out[2 * P + i] = GaussianRational.coerce(hv) * minus_i
        return out


def compact_basis(sc: StructureConstants) -> CompactBasis:
    rs, r = sc.rs, sc.rank
    P = rs.n_pos
    ys, zs, ws, labels_y, labels_z, labels_w = [], [], [], [], [], []
    for k in range(P):
        xp, xm = r + k, r + k + P
        ys.append(AlgebraElement(sc, {xp: 1, xm: -1}))
        zs.append(AlgebraElement(sc, {xp: I, xm: I}))
        labels_y.append(("Y", k))
        labels_z.append(("Z", k))
    for i in range(r):
        ws.append(AlgebraElement(sc, {i: I}))
        labels_w.append(("W", i))
    return CompactBasis(sc, tuple(ys + zs + ws), tuple(labels_y + labels_z + labels_w))


def ad_trace(sc: StructureConstants, a: Mapping[int, object], b: Mapping[int, object]):
    """``trace(ad a o ad b)`` by applying both maps to every basis vector."""
    total = 0
    for c in range(sc.dim):
        inner = bracket_terms(sc, b, {c: 1})
        if inner:
            total = total + bracket_terms(sc, a, inner).get(c, 0)
    return total


def chevalley_killing(sc: StructureConstants) -> Dict[Tuple[int, int], int]:
    """Nonzero Killing-form values on pairs of Chevalley basis vectors.

    Only pairs whose weights cancel, ``(H_i, H_j)`` and ``(X_a, X_-a)``, can
    have a nonzero trace; each of those is computed as an ad-trace.
    """
    rs, r = sc.rs, sc.rank
    out: Dict[Tuple[int, int], int] = {}
    for i in range(r):
        for j in range(i, r):
            v = ad_trace(sc, {i: 1}, {j: 1})
            if v:
                out[(i, j)] = out[(j, i)] = v
    for k in range(len(rs.roots)):
        m = rs.negative_index(k)
        if m < k:
            continue
        v = ad_trace(sc, {r + k: 1}, {r + m: 1})
        if v:
            out[(r + k, r + m)] = out[(r + m, r + k)] = v
    return out


def killing_form(sc: StructureConstants, a: AlgebraElement, b: AlgebraElement, table=None):
    """``B(a, b)`` by bilinear expansion over the Chevalley Killing table."""
    table = chevalley_killing(sc) if table is None else table
    total = GaussianRational()
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            v = table.get((p, q))
            if v:
                total = total + cp * cq * v
    return total


@dataclass(frozen=True, eq=False)
class KillingMatrix:
    basis: CompactBasis
    gram: SymMatrix


def killing_gram(sc: StructureConstants, cb: CompactBasis, table=None) -> KillingMatrix:
    """Gram matrix ``B(u_i, u_j)`` of the compact basis, with exact realness check."""
    table = chevalley_killing(sc) if table is None else table
    n = len(cb)
    partners: Dict[int, List[Tuple[int, int]]] = {}
    for (p, q), v in table.items():
        partners.setdefault(p, []).append((q, v))
    support: Dict[int, List[Tuple[int, GaussianRational]]] = {}
    for j, u in enumerate(cb.elements):
        for q, c in u.terms.items():
            support.setdefault(q, []).append((j, c))

    gram = [[Fraction(0)] * n for _ in range(n)]
    for i, u in enumerate(cb.elements):
        acc: Dict[int, GaussianRational] = {}
        for p, cp in u.terms.items():
            for q, v in partners.get(p, ()):
                for j, cq in support.get(q, ()):
                    term = cp * cq * v
                    acc[j] = acc[j] + term if j in acc else term
        for j, value in acc.items():
            if value.im != 0:
                raise InvariantViolation(
                    f"Killing form has imaginary part on ({cb.label_text(i)}, {cb.label_text(j)})"
                )
            gram[i][j] = value.re
    return KillingMatrix(cb, SymMatrix(gram))


@dataclass
class CompactCertificate:
    type: str
    closure: bool
    negative_definite: bool
    antilinear_fixed: bool
    gram_diagonal_sample: List[Fraction] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.closure and self.negative_definite and self.antilinear_fixed

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "closure": self.closure,
            "negative_definite": self.negative_definite,
            "antilinear_fixed": self.antilinear_fixed,
            "gram_diagonal_sample": [_json_number(v) for v in self.gram_diagonal_sample],
        }


def _json_number(v: Fraction):
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def check_closure(cb: CompactBasis) -> List[str]:
    """Pairs whose bracket has a non-real coordinate over the compact basis."""
    sc = cb.sc
    bad = []
    elems = cb.elements
    for i in range(len(elems)):
        ti = elems[i].terms
        for j in range(i + 1, len(elems)):
            out = bracket_terms(sc, ti, elems[j].terms)
            if not out:
                continue
            coords = cb.coordinates(out)
            if any(c.im != 0 for c in coords):
                bad.append(f"[{cb.label_text(i)}, {cb.label_text(j)}]")
    return bad


def antilinear_involution(sc: StructureConstants, a: AlgebraElement) -> AlgebraElement:
    """``theta(a) = phi(conj(a))``."""
    return chevalley_involution_map(sc)(a.conj())


def check_fixed_points(cb: CompactBasis) -> List[str]:
    phi = chevalley_involution_map(cb.sc)
    return [cb.label_text(k) for k, u in enumerate(cb.elements) if phi(u.conj()) != u]


def certify_compact(sc: StructureConstants, sample: int = 8) -> CompactCertificate:
    """Run the closure, definiteness and fixed-point checks; never raises on failure."""
    cb = compact_basis(sc)
    failures = []
    closure_bad = check_closure(cb)
    failures += [f"non-real bracket {p}" for p in closure_bad]
    km = killing_gram(sc, cb)
    negdef = is_negative_definite(km.gram)
    if not negdef:
        failures.append("Killing form is not negative definite")
    fixed_bad = check_fixed_points(cb)
    failures += [f"theta does not fix {lab}" for lab in fixed_bad]
    return CompactCertificate(
        type=sc.rs.dynkin.label,
        closure=not closure_bad,
        negative_definite=negdef,
        antilinear_fixed=not fixed_bad,
        gram_diagonal_sample=km.gram.diagonal()[:sample],
        failures=failures,
    )


@lru_cache(maxsize=None)
def _certificate_for(t: DynkinType) -> CompactCertificate:
    return certify_compact(constants(t))


def certificate(t: DynkinType) -> CompactCertificate:
    """Cached certificate for the untwisted type."""
    return _certificate_for(t.untwisted)
