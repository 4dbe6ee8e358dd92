"""Which (type, twist) pairs have ``w0 o psi = -1`` on the root system.

When that holds the compact form is witnessed constructively; the other
equivalent properties (Cartan-type conjugation, compact Cartan subgroup,
discrete series) are recorded as labels copied from it, not computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .chevalley import condition_v_holds, constants, weyl_involution, diagram_automorphism_map
from .compact_form import CompactCertificate, certificate
from .root_system import DynkinType, RootSystem, all_types, parse_type, root_system
from .weyl import DiagramAutomorphism, InvariantViolation, twist_automorphism

DERIVED_FIELDS = ("cartan_type", "compact_cartan", "discrete_series")


def condition_v(rs: RootSystem, psi: DiagramAutomorphism) -> bool:
    return condition_v_holds(rs, psi)


@dataclass
class Witness:
    certificate: CompactCertificate
    involution_order: int
    commutes_with_diagram: bool

    def to_json(self) -> dict:
        return {
            "certificate": self.certificate.to_json(),
            "weyl_involution_order": self.involution_order,
            "commutes_with_diagram": self.commutes_with_diagram,
        }


@dataclass
class ClassificationRecord:
    dynkin: DynkinType
    condition_v: bool
    witness: Optional[Witness] = None
    notes: List[str] = field(default_factory=list)

    # the remaining labels are equivalent to condition (v) and copied from it
    @property
    def is_cartan_type(self) -> bool:
        return self.condition_v

    @property
    def has_compact_inner_form(self) -> bool:
        return self.condition_v

    @property
    def has_compact_cartan(self) -> bool:
        return self.condition_v

    @property
    def has_discrete_series(self) -> bool:
        return self.condition_v

    def to_json(self) -> dict:
        return {
            "type": self.dynkin.label,
            "twist": self.dynkin.twist,
            "condition_v": self.condition_v,
            "cartan_type": self.is_cartan_type,
            "compact_inner_form": self.has_compact_inner_form,
            "compact_cartan": self.has_compact_cartan,
            "discrete_series": self.has_discrete_series,
            "witness": self.witness.to_json() if self.witness else None,
            "derived_fields": list(DERIVED_FIELDS),
            "derivation": "proposition-equivalence",
            "notes": list(self.notes),
        }


def in_exception_list(t: DynkinType) -> bool:
    """The known exceptions among involutive twists (twist 1 or 2)."""
    if t.twist == 1:
        return (
            (t.family == "A" and t.rank >= 2)
            or (t.family == "D" and t.rank >= 3 and t.rank % 2 == 1)
            or (t.family == "E" and t.rank == 6)
        )
    if t.twist == 2:
        return t.family == "D" and t.rank >= 4 and t.rank % 2 == 0
    raise ValueError(f"exception list covers involutive twists only, got {t}")


def classify(t: DynkinType | str) -> ClassificationRecord:
    if isinstance(t, str):
        t = parse_type(t)
    rs = root_system(t)
    psi = twist_automorphism(t)
    holds = condition_v(rs, psi)
    notes = []
    if t.twist == 3:
        notes.append("extension: triality twist lies outside the involutive quasi-split classification")
    if t.family == "D" and t.rank == 3:
        notes.append("D3 is isomorphic to A3 (D3 node 1 = A3 node 2)")
    witness = None
    if holds:
        cert = certificate(t)
        if not cert.passed:
            raise InvariantViolation(f"compact form certificate failed for {t}: {cert.failures}")
        sc = constants(t)
        w_star = weyl_involution(sc, psi)
        psi_star = diagram_automorphism_map(sc, psi)
        witness = Witness(
            certificate=cert,
            involution_order=w_star.order(),
            commutes_with_diagram=w_star.compose(psi_star) == psi_star.compose(w_star),
        )
    return ClassificationRecord(t, holds, witness, notes)


def full_table(max_rank: int) -> List[ClassificationRecord]:
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    return [classify(t) for t in all_types(max_rank)]


def check_against_exceptions(records: List[ClassificationRecord]) -> List[str]:
    """Mismatches between computed condition (v) and the exception list."""
    bad = []
    for rec in records:
        if rec.dynkin.twist not in (1, 2):
            continue
        predicted = not in_exception_list(rec.dynkin)
        if rec.condition_v != predicted:
            bad.append(f"{rec.dynkin}: computed {rec.condition_v}, exception list predicts {predicted}")
    return bad
