"""Weyl group reflections, the longest element and diagram automorphisms.

Simple indices are 0-based in the Python API; user-facing renderings add 1
to match Bourbaki node labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .root_system import DynkinType, Root, RootSystem


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug."""


def reflect(rs: RootSystem, i: int, beta: Sequence[int]) -> Root:
    """``s_i(beta) = beta - <beta, alpha_i^vee> alpha_i``."""
    if not 0 <= i < rs.rank:
        raise IndexError(f"simple index {i} out of range for rank {rs.rank}")
    c = rs.simple_pairing(beta, i)
    image = list(beta)
    image[i] -= c
    image = tuple(image)
    if image not in rs.index:
        raise InvariantViolation(f"s_{i}({tuple(beta)}) = {image} is not a root")
    return image


def reflection_permutation(rs: RootSystem, i: int) -> Tuple[int, ...]:
    return tuple(rs.index[reflect(rs, i, beta)] for beta in rs.roots)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a reduced word plus its action on root indices."""

    word: Tuple[int, ...]
    action: Tuple[int, ...]

    def __len__(self):
        return len(self.word)

    def apply(self, rs: RootSystem, beta: Sequence[int]) -> Root:
        return rs.roots[self.action[rs.index[tuple(beta)]]]

    def is_involution(self) -> bool:
        return all(self.action[self.action[k]] == k for k in range(len(self.action)))


def longest_element(rs: RootSystem) -> WeylElement:
    """The longest element ``w0``, built by right multiplication.

    While some simple root still has a positive image, multiply on the
    right by the smallest such ``s_i``; each step raises the length by one.
    """
    refl = [reflection_permutation(rs, i) for i in range(rs.rank)]
    perm = tuple(range(len(rs.roots)))
    word: List[int] = []
    while True:
        for i in range(rs.rank):
            if rs.is_positive(perm[i]):
                s = refl[i]
                perm = tuple(perm[s[k]] for k in range(len(perm)))
                word.append(i)
                break
        else:
            break
    w = WeylElement(tuple(word), perm)
    if len(word) != rs.n_pos:
        raise InvariantViolation(f"longest word has length {len(word)}, expected {rs.n_pos}")
    if not all(not rs.is_positive(perm[k]) for k in range(rs.n_pos)):
        raise InvariantViolation("w0 does not send every positive root to a negative one")
    if not w.is_involution():
        raise InvariantViolation("w0 is not an involution")
    return w


def inversion_count(rs: RootSystem, w: WeylElement) -> int:
    """``#{alpha > 0 : w(alpha) < 0}``, the length of ``w``."""
    return sum(1 for k in range(rs.n_pos) if not rs.is_positive(w.action[k]))


def weyl_group_order(rs: RootSystem, limit: int = 10**5) -> int:
    """Order of the group generated by the simple reflections, by closure."""
    gens = [reflection_permutation(rs, i) for i in range(rs.rank)]
    identity = tuple(range(len(rs.roots)))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(g[s[k]] for k in range(len(g)))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > limit:
                        raise ValueError(f"Weyl group larger than limit {limit}")
        frontier = nxt
    return len(seen)


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A permutation of the simple roots preserving the Cartan matrix."""

    perm: Tuple[int, ...]

    @property
    def order(self) -> int:
        k, p = 1, self.perm
        identity = tuple(range(len(p)))
        while p != identity:
            p = tuple(self.perm[v] for v in p)
            k += 1
        return k

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.perm))

    def inverse(self) -> "DiagramAutomorphism":
        inv = [0] * len(self.perm)
        for i, v in enumerate(self.perm):
            inv[v] = i
        return DiagramAutomorphism(tuple(inv))

    def preserves(self, cartan) -> bool:
        n = len(cartan)
        if sorted(self.perm) != list(range(n)):
            return False
        p = self.perm
        return all(cartan[p[i]][p[j]] == cartan[i][j] for i in range(n) for j in range(n))

    def apply_root(self, root: Sequence[int]) -> Root:
        """Linear extension to root coordinates: ``alpha_i -> alpha_perm[i]``."""
        out = [0] * len(root)
        for i, c in enumerate(root):
            out[self.perm[i]] = c
        return tuple(out)

    def labels(self) -> List[int]:
        """1-based image list, Bourbaki node labels."""
        return [v + 1 for v in self.perm]

    @classmethod
    def identity(cls, rank: int) -> "DiagramAutomorphism":
        return cls(tuple(range(rank)))


def minus_w0(rs: RootSystem, w: WeylElement | None = None) -> DiagramAutomorphism:
    """The permutation ``i -> j`` with ``-w0(alpha_i) = alpha_j``."""
    if w is None:
        w = longest_element(rs)
    perm = []
    for i in range(rs.rank):
        j = rs.negative_index(w.action[i])
        if j >= rs.rank:
            raise InvariantViolation(f"-w0(alpha_{i + 1}) = {rs.roots[j]} is not simple")
        perm.append(j)
    psi = DiagramAutomorphism(tuple(perm))
    if not psi.preserves(rs.cartan):
        raise InvariantViolation("-w0 does not preserve the Cartan matrix")
    return psi


def twist_automorphism(t: DynkinType) -> DiagramAutomorphism:
    """The diagram automorphism selected by the type's twist order."""
    n = t.rank
    if t.twist == 1:
        return DiagramAutomorphism.identity(n)
    if t.twist == 3:
        # triality on D4: 1 -> 3 -> 4 -> 1, node 2 fixed
        return DiagramAutomorphism((2, 1, 3, 0))
    if t.family == "A":
        return DiagramAutomorphism(tuple(n - 1 - i for i in range(n)))
    if t.family == "D":
        perm = list(range(n))
        perm[n - 2], perm[n - 1] = n - 1, n - 2
        return DiagramAutomorphism(tuple(perm))
    if t.family == "E" and n == 6:
        return DiagramAutomorphism((5, 1, 4, 3, 2, 0))
    raise ValueError(f"no twist {t.twist} for {t.label}")
