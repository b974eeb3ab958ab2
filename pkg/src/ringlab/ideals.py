"""Right ideals of a finite ring, viewed as right modules.

Ideals are stored extensionally (a frozenset of element indices) together
with a generator list, so equality and direct-sum checks are set operations.
Module homomorphisms between ideals are stored as explicit graphs and
validated for additivity and right-equivariance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvariantViolation, RingMismatchError, SearchBudgetExceeded
from .rings import FiniteRing

HOM_SEARCH_CANDIDATE_LIMIT = 10 ** 7


def _same_ring(a, b):
    if a.ring is not b.ring and a.ring.spec != b.ring.spec:
        raise RingMismatchError(f"ideals of {a.ring.spec} and {b.ring.spec} cannot be combined")
    return a.ring


def additive_closure(ring, items):
    """Smallest subset containing 0 and the items that is closed under +."""
    add = ring.add_table
    span = {ring.zero} | {int(x) for x in items}
    while True:
        arr = sorted(span)
        grown = {int(v) for v in np.unique(add[np.ix_(arr, arr)])}
        if grown <= span:
            return frozenset(span)
        span |= grown


def right_closure(ring, generators):
    """The right ideal generated by the given elements."""
    if not generators:
        return frozenset({ring.zero})
    rows = np.unique(ring.mul_table[sorted(set(generators))])
    return additive_closure(ring, (int(v) for v in rows))


def minimal_generators(ring, members):
    """Least-index greedy spanning subset of an ideal's member set."""
    gens = []
    span = frozenset({ring.zero})
    for m in sorted(members):
        if m not in span:
            gens.append(int(m))
            span = right_closure(ring, gens)
    if span != frozenset(members):
        raise InvariantViolation("member set is not a right ideal")
    return tuple(gens)


@dataclass(frozen=True, eq=False)
class RightIdeal:
    """A subset closed under addition and right multiplication, with generators."""

    ring: FiniteRing
    members: frozenset
    generators: tuple

    @classmethod
    def from_members(cls, ring, members, generators=None):
        members = frozenset(int(m) for m in members)
        arr = sorted(members)
        add_img = {int(v) for v in np.unique(ring.add_table[np.ix_(arr, arr)])}
        mul_img = {int(v) for v in np.unique(ring.mul_table[arr])}
        if ring.zero not in members or not add_img <= members or not mul_img <= members:
            raise InvariantViolation("member set is not closed as a right ideal")
        if generators is None:
            generators = minimal_generators(ring, members)
        return cls(ring, members, tuple(int(g) for g in generators))

    @classmethod
    def zero_ideal(cls, ring):
        return cls(ring, frozenset({ring.zero}), ())

    @classmethod
    def full_ideal(cls, ring):
        return cls(ring, frozenset(range(ring.size)), (ring.one,))

    def __len__(self):
        return len(self.members)

    def __contains__(self, idx):
        return idx in self.members

    def __eq__(self, other):
        if not isinstance(other, RightIdeal):
            return NotImplemented
        return self.ring.spec == other.ring.spec and self.members == other.members

    def __hash__(self):
        return hash((self.ring.spec, self.members))

    def __repr__(self):
        shown = sorted(self.members)
        if len(shown) > 12:
            shown = shown[:12] + ["..."]
        return f"RightIdeal({self.ring.spec}, size={len(self.members)}, members={shown})"

    @cached_property
    def sorted_members(self):
        return tuple(sorted(self.members))

    def is_zero(self):
        return self.members == frozenset({self.ring.zero})

    def is_full(self):
        return len(self.members) == self.ring.size

    def to_json(self):
        return {
            "ring": self.ring.spec,
            "generators": [int(g) for g in self.generators],
            "members": [int(m) for m in self.sorted_members],
        }


@dataclass(frozen=True, eq=False)
class ModuleHom:
    """An additive, right-equivariant map between right ideals, as a graph."""

    source: RightIdeal
    target: RightIdeal
    mapping: dict

    def __call__(self, s):
        return self.mapping[s]

    def validate(self):
        ring = _same_ring(self.source, self.target)
        if set(self.mapping) != self.source.members:
            raise InvariantViolation("map is not total on its source")
        if not set(self.mapping.values()) <= self.target.members:
            raise InvariantViolation("map image escapes its target")
        add, mul = ring.add_table, ring.mul_table
        src = self.source.sorted_members
        for s in src:
            t = self.mapping[s]
            for s2 in src:
                if self.mapping[int(add[s, s2])] != int(add[t, self.mapping[s2]]):
                    raise InvariantViolation(f"map is not additive at ({s}, {s2})")
            for r in range(ring.size):
                if self.mapping[int(mul[s, r])] != int(mul[t, r]):
                    raise InvariantViolation(f"map is not right-equivariant at ({s}, {r})")
        return True

    def is_bijective(self):
        return (len(self.source.members) == len(self.target.members)
                and set(self.mapping.values()) == self.target.members)

    def to_json(self):
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "pairs": [[int(s), int(self.mapping[s])] for s in self.source.sorted_members],
        }


def identity_hom(A):
    return ModuleHom(A, A, {s: s for s in A.members})


def left_multiplication_hom(c, A, target=None):
    """The map x -> c*x restricted to A (always additive and equivariant)."""
    ring = A.ring
    mapping = {s: ring.mul(c, s) for s in A.members}
    if target is None:
        target = RightIdeal.from_members(ring, set(mapping.values()))
    return ModuleHom(A, target, mapping)


# -- the lattice operations ---------------------------------------------------


def principal(ring, a):
    """The right ideal aR = {a*r : r in R}."""
    return RightIdeal(ring, ring.right_principal_sets[a], (int(a),))


def right_annihilator(ring, a):
    """{r : a*r = 0}; always a right ideal."""
    members = frozenset(int(r) for r in np.flatnonzero(ring.mul_table[a] == ring.zero))
    return RightIdeal.from_members(ring, members)


def ideal_sum(A, B):
    """{x + y : x in A, y in B}; generators are concatenated."""
    ring = _same_ring(A, B)
    members = frozenset(
        int(v) for v in np.unique(
            ring.add_table[np.ix_(A.sorted_members, B.sorted_members)]))
    return RightIdeal(ring, members, A.generators + B.generators)


def ideal_intersect(A, B):
    """Set intersection, with generators recomputed least-index greedily."""
    ring = _same_ring(A, B)
    members = A.members & B.members
    return RightIdeal(ring, members, minimal_generators(ring, members))


def is_direct_pair(A, B):
    """True iff A + B = R and A intersect B = 0."""
    ring = _same_ring(A, B)
    return (A.members & B.members == frozenset({ring.zero})
            and len(A.members) * len(B.members) == ring.size)


def summand_idempotent(A):
    """Least idempotent e with eR = A, or None when A is not a direct summand."""
    ring = A.ring
    for e in ring.idempotent_list:
        if ring.right_principal_sets[e] == A.members:
            return int(e)
    return None


def direct_complements(A):
    """All right ideals B with A + B = R and A intersect B = 0.

    Complements of a summand are themselves summands, so the scan runs over
    idempotent-generated ideals; results are ordered by their least
    generating idempotent.
    """
    ring = A.ring
    zero_only = frozenset({ring.zero})
    n = ring.size
    found = {}
    for f in ring.idempotent_list:
        S = ring.right_principal_sets[f]
        if S in found:
            continue
        if A.members & S == zero_only and len(A.members) * len(S) == n:
            found[S] = f
    ordered = sorted(found.items(), key=lambda kv: kv[1])
    return [RightIdeal(ring, S, (int(f),)) for S, f in ordered]


def _extend_hom(ring, gens, images, source_members):
    """Close a generator assignment under + and right multiplication.

    Returns the full graph dict, or None if the assignment is inconsistent.
    """
    add, mul = ring.add_table, ring.mul_table
    mapping = {ring.zero: ring.zero}
    queue = []

    def put(s, t):
        known = mapping.get(s)
        if known is not None:
            return known == t
        mapping[s] = t
        queue.append(s)
        return True

    for g, y in zip(gens, images):
        if not put(int(g), int(y)):
            return None
    while queue:
        s = queue.pop()
        t = mapping[s]
        srow, trow = mul[s], mul[t]
        for r in range(ring.size):
            if not put(int(srow[r]), int(trow[r])):
                return None
        for s2, t2 in list(mapping.items()):
            if not put(int(add[s, s2]), int(add[t, t2])):
                return None
    if set(mapping) != source_members:
        return None
    return mapping


def hom_search(A, B, require_iso=False, max_candidates=HOM_SEARCH_CANDIDATE_LIMIT):
    """All right-module homomorphisms from A to B (bijective ones when asked).

    Generator images are enumerated over the target in ascending order, then
    extended additively and equivariantly; every returned map is validated.
    """
    ring = _same_ring(A, B)
    if require_iso and len(A.members) != len(B.members):
        return []
    gens = A.generators
    if not gens:
        if require_iso and not B.is_zero():
            return []
        hom = ModuleHom(A, B, {ring.zero: ring.zero})
        hom.validate()
        return [hom]
    count = len(B.members) ** len(gens)
    if count > max_candidates:
        raise SearchBudgetExceeded(
            f"{count} candidate assignments exceed the limit of {max_candidates}")
    out = []
    targets = B.sorted_members
    for images in itertools.product(targets, repeat=len(gens)):
        mapping = _extend_hom(ring, gens, images, A.members)
        if mapping is None:
            continue
        hom = ModuleHom(A, B, mapping)
        if require_iso and not hom.is_bijective():
            continue
        hom.validate()
        out.append(hom)
    return out


def summands_isomorphic(ring, e, f):
    """Two-element certificate that eR and fR are isomorphic right modules.

    Returns (u, v) with u in eRf, v in fRe, uv = e and vu = f, or None.
    """
    mul = ring.mul_table
    eRf = sorted(int(x) for x in np.unique(mul[mul[e], f]))
    fRe = sorted(int(x) for x in np.unique(mul[mul[f], e]))
    for u in eRf:
        row = mul[u]
        for v in fRe:
            if int(row[v]) == e and int(mul[v, u]) == f:
                return (u, v)
    return None


def common_complement_idempotent(A, B):
    """Least idempotent e with eR = A whose left action maps B bijectively onto A.

    Such an e exists exactly when A and B share a direct complement; the
    returned restriction is the witnessing module isomorphism B -> A.
    """
    ring = _same_ring(A, B)
    for e in ring.idempotent_list:
        if ring.right_principal_sets[e] != A.members:
            continue
        mapping = {y: ring.mul(e, y) for y in B.members}
        values = set(mapping.values())
        if values == A.members and len(values) == len(B.members):
            return int(e), ModuleHom(B, A, mapping)
    return None


def reconstruct_common_complement(e, A, B):
    """Verifier for the converse direction: (1-e)R complements both A and B."""
    ring = _same_ring(A, B)
    W = principal(ring, ring.one_minus(e))
    if not is_direct_pair(A, W):
        raise InvariantViolation("(1-e)R does not complement the first ideal")
    if not is_direct_pair(B, W):
        raise InvariantViolation("(1-e)R does not complement the second ideal")
    return W


def graph_module(phi):
    """The right ideal {x + phi(x) : x in source}.

    Closure of the graph is re-verified; a failure signals a non-equivariant
    map. (Additivity and equivariance alone make the graph an ideal; the
    construction is only used as a complement when source meets target in 0.)
    """
    ring = _same_ring(phi.source, phi.target)
    try:
        members = {ring.add(x, phi.mapping[x]) for x in phi.source.members}
    except KeyError as exc:
        raise InvariantViolation("map is not total on its source") from exc
    try:
        return RightIdeal.from_members(ring, members)
    except InvariantViolation as exc:
        raise InvariantViolation(
            "graph is not closed as a right ideal; the map is not equivariant") from exc


def all_right_ideals(ring):
    """Every right ideal of the ring, ordered by (size, member tuple).

    Worklist saturation over adding one principal ideal at a time; intended
    for the small rings where exhaustive lattice checks run.
    """
    zero = frozenset({ring.zero})
    found = {zero}
    work = [zero]
    while work:
        base = work.pop()
        base_sorted = sorted(base)
        for a in range(ring.size):
            if a in base:
                continue
            grown = additive_closure(
                ring, itertools.chain(base_sorted, ring.right_principal_sets[a]))
            if grown not in found:
                found.add(grown)
                work.append(grown)
    ideals = [RightIdeal.from_members(ring, m) for m in found]
    ideals.sort(key=lambda I: (len(I.members), I.sorted_members))
    return ideals
