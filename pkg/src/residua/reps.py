"""Subfields, fields of representatives, and the residue-field bijection.

Central objects: a finite commutative ring A, a subfield kappa inside it,
and a maximal ideal m.  The key question everywhere: does the canonical
projection A -> A/m restrict to an isomorphism on kappa?  Equivalently,
is A the internal direct sum kappa (+) m?

Policy: subfields contain the ambient 1 unless explicitly enumerated with
require_one=False (idempotent-unit subfields, for exploration only); the
projection maps 1 to 1, so only unital subfields can represent the residue
field in the canonical way.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from residua import caps
from residua.errors import CapExceeded, InvalidInput, PreconditionUnmet, ZeroRing
from residua.rings import (
    IdealSet,
    RingMorphism,
    RingTable,
    SubringSet,
    find_isomorphism,
    hom_enumerate,
    is_field,
    is_ideal_members,
    is_local,
    maximal_ideals,
    quotient,
    subring_as_ring,
    subring_generated,
    units,
)


# ---------------------------------------------------------------------------
# subfield enumeration


def _subring_unit(ring: RingTable, members: tuple[int, ...]) -> int | None:
    """The multiplicative identity of a subring's member set, if any."""
    for e in members:
        if all(ring.mul_at(e, s) == s for s in members):
            return e
    return None


def is_subfield_members(ring: RingTable, members: tuple[int, ...]) -> bool:
    """Whether a member set is a subfield (with its own unit, possibly not
    the ambient one)."""
    if len(members) < 2:
        return False
    e = _subring_unit(ring, members)
    if e is None or e == ring.zero:
        return False
    try:
        sub, _ = subring_as_ring(ring, members, one=e)
    except InvalidInput:
        return False
    return is_field(sub)


def enumerate_subfields(ring: RingTable, require_one: bool = True) -> list[SubringSet]:
    """All subfields, via single-generator closures.

    Complete because a finite field is generated over its prime field by
    one element (any generator of its cyclic unit group).
    """
    if ring.n > caps.MAX_ENUMERATION_ORDER:
        raise CapExceeded(f"order {ring.n} exceeds enumeration cap")
    seen: dict[tuple[int, ...], SubringSet] = {}
    for a in range(ring.n):
        sub = subring_generated(ring, [a], require_one)
        if sub.members in seen:
            continue
        if require_one and not sub.contains_one:
            continue
        if is_subfield_members(ring, sub.members):
            if require_one:
                # unital policy: the subfield's unit must be the ambient one
                if _subring_unit(ring, sub.members) != ring.one:
                    continue
            seen[sub.members] = sub
    return sorted(seen.values(), key=lambda s: (len(s.members), s.members))


def largest_subfield(ring: RingTable, require_one: bool = True) -> SubringSet | None:
    """The subfield containing every other subfield, if one exists.

    Distinct from a *maximal* subfield (one with no strict superfield);
    several incomparable maximal subfields leave this absent.
    """
    subs = enumerate_subfields(ring, require_one)
    for cand in subs:
        cm = set(cand.members)
        if all(set(s.members) <= cm for s in subs):
            return cand
    return None


def maximal_subfields(ring: RingTable, require_one: bool = True) -> list[SubringSet]:
    subs = enumerate_subfields(ring, require_one)
    out = []
    for cand in subs:
        cm = set(cand.members)
        if not any(cm < set(s.members) for s in subs):
            out.append(cand)
    return out


# ---------------------------------------------------------------------------
# the direct-sum decomposition A = kappa (+) m


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of restricting the canonical projection to a subfield.

    verdict  <=>  intersection_trivial and sum_covers
             <=>  restriction_injective and restriction_surjective;
    the chain is asserted on construction, not assumed.
    """

    ring_label: str
    kappa_members: tuple[int, ...]
    ideal_members: tuple[int, ...]
    restriction_injective: bool
    restriction_surjective: bool
    intersection_trivial: bool
    sum_covers: bool
    decomposition_unique: bool
    verdict: bool

    def as_dict(self) -> dict:
        return {
            "ring": self.ring_label,
            "kappa": list(self.kappa_members),
            "ideal": list(self.ideal_members),
            "restriction_injective": self.restriction_injective,
            "restriction_surjective": self.restriction_surjective,
            "intersection_trivial": self.intersection_trivial,
            "sum_covers": self.sum_covers,
            "decomposition_unique": self.decomposition_unique,
            "verdict": self.verdict,
        }


def residue_restriction(ring: RingTable, kappa: SubringSet,
                        ideal: IdealSet) -> DecompositionReport:
    """Evaluate whether kappa is a field of representatives for m.

    Checks the projection restricted to kappa (injectivity, surjectivity)
    and the additive decomposition (trivial intersection, coverage,
    uniqueness) independently, then asserts their equivalence.
    """
    if not is_subfield_members(ring, kappa.members):
        raise InvalidInput("kappa is not a subfield")
    if not is_ideal_members(ring, ideal.members):
        raise InvalidInput("m is not an ideal")
    qring, proj = quotient(ring, ideal)
    if not is_field(qring):
        raise InvalidInput("m is not maximal (quotient is not a field)")

    images = [proj(u) for u in kappa.members]
    restriction_injective = len(set(images)) == len(kappa.members)
    restriction_surjective = set(images) == set(range(qring.n))
    intersection_trivial = set(kappa.members) & set(ideal.members) == {ring.zero}
    counts = [0] * ring.n
    for u in kappa.members:
        for m in ideal.members:
            counts[ring.add_at(u, m)] += 1
    sum_covers = all(c >= 1 for c in counts)
    decomposition_unique = all(c <= 1 for c in counts)
    verdict = restriction_injective and restriction_surjective

    assert verdict == (intersection_trivial and sum_covers)
    assert verdict == (sum_covers and decomposition_unique)
    assert intersection_trivial == decomposition_unique
    return DecompositionReport(
        ring_label=ring.label,
        kappa_members=kappa.members,
        ideal_members=ideal.members,
        restriction_injective=restriction_injective,
        restriction_surjective=restriction_surjective,
        intersection_trivial=intersection_trivial,
        sum_covers=sum_covers,
        decomposition_unique=decomposition_unique,
        verdict=verdict,
    )


def check_unit_decomposition(ring: RingTable, kappa: SubringSet) -> bool:
    """units(A) = {u + m : u in kappa*, m in m}, for local A with kappa the
    largest subfield.  A False return is a finding, not an error."""
    try:
        local, mideal = is_local(ring)
    except ZeroRing as exc:
        raise PreconditionUnmet("zero ring") from exc
    if not local:
        raise PreconditionUnmet("ring is not local")
    largest = largest_subfield(ring)
    if largest is None or largest.members != kappa.members:
        raise PreconditionUnmet("kappa is not the largest subfield")
    unit_set = set(units(ring))
    rhs = {ring.add_at(u, m)
           for u in kappa.members if u != ring.zero
           for m in mideal.members}
    return unit_set == rhs


def check_theorem_qfld(ring: RingTable) -> bool | None:
    """Residue-restriction verdict for (A, largest subfield, unique m);
    absent when A is not local or has no largest subfield."""
    try:
        local, mideal = is_local(ring)
    except ZeroRing:
        return None
    if not local:
        return None
    kappa = largest_subfield(ring)
    if kappa is None:
        return None
    return residue_restriction(ring, kappa, mideal).verdict


def check_prop_maximal(ring: RingTable, kappa: SubringSet,
                       ideal: IdealSet) -> bool:
    """No subfield strictly contains kappa, given the verdict holds."""
    report = residue_restriction(ring, kappa, ideal)
    if not report.verdict:
        raise PreconditionUnmet("residue restriction verdict is false")
    km = set(kappa.members)
    for sub in enumerate_subfields(ring, require_one=False):
        if km < set(sub.members):
            return False
    return True


# ---------------------------------------------------------------------------
# kappa-algebras and the finite Gelfand-style bijection


@dataclass(frozen=True)
class KappaAlgebra:
    """A ring with a designated unital subfield kappa and its inclusion."""

    ring: RingTable
    kappa: SubringSet
    kappa_ring: RingTable
    embedding: RingMorphism


def kappa_algebra(ring: RingTable, members) -> KappaAlgebra:
    ms = tuple(sorted(set(members)))
    if ring.one not in ms:
        raise InvalidInput("kappa must contain the ambient one")
    if not is_subfield_members(ring, ms):
        raise InvalidInput("member set is not a subfield")
    kring, incl = subring_as_ring(ring, ms)
    assert incl.unital and incl.is_injective()
    return KappaAlgebra(ring, SubringSet(ring, ms, True), kring, incl)


def algebra_homs(ka: KappaAlgebra) -> list[RingMorphism]:
    """Unital ring homomorphisms A -> kappa fixing kappa pointwise."""
    homs = hom_enumerate(ka.ring, ka.kappa_ring, unital=True)
    out = []
    for h in homs:
        if all(h(m) == i for i, m in enumerate(ka.kappa.members)):
            out.append(h)
    return out


@dataclass(frozen=True)
class GelfandReport:
    """h -> ker h from algebra homs into Max(A), with both verdicts:
    the restricted bijection (onto the surjective-restriction ideals,
    structurally forced) and the full bijection (Max(A) entirely)."""

    ring_label: str
    hom_count: int
    max_ideal_count: int
    pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    unmatched_ideals: tuple[tuple[int, ...], ...]
    restricted_bijection: bool
    full_bijection: bool

    def as_dict(self) -> dict:
        return {
            "ring": self.ring_label,
            "hom_count": self.hom_count,
            "max_ideal_count": self.max_ideal_count,
            "pairs": [{"hom": list(h), "kernel": list(k)} for h, k in self.pairs],
            "unmatched_ideals": [list(m) for m in self.unmatched_ideals],
            "restricted_bijection": self.restricted_bijection,
            "full_bijection": self.full_bijection,
        }


def gelfand_bijection_check(ka: KappaAlgebra) -> GelfandReport:
    ring = ka.ring
    homs = algebra_homs(ka)
    maximals = maximal_ideals(ring)
    kernels = [h.kernel_members() for h in homs]
    injective = len(set(kernels)) == len(kernels)
    maximal_sets = {m.members for m in maximals}
    for k in kernels:
        assert k in maximal_sets, "kernel of an algebra hom must be maximal"
    expected_image = set()
    for m in maximals:
        rep = residue_restriction(ring, ka.kappa, m)
        if rep.restriction_surjective:
            expected_image.add(m.members)
    image = set(kernels)
    restricted = injective and image == expected_image
    full = restricted and image == maximal_sets
    pairs = tuple((h.map, k) for h, k in zip(homs, kernels))
    unmatched = tuple(sorted(maximal_sets - image))
    return GelfandReport(
        ring_label=ring.label,
        hom_count=len(homs),
        max_ideal_count=len(maximals),
        pairs=pairs,
        unmatched_ideals=unmatched,
        restricted_bijection=restricted,
        full_bijection=full,
    )


# ---------------------------------------------------------------------------
# abstract-vs-restriction isomorphism gap


@dataclass(frozen=True)
class AbsisoFinding:
    """A triple where A/m is abstractly isomorphic to kappa although the
    projection does not restrict to an isomorphism on kappa."""

    ring_label: str
    kappa_members: tuple[int, ...]
    ideal_members: tuple[int, ...]
    rescued_by: tuple[int, ...] | None  # some kappa' with a true verdict

    def as_dict(self) -> dict:
        return {
            "ring": self.ring_label,
            "kappa": list(self.kappa_members),
            "ideal": list(self.ideal_members),
            "rescued_by": None if self.rescued_by is None else list(self.rescued_by),
        }


def search_absiso_gap(catalog) -> list[AbsisoFinding]:
    """Probe where 'isomorphic to kappa' read abstractly diverges from the
    via-restriction reading used by the lemma suites."""
    findings = []
    for ring in catalog:
        if ring.is_zero_ring():
            continue
        subfields = enumerate_subfields(ring)
        if not subfields:
            continue
        for mid in maximal_ideals(ring):
            qring, _ = quotient(ring, mid)
            verdicts = {}
            for kap in subfields:
                verdicts[kap.members] = residue_restriction(ring, kap, mid).verdict
            rescuer = next((m for m, v in verdicts.items() if v), None)
            for kap in subfields:
                if verdicts[kap.members]:
                    continue
                kring, _ = subring_as_ring(ring, kap.members)
                if find_isomorphism(qring, kring) is not None:
                    findings.append(AbsisoFinding(
                        ring_label=ring.label,
                        kappa_members=kap.members,
                        ideal_members=mid.members,
                        rescued_by=rescuer,
                    ))
    return findings
