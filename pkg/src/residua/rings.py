"""Finite commutative unital rings as dense operation tables.

A ring of order n carries its elements as indices 0..n-1 and its two
operations as flat n-by-n index tables, so every ring operation is a table
lookup.  Everything is immutable after validated construction; operations
never mutate their inputs.

The table caps live in residua.caps: construction up to order 4096,
ideal/subfield/homomorphism enumeration up to 256.  Constructors validate
the full ring axioms (every pair and triple) whenever the order is within
the enumeration cap; beyond that the arithmetic constructions are trusted.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, Sequence

from residua import caps, kernels
from residua.errors import (
    AxiomViolation,
    CapExceeded,
    InvalidIdeal,
    InvalidInput,
    ZeroRing,
)


@dataclass(frozen=True, eq=False)
class RingTable:
    """A finite commutative unital ring given by explicit tables.

    add and mul are flat row-major arrays of length n*n; neg[i] is the
    additive inverse of i.  The zero ring (zero == one, n == 1) is legal:
    it arises as quotient(R, R).
    """

    n: int
    add: array
    mul: array
    zero: int
    one: int
    neg: tuple[int, ...]
    label: str

    def add_at(self, i: int, j: int) -> int:
        return self.add[i * self.n + j]

    def mul_at(self, i: int, j: int) -> int:
        return self.mul[i * self.n + j]

    def sub_at(self, i: int, j: int) -> int:
        return self.add[i * self.n + self.neg[j]]

    def is_zero_ring(self) -> bool:
        return self.n == 1

    def __repr__(self) -> str:
        return f"<RingTable {self.label} order {self.n}>"


@dataclass(frozen=True, eq=True)
class IdealSet:
    """An ideal of a RingTable, as a sorted member-index tuple."""

    ring: RingTable
    members: tuple[int, ...]

    @property
    def nonzero_members(self) -> tuple[int, ...]:
        return tuple(m for m in self.members if m != self.ring.zero)

    def __repr__(self) -> str:
        return f"<IdealSet {set(self.members)} of {self.ring.label}>"


@dataclass(frozen=True, eq=True)
class SubringSet:
    """A subring of a RingTable; contains_one records whether the ambient
    identity belongs to it (a subring may have its own idempotent unit)."""

    ring: RingTable
    members: tuple[int, ...]
    contains_one: bool


@dataclass(frozen=True, eq=True)
class RingMorphism:
    """A ring homomorphism as an element-index mapping."""

    source: RingTable
    target: RingTable
    map: tuple[int, ...]
    unital: bool

    def __call__(self, i: int) -> int:
        return self.map[i]

    def kernel_members(self) -> tuple[int, ...]:
        z = self.target.zero
        return tuple(i for i in range(self.source.n) if self.map[i] == z)

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.n

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.n

    def is_bijective(self) -> bool:
        return self.is_injective() and self.source.n == self.target.n


def compose(outer: RingMorphism, inner: RingMorphism) -> RingMorphism:
    """outer after inner (inner first)."""
    if inner.target is not outer.source:
        raise InvalidInput("morphisms do not compose: target/source mismatch")
    return RingMorphism(
        source=inner.source,
        target=outer.target,
        map=tuple(outer.map[v] for v in inner.map),
        unital=inner.unital and outer.unital,
    )


def make_morphism(source: RingTable, target: RingTable, mapping: Sequence[int],
                  unital: bool) -> RingMorphism:
    """Validate and wrap an element mapping as a RingMorphism."""
    if len(mapping) != source.n:
        raise InvalidInput("morphism map length differs from source order")
    if any(not 0 <= v < target.n for v in mapping):
        raise InvalidInput("morphism map value out of target range")
    if mapping[source.zero] != target.zero:
        raise InvalidInput("morphism does not map zero to zero")
    if unital and mapping[source.one] != target.one:
        raise InvalidInput("morphism flagged unital but does not map one to one")
    ns, nt = source.n, target.n
    sadd, smul, tadd, tmul = source.add, source.mul, target.add, target.mul
    for i in range(ns):
        fi = mapping[i]
        for j in range(i, ns):
            fj = mapping[j]
            if mapping[sadd[i * ns + j]] != tadd[fi * nt + fj]:
                raise InvalidInput(f"map does not preserve addition at ({i},{j})")
            if mapping[smul[i * ns + j]] != tmul[fi * nt + fj]:
                raise InvalidInput(f"map does not preserve multiplication at ({i},{j})")
    return RingMorphism(source, target, tuple(mapping), unital)


# ---------------------------------------------------------------------------
# construction


def _flatten(table, n: int, name: str) -> array:
    if len(table) == n and all(isinstance(row, (list, tuple)) for row in table):
        flat = [v for row in table for v in row]
        if len(flat) != n * n:
            raise InvalidInput(f"{name} table is not {n}x{n}")
        return array("i", flat)
    if len(table) == n * n:
        return array("i", table)
    raise InvalidInput(f"{name} table is not {n}x{n}")


def _neg_table(n: int, add: array, zero: int) -> tuple[int, ...]:
    neg = [-1] * n
    for i in range(n):
        ri = i * n
        for j in range(n):
            if add[ri + j] == zero:
                neg[i] = j
                break
    return tuple(neg)


def ring_from_tables(add, mul, zero: int, one: int, label: str = "ring") -> RingTable:
    """Validate n-by-n tables (nested rows or flat) into a RingTable.

    Raises AxiomViolation naming the first failed ring axiom and a
    witnessing triple.
    """
    n = len(add) if add and isinstance(add[0], (list, tuple)) else _infer_order(add)
    if n < 1:
        raise InvalidInput("empty table")
    if n > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded(f"order {n} exceeds construction cap {caps.MAX_CONSTRUCTION_ORDER}")
    fadd = _flatten(add, n, "add")
    fmul = _flatten(mul, n, "mul")
    if not 0 <= zero < n or not 0 <= one < n:
        raise InvalidInput("zero/one index out of range")
    witness = kernels.ring_axiom_witness(n, fadd, fmul, zero, one, True)
    if witness is not None:
        law, i, j, k = witness
        raise AxiomViolation(law, (i, j, k))
    return RingTable(n, fadd, fmul, zero, one, _neg_table(n, fadd, zero), label)


def _infer_order(flat) -> int:
    n = int(round(len(flat) ** 0.5))
    if n * n != len(flat):
        raise InvalidInput("flat table length is not a perfect square")
    return n


def _build_trusted(n: int, fadd: array, fmul: array, zero: int, one: int,
                   label: str) -> RingTable:
    """Construct from arithmetic we own; re-validate within the enumeration cap."""
    if n > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded(f"order {n} exceeds construction cap {caps.MAX_CONSTRUCTION_ORDER}")
    if n <= caps.MAX_ENUMERATION_ORDER:
        witness = kernels.ring_axiom_witness(n, fadd, fmul, zero, one, True)
        if witness is not None:  # a bug in the constructor, not in user input
            law, i, j, k = witness
            raise AxiomViolation(law, (i, j, k))
    return RingTable(n, fadd, fmul, zero, one, _neg_table(n, fadd, zero), label)


def ring_zmod(n: int) -> RingTable:
    """The ring Z/n with canonical representatives 0..n-1.  Z/1 is the zero ring."""
    if n < 1:
        raise InvalidInput("ring_zmod requires n >= 1")
    if n > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded(f"order {n} exceeds construction cap {caps.MAX_CONSTRUCTION_ORDER}")
    fadd = array("i", [(i + j) % n for i in range(n) for j in range(n)])
    fmul = array("i", [(i * j) % n for i in range(n) for j in range(n)])
    return _build_trusted(n, fadd, fmul, 0, 1 % n, f"Z/{n}")


def ring_product(left: RingTable, right: RingTable) -> RingTable:
    """Componentwise product ring; (r, s) is encoded as index r*|S| + s."""
    n = left.n * right.n
    if n > caps.MAX_CONSTRUCTION_ORDER:
        raise CapExceeded(f"order {n} exceeds construction cap {caps.MAX_CONSTRUCTION_ORDER}")
    nl, nr = left.n, right.n
    addl, mull, addr, mulr = left.add, left.mul, right.add, right.mul
    add_rows = []
    mul_rows = []
    for a in range(nl):
        for b in range(nr):
            arow = a * nl
            brow = b * nr
            add_rows.extend(addl[arow + c] * nr + addr[brow + d]
                            for c in range(nl) for d in range(nr))
            mul_rows.extend(mull[arow + c] * nr + mulr[brow + d]
                            for c in range(nl) for d in range(nr))
    fadd = array("i", add_rows)
    fmul = array("i", mul_rows)
    zero = left.zero * nr + right.zero
    one = left.one * nr + right.one
    return _build_trusted(n, fadd, fmul, zero, one,
                          f"prod({left.label},{right.label})")


# ---------------------------------------------------------------------------
# ideals and quotients


def is_ideal_members(ring: RingTable, members: Iterable[int]) -> bool:
    mset = set(members)
    if ring.zero not in mset:
        return False
    if any(not 0 <= m < ring.n for m in mset):
        return False
    for a in mset:
        for b in mset:
            if ring.add_at(a, b) not in mset:
                return False
        for r in range(ring.n):
            if ring.mul_at(r, a) not in mset:
                return False
    return True


def make_ideal(ring: RingTable, members: Iterable[int]) -> IdealSet:
    ms = tuple(sorted(set(members)))
    if not is_ideal_members(ring, ms):
        raise InvalidIdeal(f"{set(ms)} is not an ideal of {ring.label}")
    return IdealSet(ring, ms)


def ideal_generated(ring: RingTable, gens: Iterable[int]) -> IdealSet:
    """Smallest ideal containing gens (closure fixpoint)."""
    gens = list(gens)
    if any(not 0 <= g < ring.n for g in gens):
        raise InvalidInput("generator index out of range")
    members = kernels.closure_ideal(ring.n, ring.add, ring.mul, ring.zero, gens)
    return IdealSet(ring, tuple(members))


def all_ideals(ring: RingTable) -> list[IdealSet]:
    """Every ideal of the ring, as the join closure of the principal ideals."""
    if ring.n > caps.MAX_ENUMERATION_ORDER:
        raise CapExceeded(f"order {ring.n} exceeds enumeration cap")
    seen: set[tuple[int, ...]] = set()
    worklist: list[tuple[int, ...]] = []
    for a in range(ring.n):
        m = tuple(kernels.closure_ideal(ring.n, ring.add, ring.mul, ring.zero, [a]))
        if m not in seen:
            seen.add(m)
            worklist.append(m)
    i = 0
    while i < len(worklist):
        cur = worklist[i]
        for j in range(i + 1):
            other = worklist[j]
            joined = tuple(kernels.closure_ideal(
                ring.n, ring.add, ring.mul, ring.zero, list(set(cur) | set(other))))
            if joined not in seen:
                seen.add(joined)
                worklist.append(joined)
        i += 1
    return [IdealSet(ring, m) for m in sorted(seen, key=lambda m: (len(m), m))]


def quotient(ring: RingTable, ideal: IdealSet) -> tuple[RingTable, RingMorphism]:
    """R/I with least-index coset representatives, plus the projection.

    The projection is unital and surjective with kernel exactly I.
    """
    if ideal.ring is not ring or not is_ideal_members(ring, ideal.members):
        raise InvalidIdeal("not a valid ideal of this ring")
    n = ring.n
    rep = [0] * n
    for x in range(n):
        rep[x] = min(ring.add_at(x, m) for m in ideal.members)
    reps = sorted(set(rep))
    index_of = {r: i for i, r in enumerate(reps)}
    qn = len(reps)
    qadd = array("i", [index_of[rep[ring.add_at(a, b)]] for a in reps for b in reps])
    qmul = array("i", [index_of[rep[ring.mul_at(a, b)]] for a in reps for b in reps])
    label = f"{ring.label}/({','.join(map(str, ideal.members))})"
    qring = _build_trusted(qn, qadd, qmul, index_of[rep[ring.zero]],
                           index_of[rep[ring.one]], label)
    proj = make_morphism(ring, qring, [index_of[rep[x]] for x in range(n)], unital=True)
    assert proj.kernel_members() == ideal.members
    assert proj.is_surjective()
    return qring, proj


# ---------------------------------------------------------------------------
# element structure


def units(ring: RingTable) -> dict[int, int]:
    """Invertible elements, each paired with an inverse."""
    inv = kernels.units_scan(ring.n, ring.mul, ring.one)
    return {i: v for i, v in enumerate(inv) if v >= 0}


def idempotents(ring: RingTable) -> tuple[int, ...]:
    return tuple(e for e in range(ring.n) if ring.mul_at(e, e) == e)


def primitive_idempotents(ring: RingTable) -> tuple[int, ...]:
    """Nonzero idempotents minimal under e <= f  iff  ef = e."""
    idems = [e for e in idempotents(ring) if e != ring.zero]
    prims = []
    for e in idems:
        if not any(f != e and ring.mul_at(f, e) == f for f in idems):
            prims.append(e)
    return tuple(prims)


def additive_order(ring: RingTable, x: int) -> int:
    m, t = 1, x
    while t != ring.zero:
        t = ring.add_at(t, x)
        m += 1
    return m


def characteristic(ring: RingTable) -> int:
    """Additive order of one (always positive for finite rings)."""
    return additive_order(ring, ring.one)


def is_field(ring: RingTable) -> bool:
    return ring.n >= 2 and len(units(ring)) == ring.n - 1


def maximal_ideals(ring: RingTable) -> list[IdealSet]:
    """All maximal ideals, via primitive-idempotent decomposition.

    Each primitive idempotent e cuts out a local factor Re; the factor's
    non-units pull back to one maximal ideal of the ring.  Sound and
    complete for finite commutative rings.  Every returned ideal is checked
    to have a field quotient.
    """
    if ring.is_zero_ring():
        raise ZeroRing("the zero ring has no maximal ideals")
    prims = primitive_idempotents(ring)
    assert prims, "a nonzero finite ring has a primitive idempotent"
    # structural sanity: primitive idempotents are orthogonal and sum to one
    for a in prims:
        for b in prims:
            if a != b:
                assert ring.mul_at(a, b) == ring.zero
    total = ring.zero
    for e in prims:
        total = ring.add_at(total, e)
    assert total == ring.one
    found = []
    for e in prims:
        factor = sorted({ring.mul_at(x, e) for x in range(ring.n)})
        funits = {u for u in factor
                  if any(ring.mul_at(u, v) == e for v in factor)}
        nonunits = set(factor) - funits
        members = tuple(sorted(x for x in range(ring.n)
                               if ring.mul_at(x, e) in nonunits))
        ideal = make_ideal(ring, members)
        qring, _ = quotient(ring, ideal)
        assert is_field(qring), "quotient by a maximal ideal must be a field"
        found.append(ideal)
    uniq = sorted({i.members for i in found})
    return [IdealSet(ring, m) for m in uniq]


def is_local(ring: RingTable) -> tuple[bool, IdealSet | None]:
    """Whether the non-units form an ideal; if so, that unique maximal ideal."""
    if ring.is_zero_ring():
        raise ZeroRing("locality is undefined for the zero ring")
    inv = kernels.units_scan(ring.n, ring.mul, ring.one)
    nonunits = [i for i in range(ring.n) if inv[i] < 0]
    nset = set(nonunits)
    for a in nonunits:
        for b in nonunits:
            if ring.add_at(a, b) not in nset:
                return False, None
    members = tuple(sorted(nonunits))
    assert is_ideal_members(ring, members)
    return True, IdealSet(ring, members)


# ---------------------------------------------------------------------------
# subrings


def subring_generated(ring: RingTable, seed: Iterable[int],
                      require_one: bool) -> SubringSet:
    """Closure of the seed (plus one if require_one) under +, -, *."""
    base = [ring.zero] + sorted(set(seed))
    if require_one:
        base.append(ring.one)
    members = kernels.closure_subring(ring.n, ring.add, ring.mul, base)
    return SubringSet(ring, tuple(members), ring.one in members)


def subring_as_ring(ring: RingTable, members: Sequence[int],
                    one: int | None = None) -> tuple[RingTable, RingMorphism]:
    """Reindex a multiplicatively closed subring as its own RingTable.

    ``one`` is the subring's multiplicative identity (defaults to the
    ambient one, which must then be a member).  The returned inclusion
    morphism is flagged unital exactly when ``one`` is the ambient one.
    """
    ms = tuple(sorted(set(members)))
    pos = {m: i for i, m in enumerate(ms)}
    if one is None:
        one = ring.one
    if one not in pos or ring.zero not in pos:
        raise InvalidInput("subring must contain its zero and designated one")
    k = len(ms)
    try:
        sadd = array("i", [pos[ring.add_at(a, b)] for a in ms for b in ms])
        smul = array("i", [pos[ring.mul_at(a, b)] for a in ms for b in ms])
    except KeyError as exc:
        raise InvalidInput(f"member set is not closed: hit {exc}") from exc
    label = f"{ring.label}{{{','.join(map(str, ms))}}}"
    sub = _build_trusted(k, sadd, smul, pos[ring.zero], pos[one], label)
    incl = make_morphism(sub, ring, ms, unital=(one == ring.one))
    return sub, incl


# ---------------------------------------------------------------------------
# homomorphism search


def _generating_sequence(ring: RingTable, unital: bool) -> tuple[list[int], list[int]]:
    """Greedy generator choice: repeatedly adjoin the least element outside
    the closure so far.  Returns (base, gens)."""
    base = [ring.zero] + ([ring.one] if unital else [])
    closed = set(kernels.closure_subring(ring.n, ring.add, ring.mul, base))
    gens: list[int] = []
    while len(closed) < ring.n:
        g = min(i for i in range(ring.n) if i not in closed)
        gens.append(g)
        closed = set(kernels.closure_subring(ring.n, ring.add, ring.mul, base + gens))
    return base, gens


def hom_enumerate(source: RingTable, target: RingTable, unital: bool = True,
                  *, bijective: bool = False,
                  first_only: bool = False) -> list[RingMorphism]:
    """All (unital) ring homomorphisms source -> target.

    Backtracks over images of a greedily computed generating sequence,
    propagating each partial assignment through the tables; surviving total
    maps are validated against the full tables on construction.
    """
    if source.n > caps.MAX_ENUMERATION_ORDER or target.n > caps.MAX_ENUMERATION_ORDER:
        raise CapExceeded("ring too large for homomorphism enumeration")
    if bijective and source.n != target.n:
        return []
    _, gens = _generating_sequence(source, unital)
    f0 = array("i", [-1] * source.n)
    f0[source.zero] = target.zero
    if unital:
        f0[source.one] = target.one
    if not kernels.propagate_partial_hom(source.n, target.n, source.add, source.mul,
                                         target.add, target.mul, f0):
        return []
    src_order = [additive_order(source, i) for i in range(source.n)]
    tgt_order = [additive_order(target, i) for i in range(target.n)]

    found: list[tuple[int, ...]] = []

    def dfs(depth: int, fmap: array) -> bool:
        if depth == len(gens):
            if bijective and len(set(fmap)) != source.n:
                return False
            found.append(tuple(fmap))
            return first_only
        g = gens[depth]
        for img in range(target.n):
            if src_order[g] % tgt_order[img] != 0:
                continue
            fnext = array("i", fmap)
            fnext[g] = img
            if not kernels.propagate_partial_hom(source.n, target.n, source.add,
                                                 source.mul, target.add, target.mul,
                                                 fnext):
                continue
            if bijective:
                assigned = [v for v in fnext if v >= 0]
                if len(set(assigned)) != len(assigned):
                    continue
            if dfs(depth + 1, fnext):
                return True
        return False

    dfs(0, f0)
    return [make_morphism(source, target, m, unital) for m in sorted(found)]


def find_isomorphism(left: RingTable, right: RingTable) -> RingMorphism | None:
    """A unital ring isomorphism, or None.

    Invariant pruning (order, characteristic, unit count, idempotent count)
    runs before the backtracking search.
    """
    if left.n != right.n:
        return None
    if characteristic(left) != characteristic(right):
        return None
    if len(units(left)) != len(units(right)):
        return None
    if len(idempotents(left)) != len(idempotents(right)):
        return None
    homs = hom_enumerate(left, right, unital=True, bijective=True, first_only=True)
    return homs[0] if homs else None
