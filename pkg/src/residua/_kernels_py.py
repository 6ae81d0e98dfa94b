"""Pure-Python table kernels.

Operation tables are flat row-major integer sequences: entry (i, j) of an
n-by-n table lives at ``t[i*n + j]``.  Everything here treats its inputs as
read-only (except ``propagate_partial_hom``, which fills its map in place)
and is mirrored one-for-one by the compiled backend in ``residua._kernels``;
the two must stay byte-compatible in results, including witness tuples and
enumeration order.
"""

from __future__ import annotations

BACKEND_NAME = "python"


def ring_axiom_witness(n, add, mul, zero, one, require_one=True):
    """First violated commutative-ring axiom, or None if all hold.

    With require_one=False the multiplicative-identity law is skipped, which
    turns this into the axiom check for non-unital commutative rings.
    Returns (law, i, j, k); slots not used by the law are -1.
    """
    for i in range(n):
        ri = i * n
        for j in range(n):
            if not 0 <= add[ri + j] < n:
                return ("add_range", i, j, -1)
    for i in range(n):
        ri = i * n
        for j in range(n):
            if not 0 <= mul[ri + j] < n:
                return ("mul_range", i, j, -1)
    zrow = zero * n
    for i in range(n):
        if add[zrow + i] != i:
            return ("zero_identity", i, -1, -1)
    for i in range(n):
        ri = i * n
        if not any(add[ri + j] == zero for j in range(n)):
            return ("add_inverse", i, -1, -1)
    for i in range(n):
        ri = i * n
        for j in range(i + 1, n):
            if add[ri + j] != add[j * n + i]:
                return ("add_comm", i, j, -1)
    for i in range(n):
        ri = i * n
        for j in range(n):
            ij = add[ri + j]
            rj = j * n
            for k in range(n):
                if add[ij * n + k] != add[ri + add[rj + k]]:
                    return ("add_assoc", i, j, k)
    for i in range(n):
        ri = i * n
        for j in range(i + 1, n):
            if mul[ri + j] != mul[j * n + i]:
                return ("mul_comm", i, j, -1)
    if require_one:
        orow = one * n
        for i in range(n):
            if mul[orow + i] != i:
                return ("one_identity", i, -1, -1)
    for i in range(n):
        ri = i * n
        for j in range(n):
            ij = mul[ri + j]
            rj = j * n
            for k in range(n):
                if mul[ij * n + k] != mul[ri + mul[rj + k]]:
                    return ("mul_assoc", i, j, k)
    # One-sided suffices: multiplication was already shown commutative.
    for i in range(n):
        ri = i * n
        for j in range(n):
            rj = j * n
            for k in range(n):
                if mul[ri + add[rj + k]] != add[mul[ri + j] * n + mul[ri + k]]:
                    return ("distributivity", i, j, k)
    return None


def action_axiom_witness(nk, n, kadd, kmul, kone, add, mul, action):
    """First violated scalar-action axiom, or None.

    ``action`` is an nk-by-n table: action[k*n + x] is the scalar k acting
    on carrier element x.  Assumes carrier add/mul already passed
    ring_axiom_witness(require_one=False).  Returns (law, a, b, c).
    """
    for k in range(nk):
        rk = k * n
        for x in range(n):
            if not 0 <= action[rk + x] < n:
                return ("action_range", k, x, -1)
    orow = kone * n
    for x in range(n):
        if action[orow + x] != x:
            return ("action_unital", x, -1, -1)
    for k in range(nk):
        rk = k * n
        for l in range(nk):
            rkl = kmul[k * nk + l] * n
            rl = l * n
            for x in range(n):
                if action[rkl + x] != action[rk + action[rl + x]]:
                    return ("action_assoc", k, l, x)
    for k in range(nk):
        rk = k * n
        for l in range(nk):
            rl = l * n
            for x in range(n):
                if action[kadd[k * nk + l] * n + x] != add[action[rk + x] * n + action[rl + x]]:
                    return ("action_add_scalar", k, l, x)
    for k in range(nk):
        rk = k * n
        for x in range(n):
            rx = x * n
            for y in range(n):
                if action[rk + add[rx + y]] != add[action[rk + x] * n + action[rk + y]]:
                    return ("action_add_carrier", k, x, y)
    # k(xy) = (kx)y; the mirrored law follows from carrier commutativity.
    for k in range(nk):
        rk = k * n
        for x in range(n):
            rx = x * n
            for y in range(n):
                if action[rk + mul[rx + y]] != mul[action[rk + x] * n + y]:
                    return ("action_mul", k, x, y)
    return None


def units_scan(n, mul, one):
    """Inverse table: inv[i] is some j with i*j = one, or -1 if none."""
    inv = [-1] * n
    for i in range(n):
        ri = i * n
        for j in range(n):
            if mul[ri + j] == one:
                inv[i] = j
                break
    return inv


def closure_subring(n, add, mul, seed):
    """Sorted closure of ``seed`` under addition and multiplication.

    In a finite ring additive closure already yields additive inverses, so
    this is the subring (not necessarily unital) generated by the seed.
    Empty seed gives the empty list; callers seed zero/one themselves.
    """
    in_set = bytearray(n)
    members = []
    for s in seed:
        if not in_set[s]:
            in_set[s] = 1
            members.append(s)
    i = 0
    while i < len(members):
        x = members[i]
        rx = x * n
        for j in range(i + 1):
            y = members[j]
            t = add[rx + y]
            if not in_set[t]:
                in_set[t] = 1
                members.append(t)
            t = mul[rx + y]
            if not in_set[t]:
                in_set[t] = 1
                members.append(t)
        i += 1
    return sorted(members)


def closure_ideal(n, add, mul, zero, gens):
    """Sorted member list of the smallest ideal containing ``gens``."""
    in_set = bytearray(n)
    members = [zero]
    in_set[zero] = 1
    for g in gens:
        if not in_set[g]:
            in_set[g] = 1
            members.append(g)
    i = 0
    while i < len(members):
        x = members[i]
        rx = x * n
        for j in range(i + 1):
            t = add[rx + members[j]]
            if not in_set[t]:
                in_set[t] = 1
                members.append(t)
        for r in range(n):
            t = mul[r * n + x]
            if not in_set[t]:
                in_set[t] = 1
                members.append(t)
        i += 1
    return sorted(members)


def hom_scan(n_r, n_s, add_r, mul_r, add_s, mul_s, one_r, one_s, unital, limit=-1):
    """All maps R -> S preserving + and * , by exhaustive scan.

    Walks the full space of n_s**n_r assignments element by element in index
    order, abandoning a prefix as soon as it violates a constraint among the
    already-assigned positions.  Independent of (and the oracle for) the
    generator-based enumeration in residua.rings.  Results come out in
    lexicographic order of the map tuple.  ``limit`` > 0 stops early.
    """
    # Constraints whose *result* index exceeds both operands: checked when
    # the result position gets its image.
    add_results = [[] for _ in range(n_r)]
    mul_results = [[] for _ in range(n_r)]
    for i in range(n_r):
        for j in range(i, n_r):
            t = add_r[i * n_r + j]
            if t > j:
                add_results[t].append((i, j))
            t = mul_r[i * n_r + j]
            if t > j:
                mul_results[t].append((i, j))
    fmap = [-1] * n_r
    out = []

    def consistent_at(k):
        fk = fmap[k]
        for i in range(k + 1):
            fi = fmap[i]
            t = add_r[i * n_r + k]
            if t <= k and fmap[t] != add_s[fi * n_s + fk]:
                return False
            t = mul_r[i * n_r + k]
            if t <= k and fmap[t] != mul_s[fi * n_s + fk]:
                return False
        for (i, j) in add_results[k]:
            if fk != add_s[fmap[i] * n_s + fmap[j]]:
                return False
        for (i, j) in mul_results[k]:
            if fk != mul_s[fmap[i] * n_s + fmap[j]]:
                return False
        return True

    def dfs(k):
        if k == n_r:
            out.append(tuple(fmap))
            return limit > 0 and len(out) >= limit
        images = (one_s,) if (unital and k == one_r) else range(n_s)
        for img in images:
            fmap[k] = img
            if consistent_at(k) and dfs(k + 1):
                return True
        fmap[k] = -1
        return False

    dfs(0)
    return out


def propagate_partial_hom(n_r, n_s, add_r, mul_r, add_s, mul_s, fmap):
    """Close a partial map (-1 = unset) under f(a+b)=f(a)+f(b), f(ab)=f(a)f(b).

    Mutates ``fmap`` in place.  Returns 1 if a consistent fixpoint was
    reached, 0 on contradiction.  At a total fixpoint every pair has been
    checked, so a full map surviving this is a homomorphism.
    """
    changed = True
    while changed:
        changed = False
        for i in range(n_r):
            fi = fmap[i]
            if fi < 0:
                continue
            ri = i * n_r
            for j in range(i, n_r):
                fj = fmap[j]
                if fj < 0:
                    continue
                t = add_r[ri + j]
                v = add_s[fi * n_s + fj]
                ft = fmap[t]
                if ft < 0:
                    fmap[t] = v
                    changed = True
                elif ft != v:
                    return 0
                t = mul_r[ri + j]
                v = mul_s[fi * n_s + fj]
                ft = fmap[t]
                if ft < 0:
                    fmap[t] = v
                    changed = True
                elif ft != v:
                    return 0
    return 1
