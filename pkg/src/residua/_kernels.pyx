# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels.

One-for-one mirror of residua._kernels_py (the reference backend); see that
module for the contracts.  Tables come in as array('i') buffers.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

BACKEND_NAME = "cython"


def ring_axiom_witness(int n, int[::1] add, int[::1] mul, int zero, int one,
                       bint require_one=True):
    cdef int i, j, k, ij, t
    for i in range(n):
        for j in range(n):
            t = add[i * n + j]
            if t < 0 or t >= n:
                return ("add_range", i, j, -1)
    for i in range(n):
        for j in range(n):
            t = mul[i * n + j]
            if t < 0 or t >= n:
                return ("mul_range", i, j, -1)
    for i in range(n):
        if add[zero * n + i] != i:
            return ("zero_identity", i, -1, -1)
    for i in range(n):
        t = 0
        for j in range(n):
            if add[i * n + j] == zero:
                t = 1
                break
        if t == 0:
            return ("add_inverse", i, -1, -1)
    for i in range(n):
        for j in range(i + 1, n):
            if add[i * n + j] != add[j * n + i]:
                return ("add_comm", i, j, -1)
    for i in range(n):
        for j in range(n):
            ij = add[i * n + j]
            for k in range(n):
                if add[ij * n + k] != add[i * n + add[j * n + k]]:
                    return ("add_assoc", i, j, k)
    for i in range(n):
        for j in range(i + 1, n):
            if mul[i * n + j] != mul[j * n + i]:
                return ("mul_comm", i, j, -1)
    if require_one:
        for i in range(n):
            if mul[one * n + i] != i:
                return ("one_identity", i, -1, -1)
    for i in range(n):
        for j in range(n):
            ij = mul[i * n + j]
            for k in range(n):
                if mul[ij * n + k] != mul[i * n + mul[j * n + k]]:
                    return ("mul_assoc", i, j, k)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if mul[i * n + add[j * n + k]] != add[mul[i * n + j] * n + mul[i * n + k]]:
                    return ("distributivity", i, j, k)
    return None


def action_axiom_witness(int nk, int n, int[::1] kadd, int[::1] kmul, int kone,
                         int[::1] add, int[::1] mul, int[::1] action):
    cdef int k, l, x, y, t, rkl
    for k in range(nk):
        for x in range(n):
            t = action[k * n + x]
            if t < 0 or t >= n:
                return ("action_range", k, x, -1)
    for x in range(n):
        if action[kone * n + x] != x:
            return ("action_unital", x, -1, -1)
    for k in range(nk):
        for l in range(nk):
            rkl = kmul[k * nk + l] * n
            for x in range(n):
                if action[rkl + x] != action[k * n + action[l * n + x]]:
                    return ("action_assoc", k, l, x)
    for k in range(nk):
        for l in range(nk):
            for x in range(n):
                if action[kadd[k * nk + l] * n + x] != add[action[k * n + x] * n + action[l * n + x]]:
                    return ("action_add_scalar", k, l, x)
    for k in range(nk):
        for x in range(n):
            for y in range(n):
                if action[k * n + add[x * n + y]] != add[action[k * n + x] * n + action[k * n + y]]:
                    return ("action_add_carrier", k, x, y)
    for k in range(nk):
        for x in range(n):
            for y in range(n):
                if action[k * n + mul[x * n + y]] != mul[action[k * n + x] * n + y]:
                    return ("action_mul", k, x, y)
    return None


def units_scan(int n, int[::1] mul, int one):
    cdef int i, j
    inv = [-1] * n
    for i in range(n):
        for j in range(n):
            if mul[i * n + j] == one:
                inv[i] = j
                break
    return inv


def closure_subring(int n, int[::1] add, int[::1] mul, seed):
    cdef unsigned char *in_set = <unsigned char *> PyMem_Malloc(n)
    cdef int *members = <int *> PyMem_Malloc(n * sizeof(int))
    if in_set == NULL or members == NULL:
        PyMem_Free(in_set)
        PyMem_Free(members)
        raise MemoryError()
    cdef int count = 0, i, j, x, y, t, s
    try:
        for i in range(n):
            in_set[i] = 0
        for s_obj in seed:
            s = s_obj
            if not in_set[s]:
                in_set[s] = 1
                members[count] = s
                count += 1
        i = 0
        while i < count:
            x = members[i]
            for j in range(i + 1):
                y = members[j]
                t = add[x * n + y]
                if not in_set[t]:
                    in_set[t] = 1
                    members[count] = t
                    count += 1
                t = mul[x * n + y]
                if not in_set[t]:
                    in_set[t] = 1
                    members[count] = t
                    count += 1
            i += 1
        return sorted([members[i] for i in range(count)])
    finally:
        PyMem_Free(in_set)
        PyMem_Free(members)


def closure_ideal(int n, int[::1] add, int[::1] mul, int zero, gens):
    cdef unsigned char *in_set = <unsigned char *> PyMem_Malloc(n)
    cdef int *members = <int *> PyMem_Malloc(n * sizeof(int))
    if in_set == NULL or members == NULL:
        PyMem_Free(in_set)
        PyMem_Free(members)
        raise MemoryError()
    cdef int count = 0, i, j, x, t, r, g
    try:
        for i in range(n):
            in_set[i] = 0
        in_set[zero] = 1
        members[0] = zero
        count = 1
        for g_obj in gens:
            g = g_obj
            if not in_set[g]:
                in_set[g] = 1
                members[count] = g
                count += 1
        i = 0
        while i < count:
            x = members[i]
            for j in range(i + 1):
                t = add[x * n + members[j]]
                if not in_set[t]:
                    in_set[t] = 1
                    members[count] = t
                    count += 1
            for r in range(n):
                t = mul[r * n + x]
                if not in_set[t]:
                    in_set[t] = 1
                    members[count] = t
                    count += 1
            i += 1
        return sorted([members[i] for i in range(count)])
    finally:
        PyMem_Free(in_set)
        PyMem_Free(members)


cdef inline bint _scan_consistent(int k, int n_r, int n_s,
                                  int[::1] add_r, int[::1] mul_r,
                                  int[::1] add_s, int[::1] mul_s,
                                  int *fmap,
                                  int *ares, int *aoff,
                                  int *mres, int *moff) noexcept:
    cdef int i, t, c, fi, fk = fmap[k]
    for i in range(k + 1):
        fi = fmap[i]
        t = add_r[i * n_r + k]
        if t <= k and fmap[t] != add_s[fi * n_s + fk]:
            return 0
        t = mul_r[i * n_r + k]
        if t <= k and fmap[t] != mul_s[fi * n_s + fk]:
            return 0
    for c in range(aoff[k], aoff[k + 1]):
        i = ares[2 * c]
        t = ares[2 * c + 1]
        if fk != add_s[fmap[i] * n_s + fmap[t]]:
            return 0
    for c in range(moff[k], moff[k + 1]):
        i = mres[2 * c]
        t = mres[2 * c + 1]
        if fk != mul_s[fmap[i] * n_s + fmap[t]]:
            return 0
    return 1


def hom_scan(int n_r, int n_s, int[::1] add_r, int[::1] mul_r,
             int[::1] add_s, int[::1] mul_s, int one_r, int one_s,
             bint unital, int limit=-1):
    # CSR buckets of result-position constraints: pairs (i, j) whose table
    # result index exceeds both operands, keyed by the result index
    cdef int npairs = n_r * (n_r + 1) // 2
    cdef int *ares = <int *> PyMem_Malloc(npairs * 2 * sizeof(int))
    cdef int *mres = <int *> PyMem_Malloc(npairs * 2 * sizeof(int))
    cdef int *aoff = <int *> PyMem_Malloc((n_r + 1) * sizeof(int))
    cdef int *moff = <int *> PyMem_Malloc((n_r + 1) * sizeof(int))
    cdef int *afill = <int *> PyMem_Malloc(n_r * sizeof(int))
    cdef int *mfill = <int *> PyMem_Malloc(n_r * sizeof(int))
    cdef int *fmap = <int *> PyMem_Malloc(n_r * sizeof(int))
    cdef int *next_img = <int *> PyMem_Malloc(n_r * sizeof(int))
    if (ares == NULL or mres == NULL or aoff == NULL or moff == NULL
            or afill == NULL or mfill == NULL or fmap == NULL or next_img == NULL):
        PyMem_Free(ares); PyMem_Free(mres); PyMem_Free(aoff); PyMem_Free(moff)
        PyMem_Free(afill); PyMem_Free(mfill); PyMem_Free(fmap); PyMem_Free(next_img)
        raise MemoryError()
    cdef int i, j, t, pos, cand, c
    out = []
    try:
        for i in range(n_r):
            afill[i] = 0
            mfill[i] = 0
            fmap[i] = -1
        for i in range(n_r):
            for j in range(i, n_r):
                t = add_r[i * n_r + j]
                if t > j:
                    afill[t] += 1
                t = mul_r[i * n_r + j]
                if t > j:
                    mfill[t] += 1
        aoff[0] = 0
        moff[0] = 0
        for i in range(n_r):
            aoff[i + 1] = aoff[i] + afill[i]
            moff[i + 1] = moff[i] + mfill[i]
            afill[i] = aoff[i]
            mfill[i] = moff[i]
        for i in range(n_r):
            for j in range(i, n_r):
                t = add_r[i * n_r + j]
                if t > j:
                    ares[2 * afill[t]] = i
                    ares[2 * afill[t] + 1] = j
                    afill[t] += 1
                t = mul_r[i * n_r + j]
                if t > j:
                    mres[2 * mfill[t]] = i
                    mres[2 * mfill[t] + 1] = j
                    mfill[t] += 1
        pos = 0
        next_img[0] = 0
        while pos >= 0:
            if unital and pos == one_r:
                if next_img[pos] == 0:
                    cand = one_s
                    next_img[pos] = n_s
                else:
                    cand = -1
            elif next_img[pos] < n_s:
                cand = next_img[pos]
                next_img[pos] += 1
            else:
                cand = -1
            if cand < 0:
                fmap[pos] = -1
                pos -= 1
                continue
            fmap[pos] = cand
            if _scan_consistent(pos, n_r, n_s, add_r, mul_r, add_s, mul_s,
                                fmap, ares, aoff, mres, moff):
                pos += 1
                if pos == n_r:
                    out.append(tuple([fmap[i] for i in range(n_r)]))
                    if limit > 0 and len(out) >= limit:
                        break
                    pos -= 1
                else:
                    next_img[pos] = 0
        return out
    finally:
        PyMem_Free(ares); PyMem_Free(mres); PyMem_Free(aoff); PyMem_Free(moff)
        PyMem_Free(afill); PyMem_Free(mfill); PyMem_Free(fmap); PyMem_Free(next_img)


def propagate_partial_hom(int n_r, int n_s, int[::1] add_r, int[::1] mul_r,
                          int[::1] add_s, int[::1] mul_s, int[::1] fmap):
    cdef bint changed = True
    cdef int i, j, t, v, fi, fj, ft
    while changed:
        changed = False
        for i in range(n_r):
            fi = fmap[i]
            if fi < 0:
                continue
            for j in range(i, n_r):
                fj = fmap[j]
                if fj < 0:
                    continue
                t = add_r[i * n_r + j]
                v = add_s[fi * n_s + fj]
                ft = fmap[t]
                if ft < 0:
                    fmap[t] = v
                    changed = True
                elif ft != v:
                    return 0
                t = mul_r[i * n_r + j]
                v = mul_s[fi * n_s + fj]
                ft = fmap[t]
                if ft < 0:
                    fmap[t] = v
                    changed = True
                elif ft != v:
                    return 0
    return 1
