# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled scan kernels.

Same contracts and scan orders as ringua._purekernels; the two backends must
return identical values. Tables arrive as C-contiguous int32 2-D arrays and
subsets as uint64 bitmasks (carrier size <= 64; ringua.kernels enforces this
and falls back to the pure twin otherwise).
"""

from libc.stdint cimport int32_t, uint64_t


def first_noncommutative(const int32_t[:, ::1] t):
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                if t[i, j] != t[j, i]:
                    with gil:
                        return (i, j)
    return None


def first_nonassociative(const int32_t[:, ::1] t):
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i, j, k
    cdef int32_t ij
    with nogil:
        for i in range(n):
            for j in range(n):
                ij = t[i, j]
                for k in range(n):
                    if t[ij, k] != t[i, t[j, k]]:
                        with gil:
                            return (i, j, k)
    return None


def first_left_distrib_violation(const int32_t[:, ::1] add,
                                 const int32_t[:, ::1] mul):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t r, a, b
    cdef int32_t ra
    with nogil:
        for r in range(n):
            for a in range(n):
                ra = mul[r, a]
                for b in range(n):
                    if mul[r, add[a, b]] != add[ra, mul[r, b]]:
                        with gil:
                            return (r, a, b)
    return None


def first_right_distrib_violation(const int32_t[:, ::1] add,
                                  const int32_t[:, ::1] mul):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t a, b, r
    cdef int32_t ab
    with nogil:
        for a in range(n):
            for b in range(n):
                ab = add[a, b]
                for r in range(n):
                    if mul[ab, r] != add[mul[a, r], mul[b, r]]:
                        with gil:
                            return (a, b, r)
    return None


cdef uint64_t _close_under_add(const int32_t[:, ::1] add, uint64_t mask) nogil:
    cdef int32_t members[64]
    cdef Py_ssize_t count = 0, head = 0, i, limit
    cdef Py_ssize_t n = add.shape[0]
    cdef int32_t x, z
    if mask == 0:
        return 0
    for i in range(n):
        if (mask >> i) & 1:
            members[count] = <int32_t> i
            count += 1
    while head < count:
        x = members[head]
        head += 1
        limit = count
        for i in range(limit):
            z = add[x, members[i]]
            if not (mask >> z) & 1:
                mask |= (<uint64_t> 1) << z
                members[count] = z
                count += 1
    return mask


def close_under_add(const int32_t[:, ::1] add, mask):
    return int(_close_under_add(add, <uint64_t> mask))


def additive_subgroups(const int32_t[:, ::1] add, Py_ssize_t zero):
    cdef Py_ssize_t n = add.shape[0]
    cdef uint64_t trivial = (<uint64_t> 1) << zero
    cdef Py_ssize_t g
    cdef uint64_t sub, cyc, union_mask, join
    cyclic_set = set()
    for g in range(n):
        cyclic_set.add(_close_under_add(add, ((<uint64_t> 1) << g) | trivial))
    cyclics = sorted(cyclic_set)
    found = {int(trivial)}
    seeded = set()
    queue = [int(trivial)]
    while queue:
        sub = <uint64_t> queue.pop()
        for c in cyclics:
            cyc = <uint64_t> c
            union_mask = sub | cyc
            if union_mask == sub:
                continue
            key = int(union_mask)
            if key in seeded:
                continue
            seeded.add(key)
            join = _close_under_add(add, union_mask)
            jkey = int(join)
            if jkey not in found:
                found.add(jkey)
                queue.append(jkey)
    return sorted(found, key=lambda m: (m.bit_count(), m))


cdef int _absorption_scan(const int32_t[:, ::1] mul, uint64_t mask, bint left,
                          Py_ssize_t* wr, Py_ssize_t* wa, Py_ssize_t* wp) nogil:
    cdef int32_t members[64]
    cdef Py_ssize_t count = 0, i, r
    cdef Py_ssize_t n = mul.shape[0]
    cdef int32_t a, p
    for i in range(n):
        if (mask >> i) & 1:
            members[count] = <int32_t> i
            count += 1
    for r in range(n):
        for i in range(count):
            a = members[i]
            p = mul[r, a] if left else mul[a, r]
            if not (mask >> p) & 1:
                wr[0] = r
                wa[0] = a
                wp[0] = p
                return 1
    return 0


def absorption_witness(const int32_t[:, ::1] mul, mask, side):
    cdef bint left
    if side == "left":
        left = True
    elif side == "right":
        left = False
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    cdef Py_ssize_t wr = 0, wa = 0, wp = 0
    if _absorption_scan(mul, <uint64_t> mask, left, &wr, &wa, &wp):
        if left:
            return (wr, wa, wp)
        return (wa, wr, wp)
    return None


def filter_absorbing(const int32_t[:, ::1] mul, const uint64_t[::1] masks, side):
    cdef bint left
    if side == "left":
        left = True
    elif side == "right":
        left = False
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    cdef Py_ssize_t m = masks.shape[0]
    cdef Py_ssize_t idx
    cdef Py_ssize_t wr = 0, wa = 0, wp = 0
    out = []
    for idx in range(m):
        out.append(_absorption_scan(mul, masks[idx], left, &wr, &wa, &wp) == 0)
    return out
