# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: octahedron schedules, rhombus checks, hive filling search."""
import numpy as np

cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t

cnp.import_array()


def apply_schedule(int64_t[::1] values, const int32_t[:, ::1] schedule):
    """Each row (t, e, a, c, b, d) sets values[t] = max(a+c, b+d) - values[e]."""
    cdef Py_ssize_t r
    cdef int64_t s1, s2
    for r in range(schedule.shape[0]):
        s1 = values[schedule[r, 2]] + values[schedule[r, 3]]
        s2 = values[schedule[r, 4]] + values[schedule[r, 5]]
        values[schedule[r, 0]] = (s1 if s1 > s2 else s2) - values[schedule[r, 1]]


def octahedra_ok(const int64_t[::1] values, const int32_t[:, ::1] octs):
    """Each row (x, y, a, c, b, d) must satisfy x + y == max(a+c, b+d)."""
    cdef Py_ssize_t r
    cdef int64_t s1, s2
    for r in range(octs.shape[0]):
        s1 = values[octs[r, 2]] + values[octs[r, 3]]
        s2 = values[octs[r, 4]] + values[octs[r, 5]]
        if values[octs[r, 0]] + values[octs[r, 1]] != (s1 if s1 > s2 else s2):
            return False
    return True


def rhombi_ok(const int64_t[::1] values, const int32_t[:, ::1] quads):
    """Each row (a, b, c, d) must satisfy a + b >= c + d."""
    cdef Py_ssize_t r
    for r in range(quads.shape[0]):
        if values[quads[r, 0]] + values[quads[r, 1]] < values[quads[r, 2]] + values[quads[r, 3]]:
            return False
    return True


def search_fillings(int64_t[::1] values, const int32_t[::1] free,
                    const int32_t[::1] lo_ptr, const int32_t[:, ::1] lo_rules,
                    const int32_t[::1] hi_ptr, const int32_t[:, ::1] hi_rules,
                    bint collect):
    """Depth-first search over the free points.

    Free point p is bounded below by values[x]+values[y]-values[z] for each
    lower rule (x, y, z) in lo_ptr[p]:lo_ptr[p+1], and above likewise; the
    rules only reference points fixed before p. Returns (count, solutions).
    """
    cdef Py_ssize_t nfree = free.shape[0]
    cdef Py_ssize_t depth = 0
    cdef Py_ssize_t r
    cdef int64_t lo, hi, v
    cdef long count = 0
    cdef int64_t[::1] upper = np.zeros(max(nfree, 1), dtype=np.int64)
    solutions = []
    if nfree == 0:
        if collect:
            solutions.append(np.asarray(values).copy())
        return 1, solutions

    # entering depth: compute bounds, start at the lower one
    while True:
        lo = -(1 << 60)
        hi = 1 << 60
        for r in range(lo_ptr[depth], lo_ptr[depth + 1]):
            v = values[lo_rules[r, 0]] + values[lo_rules[r, 1]] - values[lo_rules[r, 2]]
            if v > lo:
                lo = v
        for r in range(hi_ptr[depth], hi_ptr[depth + 1]):
            v = values[hi_rules[r, 0]] + values[hi_rules[r, 1]] - values[hi_rules[r, 2]]
            if v < hi:
                hi = v
        if lo <= hi:
            values[free[depth]] = lo
            upper[depth] = hi
            if depth + 1 == nfree:
                count += hi - lo + 1
                if collect:
                    v = lo
                    while v <= hi:
                        values[free[depth]] = v
                        solutions.append(np.asarray(values).copy())
                        v += 1
            else:
                depth += 1
                continue
        # backtrack to the deepest level that can still advance
        while True:
            if depth == 0:
                return count, solutions
            depth -= 1
            if values[free[depth]] < upper[depth]:
                values[free[depth]] += 1
                depth += 1
                break
