"""Pure-Python twins of the compiled kernels, same signatures and results."""
import numpy as np


def apply_schedule(values, schedule):
    vals = values.tolist()
    for t, e, a, c, b, d in schedule.tolist():
        vals[t] = max(vals[a] + vals[c], vals[b] + vals[d]) - vals[e]
    values[:] = vals


def octahedra_ok(values, octs):
    vals = values.tolist()
    return all(
        vals[x] + vals[y] == max(vals[a] + vals[c], vals[b] + vals[d])
        for x, y, a, c, b, d in octs.tolist()
    )


def rhombi_ok(values, quads):
    vals = values.tolist()
    return all(vals[a] + vals[b] >= vals[c] + vals[d] for a, b, c, d in quads.tolist())


def search_fillings(values, free, lo_ptr, lo_rules, hi_ptr, hi_rules, collect):
    vals = values.tolist()
    free = free.tolist()
    lo_ptr, hi_ptr = lo_ptr.tolist(), hi_ptr.tolist()
    lo_rules, hi_rules = lo_rules.tolist(), hi_rules.tolist()
    solutions = []
    nfree = len(free)

    def rec(depth):
        if depth == nfree:
            if collect:
                solutions.append(np.array(vals, dtype=np.int64))
            return 1
        lo = max((vals[x] + vals[y] - vals[z] for x, y, z in lo_rules[lo_ptr[depth]:lo_ptr[depth + 1]]),
                 default=-(1 << 60))
        hi = min((vals[x] + vals[y] - vals[z] for x, y, z in hi_rules[hi_ptr[depth]:hi_ptr[depth + 1]]),
                 default=1 << 60)
        total = 0
        for v in range(lo, hi + 1):
            vals[free[depth]] = v
            total += rec(depth + 1)
        return total

    count = rec(0)
    return count, solutions
