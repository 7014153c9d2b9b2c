"""Independent reference computations used by the tests."""

import itertools
import math
from collections import Counter


def reflect_closure(family, coords):
    """Weyl orbit by closing {coords} under the simple reflections."""
    n = len(coords)

    def gens(v):
        v = list(v)
        for i in range(n - 1):
            w = v[:]
            w[i], w[i + 1] = w[i + 1], w[i]
            yield tuple(w)
        if family in ("B", "C"):
            w = v[:]
            w[-1] = -w[-1]
            yield tuple(w)
        if family == "D":
            w = v[:]
            w[-2], w[-1] = -w[-1], -w[-2]
            yield tuple(w)

    seen = {tuple(coords)}
    todo = [tuple(coords)]
    while todo:
        v = todo.pop()
        for w in gens(v):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    if family == "A":
        seen = {tuple(x - min(w) for x in w) for w in seen}
    return seen


def naive_permanent(m):
    n = len(m)
    return sum(math.prod(m[i][p[i]] for i in range(n)) for p in itertools.permutations(range(n)))


def brute_wedge(points, alpha):
    """Pre-division multiset of sum alpha_nu p_iota(nu) over injections."""
    out = Counter()
    for choice in itertools.permutations(points, len(alpha)):
        out[tuple(sum(a * p[k] for a, p in zip(alpha, choice)) for k in range(len(points[0])))] += 1
    return out


def brute_signed_sums(reps, alpha):
    out = Counter()
    k = len(reps[0])
    for choice in itertools.permutations(reps, len(alpha)):
        for signs in itertools.product((1, -1), repeat=len(alpha)):
            out[tuple(sum(a * s * p[j] for a, s, p in zip(alpha, signs, choice))
                      for j in range(k))] += 1
    return out


# Chow ring of E_1 x ... x E_g in the fiber classes F_j: F_j^2 = 0, so
# elements are dicts {bitmask of a squarefree monomial: coefficient}.

def _mul(a, b):
    out = Counter()
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb == 0:
                out[ma | mb] += ca * cb
    return out


def chern_euler(g, divisors):
    """e(X) = deg( prod D_i * c(T_A|X) / prod(1 + D_i) ) for X = D_1 ... D_r."""
    total = Counter({0: 1})
    for row in divisors:
        D = Counter({1 << j: m for j, m in enumerate(row) if m})
        total = _mul(total, D)
        inv = Counter({0: 1})
        power = Counter({0: 1})
        for k in range(1, g + 1):
            power = _mul(power, D)
            for mask, c in power.items():
                inv[mask] += (-1) ** k * c
        total = _mul(total, inv)
    return total.get((1 << g) - 1, 0)
