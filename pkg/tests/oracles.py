"""Naive reference implementations over raw tuples.

Deliberately independent of the package internals: generation is
product-and-filter, composition is direct indexing, and predicates are
transcribed from their definitions.  Used to cross-validate the
optimized code paths.
"""

import itertools


def naive_endos(n):
    """All monotone self-maps of {0..n-1} as raw tuples."""
    return [
        t
        for t in itertools.product(range(n), repeat=n)
        if all(t[i] <= t[i + 1] for i in range(n - 1))
    ]


def naive_compose(a, b):
    """Left-to-right: apply a, then b."""
    return tuple(b[x] for x in a)


def naive_add(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def naive_is_idempotent(t):
    return naive_compose(t, t) == t


def naive_omega(t):
    acc, k = t, 1
    while not naive_is_idempotent(acc):
        acc = naive_compose(acc, t)
        k += 1
    return acc, k


def naive_fixed(t):
    return tuple(x for x in range(len(t)) if t[x] == x)


def naive_jumps(t):
    out = []
    for j in range(1, len(t)):
        cond1 = t[j - 1] <= j - 1 and t[j] > j
        cond2 = t[j - 1] < j - 1 and t[j] >= j
        if cond1 or cond2:
            out.append(j)
    return tuple(out)


def naive_catalan(limit):
    """First ``limit`` Catalan numbers by the convolution recurrence."""
    cs = [1]
    for p in range(limit - 1):
        cs.append(sum(cs[i] * cs[p - i] for i in range(p + 1)))
    return cs
