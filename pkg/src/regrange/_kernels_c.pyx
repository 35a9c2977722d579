# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: same API and values as the pure twin in _kernels_py.py.

Exponents are machine integers; counting stays on Python integers so nothing
overflows.  Term generation fills a C exponent buffer and emits tuples, which
keeps the hash-set membership pattern of the callers unchanged.
"""

from itertools import islice
from math import comb

BACKEND = "compiled"


def binomial(n, m):
    """Binomial coefficient, null when m < 0 or n < m, and C(n, 0) = 1 for n >= 0."""
    if m < 0 or n < m:
        return 0
    return comb(n, m)


def _largest_top(rem, i):
    lo = i
    hi = i + 1
    while comb(hi, i) <= rem:
        hi *= 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if comb(mid, i) <= rem:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_tops(a, t):
    """Greedy tops (k(t), k(t-1), ..., k(j)) of the base-t binomial expansion of a."""
    if a <= 0:
        raise ValueError("macaulay representation requires a >= 1")
    if t <= 0:
        raise ValueError("macaulay representation requires base t >= 1")
    tops = []
    rem = a
    i = t
    while rem > 0:
        k = _largest_top(rem, i)
        tops.append(k)
        rem -= comb(k, i)
        i -= 1
    return tuple(tops)


def growth(a, t):
    """Shift every top of the base-t expansion up by one: maximal degree growth."""
    if t <= 0:
        raise ValueError("growth requires base t >= 1")
    if a < 0:
        raise ValueError("growth requires a >= 0")
    if a == 0:
        return 0
    total = 0
    i = t
    for k in macaulay_tops(a, t):
        total += binomial(k + 1, i + 1)
        i -= 1
    return total


def shrink(a, t):
    """Shift every top of the base-t expansion down by one: backward-minimal value."""
    if t <= 0:
        raise ValueError("shrink requires base t >= 1")
    if a < 0:
        raise ValueError("shrink requires a >= 0")
    if a == 0:
        return 0
    total = 0
    i = t
    for k in macaulay_tops(a, t):
        total += binomial(k - 1, i - 1)
        i -= 1
    return total


cdef _descending_into(list out, int nvars, int total):
    # iterative descending-deglex composition generator with a C cursor array
    cdef int v = nvars
    cdef int i, rem
    cdef list buf = [0] * v
    # state: exponents assigned from the last coordinate down
    # emulate the recursive scheme iteratively with an explicit stack of
    # (position, remaining, next value to try)
    cdef list stack = [(v - 1, total, total)]
    cdef int pos, nxt
    while stack:
        pos, rem, nxt = stack.pop()
        if pos == 0:
            buf[0] = rem
            out.append(tuple(buf))
            continue
        if nxt < 0:
            continue
        stack.append((pos, rem, nxt - 1))
        buf[pos] = nxt
        stack.append((pos - 1, rem - nxt, rem - nxt))
    return out


def _descending(int nvars, int total):
    cdef list out = []
    _descending_into(out, nvars, total)
    return out


def iter_terms(int total, int nvars, int min_var=-1, int x0_exp=-1):
    """Degree-`total` terms over `nvars` variables in descending deglex order.

    Mirrors the pure twin, including the bucket filters; returns an iterator.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if min_var >= 0 and x0_exp >= 0:
        raise ValueError("min_var and x0_exp are mutually exclusive")
    cdef list out = []
    cdef tuple zeros
    if min_var >= 0:
        if min_var >= nvars or total < 1:
            return iter(())
        zeros = (0,) * min_var
        rests = _descending(nvars - min_var, total - 1)
        return iter([zeros + (r[0] + 1,) + r[1:] for r in rests])
    if x0_exp >= 0:
        if x0_exp > total:
            return iter(())
        if nvars == 1:
            return iter([(total,)] if x0_exp == total else ())
        return iter([(x0_exp,) + r for r in _descending(nvars - 1, total - x0_exp)])
    return iter(_descending(nvars, total))


def bucket_count(total, nvars, min_var=-1, x0_exp=-1):
    """Number of terms iter_terms would yield for the same arguments."""
    if min_var >= 0:
        if min_var >= nvars or total < 1:
            return 0
        return binomial(total - 1 + nvars - min_var - 1, nvars - min_var - 1)
    if x0_exp >= 0:
        if x0_exp > total:
            return 0
        if nvars == 1:
            return 1 if x0_exp == total else 0
        return binomial(total - x0_exp + nvars - 2, nvars - 2)
    return binomial(total + nvars - 1, nvars - 1)


def top_terms(total, nvars, count, min_var=-1, x0_exp=-1):
    """The `count` greatest terms of the requested bucket, descending deglex."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = list(islice(iter_terms(total, nvars, min_var, x0_exp), count))
    if len(out) < count:
        raise ValueError(f"bucket holds only {len(out)} terms, cannot take {count}")
    return out


def expand_terms(terms, int nvars):
    """All products of the given terms by one variable, as a set."""
    cdef set out = set()
    cdef int i
    cdef tuple term
    for term in terms:
        for i in range(nvars):
            out.add(term[:i] + (term[i] + 1,) + term[i + 1 :])
    return out


def is_borel_set(terms, int nvars):
    """Closure under exchanging one variable for the next larger one."""
    pool = terms if isinstance(terms, (set, frozenset)) else set(terms)
    cdef int i
    cdef tuple term
    for term in pool:
        for i in range(nvars - 1):
            if term[i]:
                if term[:i] + (term[i] - 1, term[i + 1] + 1) + term[i + 2 :] not in pool:
                    return False
    return True


def addable_terms(terms, int total, int nvars):
    """Degree-`total` terms outside the set whose addition keeps it Borel."""
    pool = terms if isinstance(terms, (set, frozenset)) else set(terms)
    cdef list out = []
    cdef int i
    cdef bint ok
    cdef tuple cand
    for cand in _descending(nvars, total):
        if cand in pool:
            continue
        ok = True
        for i in range(nvars - 1):
            if cand[i]:
                if cand[:i] + (cand[i] - 1, cand[i + 1] + 1) + cand[i + 2 :] not in pool:
                    ok = False
                    break
        if ok:
            out.append(cand)
    return out
