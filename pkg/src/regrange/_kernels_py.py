"""Pure-Python kernels: binomial calculus on Macaulay representations and
term-level combinatorics on exponent tuples.

Terms are tuples of machine-size exponents indexed by variable, smallest
variable first.  Degree-lexicographic comparisons read the tuple reversed, so
a larger exponent on a larger variable wins.  All counting is arbitrary
precision.

The compiled twin in ``_kernels_c.pyx`` implements the same API; keep the two
in sync (``tests/test_kernels.py`` checks parity).
"""

from itertools import islice
from math import comb

BACKEND = "pure"


def binomial(n, m):
    """Binomial coefficient, null when m < 0 or n < m, and C(n, 0) = 1 for n >= 0."""
    if m < 0 or n < m:
        return 0
    return comb(n, m)


def _largest_top(rem, i):
    # largest k with C(k, i) <= rem; rem >= 1, i >= 1
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


def _descending(nvars, total):
    # all exponent tuples of length nvars summing to total, descending deglex
    if nvars == 1:
        yield (total,)
        return
    for a in range(total, -1, -1):
        for rest in _descending(nvars - 1, total - a):
            yield rest + (a,)


def iter_terms(total, nvars, min_var=-1, x0_exp=-1):
    """Degree-`total` terms over `nvars` variables in descending deglex order.

    `min_var` restricts to terms whose smallest variable is exactly that index;
    `x0_exp` restricts to terms with exactly that exponent on variable 0.  The
    two filters are mutually exclusive.  Generation is lazy so a prefix can be
    taken without materializing the whole degree.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if min_var >= 0 and x0_exp >= 0:
        raise ValueError("min_var and x0_exp are mutually exclusive")
    if min_var >= 0:
        if min_var >= nvars or total < 1:
            return
        zeros = (0,) * min_var
        for rest in _descending(nvars - min_var, total - 1):
            yield zeros + (rest[0] + 1,) + rest[1:]
        return
    if x0_exp >= 0:
        if x0_exp > total:
            return
        if nvars == 1:
            if x0_exp == total:
                yield (total,)
            return
        for rest in _descending(nvars - 1, total - x0_exp):
            yield (x0_exp,) + rest
        return
    yield from _descending(nvars, total)


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
        raise ValueError(
            f"bucket holds only {len(out)} terms, cannot take {count}"
        )
    return out


def expand_terms(terms, nvars):
    """All products of the given terms by one variable, as a set."""
    out = set()
    for term in terms:
        for i in range(nvars):
            out.add(term[:i] + (term[i] + 1,) + term[i + 1 :])
    return out


def is_borel_set(terms, nvars):
    """Closure under exchanging one variable for the next larger one.

    Adjacent exchanges generate all increasing exchanges, so checking them
    suffices.
    """
    if not isinstance(terms, (set, frozenset)):
        terms = set(terms)
    for term in terms:
        for i in range(nvars - 1):
            if term[i]:
                up = term[:i] + (term[i] - 1, term[i + 1] + 1) + term[i + 2 :]
                if up not in terms:
                    return False
    return True


def addable_terms(terms, total, nvars):
    """Degree-`total` terms outside the set whose addition keeps it Borel.

    Returned in descending deglex order.
    """
    if not isinstance(terms, (set, frozenset)):
        terms = set(terms)
    out = []
    for cand in _descending(nvars, total):
        if cand in terms:
            continue
        ok = True
        for i in range(nvars - 1):
            if cand[i]:
                up = cand[:i] + (cand[i] - 1, cand[i + 1] + 1) + cand[i + 2 :]
                if up not in terms:
                    ok = False
                    break
        if ok:
            out.append(cand)
    return out
