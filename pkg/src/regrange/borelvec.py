"""Growth and height vectors of Borel sets, their recovery from a Hilbert
function, and the growth-height-lexicographic construction.

A degree-m Borel set B in x0..xn is bucketed two ways: by exponent of x0
(height classes B(0..m)) and by smallest dividing variable (growth classes
B^(0..n)).  The counts are forced by the Hilbert function of the saturated
ideal generated by B, and filling every bucket with its top deglex segment
yields the unique growth-height-lexicographic set with those counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from regrange import kernels
from regrange.errors import InfeasibleVectorsError, NotBorelError
from regrange.monomial import BorelSet, is_borel, min_var


@dataclass(frozen=True)
class VectorPair:
    """Height vector (by x0-exponent) and growth vector (by smallest variable)."""

    degree: int
    ambient: int  # variables x0..x_ambient
    hv: tuple
    gv: tuple

    def __post_init__(self):
        m, n = self.degree, self.ambient
        hv = tuple(int(v) for v in self.hv)
        gv = tuple(int(v) for v in self.gv)
        object.__setattr__(self, "hv", hv)
        object.__setattr__(self, "gv", gv)
        if len(hv) != m + 1:
            raise InfeasibleVectorsError(f"height vector needs {m + 1} entries")
        if len(gv) != n + 1:
            raise InfeasibleVectorsError(f"growth vector needs {n + 1} entries")
        if any(v < 0 for v in hv) or any(v < 0 for v in gv):
            raise InfeasibleVectorsError("bucket counts must be nonnegative")
        if gv[0] != sum(hv[1:]):
            raise InfeasibleVectorsError(
                "growth class of x0 must match the positive height classes"
            )
        if hv[0] != sum(gv[1:]):
            raise InfeasibleVectorsError(
                "height class 0 must match the positive growth classes"
            )
        for i in range(1, n + 1):
            cap = kernels.bucket_count(m, n + 1, min_var=i)
            if gv[i] > cap:
                raise InfeasibleVectorsError(
                    f"growth class {i} holds at most {cap} terms, got {gv[i]}"
                )
        for i in range(1, m + 1):
            cap = kernels.bucket_count(m, n + 1, x0_exp=i)
            if hv[i] > cap:
                raise InfeasibleVectorsError(
                    f"height class {i} holds at most {cap} terms, got {hv[i]}"
                )


def vectors_of(B):
    """Bucket counts of a Borel set by x0-exponent and by smallest variable."""
    if not is_borel(B):
        raise NotBorelError("bucket counts are defined for Borel sets")
    m = B.degree
    n = B.nvars - 1
    hv = [0] * (m + 1)
    gv = [0] * (n + 1)
    for term in B.terms:
        hv[term[0]] += 1
        gv[min_var(term)] += 1
    return VectorPair(m, n, tuple(hv), tuple(gv))


def hv_from(u, m, n):
    """Height vector forced on degree m by the Hilbert function u in x0..xn.

    Differencing localizes failures: entry m-j needs the count of degree-j
    terms in one variable fewer to exceed u(j) - u(j-1).
    """
    if m < 1:
        raise InfeasibleVectorsError("degree must be positive")
    hv = [0] * (m + 1)
    hv[m] = 1 - u(0)
    for j in range(1, m + 1):
        hv[m - j] = kernels.binomial(j + n - 1, n - 1) - (u(j) - u(j - 1))
    bad = [i for i, v in enumerate(hv) if v < 0]
    if bad:
        raise InfeasibleVectorsError(
            f"degree {m} is incompatible with the Hilbert function "
            f"(negative height count at index {bad[0]})"
        )
    return tuple(hv)


def gv_from(p, m, n):
    """Growth vector forced on degree m by the tail polynomial p in x0..xn.

    Solves sum_i C(i+k, k) x_i = C(m+k+n, n) - p(m+k) for k = 0..n.  Repeated
    differencing of the right-hand side triangularizes the system over the
    integers, so the solution is integral whenever it exists.
    """
    b = [kernels.binomial(m + k + n, n) - p(m + k) for k in range(n + 1)]
    # y_r = sum_{i >= r} C(i, r) x_i by differencing r times
    y = []
    row = b
    for _ in range(n + 1):
        y.append(row[0])
        row = [q - r for r, q in zip(row, row[1:])]
    x = [0] * (n + 1)
    for r in range(n, -1, -1):
        x[r] = y[r] - sum(kernels.binomial(i, r) * x[i] for i in range(r + 1, n + 1))
    if any(v < 0 for v in x):
        raise InfeasibleVectorsError(
            f"degree {m} is incompatible with the tail (negative growth count)"
        )
    return tuple(x)


def ghl_construct(vp):
    """The unique growth-height-lexicographic Borel set with the given buckets.

    Each growth class with positive smallest variable and each positive height
    class is filled with the top deglex terms of its bucket; the union must be
    Borel, or the vector pair is infeasible.
    """
    m, n = vp.degree, vp.ambient
    nv = n + 1
    terms = set()
    for i in range(1, n + 1):
        terms.update(kernels.top_terms(m, nv, vp.gv[i], min_var=i))
    for i in range(1, m + 1):
        terms.update(kernels.top_terms(m, nv, vp.hv[i], x0_exp=i))
    L = BorelSet(m, nv, terms)
    if not is_borel(L):
        raise NotBorelError(
            "the bucketwise lex segments do not close up under exchanges; "
            "no Borel set realizes these vectors"
        )
    if not is_ghl(L) or vectors_of(L) != vp:
        raise NotBorelError("assembled set does not realize the requested buckets")
    return L


def is_ghl(B):
    """Whether every bucket of a Borel set is the top segment of its bucket.

    Growth classes of the x0-free part are compared inside their growth class
    of the full degree; positive height classes inside their height class.
    """
    if not is_borel(B):
        raise NotBorelError("growth-height-lexicographic test needs a Borel set")
    m = B.degree
    nv = B.nvars
    by_growth = {}
    by_height = {}
    for term in B.terms:
        if term[0] == 0:
            by_growth.setdefault(min_var(term), set()).add(term)
        else:
            by_height.setdefault(term[0], set()).add(term)
    for i, bucket in by_growth.items():
        if set(kernels.top_terms(m, nv, len(bucket), min_var=i)) != bucket:
            return False
    for i, bucket in by_height.items():
        if set(kernels.top_terms(m, nv, len(bucket), x0_exp=i)) != bucket:
            return False
    return True
