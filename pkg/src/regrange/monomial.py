"""Terms, Borel sets, and strongly stable monomial ideals.

Variables are indexed smallest first; exchanging a variable for a larger one
must stay inside a Borel set (degreewise) or a strongly stable ideal.  A term
is an exponent tuple.  Ideals carry a display offset so the same machinery
serves both the full ring x0..xn and the subring x1..xn used by lex-segment
ideals and the algebraic pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from regrange import kernels
from regrange.errors import CertificationError, InputError
from regrange.hilbert import (
    HilbertFunction,
    IntPolynomial,
    gotzmann_number_or_none,
)


def term_degree(term):
    return sum(term)


def min_var(term):
    """Index of the smallest variable dividing the term; None for the unit."""
    for i, e in enumerate(term):
        if e:
            return i
    return None


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def deglex_key(term):
    """Sort key: larger key = greater term (degree first, then reversed exponents)."""
    return (term_degree(term), term[::-1])


def deglex_cmp(a, b):
    """Three-way deglex comparison; rejects terms from different ambients."""
    if len(a) != len(b):
        raise InputError("terms live in different ambients")
    ka, kb = deglex_key(a), deglex_key(b)
    return (ka > kb) - (ka < kb)


def term_str(term, offset=0):
    """Render like x3^2*x1, larger variables first."""
    parts = []
    for i in range(len(term) - 1, -1, -1):
        e = term[i]
        if e:
            name = f"x{i + offset}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class BorelSet:
    """A set of terms of one degree, meant to be closed under increasing exchanges."""

    degree: int
    nvars: int
    terms: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "terms", frozenset(self.terms))
        for t in self.terms:
            if len(t) != self.nvars or term_degree(t) != self.degree:
                raise InputError(f"term {t} does not match degree/ambient")

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms, key=deglex_key, reverse=True)


def is_borel(B):
    """Closure under exchanges toward larger variables."""
    return kernels.is_borel_set(B.terms, B.nvars)


def expand(B):
    """All products of members by one variable; Borel-ness is preserved."""
    return BorelSet(B.degree + 1, B.nvars, kernels.expand_terms(B.terms, B.nvars))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal by minimal generators, canonically ordered.

    Construction prunes non-minimal generators and sorts ascending by degree,
    descending deglex within a degree.  `var_offset` only affects display and
    serialization (0 for x0..xn, 1 for x1..xn).
    """

    nvars: int
    gens: tuple = ()
    var_offset: int = 0

    def __post_init__(self):
        seen = set()
        for g in self.gens:
            if len(g) != self.nvars:
                raise InputError(f"generator {g} does not match ambient")
            if any(e < 0 for e in g):
                raise InputError(f"generator {g} has a negative exponent")
            seen.add(tuple(int(e) for e in g))
        # ascending by degree, terms of equal degree never divide each other,
        # and any divisor of a dropped term divides through a kept one, so
        # checking against the kept strictly-smaller generators suffices
        ordered = sorted(seen, key=lambda g: (term_degree(g), tuple(-e for e in g[::-1])))
        minimal = []
        cut = 0
        cur = None
        for g in ordered:
            d = term_degree(g)
            if d != cur:
                cur = d
                cut = len(minimal)
            if not any(divides(minimal[i], g) for i in range(cut)):
                minimal.append(g)
        object.__setattr__(self, "gens", tuple(minimal))

    @property
    def is_zero(self):
        return not self.gens

    def max_gen_degree(self):
        return max((term_degree(g) for g in self.gens), default=0)

    def contains(self, term):
        d = term_degree(term)
        return any(divides(g, term) for g in self.gens if term_degree(g) <= d)

    def gens_of_degree(self, t):
        return [g for g in self.gens if term_degree(g) == t]

    def graded_part(self, t):
        """The degree-t terms of the ideal as a BorelSet-compatible set."""
        part = set()
        for d in range(1, t + 1):
            part = kernels.expand_terms(part, self.nvars)
            part.update(self.gens_of_degree(d))
        return BorelSet(t, self.nvars, part)

    def to_text(self):
        if self.is_zero:
            return "0"
        return ", ".join(term_str(g, self.var_offset) for g in self.gens)

    def to_json_dict(self):
        return {
            "ambient_n": self.nvars - 1 + self.var_offset,
            "first_var": self.var_offset,
            "variables": [
                f"x{i + self.var_offset}" for i in range(self.nvars)
            ],
            "generators": [list(g) for g in self.gens],
            "regularity": self.max_gen_degree(),
        }

    def __str__(self):
        return f"({self.to_text()})"


def ideal_from_json_dict(data):
    nvars = len(data["variables"]) if "variables" in data else data["ambient_n"] + 1
    offset = data.get("first_var", 0)
    return MonomialIdeal(nvars, tuple(tuple(g) for g in data["generators"]), offset)


def is_strongly_stable(J):
    """Every increasing exchange of every generator stays in the ideal.

    Adjacent exchanges suffice: chains of them realize every increasing
    exchange, and membership is divisibility by some generator.  Exchanges
    preserve degree, so a same-degree witness must be the term itself and
    only strictly smaller generators can divide it.
    """
    by_degree = {}
    for g in J.gens:
        by_degree.setdefault(term_degree(g), set()).add(g)
    smaller = {}
    acc = []
    for d in sorted(by_degree):
        smaller[d] = list(acc)
        acc.extend(by_degree[d])
    for g in J.gens:
        d = term_degree(g)
        for i in range(J.nvars - 1):
            if g[i]:
                up = g[:i] + (g[i] - 1, g[i + 1] + 1) + g[i + 2 :]
                if up in by_degree[d]:
                    continue
                if not any(divides(h, up) for h in smaller[d]):
                    return False
    return True


def _require_ss(J, who):
    if not is_strongly_stable(J):
        raise InputError(f"{who} requires a strongly stable ideal")


def reg_ss(J):
    """Regularity of a strongly stable ideal: its maximal generator degree."""
    _require_ss(J, "reg_ss")
    return J.max_gen_degree()


def saturate_ss(J):
    """Strip the smallest variable from every generator and re-minimalize.

    A strongly stable ideal is saturated exactly when no minimal generator
    involves the smallest variable, and dividing it out does not change the
    saturation class.
    """
    if J.var_offset != 0:
        raise InputError("saturation acts on ideals of the full ring x0..xn")
    _require_ss(J, "saturate_ss")
    stripped = tuple((0,) + g[1:] for g in J.gens)
    return MonomialIdeal(J.nvars, stripped, J.var_offset)


def minimal_generators(parts):
    """Minimal generators of the ideal whose graded pieces are `parts`.

    `parts` maps consecutive degrees to BorelSets; each piece must contain the
    expansion of the previous one.  Terms of one degree never divide each
    other, so pruning happens across degrees only.
    """
    if not parts:
        return ()
    degrees = sorted(parts)
    if degrees != list(range(degrees[0], degrees[-1] + 1)):
        raise InputError("graded pieces must cover consecutive degrees")
    gens = list(parts[degrees[0]].terms)
    nvars = parts[degrees[0]].nvars
    prev = parts[degrees[0]]
    for t in degrees[1:]:
        cur = parts[t]
        if cur.nvars != nvars:
            raise InputError("graded pieces live in different ambients")
        grown = kernels.expand_terms(prev.terms, nvars)
        if not grown <= cur.terms:
            raise InputError(f"degree-{t} piece does not contain the expansion")
        gens.extend(cur.terms - grown)
        prev = cur
    return tuple(gens)


def lex_ideal(H, nvars):
    """The lex-segment ideal in x1..x{nvars} whose quotient has Hilbert function H.

    Degreewise, the ideal is the top segment of size (all terms) - H(t); no
    generator appears beyond max(rho(H), Gotzmann number of the tail).
    """
    if not H.is_o_sequence():
        raise InputError("lex ideal requires an O-sequence")
    if H.tail.is_zero:
        stop = H.rho()
    else:
        r = gotzmann_number_or_none(H.tail)
        stop = max(H.rho(), r)
    gens = []
    prev = set()
    for t in range(1, stop + 1):
        size = kernels.bucket_count(t, nvars) - H(t)
        if size < 0:
            raise InputError(
                f"H({t}) = {H(t)} exceeds the {nvars}-variable term count"
            )
        segment = set(kernels.top_terms(t, nvars, size))
        grown = kernels.expand_terms(prev, nvars)
        if not grown <= segment:
            raise CertificationError("lex segment lost the previous expansion")
        gens.extend(segment - grown)
        prev = segment
    return MonomialIdeal(nvars, tuple(gens), var_offset=1)


def hf_quotient(J):
    """Hilbert function of the quotient by a strongly stable ideal.

    Values are counted degreewise through the generator range plus one window
    of tail length; the tail polynomial is interpolated on the window and
    verified on one extra point.
    """
    _require_ss(J, "hf_quotient")
    v = J.nvars
    s = max(1, J.max_gen_degree())
    top = s + v
    values = []
    part = set()
    for t in range(top + 1):
        if t:
            part = kernels.expand_terms(part, v)
            part.update(tuple(g) for g in J.gens_of_degree(t))
        values.append(kernels.bucket_count(t, v) - len(part))
    tail = IntPolynomial.from_values(values[s:top], start=s)
    if tail(top) != values[top]:
        raise CertificationError("tail interpolation failed its verification point")
    return HilbertFunction(tuple(values[:s]), tail)
