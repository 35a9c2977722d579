"""Eventually-polynomial numerical functions and their exact calculus.

An IntPolynomial is stored by its integer coefficients in the binomial basis
p(z) = sum c_i * C(z, i); integrality at every integer argument is structural
in this basis.  A HilbertFunction is a finite value prefix followed by an
IntPolynomial tail, kept canonical (the prefix never ends with a value the
tail already produces).

Module-level helpers cover difference/summation calculus, the growth-bound
test for O-sequences, the partial order by pointwise comparison, and the
Gotzmann decomposition of admissible polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from regrange import kernels
from regrange.errors import InputError, NotCertifiableError


def gbinom(z, i):
    """C(z, i) for any integer z, via the falling factorial."""
    if i < 0:
        return 0
    if z >= 0:
        return comb(z, i)
    # C(z, i) = (-1)^i C(i - z - 1, i) for z < 0
    return (-1) ** i * comb(i - z - 1, i)


def _newton_coeffs(values):
    # forward differences at 0 give the binomial-basis coefficients
    coeffs = []
    row = list(values)
    while row:
        coeffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-valued polynomial in one variable, binomial-basis coefficients."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_values(cls, values, start=0):
        """Interpolate through values at consecutive integers start, start+1, ..."""
        shifted = _newton_coeffs(values)
        if start == 0:
            return cls(tuple(shifted))
        # p(z) = sum d_i C(z - start, i); re-expand at 0..deg
        deg = len(shifted) - 1
        pts = [
            sum(d * gbinom(z - start, i) for i, d in enumerate(shifted))
            for z in range(deg + 1)
        ]
        return cls(tuple(_newton_coeffs(pts)))

    @classmethod
    def from_power(cls, power_coeffs):
        """Convert power-basis coefficients (ints, Fractions, or 'a/b' strings).

        Fails if the polynomial is not integer-valued on the integers.
        """
        cs = [Fraction(c) for c in power_coeffs]
        deg = len(cs) - 1
        values = []
        for z in range(deg + 2):
            v = sum(c * z**i for i, c in enumerate(cs))
            values.append(v)
        diffs = _newton_coeffs(values)
        if any(d.denominator != 1 for d in diffs):
            raise InputError("polynomial is not integer-valued on the integers")
        return cls(tuple(int(d) for d in diffs))

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        """Leading binomial-basis coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, z):
        return sum(c * gbinom(z, i) for i, c in enumerate(self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(
            tuple(
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(n)
            )
        )

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    # -- calculus ------------------------------------------------------------

    def delta(self):
        """First difference p(z) - p(z - 1)."""
        if self.degree <= 0:
            return IntPolynomial.zero()
        values = [self(z) - self(z - 1) for z in range(self.degree)]
        return IntPolynomial.from_values(values)

    def antiderivative(self, anchor_t, anchor_value):
        """The polynomial P with P(z) - P(z - 1) = p(z) and P(anchor_t) = anchor_value.

        In the binomial basis C(z + 1, i + 1) = C(z, i + 1) + C(z, i) integrates
        C(z, i) exactly; only the constant needs fixing.
        """
        d = [0] * (len(self.coeffs) + 1)
        for i, c in enumerate(self.coeffs):
            d[i + 1] += c
            d[i] += c
        base = IntPolynomial(tuple(d))
        return base + IntPolynomial.constant(anchor_value - base(anchor_t))

    def positivity_bound(self):
        """A t0 with p(t) > 0 for all t >= t0; requires positive leading coefficient."""
        if self.is_zero or self.leading <= 0:
            raise ValueError("positivity bound needs a positive leading coefficient")
        k = self.degree
        if k == 0:
            return 0
        s = 1 + sum(abs(c) for c in self.coeffs[:-1])
        return max(2 * k, k * (s + 1))

    # -- formatting ----------------------------------------------------------

    def power_coeffs(self):
        """Power-basis coefficients as Fractions, constant first."""
        out = [Fraction(0)] * (self.degree + 1 if not self.is_zero else 1)
        for i, c in enumerate(self.coeffs):
            # falling factorial z(z-1)...(z-i+1) / i!
            ff = [Fraction(1)]
            for j in range(i):
                # multiply by (z - j)
                nxt = [Fraction(0)] * (len(ff) + 1)
                for d, a in enumerate(ff):
                    nxt[d + 1] += a
                    nxt[d] -= a * j
                ff = nxt
            for d, a in enumerate(ff):
                out[d] += c * a / factorial(i)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for d in range(len(pc := self.power_coeffs()) - 1, -1, -1):
            c = pc[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                zpart = "z" if d == 1 else f"z^{d}"
                body = zpart if mag == 1 else f"{mag}{zpart}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"IntPolynomial({self})"


_TERM_RE = re.compile(
    r"([+-]?)(\d+(?:/\d+)?)?(z(?:\^(\d+))?)?"
)


def parse_polynomial(text):
    """Parse a polynomial in z with integer or a/b coefficients, e.g. 2z^2+3z+1."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise InputError("empty polynomial")
    pos = 0
    coeffs = {}
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise InputError(f"cannot parse polynomial near {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            power = int(m.group(4)) if m.group(4) else 1
        else:
            power = 0
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
        pos = m.end()
    top = max(coeffs) if coeffs else 0
    return IntPolynomial.from_power([coeffs.get(i, Fraction(0)) for i in range(top + 1)])


@dataclass(frozen=True)
class HilbertFunction:
    """Finite prefix of values followed by an IntPolynomial tail.

    H(t) = prefix[t] for t < len(prefix), H(t) = tail(t) for t >= len(prefix).
    Canonical form: the prefix never ends with a value equal to the tail at
    the same argument.  Construction rejects functions that take a negative
    value anywhere on the nonnegative integers.
    """

    prefix: tuple
    tail: IntPolynomial

    def __post_init__(self):
        pre = [int(v) for v in self.prefix]
        while pre and pre[-1] == self.tail(len(pre) - 1):
            pre.pop()
        object.__setattr__(self, "prefix", tuple(pre))
        self._validate()

    def _validate(self):
        if any(v < 0 for v in self.prefix):
            raise InputError("Hilbert function values must be nonnegative")
        if self.tail.is_zero:
            return
        if self.tail.leading < 0:
            raise InputError("tail is eventually negative")
        lo = len(self.prefix)
        hi = self.tail.positivity_bound()
        for t in range(lo, hi):
            if self.tail(t) < 0:
                raise InputError(f"value at t={t} is negative")

    # -- evaluation and structure -------------------------------------------

    def __call__(self, t):
        if t < 0:
            raise ValueError("Hilbert functions are defined on t >= 0")
        if t < len(self.prefix):
            return self.prefix[t]
        return self.tail(t)

    def rho(self):
        """Least t from which the function agrees with its tail polynomial."""
        return len(self.prefix)

    def values(self, upto):
        return [self(t) for t in range(upto + 1)]

    # -- difference / summation calculus --------------------------------------

    def delta(self):
        """First derivative with the convention that the value at 0 stays 1."""
        if self(0) != 1:
            raise InputError("derivative requires H(0) = 1")
        s = len(self.prefix)
        vals = [1] + [self(t) - self(t - 1) for t in range(1, s + 1)]
        return HilbertFunction(tuple(vals), self.tail.delta())

    def sigma(self):
        """Integral (running sum) with the value at 0 kept equal to 1."""
        if self(0) != 1:
            raise InputError("integral requires H(0) = 1")
        s = len(self.prefix)
        sums = []
        acc = 0
        for t in range(s + 1):
            acc += self(t)
            sums.append(acc)
        tail = self.tail.antiderivative(s, sums[s])
        return HilbertFunction(tuple(sums[:s]), tail)

    # -- order and growth ------------------------------------------------------

    def leq(self, other):
        """Pointwise comparison on every t >= 0, decided exactly."""
        d = other.tail - self.tail
        bound = 0
        if not d.is_zero:
            if d.leading < 0:
                return False
            bound = d.positivity_bound()
        upto = max(len(self.prefix), len(other.prefix), bound)
        return all(self(t) <= other(t) for t in range(upto + 1))

    def is_o_sequence(self):
        """Growth-bound test: H(0) = 1 and H(t+1) <= growth of H(t) in base t.

        The check is finite: beyond max(rho, Gotzmann number of the tail) the
        bound holds along any admissible tail with equality, and an eventually
        zero tail is checked through its prefix.  Raises NotCertifiableError
        when the tail is neither zero nor admissible.
        """
        if self(0) != 1:
            return False
        if self.tail.is_zero:
            upto = len(self.prefix) + 1
        else:
            r = gotzmann_number_or_none(self.tail)
            if r is None:
                raise NotCertifiableError(
                    "tail is not an admissible polynomial; the growth condition "
                    "cannot be certified by a finite check"
                )
            upto = max(self.rho(), r) + 1
        for t in range(1, upto + 1):
            if self(t + 1) > kernels.growth(self(t), t):
                return False
        return True

    # -- formatting -------------------------------------------------------------

    def literal(self):
        """Grammar form accepted by parse_hilbert_function."""
        if not self.prefix:
            return str(self.tail)
        return ",".join(str(v) for v in self.prefix) + " ; " + str(self.tail)

    def __str__(self):
        inner = [str(v) for v in self.prefix] + [str(self.tail)]
        return "(" + ",".join(inner) + ")"

    def __repr__(self):
        return f"HilbertFunction{self}"


def parse_hilbert_function(text):
    """Parse 'v0,v1,...,vk ; P' (or a bare polynomial P) into a HilbertFunction."""
    if ";" in text:
        head, _, tail_text = text.partition(";")
        head = head.strip()
        if head:
            try:
                prefix = tuple(int(v.strip()) for v in head.split(","))
            except ValueError as exc:
                raise InputError(f"bad prefix in {text!r}") from exc
        else:
            prefix = ()
        return HilbertFunction(prefix, parse_polynomial(tail_text))
    return HilbertFunction((), parse_polynomial(text))


# -- Gotzmann decomposition ------------------------------------------------------


@lru_cache(maxsize=None)
def gotzmann_piece(a, i):
    """C(z + a - i + 1, a) as an IntPolynomial: the i-th decomposition piece of degree a."""
    return IntPolynomial.from_values(
        [gbinom(z + a - i + 1, a) for z in range(a + 1)]
    )


@lru_cache(maxsize=None)
def gotzmann_decomposition(p):
    """Non-increasing exponents (a_1, ..., a_r) with
    p(z) = sum_i C(z + a_i - i + 1, a_i), or None when no such expression exists.

    Peeling greedily at the current degree reproduces the unique decomposition:
    every piece of degree a has leading binomial-basis coefficient 1, so the
    number of degree-a pieces is forced, and failure shows up as a negative
    leading coefficient.
    """
    if p.is_zero:
        return None
    rem = p
    seq = []
    i = 1
    while not rem.is_zero:
        if rem.leading < 0:
            return None
        a = rem.degree
        rem = rem - gotzmann_piece(a, i)
        seq.append(a)
        i += 1
    return tuple(seq)


def is_admissible(p):
    """Whether p is the Hilbert polynomial of some nonempty projective scheme."""
    return gotzmann_decomposition(p) is not None


def gotzmann_number_or_none(p):
    d = gotzmann_decomposition(p)
    return None if d is None else len(d)


def gotzmann_number(p):
    """Length of the Gotzmann decomposition: the sharp regularity bound over p."""
    d = gotzmann_decomposition(p)
    if d is None:
        raise InputError(f"{p} is not an admissible Hilbert polynomial")
    return len(d)
