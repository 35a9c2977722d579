"""End-to-end pipelines: from a Hilbert function and a target regularity to a
certified saturated strongly stable ideal, and the algebraic variant one
variable down.

Every returned ideal is re-verified before leaving: saturated, strongly
stable, exact quotient Hilbert function, exact regularity.  Certification
failures raise instead of returning silently wrong output.
"""

from __future__ import annotations

from regrange.borelvec import VectorPair, ghl_construct, gv_from, hv_from
from regrange.errors import CertificationError, InputError, OutOfRangeError
from regrange.hilbert import gotzmann_number
from regrange.minfun import (
    RegularityRange,
    is_full_ring_hf,
    is_scheme_hf,
    max_reg,
    min_reg,
)
from regrange.monomial import (
    MonomialIdeal,
    hf_quotient,
    is_strongly_stable,
    reg_ss,
    saturate_ss,
)


def regularity_range(u):
    """The exact interval of achievable regularities for schemes with Hilbert function u."""
    if not is_scheme_hf(u):
        raise InputError(f"{u} is not the Hilbert function of a scheme")
    return RegularityRange(min_reg(u), max_reg(u))


def default_ambient(u):
    """Smallest ambient index n with the derivative's lex ideal inside x1..xn."""
    return u(1) - 1


def construct_scheme_ideal(u, m, n=None):
    """A saturated strongly stable ideal in x0..xn with Hilbert function u and
    regularity m, built through the forced vectors and the bucketwise lex fill.

    Raises OutOfRangeError when m is outside [min_reg(u), max_reg(u)]; any
    postcondition failure inside the interval raises CertificationError.
    """
    rr = regularity_range(u)
    if m not in rr:
        raise OutOfRangeError(m, rr.min_reg, rr.max_reg)
    if n is None:
        n = default_ambient(u)
    elif n < default_ambient(u):
        raise InputError(
            f"ambient needs at least x0..x{default_ambient(u)} for this Hilbert function"
        )
    if is_full_ring_hf(u) and u(1) - 1 == n:
        ideal = MonomialIdeal(n + 1, ())
        _certify(ideal, u, m)
        return ideal
    vp = VectorPair(m, n, hv_from(u, m, n), gv_from(u.tail, m, n))
    L = ghl_construct(vp)
    ideal = saturate_ss(MonomialIdeal(n + 1, tuple(L.terms)))
    _certify(ideal, u, m)
    return ideal


def _certify(ideal, u, m):
    if any(g[0] for g in ideal.gens):
        raise CertificationError("constructed ideal is not saturated")
    if not is_strongly_stable(ideal):
        raise CertificationError("constructed ideal is not strongly stable")
    if hf_quotient(ideal) != u:
        raise CertificationError("constructed ideal has the wrong Hilbert function")
    if reg_ss(ideal) != m:
        raise CertificationError("constructed ideal has the wrong regularity")


def algebraic_range(f):
    """Achievable regularities for homogeneous ideals with quotient Hilbert function f."""
    if f(0) != 1 or not f.is_o_sequence():
        raise InputError(f"{f} is not an O-sequence")
    u = f.sigma()
    lo = min_reg(u)
    if is_full_ring_hf(u):
        hi = 0
    elif f.tail.is_zero:
        hi = f.rho()
    else:
        hi = max(f.rho(), gotzmann_number(f.tail))
    return RegularityRange(lo, hi), u


def construct_algebraic(f, a):
    """A strongly stable ideal in x1..xn with quotient Hilbert function f and
    regularity a, by integrating f, constructing at scheme level, and reading
    the x0-free generators one variable down.
    """
    rr, u = algebraic_range(f)
    if a not in rr:
        raise OutOfRangeError(a, rr.min_reg, rr.max_reg)
    scheme_ideal = construct_scheme_ideal(u, a)
    dropped = tuple(g[1:] for g in scheme_ideal.gens)
    ideal = MonomialIdeal(scheme_ideal.nvars - 1, dropped, var_offset=1)
    if hf_quotient(ideal) != f:
        raise CertificationError("algebraic ideal has the wrong Hilbert function")
    if reg_ss(ideal) != a:
        raise CertificationError("algebraic ideal has the wrong regularity")
    return ideal


def certificate(u, m, ideal, n=None):
    """Independently checkable record of one construction."""
    if n is None:
        n = ideal.nvars - 1
    rr = regularity_range(u)
    if is_full_ring_hf(u):
        hv = [0] * (m + 1)
        gv = [0] * (n + 1)
    else:
        hv = list(hv_from(u, m, n))
        gv = list(gv_from(u.tail, m, n))
    return {
        "hilbert_function": u.literal(),
        "m_u": rr.min_reg,
        "M_u": rr.max_reg,
        "requested_m": m,
        "hv": hv,
        "gv": gv,
        "ideal": ideal.to_json_dict(),
    }


def verify_certificate(data):
    """Re-verify a certificate produced by `certificate`; returns list of failures."""
    from regrange.hilbert import parse_hilbert_function
    from regrange.monomial import ideal_from_json_dict

    failures = []
    try:
        u = parse_hilbert_function(data["hilbert_function"])
        ideal = ideal_from_json_dict(data["ideal"])
        m = data["requested_m"]
    except (KeyError, InputError) as exc:
        return [f"malformed certificate: {exc}"]
    rr = regularity_range(u)
    if (rr.min_reg, rr.max_reg) != (data["m_u"], data["M_u"]):
        failures.append("stored interval does not match the recomputed one")
    if m not in rr:
        failures.append("requested regularity is outside the interval")
    if ideal.var_offset != 0:
        failures.append("certificate ideals live in the full ring x0..xn")
        return failures
    n = ideal.nvars - 1
    if not is_full_ring_hf(u):
        try:
            if list(hv_from(u, m, n)) != list(data["hv"]):
                failures.append("height vector mismatch")
            if list(gv_from(u.tail, m, n)) != list(data["gv"]):
                failures.append("growth vector mismatch")
        except InputError as exc:
            failures.append(str(exc))
    try:
        _certify(ideal, u, m)
    except CertificationError as exc:
        failures.append(str(exc))
    return failures
