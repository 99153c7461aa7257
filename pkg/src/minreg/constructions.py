"""Constructions of witness ideals with prescribed Hilbert data.

Three builders produce saturated strongly stable ideals together with a
claimed Hilbert function and regularity, packaged as certificates:

* remove_minimal_term drops one Borel-minimal term from a high-degree
  slice, which bumps the Hilbert function by one from a chosen degree on;
* expanded_lifting adds a new least variable to a given ideal and then
  removes terms until the quotient matches a prescribed function, landing
  exactly on regularity max(reg of the input, rho + 1);
* ideal_graft splices the low degrees of one quotient onto the high
  degrees of another.

witness_min_reg chains expanded liftings along the derivative tower of
the target function and realizes the minimal regularity in its class.
Every certificate can be re-checked from scratch by verify_witness, which
recomputes stability, saturation, the Hilbert function (twice: by the
slice formulas and by brute enumeration) and the regularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .borel import (BorelSet, StronglyStableIdeal, artinian_lex_ideal,
                    artinian_lift, degrevlex_key, divides, ideal_from_slice,
                    lgh, monomial_basis, term_string)
from .errors import (InputError, InternalInconsistency, LinearVariety,
                     NoRemovableTerm, NotSchemeHF, PreconditionViolation,
                     VerificationFailure)
from .functions import (HilbertFunction, is_scheme_function,
                        least_dominated_regularity, min_scheme_regularity,
                        minimal_function, parse_hilbert_function)
from .polynomials import polynomial_from_coefficients, poly_add


@dataclass(frozen=True)
class WitnessCertificate:
    """A constructed ideal with its claimed invariants and build log."""

    ideal: StronglyStableIdeal
    hilbert_function: HilbertFunction
    regularity: int
    log: tuple

    def as_dict(self):
        return {
            "ideal": {
                "vars": self.ideal.nvars,
                "generators": [list(g)
                               for g in self.ideal.sorted_generators()],
            },
            "hilbert_function": str(self.hilbert_function),
            "regularity": self.regularity,
            "log": list(self.log),
        }


def certificate_from_dict(payload) -> WitnessCertificate:
    """Rebuild a certificate from its dictionary form.  The inverse of
    as_dict; the result still has to be checked with verify_witness."""
    try:
        block = payload["ideal"]
        nvars = int(block["vars"])
        gens = frozenset(tuple(int(e) for e in g)
                         for g in block["generators"])
        u = parse_hilbert_function(payload["hilbert_function"])
        regularity = int(payload["regularity"])
        log = tuple(str(line) for line in payload.get("log", ()))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed certificate: %s" % exc) from None
    return WitnessCertificate(StronglyStableIdeal(nvars, gens), u,
                              regularity, log)


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def __bool__(self):
        return self.ok

    def failures(self):
        return tuple(name for name, passed in self.checks if not passed)

    def __str__(self):
        return "; ".join("%s: %s" % (name, "ok" if passed else "FAILED")
                         for name, passed in self.checks)


def verify_witness(certificate: WitnessCertificate) -> VerificationReport:
    """Re-derive every claim of a certificate from the raw generators."""
    ideal = certificate.ideal
    checks = []

    minimal = True
    for g in ideal.generators:
        if any(h != g and divides(h, g) for h in ideal.generators):
            minimal = False
    checks.append(("minimal generators", minimal))

    stable = True
    for g in ideal.generators:
        for i in range(ideal.nvars):
            if g[i] == 0:
                continue
            for j in range(i + 1, ideal.nvars):
                raised = list(g)
                raised[i] -= 1
                raised[j] += 1
                if not ideal.contains(tuple(raised)):
                    stable = False
    checks.append(("strongly stable", stable))
    checks.append(("saturated", ideal.is_saturated))
    checks.append(("regularity", ideal.regularity == certificate.regularity))

    if stable and ideal.is_saturated:
        checks.append(("hilbert function by slice formulas",
                       ideal.hilbert_function()
                       == certificate.hilbert_function))
    else:
        checks.append(("hilbert function by slice formulas", False))

    enumerated = True
    for t in range(certificate.regularity + 4):
        count = sum(1 for term in monomial_basis(ideal.nvars, t)
                    if not ideal.contains(term))
        if count != certificate.hilbert_function(t):
            enumerated = False
            break
    checks.append(("hilbert function by enumeration", enumerated))
    return VerificationReport(tuple(checks))


def _bumped(hf: HilbertFunction, start: int) -> HilbertFunction:
    """The function hf + 1 from degree start on."""
    horizon = max(hf.regularity, start) + 1
    prefix = [hf(t) + (1 if t >= start else 0) for t in range(horizon)]
    if hf.tail is None:
        tail = polynomial_from_coefficients((1,))
    else:
        tail = polynomial_from_coefficients(
            poly_add(hf.tail.coefficients, (1,)))
    return HilbertFunction(tuple(prefix), tail)


def _removal_candidates(B: BorelSet, x0_exponent: int):
    return [term for term in B.minimal_terms() if term[0] == x0_exponent]


def remove_minimal_term(J: StronglyStableIdeal, s: int,
                        t_bar: int) -> WitnessCertificate:
    """Drop one Borel-minimal term with x0-free part of degree t_bar from
    the degree-s slice and saturate.

    The quotient gains one in every degree from t_bar on; the regularity
    moves from m to m+1 exactly when t_bar equals m.
    """
    if not J.is_saturated:
        raise PreconditionViolation("removal needs a saturated ideal")
    if s < max(J.regularity, 1):
        raise PreconditionViolation(
            "slice degree %d is below the regularity %d"
            % (s, J.regularity))
    if not 0 <= t_bar < s:
        raise PreconditionViolation(
            "need 0 <= t_bar < s, got t_bar=%d s=%d" % (t_bar, s))
    B = J.degree_slice(s)
    candidates = _removal_candidates(B, s - t_bar)
    if not candidates:
        raise NoRemovableTerm(
            "no minimal term with x0-exponent %d in the degree-%d slice"
            % (s - t_bar, s))
    term = min(candidates, key=degrevlex_key)
    remaining = BorelSet(B.nvars, s, B.terms - {term})
    result = ideal_from_slice(remaining).saturation()

    before = J.hilbert_function()
    expected = _bumped(before, t_bar)
    achieved = result.hilbert_function()
    if achieved != expected:
        raise InternalInconsistency(
            "removal of %s moved the function to %s instead of %s"
            % (term_string(term), achieved, expected))
    m = J.regularity
    if result.regularity != (m + 1 if t_bar == m else m):
        raise InternalInconsistency(
            "removal of %s left regularity %d (from %d, t_bar %d)"
            % (term_string(term), result.regularity, m, t_bar))
    log = ("removed %s from the degree-%d slice" % (term_string(term), s),)
    return WitnessCertificate(result, achieved, result.regularity, log)


def expanded_lifting(f: HilbertFunction,
                     Jz: StronglyStableIdeal) -> WitnessCertificate:
    """Realize f as the quotient function of a cone-and-removal lift of Jz.

    Jz's quotient function g must sit below the first difference of f and
    share its Hilbert polynomial; the output has regularity exactly
    max(reg(Jz), rho + 1) where rho is the regularity of f.
    """
    if f.tail is None or f.tail.degree < 1 or f.tail.gotzmann_number < 2:
        raise PreconditionViolation(
            "the target %s does not describe a positive-dimensional"
            " subscheme" % f)
    if not is_scheme_function(f):
        raise PreconditionViolation("%s is not a scheme function" % f)
    if not Jz.is_saturated:
        raise PreconditionViolation("lifting needs a saturated ideal")
    rho = f.regularity
    g = Jz.hilbert_function()
    df = f.delta()
    if g.tail != df.tail:
        raise PreconditionViolation(
            "polynomial mismatch: section has %s, difference needs %s"
            % (g.tail, df.tail))
    if not g.dominated_by(df):
        raise PreconditionViolation(
            "section function %s is not below the difference %s" % (g, df))

    lifted = artinian_lift(Jz)
    m = max(Jz.regularity, rho + 1)
    current = lifted.hilbert_function()
    horizon = max(f.regularity, current.regularity)
    removals = f(horizon) - current(horizon)
    if removals < 0:
        raise PreconditionViolation(
            "the lift already overshoots the target function")
    log = ["lifted %d generators into %d variables, working degree %d"
           % (len(Jz.generators), lifted.nvars, m)]

    ideal = lifted
    for _ in range(removals + 1):
        L = lgh(ideal.degree_slice(m))
        ideal = ideal_from_slice(L).saturation()
        achieved = ideal.hilbert_function()
        if achieved == f:
            break
        if not achieved.dominated_by(f):
            raise InternalInconsistency(
                "intermediate function %s escaped above the target %s"
                % (achieved, f))
        t_bar = 0
        while achieved(t_bar) == f(t_bar):
            t_bar += 1
        if t_bar >= m:
            raise InternalInconsistency(
                "gap degree %d reached the working degree %d" % (t_bar, m))
        candidates = _removal_candidates(L, m - t_bar)
        if not candidates:
            raise NoRemovableTerm(
                "no minimal term with x0-exponent %d at degree %d;"
                " log: %s" % (m - t_bar, m, " / ".join(log)))
        term = min(candidates, key=degrevlex_key)
        log.append("removed %s (gap at degree %d)"
                   % (term_string(term), t_bar))
        ideal = ideal_from_slice(
            BorelSet(L.nvars, m, L.terms - {term})).saturation()
    else:
        raise InternalInconsistency(
            "lifting did not converge in %d removals" % removals)

    if ideal.regularity != m:
        raise InternalInconsistency(
            "lifting landed on regularity %d instead of %d"
            % (ideal.regularity, m))
    return WitnessCertificate(ideal, f, m, tuple(log))


def _spliced(w: HilbertFunction, q: HilbertFunction,
             m: int) -> HilbertFunction:
    horizon = max(m, q.regularity)
    prefix = [w(t) if t < m else q(t) for t in range(horizon)]
    return HilbertFunction(tuple(prefix), q.tail)


def ideal_graft(Iq: StronglyStableIdeal, Iw: StronglyStableIdeal,
                m: int) -> WitnessCertificate:
    """Splice the quotient of Iw below degree m onto the quotient of Iq.

    Needs w(m-1) = q(m-1) and w(m-2) <= q(m-2); the result is saturated
    strongly stable with regularity at most max(m, reg(Iq))."""
    if m <= 1:
        raise PreconditionViolation("graft degree must exceed 1")
    if not (Iq.is_saturated and Iw.is_saturated):
        raise PreconditionViolation("graft needs saturated ideals")
    nvars = max(Iq.nvars, Iw.nvars)
    if Iq.nvars < nvars:
        Iq = Iq.extended(nvars, add_generators=True)
    if Iw.nvars < nvars:
        Iw = Iw.extended(nvars, add_generators=True)
    q = Iq.hilbert_function()
    w = Iw.hilbert_function()

    def hypotheses_hold(w_now):
        return w_now(m - 1) == q(m - 1) and w_now(m - 2) <= q(m - 2)

    if not hypotheses_hold(w):
        raise PreconditionViolation(
            "graft needs w(m-1) = q(m-1) and w(m-2) <= q(m-2);"
            " got w=%s q=%s m=%d" % (w, q, m))
    target = _spliced(w, q, m)
    s = max(m, Iq.regularity)
    log = ["graft at degree %d, slice degree %d" % (m, s)]
    if Iw.regularity > s:
        Iw = Iw.truncated(s)
        log.append("truncated the low side to generator degree %d" % s)

    top = ideal_from_slice(lgh(Iq.degree_slice(s))).saturation()
    low = ideal_from_slice(lgh(Iw.degree_slice(s))).saturation()
    if not hypotheses_hold(low.hilbert_function()):
        raise PreconditionViolation(
            "slicing at degree %d broke the graft hypotheses" % s)

    gens = set()
    for t in range(1, m):
        gens.update(term for term in low.degree_slice(t) if term[0] == 0)
    for t in range(m, s + 1):
        gens.update(term for term in top.degree_slice(t) if term[0] == 0)
    try:
        grafted = StronglyStableIdeal(nvars, frozenset(gens))
    except Exception as exc:
        raise VerificationFailure(
            "graft assembled an invalid ideal: %s" % exc) from exc

    achieved = grafted.hilbert_function()
    if achieved != target:
        raise VerificationFailure(
            "graft produced %s instead of %s" % (achieved, target))
    if grafted.regularity > s:
        raise VerificationFailure(
            "graft regularity %d exceeds the bound %d"
            % (grafted.regularity, s))
    certificate = WitnessCertificate(grafted, achieved, grafted.regularity,
                                     tuple(log))
    report = verify_witness(certificate)
    if not report:
        raise VerificationFailure("graft certificate failed: %s" % report)
    return certificate


@lru_cache(maxsize=None)
def witness_min_reg(u: HilbertFunction) -> WitnessCertificate:
    """A verified ideal whose quotient has Hilbert function u and the least
    regularity among all subschemes with that function.

    Walks down the derivative tower: each level lifts a minimal witness of
    the least minimal function fitting under the first difference, and the
    tower bottoms out at an artinian lex ideal."""
    if not is_scheme_function(u):
        raise NotSchemeHF("%s is not the Hilbert function of a"
                          " subscheme" % u)
    p = u.tail
    if p is None or p.gotzmann_number < 2:
        raise LinearVariety("%s describes a linear variety" % u)
    rho = u.regularity

    if p.degree == 0:
        base = artinian_lex_ideal(u.delta())
        ideal = artinian_lift(base)
        if ideal.regularity != rho + 1:
            raise InternalInconsistency(
                "base witness for %s has regularity %d, wanted %d"
                % (u, ideal.regularity, rho + 1))
        achieved = ideal.hilbert_function()
        if achieved != u:
            raise InternalInconsistency(
                "base witness realized %s instead of %s" % (achieved, u))
        log = ("artinian lex base in %d variables" % base.nvars,)
        certificate = WitnessCertificate(ideal, u, rho + 1, log)
    else:
        dp = p.derivative()
        du = u.delta()
        cap = max(rho + 1, min_scheme_regularity(dp))
        fit = least_dominated_regularity(dp, du, cap)
        section = witness_min_reg(minimal_function(dp, fit))
        ambient = u(1) - 1
        W = section.ideal
        if W.nvars > ambient:
            raise InternalInconsistency(
                "section witness needs %d variables, only %d available"
                % (W.nvars, ambient))
        if W.nvars < ambient:
            W = W.extended(ambient, add_generators=True)
        lifted = expanded_lifting(u, W)
        log = section.log + ("section fitted at regularity %d" % fit,) \
            + lifted.log
        certificate = WitnessCertificate(lifted.ideal, u,
                                         lifted.regularity, log)

    report = verify_witness(certificate)
    if not report:
        raise VerificationFailure(
            "witness for %s failed verification: %s" % (u, report))
    return certificate
