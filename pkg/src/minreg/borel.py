"""Borel sets and strongly stable monomial ideals.

Terms live in a polynomial ring K[x0, ..., xn] whose variables are ordered
x0 < x1 < ... < xn, and are stored as exponent tuples (a0, ..., an).  An
elementary raising move replaces one factor xi by a larger variable xj; a
set of equal-degree terms closed under raising is a Borel set, and a
monomial ideal whose every slice is Borel is strongly stable.

The least variable x0 plays the role of the saturation variable: stripping
x0 from the minimal generators of a strongly stable ideal produces its
saturation, and the maximal degree of the minimal generators equals the
Castelnuovo-Mumford regularity.  The Hilbert function of a saturated
quotient is read off any slice at or beyond the regularity from two
partitions of the slice: the height classes (by x0-exponent) give the
values below the slice degree, the growth classes (by least variable
present) give the polynomial tail.

The normal form lgh() rearranges a Borel set, class by class, into lex
segments without changing either partition's sizes.  Saturations of the
rearranged set are the pivot of the witness constructions: they keep the
Hilbert function but expose minimal generators in the degrees where terms
have to be removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binomials import binom
from .errors import (DegreeMismatch, InternalInconsistency, LinearVariety,
                     NotBorel, NotSaturated, NotStronglyStable)
from .functions import HilbertFunction, minimal_function
from .polynomials import (AdmissiblePolynomial, binomial_coeffs,
                          polynomial_from_coefficients, poly_scale, poly_sub)

Term = tuple


def term_degree(term) -> int:
    return sum(term)


def min_index(term):
    """Index of the least variable dividing the term; None for the unit."""
    for i, e in enumerate(term):
        if e > 0:
            return i
    return None


def lex_key(term):
    """Sort key for lex among equal degrees: compare top variables first."""
    return tuple(reversed(term))


def deglex_key(term):
    return (sum(term), tuple(reversed(term)))


def degrevlex_key(term):
    return (sum(term), tuple(-e for e in term))


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def term_string(term) -> str:
    pieces = []
    for i, e in enumerate(term):
        if e == 1:
            pieces.append("x%d" % i)
        elif e > 1:
            pieces.append("x%d^%d" % (i, e))
    return "*".join(pieces) if pieces else "1"


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int):
    """All degree-d terms in nvars variables, lex-descending."""
    if degree < 0:
        return ()
    if nvars == 1:
        return ((degree,),)
    terms = []

    def fill(position, remaining, partial):
        if position == nvars - 1:
            terms.append(tuple(partial + [remaining]))
            return
        for e in range(remaining + 1):
            fill(position + 1, remaining - e, partial + [e])

    fill(0, degree, [])
    terms.sort(key=lex_key, reverse=True)
    return tuple(terms)


def borel_leq(a, b) -> bool:
    """True when b is reachable from a by raising moves.

    Equal-degree terms compare by suffix sums: a <= b iff for every i the
    total exponent of x_i..x_n in a is at most the one in b.
    """
    if sum(a) != sum(b):
        raise DegreeMismatch(
            "cannot compare %s with %s" % (term_string(a), term_string(b)))
    suffix_a = 0
    suffix_b = 0
    for x, y in zip(reversed(a), reversed(b)):
        suffix_a += x
        suffix_b += y
        if suffix_a > suffix_b:
            return False
    return True


def _adjacent_raisings(term):
    for i in range(len(term) - 1):
        if term[i] > 0:
            raised = list(term)
            raised[i] -= 1
            raised[i + 1] += 1
            yield tuple(raised)


def _adjacent_lowerings(term):
    for i in range(1, len(term)):
        if term[i] > 0:
            lowered = list(term)
            lowered[i] -= 1
            lowered[i - 1] += 1
            yield tuple(lowered)


@dataclass(frozen=True)
class BorelSet:
    """A raising-closed set of equal-degree terms."""

    nvars: int
    degree: int
    terms: frozenset

    def __post_init__(self):
        object.__setattr__(self, "terms", frozenset(self.terms))
        for term in self.terms:
            if len(term) != self.nvars:
                raise NotBorel("term %s does not live in %d variables"
                               % (term_string(term), self.nvars))
            if any(e < 0 for e in term):
                raise NotBorel("negative exponent in %s" % (term,))
            if sum(term) != self.degree:
                raise NotBorel("term %s is not of degree %d"
                               % (term_string(term), self.degree))
        # Closure under adjacent moves implies closure under all raisings.
        for term in self.terms:
            for raised in _adjacent_raisings(term):
                if raised not in self.terms:
                    raise NotBorel(
                        "raising %s gives %s which is missing"
                        % (term_string(term), term_string(raised)))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms, key=lex_key, reverse=True))

    def __contains__(self, term):
        return term in self.terms

    def growth_vector(self):
        """Class sizes by least variable present, indices 0..n."""
        counts = [0] * self.nvars
        for term in self.terms:
            counts[min_index(term)] += 1
        return tuple(counts)

    def height_vector(self):
        """Class sizes by x0-exponent, indices 0..degree."""
        counts = [0] * (self.degree + 1)
        for term in self.terms:
            counts[term[0]] += 1
        return tuple(counts)

    def minimal_terms(self):
        """Members with no lowering inside the set, lex-descending."""
        found = []
        for term in self:
            if all(low not in self.terms
                   for low in _adjacent_lowerings(term)):
                found.append(term)
        return tuple(found)


def growth_vector(B: BorelSet):
    return B.growth_vector()


def height_vector(B: BorelSet):
    return B.height_vector()


def lgh(B: BorelSet) -> BorelSet:
    """Rearrange a Borel set into lex segments class by class.

    The x0-free part is redistributed along the growth classes, the rest
    along the height classes; both partitions keep their sizes, so the
    saturation of the generated ideal keeps its Hilbert function while its
    generators move into the lex-first positions of every class.
    """
    if B.degree == 0 or not B.terms:
        return B
    gv = B.growth_vector()
    hv = B.height_vector()
    picked = []
    free = [t for t in monomial_basis(B.nvars, B.degree) if t[0] == 0]
    for i in range(1, B.nvars):
        cls = [t for t in free if min_index(t) == i]
        if gv[i] > len(cls):
            raise InternalInconsistency(
                "growth class %d wants %d of %d terms" % (i, gv[i], len(cls)))
        picked.extend(cls[:gv[i]])
    for j in range(1, B.degree + 1):
        cls = [(j,) + t[1:]
               for t in monomial_basis(B.nvars, B.degree - j) if t[0] == 0]
        if hv[j] > len(cls):
            raise InternalInconsistency(
                "height class %d wants %d of %d terms" % (j, hv[j], len(cls)))
        picked.extend(cls[:hv[j]])
    try:
        result = BorelSet(B.nvars, B.degree, frozenset(picked))
    except NotBorel as exc:
        raise InternalInconsistency(
            "lex rearrangement lost Borel closure: %s" % exc) from exc
    if result.growth_vector() != gv or result.height_vector() != hv:
        raise InternalInconsistency("lex rearrangement changed a partition")
    return result


def _minimalize(terms):
    """Drop every term strictly divisible by another one."""
    kept = []
    by_degree = sorted(set(terms), key=term_degree)
    for term in by_degree:
        if not any(divides(g, term) for g in kept if g != term):
            kept.append(term)
    return frozenset(kept)


@dataclass(frozen=True)
class StronglyStableIdeal:
    """Monomial ideal closed under raising moves, held by minimal generators."""

    nvars: int
    generators: frozenset

    def __post_init__(self):
        gens = []
        for term in self.generators:
            term = tuple(int(e) for e in term)
            if len(term) != self.nvars:
                raise NotStronglyStable(
                    "generator %s does not live in %d variables"
                    % (term_string(term), self.nvars))
            if any(e < 0 for e in term):
                raise NotStronglyStable("negative exponent in %s" % (term,))
            gens.append(term)
        object.__setattr__(self, "generators", _minimalize(gens))
        for gen in self.generators:
            for raised in _adjacent_raisings(gen):
                if not self.contains(raised):
                    raise NotStronglyStable(
                        "raising %s gives %s outside the ideal"
                        % (term_string(gen), term_string(raised)))

    @property
    def regularity(self) -> int:
        """Maximal degree of the minimal generators (0 for the zero ideal)."""
        return max((term_degree(g) for g in self.generators), default=0)

    @property
    def is_saturated(self) -> bool:
        return all(g[0] == 0 for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def sorted_generators(self):
        return sorted(self.generators, key=deglex_key)

    def contains(self, term) -> bool:
        return any(divides(g, term) for g in self.generators)

    def degree_slice(self, t: int) -> BorelSet:
        """All degree-t members, as a Borel set."""
        members = set()
        for gen in self.generators:
            room = t - term_degree(gen)
            if room < 0:
                continue
            for extra in monomial_basis(self.nvars, room):
                members.add(tuple(a + b for a, b in zip(gen, extra)))
        return BorelSet(self.nvars, t, frozenset(members))

    def saturation(self) -> "StronglyStableIdeal":
        stripped = [(0,) + g[1:] for g in self.generators]
        return StronglyStableIdeal(self.nvars, frozenset(stripped))

    def truncated(self, t: int) -> "StronglyStableIdeal":
        """The ideal generated by the generators of degree at most t."""
        kept = [g for g in self.generators if term_degree(g) <= t]
        return StronglyStableIdeal(self.nvars, frozenset(kept))

    def extended(self, nvars: int,
                 add_generators: bool = False) -> "StronglyStableIdeal":
        """Same generators in a ring with extra top variables.

        With add_generators the new variables join the generating set, which
        keeps the quotient (and so the Hilbert function) unchanged; without
        it the plain extension may fail to be strongly stable.
        """
        if nvars < self.nvars:
            raise NotStronglyStable(
                "cannot shrink from %d to %d variables"
                % (self.nvars, nvars))
        pad = (0,) * (nvars - self.nvars)
        gens = [g + pad for g in self.generators]
        if add_generators:
            for k in range(self.nvars, nvars):
                unit = [0] * nvars
                unit[k] = 1
                gens.append(tuple(unit))
        return StronglyStableIdeal(nvars, frozenset(gens))

    def hilbert_function(self) -> HilbertFunction:
        """Hilbert function of the saturated quotient.

        Reads the height classes of the slice at the regularity for the
        finite values and the growth classes for the polynomial tail.
        """
        if not self.is_saturated:
            raise NotSaturated("saturate before asking for the"
                               " Hilbert function")
        n = self.nvars - 1
        t = max(self.regularity, 1)
        B = self.degree_slice(t)
        hv = B.height_vector()
        gv = B.growth_vector()
        prefix = []
        for j in range(t):
            prefix.append(binom(j + n, n) - sum(hv[t - j:]))
        tail = binomial_coeffs(n, n)
        for i in range(self.nvars):
            if gv[i]:
                tail = poly_sub(tail, poly_scale(binomial_coeffs(i, i - t),
                                                 gv[i]))
        if not tail:
            return HilbertFunction(tuple(prefix), None)
        return HilbertFunction(tuple(prefix),
                               polynomial_from_coefficients(tail))

    def __str__(self):
        inside = ", ".join(term_string(g) for g in self.sorted_generators())
        return "(%s)" % inside

    def __repr__(self):
        return "StronglyStableIdeal(%d, %s)" % (self.nvars, self)


def saturate(J: StronglyStableIdeal) -> StronglyStableIdeal:
    return J.saturation()


def regularity(J: StronglyStableIdeal) -> int:
    return J.regularity


def hilbert_function_of(J: StronglyStableIdeal) -> HilbertFunction:
    return J.hilbert_function()


def degree_slice(J: StronglyStableIdeal, t: int) -> BorelSet:
    return J.degree_slice(t)


def truncate_below(J: StronglyStableIdeal, t: int) -> StronglyStableIdeal:
    return J.truncated(t)


def extend_variables(J: StronglyStableIdeal, nvars: int,
                     add_generators: bool = False) -> StronglyStableIdeal:
    return J.extended(nvars, add_generators)


def ideal_from_slice(B: BorelSet) -> StronglyStableIdeal:
    return StronglyStableIdeal(B.nvars, B.terms)


def artinian_lift(A: StronglyStableIdeal) -> StronglyStableIdeal:
    """View an ideal in x1..xn inside K[x0, ..., xn], x0 the new least
    variable.  The result is saturated by construction and keeps the
    generator degrees, while the quotient Hilbert function turns into the
    running sums of the old one."""
    gens = [(0,) + g for g in A.generators]
    return StronglyStableIdeal(A.nvars + 1, frozenset(gens))


def _lex_ideal(nvars: int, slice_sizes) -> StronglyStableIdeal:
    """Ideal whose degree-t piece is the lex-first slice_sizes[t] terms.

    slice_sizes is indexed from degree 1; consistency of consecutive
    slices is asserted because every caller passes sizes coming from an
    admissible function.
    """
    gens = []
    previous = set()
    for offset, size in enumerate(slice_sizes):
        t = offset + 1
        basis = monomial_basis(nvars, t)
        if not 0 <= size <= len(basis):
            raise InternalInconsistency(
                "lex slice of size %d out of range at degree %d" % (size, t))
        current = set(basis[:size])
        grown = set()
        for term in previous:
            for k in range(nvars):
                bumped = list(term)
                bumped[k] += 1
                grown.add(tuple(bumped))
        if not grown <= current:
            raise InternalInconsistency(
                "lex slices stopped nesting at degree %d" % t)
        gens.extend(current - grown)
        previous = current
    return StronglyStableIdeal(nvars, frozenset(gens))


def lex_segment_ideal(p: AdmissiblePolynomial) -> StronglyStableIdeal:
    """The saturated lex-segment ideal with Hilbert polynomial p.

    Its quotient Hilbert function is the least one with polynomial p and
    its regularity is the Gotzmann number.
    """
    r = p.gotzmann_number
    if r < 2:
        raise LinearVariety("lex-segment construction needs r > 1")
    f = minimal_function(p, r - 1)
    nvars = f(1)
    sizes = [binom(t + nvars - 1, nvars - 1) - f(t) for t in range(1, r + 1)]
    ideal = _lex_ideal(nvars, sizes)
    if not ideal.is_saturated:
        raise InternalInconsistency("lex-segment ideal of %s came out"
                                    " unsaturated" % p)
    return ideal


def artinian_lex_ideal(h: HilbertFunction) -> StronglyStableIdeal:
    """Lex ideal with finite quotient function h, in h(1) variables.

    h must vanish eventually; the ideal swallows every monomial from the
    first zero of h on, so its regularity is that first zero."""
    if h.tail is not None and h.tail.coefficients:
        raise InternalInconsistency(
            "artinian construction fed the infinite function %s" % h)
    if h(0) != 1:
        raise InternalInconsistency(
            "quotient function must start at 1, got %s" % h)
    nvars = h(1)
    if nvars < 1:
        raise InternalInconsistency("no variables left for %s" % h)
    top = h.regularity
    sizes = [binom(t + nvars - 1, nvars - 1) - h(t)
             for t in range(1, top + 1)]
    return _lex_ideal(nvars, sizes)
