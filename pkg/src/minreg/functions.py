"""Hilbert functions and the minimal functions attached to a polynomial.

A Hilbert function is stored as a finite prefix of values at 0, 1, 2, ...
followed by an admissible polynomial tail (or a zero tail).  The prefix is
kept canonical: its last entry always differs from the tail value there,
so the length of the prefix is the regularity of the function, the first
point from which the function agrees with its tail forever.

The minimal functions come from Macaulay growth.  minimal_function(p, rho)
is the pointwise least admissible function with tail p and regularity at
most rho; minimal_function_exact(p, rho) is the least one with regularity
exactly rho; minimal_scheme_function(p, rho) is the least Hilbert function
of a scheme, or None when no scheme has that pair.  The two regularity
minima min_function_regularity and min_scheme_regularity are computed
without ever scanning the full range up to the Gotzmann number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binomials import minus_minus, plus_plus
from .errors import (InternalInconsistency, NegativeDerivative, NotAdmissible,
                     ParseError, RhoTooSmall)
from .polynomials import (AdmissiblePolynomial, interpolate,
                          parse_coefficients, poly_nonnegative_from, poly_sub,
                          polynomial_from_coefficients)


@dataclass(frozen=True)
class HilbertFunction:
    """Integer function given by a finite prefix and a polynomial tail.

    tail None means the function is zero from len(prefix) on.
    """

    prefix: tuple
    tail: AdmissiblePolynomial | None = None

    def __post_init__(self):
        values = []
        for v in self.prefix:
            if v != int(v):
                raise NotAdmissible("function values must be integers, got %r" % (v,))
            values.append(int(v))
        while values and values[-1] == self._tail_value(len(values) - 1):
            values.pop()
        object.__setattr__(self, "prefix", tuple(values))

    def _tail_value(self, t: int) -> int:
        return self.tail(t) if self.tail is not None else 0

    @property
    def regularity(self) -> int:
        """First point from which the function agrees with its tail."""
        return len(self.prefix)

    def __call__(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.prefix):
            return self.prefix[t]
        return self._tail_value(t)

    def values(self, stop: int):
        return [self(t) for t in range(stop)]

    def delta(self) -> "HilbertFunction":
        """First difference function; NegativeDerivative if it ever dips."""
        diffs = []
        previous = 0
        for t in range(len(self.prefix) + 1):
            current = self(t)
            step = current - previous
            if step < 0:
                raise NegativeDerivative(
                    "difference is %d at t = %d" % (step, t))
            diffs.append(step)
            previous = current
        tail = self.tail.derivative() if self.tail is not None else None
        if tail is not None and not poly_nonnegative_from(
                tail.coefficients, len(self.prefix) + 1):
            raise NegativeDerivative("difference goes negative inside the tail")
        return HilbertFunction(tuple(diffs), tail)

    def partial_sums(self) -> "HilbertFunction":
        """Running sums; the Hilbert function of the cone construction."""
        if self(0) != 1:
            raise NotAdmissible("partial sums need a function starting at 1")
        reg = len(self.prefix)
        sums = []
        acc = 0
        for t in range(reg):
            acc += self.prefix[t]
            sums.append(acc)
        if self.tail is None:
            tail = AdmissiblePolynomial((acc,))
        else:
            points = []
            value = acc
            for t in range(reg, reg + self.tail.degree + 2):
                value += self.tail(t)
                points.append((t, value))
            tail = AdmissiblePolynomial(interpolate(points))
        return HilbertFunction(tuple(sums), tail)

    def dominated_by(self, other: "HilbertFunction") -> bool:
        """True when self(t) <= other(t) for every t >= 0."""
        horizon = max(self.regularity, other.regularity)
        for t in range(horizon):
            if self(t) > other(t):
                return False
        mine = self.tail.coefficients if self.tail is not None else ()
        theirs = other.tail.coefficients if other.tail is not None else ()
        return poly_nonnegative_from(poly_sub(theirs, mine), horizon)

    def __str__(self):
        left = ",".join(str(v) for v in self.prefix)
        right = str(self.tail) if self.tail is not None else "0"
        return ("%s ; %s" % (left, right)) if left else "; %s" % right

    def __repr__(self):
        return "HilbertFunction(%r)" % str(self)


def parse_hilbert_function(text: str) -> HilbertFunction:
    """Parse `1,4,8 ; 5z-3` style text; the tail `0` means zero forever."""
    if ";" not in text:
        raise ParseError("a Hilbert function needs `values ; tail`, got %r" % text)
    left, _, right = text.partition(";")
    left = left.strip()
    prefix = []
    if left:
        for token in left.split(","):
            token = token.strip()
            try:
                prefix.append(int(token))
            except ValueError as exc:
                raise ParseError("bad value %r in %r" % (token, text)) from exc
    right = right.strip()
    if not right:
        raise ParseError("missing tail in %r" % text)
    coeffs = parse_coefficients(right)
    tail = polynomial_from_coefficients(coeffs) if coeffs else None
    return HilbertFunction(tuple(prefix), tail)


# ---------------------------------------------------------------------------
# admissibility


def is_admissible_function(h: HilbertFunction) -> bool:
    """Macaulay growth test: h(0) = 1, values stay >= 0, and each value
    obeys the growth bound of the previous one.  Beyond the horizon the
    function follows its tail inside the tail's valid range, where the
    bound holds for free."""
    if h(0) != 1:
        return False
    if h.tail is None:
        horizon = h.regularity + 1
    else:
        horizon = max(h.regularity, min_function_regularity(h.tail), 1)
    for t in range(horizon + 2):
        if h(t) < 0:
            return False
    for t in range(1, horizon + 1):
        current, nxt = h(t), h(t + 1)
        if current == 0:
            if nxt > 0:
                return False
        elif nxt > plus_plus(current, t):
            return False
    return True


def is_scheme_function(h: HilbertFunction) -> bool:
    """True when h is the Hilbert function of some closed subscheme:
    both h and its first difference pass the growth test."""
    if not is_admissible_function(h):
        return False
    try:
        d = h.delta()
    except NegativeDerivative:
        return False
    return is_admissible_function(d)


# ---------------------------------------------------------------------------
# minimal functions


def minimal_function(p: AdmissiblePolynomial, rho: int) -> HilbertFunction:
    """Pointwise least admissible function with tail p and regularity <= rho.

    Equals p from rho on (from the Gotzmann number less one, if that is
    smaller) and decreases backwards as slowly as Macaulay growth allows.
    """
    least = min_function_regularity(p)
    if rho < least:
        raise RhoTooSmall("no function with tail %s has regularity %d < %d"
                          % (p, rho, least))
    effective = min(rho, max(p.gotzmann_number - 1, 0))
    chain = []
    value = p(effective)
    for t in range(effective, 0, -1):
        value = minus_minus(value, t)
        chain.append(value)
    return HilbertFunction(tuple(reversed(chain)), p)


def minimal_function_exact(p: AdmissiblePolynomial, rho: int) -> HilbertFunction:
    """Pointwise least admissible function with tail p and regularity
    exactly rho: one more than p at rho - 1, minimal decrease below."""
    least = max(min_function_regularity(p), 1)
    if rho < least:
        raise RhoTooSmall("no function with tail %s has regularity exactly %d"
                          % (p, rho))
    value = p(rho - 1) + 1
    if value < 1:
        raise NotAdmissible("tail %s is negative at %d" % (p, rho - 1))
    chain = [value]
    for t in range(rho - 1, 0, -1):
        value = minus_minus(value, t)
        chain.append(value)
    out = HilbertFunction(tuple(reversed(chain)), p)
    if out.regularity != rho:
        raise InternalInconsistency("bumped function lost its regularity")
    return out


@lru_cache(maxsize=None)
def min_function_regularity(p: AdmissiblePolynomial) -> int:
    """Least regularity among admissible functions with tail p.

    Starts from the scheme minimum and slides down while the growth bound
    keeps holding; never scans the whole range up to the Gotzmann number.
    """
    if p.degree == 0:
        return 0 if p(0) == 1 else 1
    rho = min_scheme_regularity(p)
    if rho == 0:
        return 0
    while rho > 1 and p(rho - 1) >= 1 and plus_plus(p(rho - 1), rho - 1) >= p(rho):
        rho -= 1
    if rho == 1 and p(0) == 1:
        return 0
    return rho


@lru_cache(maxsize=None)
def min_scheme_regularity(p: AdmissiblePolynomial) -> int:
    """Least regularity among Hilbert functions of schemes with polynomial p.

    Found as one less than the first point where the partial sums of the
    minimal difference function fit under p."""
    if p.degree == 0:
        return 0 if p(0) == 1 else 1
    dp = p.derivative()
    floor = max(min_function_regularity(dp), 1)
    cap = p.gotzmann_number + 1
    for t in range(floor, cap + 1):
        f = minimal_function(dp, t)
        if sum(f(u) for u in range(t)) <= p(t - 1):
            if t == 1 and p(0) != 1:
                # agreeing with p already at 0 needs p(0) = 1
                continue
            return t - 1
    raise InternalInconsistency("scheme minimum not found below the Gotzmann number")


def least_dominated_regularity(q: AdmissiblePolynomial, w: HilbertFunction,
                               cap: int) -> int:
    """Least t, from the scheme minimum of q up to cap, whose minimal
    function lies pointwise below w.  Callers pass a cap that theory
    guarantees to succeed, so running past it is a bug."""
    floor = min_scheme_regularity(q)
    for t in range(floor, cap + 1):
        if minimal_function(q, t).dominated_by(w):
            return t
    raise InternalInconsistency(
        "no minimal function of %s fits below %s up to %d" % (q, w, cap))


def minimal_scheme_function(p: AdmissiblePolynomial, rho: int):
    """Pointwise least Hilbert function of a scheme with polynomial p and
    regularity exactly rho, or None when no such scheme exists."""
    threshold = min_scheme_regularity(p)
    if rho < threshold:
        return None
    if rho == threshold:
        f = minimal_function(p, rho)
        if f.regularity != rho or not is_scheme_function(f):
            raise InternalInconsistency(
                "minimal function at the scheme threshold misbehaved")
        return f
    f = minimal_function(p, rho)
    candidate = f if f.regularity == rho else minimal_function_exact(p, rho)
    return candidate if is_scheme_function(candidate) else None
