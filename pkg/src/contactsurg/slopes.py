"""Exact slope arithmetic for surgery coefficients.

Slopes are reduced rationals p/q together with the point at infinity,
which is represented as (1, 0).  Negative denominators are normalized by
moving the sign to the numerator, so 3/2 and -3/-2 are the same value.

The module also provides negative continued fractions (all coefficients
<= -2, the unique expansion of a rational < -1), modular inverses,
Rolfsen-twist slope calculus on the unknot, and the set of surgery
coefficients on the unknot producing a fixed lens space.
"""

from __future__ import annotations

import math
from fractions import Fraction


class SlopeError(ValueError):
    """Domain error in slope arithmetic (zero or infinite slope, etc.)."""


class Slope:
    """A reduced rational slope p/q, or infinity as (1, 0)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, Slope):
            num, den = num.num, num.den * den
        if isinstance(num, Fraction):
            num, den = num.numerator, num.denominator * den
        num = int(num)
        den = int(den)
        if den == 0:
            if num == 0:
                raise SlopeError("0/0 is not a slope")
            num = 1
        else:
            g = math.gcd(num, den)
            num //= g
            den //= g
            if den < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("Slope is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise SlopeError("infinite slope has no rational value")
        return Fraction(self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, Slope):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return not self.is_infinite and self.as_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def _cmp_key(self):
        if self.is_infinite:
            raise SlopeError("infinite slope is not ordered")
        return self.as_fraction()

    def __lt__(self, other):
        other = other.as_fraction() if isinstance(other, Slope) else Fraction(other)
        return self._cmp_key() < other

    def __le__(self, other):
        other = other.as_fraction() if isinstance(other, Slope) else Fraction(other)
        return self._cmp_key() <= other

    def __neg__(self):
        return Slope(-self.num, self.den) if not self.is_infinite else self

    def __str__(self):
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"Slope({self})"


INFINITY = Slope(1, 0)


def parse_slope(text: str) -> Slope:
    """Parse 'p/q', 'p', or 'inf' into a Slope."""
    text = text.strip()
    if text in ("inf", "oo", "infinity"):
        return INFINITY
    if "/" in text:
        p, q = text.split("/")
        return Slope(int(p), int(q))
    return Slope(int(text))


def neg_cf_expand(r) -> list:
    """Negative continued fraction [c1, ..., cn] of a rational r < -1.

    The expansion satisfies r = c1 - 1/(c2 - 1/(... - 1/cn)) with every
    ci <= -2, and it is the unique such expansion.  Integers r <= -2 give
    a single term.
    """
    r = Fraction(r)
    if r >= -1:
        raise SlopeError(f"negative continued fraction requires r < -1, got {r}")
    coeffs = []
    while True:
        c = math.floor(r)
        if c == r:
            coeffs.append(c)
            return coeffs
        coeffs.append(c)
        r = Fraction(-1) / (r - c)


def neg_cf_value(coeffs) -> Fraction:
    """Evaluate a negative continued fraction; inverse of neg_cf_expand."""
    if not coeffs:
        raise SlopeError("empty continued fraction")
    if any(c > -2 for c in coeffs):
        raise SlopeError("negative continued fraction coefficients must be <= -2")
    value = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        value = c - Fraction(1) / value
    return value


def mod_inverse(q: int, p: int):
    """Inverse of q mod p in [1, p-1], or None when gcd(q, p) != 1.

    For the degenerate modulus p = 1 the inverse is 0 (everything is
    congruent mod 1), which keeps the double-inverse involution exact.
    """
    if p < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(q, p) != 1:
        return None
    if p == 1:
        return 0
    return pow(q, -1, p)


def rolfsen_twist(r: Slope, n: int) -> Slope:
    """Twist p/q surgery on the unknot into p/(q + n|p|) surgery.

    Twisting changes the surgery description, not the manifold.  The
    result is infinity when the new denominator vanishes.  Zero and
    infinite slopes are rejected: 0- and infinity-surgery sit outside
    the slope calculus used here.
    """
    r = r if isinstance(r, Slope) else Slope(r)
    if r.is_infinite or r.num == 0:
        raise SlopeError("Rolfsen twist needs a finite nonzero slope")
    return Slope(r.num, r.den + n * abs(r.num))


def canonical_slope(r: Slope) -> Slope:
    """The unique member of r's Rolfsen-twist orbit that is <= -1.

    Every finite nonzero surgery coefficient on the unknot is equivalent
    to exactly one -p/q with 0 < q <= p.
    """
    r = r if isinstance(r, Slope) else Slope(r)
    if r.is_infinite or r.num == 0:
        raise SlopeError("canonical form needs a finite nonzero slope")
    a, b = r.num, r.den
    p = abs(a)
    if a < 0:
        q = (b - 1) % p + 1
        return Slope(-p, q)
    q = b % p - p
    return Slope(p, q)


def lens_parameters(r: Slope):
    """Lens space L(p, q) produced by r-surgery on the unknot.

    Writes r = -p/q with p >= 0 and returns (p, q mod p); p = 1 gives the
    three-sphere and p = 0 the S1 x S2 case, reported as (1, 0) and
    (0, 1).
    """
    r = r if isinstance(r, Slope) else Slope(r)
    if r.is_infinite:
        raise SlopeError("infinity surgery gives back the three-sphere")
    a, b = r.num, r.den
    if a == 0:
        return (0, 1)
    if a < 0:
        p, q = -a, b
    else:
        p, q = a, -b
    return (p, q % p)


def same_lens_space(a, b) -> bool:
    """Orientation-preserving classification of lens spaces.

    L(p, q) and L(p', q') are orientation-preserving diffeomorphic iff
    p = p' and q' is congruent to q or to the inverse of q mod p.
    """
    p, q = a
    p2, q2 = b
    if p != p2:
        return False
    if p <= 1:
        return True
    q %= p
    q2 %= p
    if q == q2:
        return True
    return (q * q2) % p == 1


def normalize_lens_bruteforce(p: int, q: int):
    """Canonical representative of the lens class by exhaustive search.

    Independent of mod_inverse: scans for the multiplicative inverse and
    returns min(q, q^-1) mod p.  Used to cross-check same_lens_space.
    """
    if p <= 1:
        return (p, 0)
    q %= p
    inverse = None
    for x in range(1, p):
        if (q * x) % p == 1:
            inverse = x
            break
    if inverse is None:
        return (p, q)
    return (p, min(q, inverse))


class CosmeticSlopeSet:
    """Surgery coefficients on the unknot giving one lens space.

    For canonical -p/q the set consists of -p/(q + np) and -p/(qbar + np)
    over all integers n, where qbar inverts q mod p.  The set is
    infinite; members are generated up to a denominator bound.
    """

    def __init__(self, p: int, q: int):
        if p < 1 or not (0 < q <= p) or math.gcd(p, q) != 1:
            raise SlopeError(f"-{p}/{q} is not a canonical surgery coefficient")
        if q == p and p != 1:
            raise SlopeError(f"-{p}/{q} is not reduced")
        self.p = p
        self.q = q
        self.qbar = mod_inverse(q, p)

    def members(self, den_bound: int):
        """Sorted members -p/q' with 0 < |q'| <= den_bound."""
        if den_bound < 1:
            raise ValueError("denominator bound must be positive")
        p, seen = self.p, set()
        branches = {self.q}
        if self.qbar is not None:
            branches.add(self.qbar)
        for start in branches:
            n0 = (-den_bound - start) // p
            qq = start + n0 * p
            while qq <= den_bound:
                if qq != 0 and qq >= -den_bound:
                    seen.add(Slope(-p, qq))
                qq += p
        return sorted(seen, key=lambda s: s.as_fraction())


def cs_set(p: int, q: int, den_bound: int):
    """Members of the cosmetic slope set of -p/q up to a denominator bound."""
    return CosmeticSlopeSet(p, q).members(den_bound)
