"""Contact (r)-surgery as sequences of contact (+1/-1)-surgeries.

A contact r-surgery on a Legendrian knot L (r the contact-frame
coefficient; the smooth coefficient is tb(L) + r) is realized by
(+1/-1)-surgeries on a link built from push-offs of L and a chain of
meridian unknots.  For r < 0 the smooth coefficient s = tb + r < -1 has
a negative continued fraction [c1, ..., cn]; L gets |c1 + 1 - tb|
stabilizations and the i-th chain unknot has tb = c_i + 1, all with
contact -1.  For r = p/q > 0 there are k push-offs with contact +1,
where k is minimal with q - kp <= 0; when q - kp < 0 the remaining
coefficient p/(q - kp) < 0 is handled by the negative case on one more
push-off, and when q - kp = 0 the k push-offs complete the surgery.

Orientations are fixed so that push-off pairs link with lk = tb(L) and
consecutive meridian chain components contribute -1 off-diagonal
entries; this is the unique convention reproducing the intersection
forms of all the worked (tb, slope) cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .slopes import SlopeError, neg_cf_expand


class ContactZeroError(SlopeError):
    """Contact (0)-surgery is not well-defined."""


@dataclass(frozen=True)
class KnotMetadata:
    """Smooth knot-type inputs consumed, never computed, by the checker."""

    tau: int | None = None
    seifert_genus: int | None = None
    slice_genus: int | None = None
    max_tb: int | None = None
    prime: bool | None = None
    lagrangian_slice: bool | None = None


@dataclass(frozen=True)
class LegendrianData:
    """A Legendrian knot given by its classical invariants."""

    tb: int
    rot: int
    knot_meta: KnotMetadata | None = None

    def __post_init__(self):
        if (self.rot - self.tb - 1) % 2 != 0:
            raise ValueError("rot must be congruent to tb + 1 mod 2")
        meta = self.knot_meta
        if meta is not None and meta.tau is not None:
            if self.tb + abs(self.rot) > 2 * meta.tau - 1:
                raise ValueError("tb + |rot| exceeds the 2 tau - 1 bound")


@dataclass(frozen=True)
class Component:
    """One link component of a (+1/-1)-surgery presentation.

    role is 'pushoff' (a copy of the base knot, possibly stabilized) or
    'chain' (a meridian unknot).  rot is None for components whose
    rotation number is a free choice (chain unknots).
    """

    role: str
    tb: int
    sign: int
    rot: int | None = None
    stabilizations: int = 0

    @property
    def framing(self) -> int:
        return self.tb + self.sign


@dataclass(frozen=True)
class SurgeryPresentation:
    components: tuple
    base_tb: int
    base_rot: int
    contact_coeff: Fraction
    smooth_slope: Fraction

    @property
    def l(self) -> int:
        """Number of contact (+1)-surgery components."""
        return sum(1 for c in self.components if c.sign == 1)

    @property
    def n(self) -> int:
        return len(self.components)

    def to_json(self):
        return {
            "components": [
                {"role": c.role, "tb": c.tb, "rot": c.rot, "sign": c.sign}
                for c in self.components
            ],
            "l": self.l,
        }


def unknot_rot_range(tb: int):
    """Rotation numbers of Legendrian unknots with the given tb:
    tb - 1 in absolute value at most, with the right parity."""
    if tb > -1:
        raise ValueError("Legendrian unknots have tb <= -1")
    t = -tb
    return list(range(t - 1, -t, -2))


def _stabilized_rot_values(rot: int, m: int):
    return list(range(rot + m, rot - m - 1, -2))


def _negative_chain(tb: int, rot: int, contact_coeff: Fraction):
    """Stabilized-knot plus meridian-chain data for a negative contact
    coefficient on a knot with invariants (tb, rot).

    Returns one component tuple per stabilization outcome.
    """
    smooth = tb + contact_coeff
    if smooth >= -1:
        raise SlopeError(
            f"negative-coefficient conversion needs smooth slope < -1, got {smooth}"
        )
    cf = neg_cf_expand(smooth)
    m = tb - cf[0] - 1
    assert m >= 0
    chain = tuple(
        Component("chain", c + 1, -1) for c in cf[1:]
    )
    variants = []
    for stab_rot in _stabilized_rot_values(rot, m):
        head = Component("pushoff", tb - m, -1, rot=stab_rot, stabilizations=m)
        variants.append((head,) + chain)
    return variants


def convert(L: LegendrianData, contact_coeff) -> list:
    """All (+1/-1)-surgery presentations of contact r-surgery on L.

    One presentation is returned per stabilization outcome of the single
    stabilized component (its rotation number is pinned); the rotation
    numbers of chain unknots remain free and are enumerated by
    enumerate_rotations.
    """
    contact_coeff = Fraction(contact_coeff)
    if contact_coeff == 0:
        raise ContactZeroError("contact (0)-surgery is not well-defined")
    smooth = L.tb + contact_coeff
    if smooth == L.tb:
        raise ContactZeroError("contact (0)-surgery is not well-defined")

    def finish(comps):
        return SurgeryPresentation(
            components=comps,
            base_tb=L.tb,
            base_rot=L.rot,
            contact_coeff=contact_coeff,
            smooth_slope=smooth,
        )

    if contact_coeff < 0:
        return [finish(v) for v in _negative_chain(L.tb, L.rot, contact_coeff)]

    p, q = contact_coeff.numerator, contact_coeff.denominator
    k = -(-q // p)  # smallest k with q - k p <= 0
    rem = q - k * p
    pushoffs = tuple(Component("pushoff", L.tb, 1, rot=L.rot) for _ in range(k))
    if rem == 0:
        return [finish(pushoffs)]
    tail_coeff = Fraction(p, rem)
    return [finish(pushoffs + v) for v in _negative_chain(L.tb, L.rot, tail_coeff)]


def enumerate_rotations(pres: SurgeryPresentation, base_rot: int | None = None):
    """All rotation vectors consistent with the presentation.

    Components with a pinned rotation number keep it (pass base_rot to
    override the unstabilized push-offs); each chain unknot with tb = -t
    ranges over t-1, t-3, ..., -t+1.
    """
    choices = []
    for c in pres.components:
        if c.role == "pushoff" and c.stabilizations == 0:
            choices.append([base_rot if base_rot is not None else c.rot])
        elif c.rot is not None:
            choices.append([c.rot])
        else:
            choices.append(unknot_rot_range(c.tb))
    return [tuple(v) for v in product(*choices)]


@dataclass(frozen=True)
class IntersectionForm:
    """Symmetric linking form Q of a presentation, with the count l of
    (+1)-components and an optional rotation vector r."""

    Q: tuple
    l: int
    r: tuple | None = None

    def __post_init__(self):
        n = len(self.Q)
        for row in self.Q:
            if len(row) != n:
                raise ValueError("Q must be square")
        for i in range(n):
            for j in range(i):
                if self.Q[i][j] != self.Q[j][i]:
                    raise ValueError("Q must be symmetric")
        if self.r is not None and len(self.r) != n:
            raise ValueError("rotation vector length must match Q")

    @property
    def n(self) -> int:
        return len(self.Q)

    def rows(self):
        return [list(row) for row in self.Q]

    def with_rotation(self, r):
        return IntersectionForm(self.Q, self.l, tuple(int(x) for x in r))


def linking_matrix(pres: SurgeryPresentation) -> IntersectionForm:
    """Intersection form of the trace of the surgeries.

    Diagonal entries are the smooth framings tb_i + sign_i; push-off
    pairs link with the base tb; each chain component links only its
    predecessor, with -1.
    """
    comps = pres.components
    n = len(comps)
    q = [[0] * n for _ in range(n)]
    pushoff_idx = [i for i, c in enumerate(comps) if c.role == "pushoff"]
    for i, c in enumerate(comps):
        q[i][i] = c.framing
    for a_i, i in enumerate(pushoff_idx):
        for j in pushoff_idx[a_i + 1:]:
            q[i][j] = q[j][i] = pres.base_tb
    prev = pushoff_idx[-1] if pushoff_idx else None
    for i, c in enumerate(comps):
        if c.role == "chain":
            if prev is None:
                raise ValueError("chain component without a predecessor")
            q[i][prev] = q[prev][i] = -1
            prev = i
    return IntersectionForm(tuple(tuple(row) for row in q), pres.l)


def smooth_recovery(pres: SurgeryPresentation) -> Fraction:
    """Smooth surgery coefficient recovered from the framed link.

    Independent cross-check of convert: slam-dunk the meridian chain
    into the last push-off, then combine the parallel push-offs (pairwise
    linking t = tb) via r = t + 1/sum(1/(r_i - t)).
    """
    comps = pres.components
    chain = [c for c in comps if c.role == "chain"]
    pushoffs = [c for c in comps if c.role == "pushoff"]
    if not pushoffs:
        raise ValueError("presentation has no push-off of the base knot")
    eff = None
    for c in reversed(chain):
        f = Fraction(c.framing)
        eff = f if eff is None else f - 1 / eff
    coeffs = [Fraction(c.framing) for c in pushoffs]
    if eff is not None:
        coeffs[-1] = coeffs[-1] - 1 / eff
    t = Fraction(pres.base_tb)
    total = Fraction(0)
    for r in coeffs:
        if r == t:
            raise ZeroDivisionError("push-off framing equal to tb")
        total += 1 / (r - t)
    if total == 0:
        raise ZeroDivisionError("framed link reduces to infinity surgery")
    return t + 1 / total
