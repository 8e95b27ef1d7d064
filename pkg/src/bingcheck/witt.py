"""Witt presentations over the Laurent ring and the Bing-double obstruction
pipeline.

A Witt presentation is a square Laurent-polynomial matrix B with nonzero
determinant that is Hermitian for the involution t -> 1/t (B(t)^T = B(1/t)
entrywise), together with a coefficient-ring flag: Z (integral), Z2loc
(2-local, odd denominators), or Q.  The presentation of a knot is
B(t) = (1 - t) A + (1 - 1/t) A^T for a Seifert matrix A.

The maps phi_n substitute t -> t^n; they are additive with respect to block
sum.  The infection construction J(p, q) of a pattern on a companion K has
Witt class phi_p W(K) + phi_{p+q} W(K) + phi_q W(K), realized here as the
block sum of the three substituted presentations.

The obstruction battery collects necessary conditions for algebraic
sliceness -- Fox-Milnor factorization, vanishing signature function, Arf
invariant, squareness of the determinant -- and reports the first failing
one as its certificate.  A failing battery on K certifies that the Bing
double B(K) is not slice, since a knot whose Bing double is slice must be
algebraically slice.  NO_OBSTRUCTION_FOUND never claims sliceness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import AdmissibilityError, InternalInvariantError
from .laurent import LaurentPoly, is_two_local, normalize_unit
from .intpoly import IntPoly, cyclotomic, euler_phi
from .matrices import ExactMatrix
from .fields import evaluated_hermitian_signature
from .sigfunc import SignatureFunction, same_step_function, signature_function_of_matrix
from .seifert import (
    SeifertMatrix,
    alexander,
    arf as seifert_arf,
    determinant_invariant,
    fox_milnor,
    FoxMilnorResult,
)

__all__ = [
    "BingReport",
    "CrossCheck",
    "NOT_ALG_SLICE",
    "NO_OBSTRUCTION_FOUND",
    "ObstructionReport",
    "WittPresentation",
    "bing_double_verdict",
    "cyclotomic_factors",
    "from_seifert",
    "jpq_presentation",
    "obstruction_battery",
    "phi",
    "presentation_battery",
    "witt_sum",
]

NOT_ALG_SLICE = "NOT_ALG_SLICE"
NO_OBSTRUCTION_FOUND = "NO_OBSTRUCTION_FOUND"

_RING_RANK = {"Z": 0, "Z2loc": 1, "Q": 2}

# fixed battery order; the first failing test becomes the certificate
_CERTIFICATE_ORDER = ("fox_milnor", "signature_function", "arf", "determinant_square")

# deterministic angles for the J(p, q) signature additivity cross-check
_CROSSCHECK_ANGLES = (
    Fraction(1, 5), Fraction(2, 5), Fraction(1, 7), Fraction(2, 7),
    Fraction(3, 7), Fraction(1, 8), Fraction(3, 8), Fraction(1, 9),
    Fraction(2, 9), Fraction(4, 9),
)


class WittPresentation:
    """Hermitian Laurent presentation with a coefficient-ring flag."""

    __slots__ = ("_b", "_ring")

    def __init__(self, b: ExactMatrix, ring: str = "Z"):
        if ring not in _RING_RANK:
            raise ValueError("ring flag must be one of Z, Z2loc, Q")
        b = b.to_laurent()
        if not b.is_square:
            raise AdmissibilityError("presentations are square")
        n = b.rows
        for i in range(n):
            for j in range(n):
                if b[i, j].substitute_power(-1) != b[j, i]:
                    raise AdmissibilityError(
                        "presentation is not Hermitian for t -> 1/t"
                    )
        if n and b.det().is_zero:
            raise AdmissibilityError("presentation determinant vanishes")
        if ring in ("Z", "Z2loc"):
            for row in b.entries:
                for e in row:
                    for _, c in e.items():
                        ok = c.denominator == 1 if ring == "Z" else is_two_local(c)
                        if not ok:
                            raise AdmissibilityError(
                                "entries do not lie in the flagged ring %s" % ring
                            )
        self._b = b
        self._ring = ring

    @property
    def matrix(self) -> ExactMatrix:
        return self._b

    @property
    def ring(self) -> str:
        return self._ring

    @property
    def size(self) -> int:
        return self._b.rows

    def order(self) -> LaurentPoly:
        """Normalized determinant: the order of the presented torsion module
        (up to units)."""
        if self.size == 0:
            return LaurentPoly.one()
        return normalize_unit(self._b.det())

    def __eq__(self, other):
        if not isinstance(other, WittPresentation):
            return NotImplemented
        return self._b == other._b and self._ring == other._ring

    def __hash__(self):
        return hash((self._b, self._ring))

    def __repr__(self):
        return "WittPresentation(size=%d, ring=%s)" % (self.size, self._ring)


def from_seifert(s: SeifertMatrix) -> WittPresentation:
    """B(t) = (1 - t) A + (1 - 1/t) A^T with ring Z (integral) or Q."""
    return WittPresentation(s.seifert_form(), ring="Z" if s.integral else "Q")


def phi(p: WittPresentation, n: int) -> WittPresentation:
    """Substitute t -> t^n (n >= 1).  Additive, preserves Hermitian-ness;
    the order becomes the substituted order up to units."""
    if n < 1:
        raise ValueError("phi needs n >= 1")
    if n == 1:
        return p
    return WittPresentation(p.matrix.substitute_power(n), ring=p.ring)


def witt_sum(p1: WittPresentation, p2: WittPresentation) -> WittPresentation:
    """Block sum; realizes addition of Witt classes.  Ring flags promote
    toward Q."""
    ring = max(p1.ring, p2.ring, key=_RING_RANK.get)
    return WittPresentation(p1.matrix.block_sum(p2.matrix), ring=ring)


def jpq_presentation(s: SeifertMatrix, p: int, q: int) -> WittPresentation:
    """Presentation of the infection J(p, q) on companion S:
    phi_p + phi_{p+q} + phi_q of the knot's presentation."""
    if p < 1 or q < 1:
        raise ValueError("J(p, q) needs p, q >= 1")
    base = from_seifert(s)
    return witt_sum(phi(base, p), witt_sum(phi(base, p + q), phi(base, q)))


def _monic_divides(g: IntPoly, f: IntPoly) -> bool:
    """Whether the monic g divides f over the integers."""
    rem = list(f.coeffs)
    dg = g.degree
    while len(rem) - 1 >= dg:
        lead = rem[-1]
        if lead:
            shift = len(rem) - 1 - dg
            for i, c in enumerate(g.coeffs):
                rem[shift + i] -= lead * c
        rem.pop()
    return not any(rem)


def cyclotomic_factors(delta: LaurentPoly):
    """Sorted list of all d with the d-th cyclotomic polynomial dividing
    delta (d = 1 means t - 1; d = 2 means t + 1), found by trial division
    over the range phi(d) <= deg delta.

    >>> from .laurent import parse_poly
    >>> cyclotomic_factors(parse_poly('t^2 - t + 1'))
    [6]
    >>> cyclotomic_factors(parse_poly('t^2 - 3t + 1'))
    []
    """
    if delta.is_zero:
        raise ValueError("the zero polynomial has no factors")
    f = IntPoly.from_laurent(delta * (1 / delta.content())).primitive()
    deg = f.degree
    out = []
    # euler_phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2 deg^2 + 1
    for d in range(1, 2 * deg * deg + 2):
        if euler_phi(d) <= deg and _monic_divides(cyclotomic(d), f):
            out.append(d)
    return out


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of the algebraic-sliceness battery on one knot/presentation.

    `arf` and `determinant` are None when not applicable (rational-class
    input, or a bare presentation with no Seifert matrix behind it)."""

    name: str
    ring: str
    alexander: LaurentPoly
    fox_milnor: FoxMilnorResult
    signature: SignatureFunction
    arf: int | None
    determinant: int | None
    cyclotomic: tuple
    verdict: str
    certificate: str | None

    @property
    def determinant_is_square(self):
        if self.determinant is None:
            return None
        r = isqrt(self.determinant)
        return r * r == self.determinant

    def __post_init__(self):
        if self.verdict == NOT_ALG_SLICE and self.certificate is None:
            raise InternalInvariantError("an obstruction verdict needs a certificate")
        if self.verdict == NO_OBSTRUCTION_FOUND and self.certificate is not None:
            raise InternalInvariantError("no certificate without an obstruction")


def _assemble_report(name, ring, order, sigfn, arf_value, det_value) -> ObstructionReport:
    fm = fox_milnor(order)
    failures = {
        "fox_milnor": not fm.passes,
        "signature_function": not sigfn.is_zero,
        "arf": arf_value is not None and arf_value != 0,
        "determinant_square": (
            det_value is not None and isqrt(det_value) ** 2 != det_value
        ),
    }
    certificate = next((k for k in _CERTIFICATE_ORDER if failures[k]), None)
    return ObstructionReport(
        name=name,
        ring=ring,
        alexander=order,
        fox_milnor=fm,
        signature=sigfn,
        arf=arf_value,
        determinant=det_value,
        cyclotomic=tuple(cyclotomic_factors(order)),
        verdict=NOT_ALG_SLICE if certificate else NO_OBSTRUCTION_FOUND,
        certificate=certificate,
    )


def obstruction_battery(s: SeifertMatrix) -> ObstructionReport:
    """Run every implemented necessary condition for algebraic sliceness on
    a Seifert matrix; deterministic, with the first failing test (in the
    order Fox-Milnor, signature function, Arf, determinant-square) as the
    certificate."""
    delta = alexander(s)
    sigfn = signature_function_of_matrix(s.seifert_form())
    arf_value = seifert_arf(s) if s.integral else None
    det_value = determinant_invariant(s) if s.integral else None
    return _assemble_report(
        s.name or "(unnamed)",
        "Z" if s.integral else "Q",
        delta,
        sigfn,
        arf_value,
        det_value,
    )


def presentation_battery(p: WittPresentation, name: str = "(presentation)") -> ObstructionReport:
    """The battery applied to a bare presentation: the order det(B) takes
    the Alexander polynomial's role, Arf and determinant do not apply."""
    return _assemble_report(
        name,
        p.ring,
        p.order(),
        signature_function_of_matrix(p.matrix),
        None,
        None,
    )


@dataclass(frozen=True)
class CrossCheck:
    """Consistency results for one (p, q) pair: whether the J(p, q)
    signature matched the phi-sum of the companion's signatures at every
    sampled angle, and the telescoping comparison phi_{q-1} ~ phi_{q+1}
    (verified / violated / skipped)."""

    p: int
    q: int
    additivity: str  # "pass" | "fail"
    telescoping: str  # "verified" | "violated" | "skipped"


@dataclass(frozen=True)
class BingReport:
    """Verdict about the Bing double B(K): the battery on K, the conclusion
    it supports, the Arf side-certificate, and the machinery cross-checks."""

    battery: ObstructionReport
    conclusion: str | None
    arf_certificate: bool
    crosschecks: tuple
    check_range: int
    verdict: str
    certificate: str | None


def _signature_at_multiple(b: ExactMatrix, theta: Fraction):
    """(signature, nullity) of B at angle theta, with angle 0 giving the
    zero form by convention (B(1) = 0 for Seifert-form presentations)."""
    theta = theta - theta.numerator // theta.denominator  # reduce mod 1
    if theta == 0:
        return (0, b.rows)
    return evaluated_hermitian_signature(b, theta)


def _phi_signature_function(base: WittPresentation, n: int):
    """Signature function of phi_n(base); n = 0 is the zero pairing, whose
    function vanishes identically."""
    if n == 0:
        return signature_function_of_matrix(
            ExactMatrix.zeros(0, 0, kind="laurent")
        ), ExactMatrix.zeros(0, 0, kind="laurent")
    pres = phi(base, n)
    return signature_function_of_matrix(pres.matrix), pres.matrix


def bing_double_verdict(s: SeifertMatrix, check_range: int = 3) -> BingReport:
    """Decide what the implemented obstructions say about the Bing double
    of the knot with Seifert matrix `s` (integral required).

    The battery gives the primary verdict: any failing necessary condition
    for algebraic sliceness certifies that B(K) is not slice (a knot with
    slice Bing double is algebraically slice).  Arf(K) = 1 is reported as an
    independent secondary certificate.  For 1 <= p, q <= check_range the
    J(p, q) signature additivity and, when the J(p, q) battery is wholly
    zero, the telescoping identity phi_{q-1} ~ phi_{q+1} are verified; a
    telescoping violation is itself an obstruction certificate.
    """
    if not s.integral:
        raise AdmissibilityError("the Bing-double verdict needs an integral Seifert matrix")
    if check_range < 1:
        raise ValueError("cross-check range must be >= 1")
    battery = obstruction_battery(s)
    base = from_seifert(s)
    b = base.matrix

    crosschecks = []
    telescoping_violation = False
    for p in range(1, check_range + 1):
        for q in range(1, check_range + 1):
            jp = jpq_presentation(s, p, q)
            additivity = "pass"
            for theta in _CROSSCHECK_ANGLES:
                lhs = _signature_at_multiple(jp.matrix, theta)
                parts = [
                    _signature_at_multiple(b, k * theta) for k in (p, p + q, q)
                ]
                rhs = (sum(x[0] for x in parts), sum(x[1] for x in parts))
                if lhs != rhs:
                    raise InternalInvariantError(
                        "J(%d, %d) signature additivity failed at angle %s"
                        % (p, q, theta)
                    )
            j_battery = presentation_battery(jp)
            if j_battery.verdict == NO_OBSTRUCTION_FOUND and j_battery.signature.is_zero:
                f_lo, b_lo = _phi_signature_function(base, q - 1)
                f_hi, b_hi = _phi_signature_function(base, q + 1)
                telescoping = (
                    "verified" if same_step_function(f_lo, f_hi, b_lo, b_hi)
                    else "violated"
                )
                if telescoping == "violated":
                    telescoping_violation = True
            else:
                telescoping = "skipped"
            crosschecks.append(CrossCheck(p, q, additivity, telescoping))

    verdict = battery.verdict
    certificate = battery.certificate
    if verdict == NO_OBSTRUCTION_FOUND and telescoping_violation:
        verdict = NOT_ALG_SLICE
        certificate = "telescoping"
    conclusion = "B(K) is not slice" if verdict == NOT_ALG_SLICE else None
    return BingReport(
        battery=battery,
        conclusion=conclusion,
        arf_certificate=(battery.arf == 1),
        crosschecks=tuple(crosschecks),
        check_range=check_range,
        verdict=verdict,
        certificate=certificate,
    )
