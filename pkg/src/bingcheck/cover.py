"""Branched covers and companionship: homology order, covering Seifert
matrix, cable and satellite presentation transforms.

For the p-fold cyclic cover of S^3 branched over a knot with Alexander
polynomial Delta, the first homology has order |prod_{i=1..p-1} Delta(zeta^i)|
(zeta a primitive p-th root of unity), which equals the absolute resultant of
Delta with (t^p - 1)/(t - 1); the order is 0 exactly when Delta vanishes at
some p-th root of unity, i.e. the homology is infinite.

A Seifert matrix for the knotted lift inside the cover is computed from
Gamma = (A - A^T)^{-1} A as

    Atilde = A - A^T (Gamma^{p-1} - (Gamma-I)^{p-1}) (Gamma^p - (Gamma-I)^p)^{-1} Gamma,

provided Gamma^p - (Gamma-I)^p is nonsingular; Atilde may have rational
entries and only determines the rational-coefficient Witt class, so it comes
back flagged rational.

Cabling with winding n substitutes t -> t^n into a presentation matrix; a
satellite with companion winding w is the block sum of the pattern
presentation with the companion presentation at t -> t^w.  Winding 0
evaluates the companion at t = 1 (for an Alexander-module presentation that
block has unit determinant, so the satellite order is the pattern's alone).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import FormulaHypothesisError
from .laurent import LaurentPoly
from .intpoly import IntPoly, resultant
from .matrices import ExactMatrix
from .seifert import SeifertMatrix

__all__ = [
    "INFINITE",
    "branched_cover_homology_order",
    "cable_presentation",
    "covering_seifert_matrix",
    "satellite_presentation",
]


class _Infinite:
    """Sentinel for an infinite homology group (resultant 0)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    __str__ = __repr__


INFINITE = _Infinite()


def branched_cover_homology_order(delta: LaurentPoly, p: int):
    """|H_1| of the p-fold branched cover: |Res(Delta, (t^p - 1)/(t - 1))|.

    Returns INFINITE when the resultant vanishes (Delta has a root at a
    nontrivial p-th root of unity).  Integral input gives an int; rational
    coefficients can give a Fraction.

    >>> from .laurent import parse_poly
    >>> branched_cover_homology_order(parse_poly('t^2 - t + 1'), 2)
    3
    >>> branched_cover_homology_order(parse_poly('t^2 - t + 1'), 3)
    4
    >>> branched_cover_homology_order(parse_poly('t^2 - t + 1'), 6)
    INFINITE
    """
    if delta.is_zero:
        raise ValueError("the zero polynomial does not present a homology group")
    if p < 2:
        raise ValueError("covers need p >= 2")
    content = delta.content()
    primitive = IntPoly.from_laurent(delta * (1 / content))
    psi = IntPoly([1] * p)  # (t^p - 1)/(t - 1), monic
    # Res(psi, f) = prod over the p-th roots of unity zeta != 1 of f(zeta)
    r = resultant(psi, primitive)
    if r == 0:
        return INFINITE
    order = abs(r) * content ** (p - 1)
    return order.numerator if order.denominator == 1 else order


def covering_seifert_matrix(s: SeifertMatrix, p: int) -> SeifertMatrix:
    """Seifert matrix (rational flag) for the lifted knot in the p-fold cover.

    Raises FormulaHypothesisError when Gamma^p - (Gamma-I)^p is singular or
    the resulting matrix is not admissible; both hold automatically for the
    matrices the formula is designed for, but not for arbitrary input.

    >>> tre = SeifertMatrix([[-1, 1], [0, -1]])
    >>> covering_seifert_matrix(tre, 3).entries
    ((Fraction(0, 1), Fraction(1, 2)), (Fraction(-1, 2), Fraction(0, 1)))
    """
    if p < 2:
        raise ValueError("covers need p >= 2")
    a = s.matrix
    at = a.transpose()
    gamma = (a - at).inverse() @ a
    eye = ExactMatrix.identity(s.size, kind="rational")
    gm1 = gamma - eye

    def power(m, k):
        out = eye
        for _ in range(k):
            out = out @ m
        return out

    denom = power(gamma, p) - power(gm1, p)
    if denom.det() == 0:
        raise FormulaHypothesisError(
            "Gamma^p - (Gamma - I)^p is singular; the covering formula does not apply"
        )
    numer = power(gamma, p - 1) - power(gm1, p - 1)
    atilde = a - at @ numer @ denom.inverse() @ gamma
    if (atilde - atilde.transpose()).det() == 0:
        raise FormulaHypothesisError(
            "covering matrix fails det(A - A^T) != 0; the formula hypothesis was violated"
        )
    return SeifertMatrix(atilde, integral=False)


def cable_presentation(p_mat: ExactMatrix, n: int) -> ExactMatrix:
    """Presentation of the n-cable: substitute t -> t^n entrywise (n >= 1)."""
    if n < 1:
        raise ValueError("cables need winding n >= 1")
    if p_mat.det() == 0:
        raise ValueError("presentation must have nonzero determinant")
    if n == 1:
        return p_mat
    return p_mat.substitute_power(n)


def satellite_presentation(p1: ExactMatrix, p2: ExactMatrix, w: int) -> ExactMatrix:
    """Presentation of a satellite: pattern block p1 plus companion block
    p2 at t -> t^w.  Winding w = 0 evaluates the companion at t = 1."""
    if p1.det() == 0 or p2.det() == 0:
        raise ValueError("presentations must have nonzero determinant")
    if w == 0:
        evaluated = p2.map(
            lambda e: LaurentPoly({0: e(Fraction(1))})
        )
        return p1.block_sum(evaluated)
    return p1.block_sum(p2.substitute_power(w))
