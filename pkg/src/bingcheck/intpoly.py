"""Integer polynomials: exact resultants, gcd, cyclotomics, Sturm isolation.

IntPoly stores dense ascending integer coefficients with a nonzero leading
coefficient; the zero polynomial is the empty tuple and has degree -1.  The
heavy primitives here are the subresultant polynomial remainder sequence
(resultants and gcds without rational blowup), Yun's squarefree decomposition,
cyclotomic polynomials by iterated exact division of t^d - 1, and Sturm-chain
real root isolation returning refinable rational intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as int_gcd

from .errors import InternalInvariantError
from .laurent import LaurentPoly, parse_poly

__all__ = [
    "IntPoly",
    "RootInterval",
    "cyclotomic",
    "cyclotomic_order",
    "divmod_exact",
    "euler_phi",
    "gcd_poly",
    "resultant",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_isolate",
]


class IntPoly:
    """Dense integer polynomial, ascending coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, str):
            f = parse_poly(coeffs)
            if not f.is_zero and f.min_exp < 0:
                raise ValueError("negative exponents are not allowed in IntPoly")
            coeffs = [f.coeff(i) for i in range(0, (0 if f.is_zero else f.max_exp) + 1)]
            if any(x.denominator != 1 for x in coeffs):
                raise ValueError("non-integer coefficients are not allowed in IntPoly")
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def lc(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def coeff(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        n = max(len(self._c), len(other._c))
        return IntPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return IntPoly([-x for x in self._c])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * x for x in self._c])
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        r = IntPoly([1])
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __call__(self, x):
        """Exact Horner evaluation at an int or Fraction."""
        acc = Fraction(0) if isinstance(x, Fraction) else 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self._c)][1:])

    def content(self) -> int:
        g = 0
        for c in self._c:
            g = int_gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPoly":
        """Content removed, leading coefficient made positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self._c[-1] < 0:
            g = -g
        return IntPoly([c // g for c in self._c])

    def reverse(self) -> "IntPoly":
        """Coefficient reversal t^deg * f(1/t); strips trailing roots at 0."""
        c = list(self._c)
        while c and c[0] == 0:
            c.pop(0)
        return IntPoly(list(reversed(c)))

    def is_self_reciprocal(self) -> bool:
        r = self.reverse()
        return r == self or r == -self

    def shift_out_roots_at_zero(self):
        """(k, g) with f = t^k g and g(0) != 0."""
        k = 0
        c = list(self._c)
        while c and c[0] == 0:
            c.pop(0)
            k += 1
        return k, IntPoly(c)

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly.from_coeffs(self._c, 0)

    @classmethod
    def from_laurent(cls, f: LaurentPoly) -> "IntPoly":
        """Shift min exponent to 0; requires integer coefficients."""
        if f.is_zero:
            return cls()
        coeffs, _ = f.coeff_list()
        out = []
        for c in coeffs:
            if c.denominator != 1:
                raise ValueError("Laurent polynomial has non-integer coefficients")
            out.append(c.numerator)
        return cls(out)

    def __str__(self):
        return str(self.to_laurent())

    def __repr__(self):
        return f"IntPoly('{self}')"


# -- exact division ----------------------------------------------------------

def divmod_exact(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient f/g known to be exact over Z; raises if it is not."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero:
        return IntPoly()
    if f.degree < g.degree:
        raise ValueError("division is not exact")
    rem = [Fraction(c) for c in f.coeffs]
    den = g.coeffs
    qn = f.degree - g.degree + 1
    quot = [Fraction(0)] * qn
    for i in range(qn - 1, -1, -1):
        q = rem[i + len(den) - 1] / den[-1]
        quot[i] = q
        if q:
            for j, d in enumerate(den):
                rem[i + j] -= q * d
    if any(rem[: len(den) - 1]) or any(q.denominator != 1 for q in quot):
        raise ValueError("division is not exact")
    return IntPoly([q.numerator for q in quot])


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """lc(g)^(deg f - deg g + 1) * f mod g, staying inside Z[t].

    Requires deg f >= deg g >= 0.
    """
    n = g.degree
    if n < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if f.degree < n:
        raise ValueError("pseudo_rem requires deg f >= deg g")
    d = g.lc
    gc = g.coeffs
    r = list(f.coeffs)
    e = f.degree - n + 1
    while True:
        while r and r[-1] == 0:
            r.pop()
        k = len(r) - 1 - n
        if not r or k < 0:
            break
        lr = r[-1]
        r = [d * x for x in r]
        for j, c in enumerate(gc):
            r[k + j] -= lr * c
        e -= 1
    scale = d**e
    return IntPoly([scale * x for x in r])


def resultant(f, g):
    """Exact resultant of two nonzero polynomials over Z or Q.

    Uses the subresultant polynomial remainder sequence, which keeps every
    intermediate value in Z with no rational blowup.  Laurent input should be
    shifted to an ordinary polynomial first (IntPoly.from_laurent); a unit
    factor t^k only changes the resultant by a sign when the other argument
    has constant term +-1, and callers here always take absolute values.

    >>> resultant(IntPoly([-2, 1]), IntPoly([-3, 1]))
    -1
    >>> resultant(IntPoly([1, -1, 1]), IntPoly([1, 1]))
    3
    """
    if isinstance(f, LaurentPoly) or isinstance(g, LaurentPoly):
        raise TypeError("resultant takes IntPoly; use resultant_laurent for Laurent input")
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined here")

    A, B = f, g
    s = 1
    if A.degree < B.degree:
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -1
        A, B = B, A
    if B.degree == 0:
        return s * B.coeff(0) ** A.degree

    a, b = A.content(), B.content()
    A = IntPoly([c // a for c in A.coeffs])
    B = IntPoly([c // b for c in B.coeffs])
    t = a**B.degree * b**A.degree
    gpart, h = 1, 1
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = pseudo_rem(A, B)
        A = B
        divisor = gpart * h**delta
        B = IntPoly([c // divisor for c in R.coeffs])
        if not R.is_zero and any(c % divisor for c in R.coeffs):
            raise InternalInvariantError("subresultant PRS division was not exact")
        gpart = A.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = gpart
        else:
            h = gpart**delta // h ** (delta - 1)
        if B.degree <= 0:
            break
    if B.is_zero:
        return 0
    dA = A.degree
    num = B.coeff(0) ** dA
    den = h ** (dA - 1)
    if num % den:
        raise InternalInvariantError("subresultant final division was not exact")
    return s * t * (num // den)


def gcd_poly(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd over Z (positive leading coefficient), by primitive PRS."""
    a, b = f.primitive(), g.primitive()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        if a.degree < b.degree:
            a, b = b, a
            continue
        r = pseudo_rem(a, b).primitive()
        a, b = b, r
    return a.primitive()


def squarefree_part(f: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors of f, primitive."""
    f = f.primitive()
    if f.degree <= 0:
        return f
    return divmod_exact(f, gcd_poly(f, f.derivative())).primitive()


def squarefree_decomposition(f: IntPoly):
    """Yun's algorithm: [(a_i, i)] with f = +-content * prod a_i^i.

    Each a_i is primitive, squarefree and pairwise coprime with the others;
    entries with a_i = 1 are omitted.
    """
    f = f.primitive()
    if f.degree < 1:
        return []
    df = f.derivative()
    g = gcd_poly(f, df)
    if g.degree == 0:
        return [(f, 1)]
    b = divmod_exact(f, g)
    c = divmod_exact(df, g)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = gcd_poly(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = divmod_exact(b, a)
        c = divmod_exact(d, a)
        d = c - b.derivative()
        i += 1
    return out


def euler_phi(n: int) -> int:
    """Euler's totient, by trial factorization (inputs here are small)."""
    out = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out *= (p - 1) * p ** (e - 1)
        p += 1
    if m > 1:
        out *= m - 1
    return out


def cyclotomic_order(f: IntPoly):
    """d if f is the d-th cyclotomic polynomial, else None.

    Uses phi(d) >= sqrt(d/2), so phi(d) = m forces d <= 2 m^2.

    >>> cyclotomic_order(IntPoly('t^2 - t + 1'))
    6
    >>> cyclotomic_order(IntPoly('t^2 - t - 1')) is None
    True
    """
    m = f.degree
    if m < 1:
        return None
    for d in range(1, 2 * m * m + 2):
        if euler_phi(d) == m and cyclotomic(d) == f:
            return d
    return None


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by iterated exact division of t^d - 1.

    >>> cyclotomic(1)
    IntPoly('t - 1')
    >>> cyclotomic(6)
    IntPoly('t^2 - t + 1')
    >>> cyclotomic(12)
    IntPoly('t^4 - t^2 + 1')
    """
    if d < 1:
        raise ValueError("cyclotomic order must be >= 1")
    num = IntPoly([-1] + [0] * (d - 1) + [1])
    if d == 1:
        return num
    for e in range(1, d):
        if d % e == 0:
            num = divmod_exact(num, cyclotomic(e))
    return num


# -- Sturm sequences and real root isolation ----------------------------------

def _qstrip(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _qrem(f, g):
    """Remainder of f by g over Q (dense Fraction lists, ascending)."""
    rem = list(f)
    dg = len(g) - 1
    while len(rem) - 1 >= dg:
        q = rem[-1] / g[-1]
        k = len(rem) - 1 - dg
        for j, c in enumerate(g):
            rem[k + j] -= q * c
        rem.pop()
        rem = _qstrip(rem)
        if not rem:
            break
    return rem


def sturm_chain(f: IntPoly):
    """Sturm chain of f as dense Fraction lists (f should be squarefree)."""
    f0 = [Fraction(c) for c in f.coeffs]
    f1 = [Fraction(c) for c in f.derivative().coeffs]
    chain = [f0]
    if len(f0) <= 1:
        return chain
    chain.append(f1)
    while len(chain[-1]) > 1:
        r = _qrem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _eval_dense(c, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for ci in reversed(c):
        acc = acc * x + ci
    return acc


def _variations(chain, x: Fraction) -> int:
    signs = []
    for c in chain:
        v = _eval_dense(c, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class RootInterval:
    """Isolating data for one real root: the open interval (lo, hi), or an
    exactly-known rational root (lo == hi == exact).  `poly` is a squarefree
    polynomial with that root as a simple root, used for refinement."""

    lo: Fraction
    hi: Fraction
    poly: IntPoly
    exact: Fraction | None = None

    def __post_init__(self):
        if self.exact is None:
            a, b = self.poly(self.lo), self.poly(self.hi)
            if a == 0 or b == 0 or (a > 0) == (b > 0):
                raise InternalInvariantError("isolating interval lacks a sign change")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, width: Fraction) -> "RootInterval":
        """Shrink the isolating interval below `width` by sign bisection."""
        if self.exact is not None:
            return self
        lo, hi = self.lo, self.hi
        slo = 1 if self.poly(lo) > 0 else -1
        while hi - lo > width:
            mid = (lo + hi) / 2
            v = self.poly(mid)
            if v == 0:
                return RootInterval(mid, mid, _linear_min_poly(mid), exact=mid)
            if (1 if v > 0 else -1) == slo:
                lo = mid
            else:
                hi = mid
        return RootInterval(lo, hi, self.poly)

    def separate_from(self, other: "RootInterval"):
        """Refine both intervals until they are disjoint (roots differ)."""
        a, b = self, other
        while not (a.hi <= b.lo or b.hi <= a.lo or
                   (a.exact is not None and b.exact is not None)):
            w = min(a.width if a.exact is None else b.width,
                    b.width if b.exact is None else a.width)
            target = w / 4 if w else Fraction(1, 2)
            if a.exact is None:
                a = a.refine(target)
            if b.exact is None:
                b = b.refine(target)
            if a.exact is not None and b.exact is not None and a.exact == b.exact:
                raise InternalInvariantError("cannot separate equal roots")
        return a, b


def _linear_min_poly(r: Fraction) -> IntPoly:
    return IntPoly([-r.numerator, r.denominator])


def sturm_isolate(f: IntPoly, lo, hi):
    """Disjoint isolating intervals for the distinct real roots of f in (lo, hi).

    Multiplicities are ignored (the squarefree part is isolated).  Rational
    roots discovered exactly come back with `exact` set.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("need lo < hi")
    if f.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    g = squarefree_part(f)
    exact_roots = []
    # deflate rational roots that sit at probe points (endpoints first)
    for point in (lo, hi):
        if g.degree > 0 and g(point) == 0:
            g = divmod_exact(g, _linear_min_poly(point)).primitive()
    out = []
    while True:
        if g.degree < 1:
            break
        if g.degree == 1:
            r = Fraction(-g.coeff(0), g.coeff(1))
            if lo < r < hi:
                exact_roots.append(r)
            break
        chain = sturm_chain(g)
        stack = [(lo, hi, _variations(chain, lo), _variations(chain, hi))]
        deflated = False
        found = []
        while stack:
            a, b, va, vb = stack.pop()
            n = va - vb
            if n <= 0:
                continue
            if n == 1:
                found.append(RootInterval(a, b, g))
                continue
            mid = (a + b) / 2
            if g(mid) == 0:
                exact_roots.append(mid)
                g = divmod_exact(g, _linear_min_poly(mid)).primitive()
                deflated = True
                break
            vm = _variations(chain, mid)
            stack.append((a, mid, va, vm))
            stack.append((mid, b, vm, vb))
        if deflated:
            continue
        out = found
        break
    for r in exact_roots:
        if lo < r < hi:
            out.append(RootInterval(r, r, _linear_min_poly(r), exact=r))
    # shrink plain intervals so no exactly-known root sits inside them
    cleaned = []
    for iv in out:
        if iv.exact is None:
            for r in exact_roots:
                while iv.lo < r < iv.hi:
                    iv = iv.refine(iv.width / 4)
        cleaned.append(iv)
    cleaned.sort(key=lambda iv: (iv.lo, iv.hi))
    # make intervals pairwise disjoint
    for i in range(len(cleaned) - 1):
        a, b = cleaned[i].separate_from(cleaned[i + 1])
        cleaned[i], cleaned[i + 1] = a, b
    cleaned.sort(key=lambda iv: (iv.lo, iv.hi))
    return cleaned
