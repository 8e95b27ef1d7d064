"""Exact arithmetic in Q[x]/(m) and certified signs at roots of unity.

A matrix of Laurent polynomials evaluated at omega = exp(2*pi*i*a/q) lives in
the cyclotomic field Q(zeta_q) = Q[x]/(Phi_q(x)); no floating point is needed
to diagonalize a Hermitian matrix there, only to decide the signs of the real
diagonal entries that come out.  Those signs are certified with rational
interval arithmetic: pi is enclosed by Machin's formula (alternating series
give exact rational over/under-estimates), cosine by a Taylor polynomial with
the Lagrange remainder, and the working precision is raised until the
enclosure excludes zero -- which must happen, because a nonzero field element
has a nonzero image under every embedding.

The same quotient-ring machinery over an arbitrary irreducible modulus gives
ranks of Laurent matrices "at" a root of an irreducible factor, used for the
nullity carried by each jump of a signature function.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InternalInvariantError
from .laurent import LaurentPoly
from .intpoly import IntPoly, cyclotomic, euler_phi

__all__ = [
    "CyclotomicField",
    "PolyQuotientField",
    "QuotientElement",
    "cos_enclosure",
    "cyclotomic_field",
    "evaluated_hermitian_signature",
    "rank_over_factor",
]


# -- certified enclosures ------------------------------------------------------

def _atan_inv_bounds(x: int, eps: Fraction):
    """Rational (lo, hi) enclosing atan(1/x), width < eps, x >= 2."""
    s = Fraction(0)
    k = 0
    term = Fraction(1, x)
    while True:
        s += term if k % 2 == 0 else -term
        nxt = Fraction(1, (2 * k + 3) * x ** (2 * k + 3))
        if nxt < eps:
            # alternating with strictly decreasing terms: the true value lies
            # between s and the next partial sum
            other = s + (nxt if k % 2 == 1 else -nxt)
            return (other, s) if other < s else (s, other)
        k += 1
        term = Fraction(1, (2 * k + 1) * x ** (2 * k + 1))


@lru_cache(maxsize=None)
def _pi_enclosure(bits: int):
    """Rational (lo, hi) with lo < pi < hi and hi - lo < 2**-bits."""
    eps = Fraction(1, 2 ** (bits + 6))
    a5lo, a5hi = _atan_inv_bounds(5, eps)
    a239lo, a239hi = _atan_inv_bounds(239, eps)
    return 16 * a5lo - 4 * a239hi, 16 * a5hi - 4 * a239lo


_EXACT_COS = {
    Fraction(0): Fraction(1),
    Fraction(1, 2): Fraction(-1),
    Fraction(1, 4): Fraction(0),
    Fraction(3, 4): Fraction(0),
    Fraction(1, 3): Fraction(-1, 2),
    Fraction(2, 3): Fraction(-1, 2),
    Fraction(1, 6): Fraction(1, 2),
    Fraction(5, 6): Fraction(1, 2),
}


@lru_cache(maxsize=None)
def cos_enclosure(a: Fraction, bits: int):
    """Rational (lo, hi) enclosing cos(2*pi*a), width < about 2**-bits.

    Angles whose cosine is rational (a with denominator 1, 2, 3, 4 or 6) are
    returned exactly as a zero-width interval, so sign decisions never stall
    on an enclosure that straddles the true value.
    """
    a = a - (a.numerator // a.denominator)  # reduce mod 1 into [0, 1)
    exact = _EXACT_COS.get(a)
    if exact is not None:
        return exact, exact
    pi_lo, pi_hi = _pi_enclosure(bits + 4)
    ylo, yhi = 2 * a * pi_lo, 2 * a * pi_hi
    y0 = (ylo + yhi) / 2
    half_w = (yhi - ylo) / 2
    eps = Fraction(1, 2 ** (bits + 2))
    # Taylor at 0 with Lagrange remainder |R_N| <= y0^(2N+2)/(2N+2)!
    s = Fraction(1)
    term = Fraction(1)
    k = 0
    y2 = y0 * y0
    while True:
        term = term * y2 / ((2 * k + 1) * (2 * k + 2))
        k += 1
        bound = term  # |y0|^{2k} / (2k)!
        if bound < eps:
            break
        s += -term if k % 2 == 1 else term
    return s - bound - half_w, s + bound + half_w


# -- quotient fields of Q[x] ---------------------------------------------------

def _dense_strip(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _dense_divmod(a, b):
    """Quotient and remainder of dense Fraction lists (b nonzero)."""
    rem = list(a)
    q = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b):
        c = rem[-1] / b[-1]
        k = len(rem) - len(b)
        q[k] = c
        for j, y in enumerate(b):
            rem[k + j] -= c * y
        rem.pop()
        _dense_strip(rem)
        if not rem:
            break
    return _dense_strip(q), rem


class QuotientElement:
    """An element of Q[x]/(m), stored as a dense coefficient tuple of length
    deg(m); arithmetic delegates to the owning field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __add__(self, other):
        return QuotientElement(
            self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        return QuotientElement(
            self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self):
        return QuotientElement(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        return self.field.mul(self, other)

    def __truediv__(self, other):
        return self.field.mul(self, self.field.inv(other))

    def scale(self, c) -> "QuotientElement":
        return QuotientElement(self.field, [x * c for x in self.coeffs])

    def conj(self):
        return self.field.conj(self)

    def __repr__(self):
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


class PolyQuotientField:
    """Q[x]/(m) for an irreducible m with m(0) != 0, so x is invertible."""

    def __init__(self, modulus: IntPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must have positive degree")
        if modulus.coeff(0) == 0:
            raise ValueError("modulus must not vanish at 0")
        self.modulus = modulus
        self.degree = modulus.degree
        lc = Fraction(modulus.lc)
        self._mod = [Fraction(c) / lc for c in modulus.coeffs]
        self._xinv = None

    def element(self, coeffs) -> QuotientElement:
        c = [Fraction(x) for x in coeffs]
        if len(c) >= len(self._mod):
            _, c = _dense_divmod(c, self._mod)
        c += [Fraction(0)] * (self.degree - len(c))
        return QuotientElement(self, c)

    def zero(self) -> QuotientElement:
        return QuotientElement(self, [Fraction(0)] * self.degree)

    def one(self) -> QuotientElement:
        return self.element([1])

    def scalar(self, c) -> QuotientElement:
        return self.element([Fraction(c)])

    def mul(self, a: QuotientElement, b: QuotientElement) -> QuotientElement:
        out = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return self.element(out)

    def inv(self, a: QuotientElement) -> QuotientElement:
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        r0, r1 = list(self._mod), _dense_strip(list(a.coeffs))
        t0, t1 = [], [Fraction(1)]
        while r1:
            q, r = _dense_divmod(r0, r1)
            r0, r1 = r1, r
            prod = [Fraction(0)] * (len(q) + len(t1) - 1) if q and t1 else []
            for i, x in enumerate(q):
                for j, y in enumerate(t1):
                    prod[i + j] += x * y
            t0, t1 = t1, _dense_strip(
                [p - qq for p, qq in
                 zip(t0 + [Fraction(0)] * max(0, len(prod) - len(t0)),
                     prod + [Fraction(0)] * max(0, len(t0) - len(prod)))]
            )
        if len(r0) != 1:
            raise InternalInvariantError("modulus was not irreducible")
        return self.element([c / r0[0] for c in t0])

    def x_power(self, k: int) -> QuotientElement:
        """x^k for any integer k (negative powers via the inverse of x)."""
        if k >= 0:
            return self.element([0] * k + [1])
        if self._xinv is None:
            self._xinv = self.inv(self.element([0, 1]))
        out = self.one()
        for _ in range(-k):
            out = self.mul(out, self._xinv)
        return out

    def from_laurent(self, f: LaurentPoly) -> QuotientElement:
        """Image of f under t -> x."""
        out = self.zero()
        for k, c in f.items():
            out = out + self.x_power(k).scale(c)
        return out

    def conj(self, a):
        raise NotImplementedError("conjugation needs a cyclotomic modulus")


class CyclotomicField(PolyQuotientField):
    """Q(zeta_q) = Q[x]/(Phi_q), with x^q = 1 used to fold Laurent exponents,
    conjugation x -> x^(q-1), and certified signs of real elements."""

    def __init__(self, q: int):
        if q < 1:
            raise ValueError("root-of-unity order must be >= 1")
        self.q = q
        super().__init__(cyclotomic(q))
        x = self.element([0, 1])
        self._xpow = []
        cur = self.one()
        for _ in range(q):
            self._xpow.append(cur)
            cur = self.mul(cur, x)

    def x_power(self, k: int) -> QuotientElement:
        return self._xpow[k % self.q]

    def root_image(self, f: LaurentPoly, a: int = 1) -> QuotientElement:
        """Image of f(t) under t -> zeta_q^a, i.e. t^k -> x^(k*a mod q)."""
        out = self.zero()
        for k, c in f.items():
            out = out + self._xpow[(k * a) % self.q].scale(c)
        return out

    from_laurent = root_image

    def conj(self, e: QuotientElement) -> QuotientElement:
        out = self.zero()
        for i, c in enumerate(e.coeffs):
            if c:
                out = out + self._xpow[(self.q - i) % self.q].scale(c)
        return out

    def real_sign(self, e: QuotientElement) -> int:
        """Sign (-1, 0, +1) of the real number e maps to under x -> zeta_q.

        Requires e to be fixed by conjugation.  A nonzero element embeds to a
        nonzero real, so refining the enclosure must eventually decide.
        """
        if not e:
            return 0
        if self.conj(e) != e:
            raise ValueError("sign of a non-real element")
        bits = 48
        while bits <= 6144:
            lo = hi = Fraction(0)
            for i, c in enumerate(e.coeffs):
                if not c:
                    continue
                clo, chi = cos_enclosure(Fraction(i, self.q), bits)
                if c > 0:
                    lo += c * clo
                    hi += c * chi
                else:
                    lo += c * chi
                    hi += c * clo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise InternalInvariantError("sign enclosure failed to converge")


@lru_cache(maxsize=None)
def cyclotomic_field(q: int) -> CyclotomicField:
    return CyclotomicField(q)


# -- Hermitian signatures at roots of unity ------------------------------------

def _hermitian_signature(field: CyclotomicField, H):
    """(signature, nullity) of a Hermitian matrix of QuotientElements, by
    exact congruence: real diagonal pivots first, hyperbolic planes when the
    live diagonal vanishes, kernel at the end."""
    n = len(H)
    active = list(range(n))
    pos = neg = null = 0
    while active:
        k = next((a for a in active if H[a][a]), None)
        if k is not None:
            p = H[k][k]
            s = field.real_sign(p)
            if s > 0:
                pos += 1
            else:
                neg += 1
            active.remove(k)
            pinv = field.inv(p)
            for r in active:
                if H[r][k]:
                    f = field.mul(H[r][k], pinv)
                    for c in active:
                        H[r][c] = H[r][c] - field.mul(f, H[k][c])
            continue
        pair = next(((i, j) for i in active for j in active if i < j and H[i][j]),
                    None)
        if pair is None:
            null += len(active)
            break
        i, j = pair
        b = H[i][j]
        bbar = H[j][i]
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        binv, bbarinv = field.inv(b), field.inv(bbar)
        rows_i = {c: H[i][c] for c in active}
        rows_j = {c: H[j][c] for c in active}
        cols_i = {r: H[r][i] for r in active}
        cols_j = {r: H[r][j] for r in active}
        for r in active:
            for c in active:
                H[r][c] = H[r][c] - field.mul(field.mul(cols_i[r], bbarinv), rows_j[c]) \
                    - field.mul(field.mul(cols_j[r], binv), rows_i[c])
    return pos - neg, null


@lru_cache(maxsize=8192)
def _whole_hermitian_signature(M, angle: Fraction):
    q, a = angle.denominator, angle.numerator
    field = cyclotomic_field(q)
    n = M.rows
    lm = M.to_laurent()
    H = [[field.root_image(lm[i, j], a) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if field.conj(H[i][j]) != H[j][i]:
                raise ValueError("matrix is not Hermitian at this angle")
    return _hermitian_signature(field, H)


def evaluated_hermitian_signature(M, angle: Fraction):
    """(signature, nullity) of M(omega) for omega = exp(2*pi*i*angle).

    M is an ExactMatrix (rational or Laurent entries); angle is taken mod 1
    and the evaluated matrix must be Hermitian, which is checked.  Signature
    and nullity add over block-diagonal components, which are split off and
    evaluated separately (repeated blocks only once).
    """
    angle = Fraction(angle)
    angle -= angle.numerator // angle.denominator
    if M.cols != M.rows:
        raise ValueError("square matrix required")
    sig = null = 0
    for idx in M.components():
        s, n = _whole_hermitian_signature(M.submatrix(idx), angle)
        sig += s
        null += n
    return sig, null


@lru_cache(maxsize=8192)
def _whole_rank_over_factor(M, modulus: IntPoly) -> int:
    field = PolyQuotientField(modulus)
    lm = M.to_laurent()
    rows = [[field.from_laurent(lm[i, j]) for j in range(M.cols)]
            for i in range(M.rows)]
    rank = 0
    row = 0
    for col in range(M.cols):
        pivot = next((r for r in range(row, M.rows) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        pinv = field.inv(rows[row][col])
        for r in range(row + 1, M.rows):
            if rows[r][col]:
                f = field.mul(rows[r][col], pinv)
                rows[r] = [x - field.mul(f, y) for x, y in zip(rows[r], rows[row])]
        rank += 1
        row += 1
        if row == M.rows:
            break
    return rank


def rank_over_factor(M, modulus: IntPoly) -> int:
    """Rank of a square Laurent matrix over the field Q[t]/(modulus).

    The modulus must be irreducible with nonzero constant term (so t is a
    unit).  This is the rank of M(omega) for every root omega of the modulus.
    Rank adds over block-diagonal components, which are split off and
    reduced separately (repeated blocks only once).
    """
    return sum(
        _whole_rank_over_factor(M.submatrix(idx), modulus)
        for idx in M.components()
    )
