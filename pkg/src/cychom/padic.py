"""Exact p-adic valuations and the two coefficient recursions.

Everything here is exact integer/rational arithmetic.  The two rational
sequences

    A(1) = p,  A(j) = p^2 * A(j-2) / j   for odd  j >= 3,
    B(0) = 1,  B(j) = p^2 * B(j-2) / j   for even j >= 2,

are the multipliers that appear when the staircase presentations of the
cyclic complexes are reduced; their p-adic valuations a_j = v_p(A_j) and
b_j = v_p(B_j) control every closed-form decomposition downstream.  Both
sequences are p-local (denominators prime to p), which is re-checked on
construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, inf


class Prime:
    """An odd prime, validated on construction.

    p = 2 is rejected: the staircase reductions divide by 2, so the whole
    calculator assumes 2 is a unit.

    >>> Prime(3).p
    3
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or not _is_prime(p):
            raise ValueError(f"p must be an odd prime >= 3, got {p!r}")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Prime is immutable")

    def __eq__(self, other):
        return isinstance(other, Prime) and self.p == other.p

    def __hash__(self):
        return hash(("Prime", self.p))

    def __repr__(self):
        return f"Prime({self.p})"

    def __int__(self):
        return self.p


def _is_prime(n: int) -> bool:
    # Trial division; every prime used here is desk-scale.
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(p: Prime, n: int) -> int:
    """Largest e with p^e dividing n.

    >>> vp(Prime(3), 54)
    3
    """
    if n == 0:
        raise ValueError("valuation of zero undefined")
    n = abs(n)
    e = 0
    q = p.p
    while n % q == 0:
        n //= q
        e += 1
    return e


def factorial_vp(p: Prime, m: int) -> int:
    """v_p(m!) by Legendre's formula, without forming m!."""
    if m < 0:
        raise ValueError("factorial valuation needs m >= 0")
    total = 0
    q = p.p
    while q <= m:
        total += m // q
        q *= p.p
    return total


class PadicRational:
    """A reduced fraction with its p-adic valuation cached.

    The zero element carries valuation +infinity (``math.inf``) so that
    comparisons like ``x.valuation >= e`` behave as expected.
    """

    __slots__ = ("prime", "value", "valuation")

    def __init__(self, prime: Prime, value: Fraction | int):
        frac = Fraction(value)
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "value", frac)
        if frac == 0:
            val = inf
        else:
            val = vp(prime, frac.numerator) - vp(prime, frac.denominator)
        object.__setattr__(self, "valuation", val)

    def __setattr__(self, name, value):
        raise AttributeError("PadicRational is immutable")

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def is_p_local(self) -> bool:
        """True iff the denominator is prime to p (the element lies in Z_(p))."""
        return self.value == 0 or vp(self.prime, self.value.denominator) == 0

    def residue(self, modulus: int) -> int:
        """The image in Z/modulus for a p-power modulus.

        Requires the element to be p-local; the denominator is inverted
        mod the modulus.
        """
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        if not self.is_p_local():
            raise ValueError("element is not p-local, no residue exists")
        if self.value == 0:
            return 0
        den = self.value.denominator % modulus
        if gcd(den, modulus) != 1:
            raise ValueError("denominator not invertible mod modulus")
        return (self.value.numerator * pow(den, -1, modulus)) % modulus

    def __eq__(self, other):
        if isinstance(other, PadicRational):
            return self.prime == other.prime and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.prime, self.value))

    def __repr__(self):
        return f"PadicRational(p={self.prime.p}, {self.value})"


# Memo tables keyed by (p, index).  Entries are immutable once written, so
# concurrent duplicated inserts are benign.
_A_CACHE: dict[tuple[int, int], Fraction] = {}
_B_CACHE: dict[tuple[int, int], Fraction] = {}
_AVAL_CACHE: dict[tuple[int, int], int] = {}


def seq_a(p: Prime, j: int) -> PadicRational:
    """The odd-index coefficient A_j; always p-local.

    >>> seq_a(Prime(3), 5).value
    Fraction(81, 5)
    """
    if j < 1 or j % 2 == 0:
        raise ValueError(f"A defined on odd positive indices, got {j}")
    key = (p.p, j)
    if key not in _A_CACHE:
        # Fill iteratively from the largest cached index below j.
        k = j
        while k > 1 and (p.p, k) not in _A_CACHE:
            k -= 2
        acc = _A_CACHE.get((p.p, k), Fraction(p.p))
        _A_CACHE[(p.p, 1)] = Fraction(p.p)
        while k < j:
            k += 2
            acc = acc * p.p * p.p / k
            _A_CACHE[(p.p, k)] = acc
    return PadicRational(p, _A_CACHE[key])


def seq_b(p: Prime, j: int) -> PadicRational:
    """The even-index coefficient B_j; always p-local.

    >>> seq_b(Prime(3), 2).value
    Fraction(9, 2)
    """
    if j < 0 or j % 2 == 1:
        raise ValueError(f"B defined on even nonnegative indices, got {j}")
    key = (p.p, j)
    if key not in _B_CACHE:
        k = j
        while k > 0 and (p.p, k) not in _B_CACHE:
            k -= 2
        acc = _B_CACHE.get((p.p, k), Fraction(1))
        _B_CACHE[(p.p, 0)] = Fraction(1)
        while k < j:
            k += 2
            acc = acc * p.p * p.p / k
            _B_CACHE[(p.p, k)] = acc
    return PadicRational(p, _B_CACHE[key])


def a_val(p: Prime, j: int) -> int:
    """a_j = v_p(A_j), computed by the valuation recursion.

    a_1 = 1 and a_j = a_{j-2} + 2 - v_p(j); avoids the huge numerators of
    seq_a for large j.
    """
    if j < 1 or j % 2 == 0:
        raise ValueError(f"a defined on odd positive indices, got {j}")
    key = (p.p, j)
    if key not in _AVAL_CACHE:
        k = j
        while k > 1 and (p.p, k) not in _AVAL_CACHE:
            k -= 2
        acc = _AVAL_CACHE.get((p.p, k), 1)
        _AVAL_CACHE[(p.p, 1)] = 1
        while k < j:
            k += 2
            acc = acc + 2 - vp(p, k)
            _AVAL_CACHE[(p.p, k)] = acc
    return _AVAL_CACHE[key]


def b_val(p: Prime, j: int) -> int:
    """b_j = v_p(B_j) = j - v_p((j/2)!)."""
    if j < 0 or j % 2 == 1:
        raise ValueError(f"b defined on even nonnegative indices, got {j}")
    return j - factorial_vp(p, j // 2)
