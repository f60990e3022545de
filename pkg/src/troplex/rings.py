"""Exact coefficient rings (Z, Q, F_p) and valuations on them.

Values are plain Python objects tagged by the Ring they live in:
``int`` for Z, ``fractions.Fraction`` for Q, and canonical residues in
``[0, p)`` (as ``int``) for F_p.  No floats appear anywhere; valuations
return exact integers/rationals plus the distinguished ``INFINITY``.
"""

from __future__ import annotations

from fractions import Fraction

_WORD_MAX = 2**62


class _Infinity:
    """Valuation of zero: compares above every rational, absorbs addition."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is INFINITY

    def __gt__(self, other):
        return other is not INFINITY

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "oo"


INFINITY = _Infinity()


def is_prime(p):
    """Trial division; inputs are desk-scale by contract."""
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_factors(n):
    """Sorted distinct prime factors of |n| (n nonzero)."""
    n = abs(n)
    if n == 0:
        raise ValueError("prime_factors of 0")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Ring:
    """One of Z, Q, F_p.  Carries element-level operations.

    Instances compare and hash by (kind, p), so mixing characteristics is
    caught wherever two rings are required to agree.
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind not in ("Z", "Q", "FP"):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == "FP":
            if not is_prime(p):
                raise ValueError(f"{p!r} is not a prime")
            if p > _WORD_MAX:
                raise ValueError("p too large: prime fields are limited to word-sized p")
        elif p is not None:
            raise ValueError("p is only meaningful for prime fields")
        self.kind = kind
        self.p = p

    # -- structure ---------------------------------------------------------

    @property
    def is_field(self):
        return self.kind != "Z"

    @property
    def char(self):
        return self.p if self.kind == "FP" else 0

    def __eq__(self, other):
        return isinstance(other, Ring) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.kind == "FP":
            return f"F_{self.p}"
        return self.kind

    def tag(self):
        """Round-trips through ring_from_tag."""
        if self.kind == "FP":
            return f"fp:{self.p}"
        return self.kind

    # -- element ops -------------------------------------------------------

    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def from_int(self, k):
        if self.kind == "Z":
            return k
        if self.kind == "Q":
            return Fraction(k)
        return k % self.p

    def check(self, a):
        """Validate that a is a legal element; return it normalized."""
        if self.kind == "Z":
            if not isinstance(a, int):
                raise ValueError(f"{a!r} is not an element of Z")
            return a
        if self.kind == "Q":
            if isinstance(a, int):
                return Fraction(a)
            if isinstance(a, Fraction):
                return a
            raise ValueError(f"{a!r} is not an element of Q")
        if not isinstance(a, int):
            raise ValueError(f"{a!r} is not an element of {self!r}")
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "FP" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "FP" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "FP" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "FP" else -a

    def is_unit(self, a):
        if self.kind == "Z":
            return a in (1, -1)
        if self.kind == "FP":
            return a % self.p != 0
        return a != 0

    def inv(self, a):
        if self.kind == "Q":
            if a == 0:
                raise ZeroDivisionError("inverse of 0 in Q")
            return 1 / Fraction(a)
        if self.kind == "FP":
            if a % self.p == 0:
                raise ZeroDivisionError(f"inverse of 0 in {self!r}")
            return pow(a, self.p - 2, self.p)
        if a in (1, -1):
            return a
        raise ValueError(f"{a} is not a unit of Z")

    def div(self, a, b):
        """Exact division a/b; raises if not exact (Z) or b == 0 (fields)."""
        if self.kind == "Z":
            q, r = divmod(a, b)
            if r:
                raise ValueError(f"{a} not divisible by {b} in Z")
            return q
        return self.mul(a, self.inv(b))

    def coeff_str(self, a):
        """Render a coefficient; rationals as p/q, residues as plain ints."""
        return str(a)


ZZ = Ring("Z")
QQ = Ring("Q")

_FP_CACHE = {}


def GF(p):
    """The prime field F_p (cached)."""
    if p not in _FP_CACHE:
        _FP_CACHE[p] = Ring("FP", p)
    return _FP_CACHE[p]


def ring_from_tag(tag):
    """Parse a ring tag: "Z", "Q", or "fp:P"."""
    if tag == "Z":
        return ZZ
    if tag == "Q":
        return QQ
    if tag.startswith("fp:"):
        return GF(int(tag[3:]))
    raise ValueError(f"unknown ring tag {tag!r}")


def padic_valuation(n, p):
    """v_p of a nonzero integer."""
    if n == 0:
        raise ValueError("p-adic valuation of 0 is INFINITY; handled by caller")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class Valuation:
    """The trivial valuation, or the p-adic valuation on Z/Q.

    ``valuate`` returns an exact ``Fraction`` (integer-valued for p-adic
    on Q) or ``INFINITY`` for 0.
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind not in ("trivial", "padic"):
            raise ValueError(f"unknown valuation kind {kind!r}")
        if kind == "padic" and not is_prime(p):
            raise ValueError(f"{p!r} is not a prime")
        if kind == "trivial" and p is not None:
            raise ValueError("trivial valuation takes no prime")
        self.kind = kind
        self.p = p

    def __eq__(self, other):
        return (
            isinstance(other, Valuation)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "trivial" if self.kind == "trivial" else f"{self.p}-adic"

    def compatible_with(self, ring):
        if self.kind == "padic" and ring.kind == "FP":
            return False
        return True


TRIVIAL = Valuation("trivial")


def padic(p):
    return Valuation("padic", p)


def valuate(v, a, ring=QQ):
    """Exact valuation of a scalar in the given ring.

    Trivial: 0 for nonzero, INFINITY for 0.  p-adic on Z/Q: the usual
    v_p(num) - v_p(den).  p-adic on a prime field is a mismatch error.
    """
    a = ring.check(a)
    if not v.compatible_with(ring):
        raise ValueError("valuation/ring mismatch: p-adic valuation on a prime-field scalar")
    if a == 0:
        return INFINITY
    if v.kind == "trivial":
        return Fraction(0)
    if ring.kind == "Z":
        return Fraction(padic_valuation(a, v.p))
    num, den = a.numerator, a.denominator
    val = padic_valuation(num, v.p) if num % v.p == 0 else 0
    if den % v.p == 0:
        val -= padic_valuation(den, v.p)
    return Fraction(val)


def reduce_scalar(a, p, ring=ZZ):
    """Reduce an integer or p-integral rational mod p, as a residue in [0, p).

    Rationals with p dividing the denominator are rejected ("not p-integral").
    """
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    a = ring.check(a)
    if ring.kind == "FP":
        raise ValueError("valuation/ring mismatch: scalar already lives in a prime field")
    if ring.kind == "Z":
        return a % p
    num, den = a.numerator, a.denominator
    if den % p == 0:
        raise ValueError(f"{a} is not p-integral at p={p}")
    return (num * pow(den, p - 2, p)) % p
