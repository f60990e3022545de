"""Multivariate Laurent polynomials with exact coefficients.

A polynomial is a dict mapping exponent tuples (negative entries allowed)
to nonzero coefficients of a fixed :class:`~troplex.rings.Ring`.  All
arithmetic is exact; units are ``c * t^u`` with ``c`` a unit of the
coefficient ring.

Term order
----------
Terms print and compare in lexicographic exponent order with the *last*
variable most significant, so ``1 - 2*t1 + t1^2 - 3*t2^2`` is canonical.
That expanded rendering (coefficient 1 omitted on nonconstant terms,
exponents as ``t3^-2``, single spaces around ``+``/``-``) is the
golden-file contract for every consumer of ``str(f)``.

GCDs are computed by content/primitive-part recursion (Gauss's lemma)
with a subresultant pseudo-remainder sequence in the chosen main
variable; over Z the content GCD is retained, over a field the result is
the canonical (monic at the least term) associate.
"""

from __future__ import annotations

from fractions import Fraction

from .rings import INFINITY, ZZ, QQ, GF, Ring, reduce_scalar, valuate


def _lex_key(exps):
    # last variable most significant; fixes the printed term order
    return tuple(reversed(exps))


class LaurentPoly:
    """Immutable-by-discipline sparse Laurent polynomial."""

    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring, nvars, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be >= 0")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has wrong length (nvars={nvars})")
            c = ring.check(c)
            if c == 0:
                continue
            if exps in clean:
                raise ValueError(f"duplicate exponent tuple {exps}")
            clean[exps] = c
        self.ring = ring
        self.nvars = nvars
        self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, ring, nvars):
        return cls(ring, nvars, {})

    @classmethod
    def constant(cls, ring, nvars, c):
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, ring, nvars):
        return cls.constant(ring, nvars, ring.one())

    @classmethod
    def var(cls, ring, nvars, i, power=1):
        exps = [0] * nvars
        exps[i] = power
        return cls(ring, nvars, {tuple(exps): ring.one()})

    @classmethod
    def monomial(cls, ring, nvars, exps, c):
        return cls(ring, nvars, {tuple(exps): c})

    # -- basic structure ------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def key(self):
        return (self.ring, self.nvars, tuple(sorted(self.terms.items())))

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.ring == other.ring
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(self.key())

    def support(self):
        return sorted(self.terms, key=_lex_key)

    def num_terms(self):
        return len(self.terms)

    def lex_min_exponent(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no terms")
        return min(self.terms, key=_lex_key)

    def min_exponents(self):
        """Componentwise minimum exponent over the support (zero poly: zeros)."""
        if self.is_zero:
            return (0,) * self.nvars
        cols = list(zip(*self.terms.keys()))
        return tuple(min(col) for col in cols)

    def max_exponents(self):
        if self.is_zero:
            return (0,) * self.nvars
        cols = list(zip(*self.terms.keys()))
        return tuple(max(col) for col in cols)

    def degree_in(self, i):
        if self.is_zero:
            return -1
        return max(e[i] for e in self.terms)

    def constant_value(self):
        """The coefficient ring element, if the polynomial is constant."""
        if self.is_zero:
            return self.ring.zero()
        if len(self.terms) == 1:
            (exps, c), = self.terms.items()
            if all(e == 0 for e in exps):
                return c
        raise ValueError("not a constant polynomial")

    # -- arithmetic -----------------------------------------------------

    def _check_same(self, other):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.ring, self.nvars, other)
        self._check_same(other)
        R = self.ring
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = R.add(terms.get(exps, R.zero()), c)
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return LaurentPoly(R, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return LaurentPoly(R, self.nvars, {e: R.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.ring, self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        R = self.ring
        if not isinstance(other, LaurentPoly):
            c = R.check(other)
            if c == 0:
                return LaurentPoly.zero(R, self.nvars)
            return LaurentPoly(
                R, self.nvars, {e: R.mul(cc, c) for e, cc in self.terms.items()}
            )
        self._check_same(other)
        terms = {}
        zero = R.zero()
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = R.add(terms.get(e, zero), R.mul(c1, c2))
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return LaurentPoly(R, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only for single-term units")
            (exps, c), = self.terms.items()
            R = self.ring
            cinv = R.inv(c)
            ck = R.one()
            for _ in range(-k):
                ck = R.mul(ck, cinv)
            return LaurentPoly.monomial(R, self.nvars, tuple(e * k for e in exps), ck)
        out = LaurentPoly.one(self.ring, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, exps):
        """Multiply by the monomial t^exps (a unit)."""
        return LaurentPoly(
            self.ring,
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def map_coefficients(self, ring, fn):
        return LaurentPoly(ring, self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # -- rendering ------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"<LaurentPoly {render(self)} over {self.ring!r}>"


def _var_name(i):
    return f"t{i + 1}"


def render(f):
    """Canonical text form; the exact golden-file contract."""
    if f.is_zero:
        return "0"
    pieces = []
    for exps in sorted(f.terms, key=_lex_key):
        c = f.terms[exps]
        vars_part = "*".join(
            _var_name(i) if e == 1 else f"{_var_name(i)}^{e}"
            for i, e in enumerate(exps)
            if e != 0
        )
        negative = (f.ring.kind != "FP") and c < 0
        mag = -c if negative else c
        if not vars_part:
            body = f.ring.coeff_str(mag)
        elif mag == 1:
            body = vars_part
        else:
            body = f"{f.ring.coeff_str(mag)}*{vars_part}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


# -- units and canonical associates -------------------------------------


def is_unit(f):
    """True iff f is a unit of the Laurent ring: one term, unit coefficient."""
    if len(f.terms) != 1:
        return False
    (c,) = f.terms.values()
    return f.ring.is_unit(c)


def canonical_associate(f):
    """The canonical representative of f up to units.

    Exponents are shifted so each variable's minimum exponent is 0; then
    the coefficient of the lex-least term is made 1 (fields) or positive
    (Z; content is deliberately retained).  Zero maps to zero.
    """
    if f.is_zero:
        return f
    shifted = f.shift(tuple(-m for m in f.min_exponents()))
    lead = shifted.terms[shifted.lex_min_exponent()]
    R = f.ring
    if R.is_field:
        if lead == R.one():
            return shifted
        return shifted * R.inv(lead)
    if lead < 0:
        return -shifted
    return shifted


# -- exact division ------------------------------------------------------


def _poly_exact_div(f, g):
    """Exact division for polynomials with nonnegative exponents; None if inexact."""
    R = f.ring
    if f.is_zero:
        return f
    gl = max(g.terms, key=_lex_key)
    glc = g.terms[gl]
    rem = dict(f.terms)
    q = {}
    while rem:
        rl = max(rem, key=_lex_key)
        e = tuple(a - b for a, b in zip(rl, gl))
        if any(x < 0 for x in e):
            return None
        c = rem[rl]
        if R.kind == "Z":
            if c % glc:
                return None
            qc = c // glc
        else:
            qc = R.mul(c, R.inv(glc))
        q[e] = qc
        for ge, gc in g.terms.items():
            ke = tuple(a + b for a, b in zip(e, ge))
            s = R.sub(rem.get(ke, R.zero()), R.mul(qc, gc))
            if s == 0:
                rem.pop(ke, None)
            else:
                rem[ke] = s
    return LaurentPoly(R, f.nvars, q)


def exact_div(f, g):
    """f / g in the Laurent ring, or None when g does not divide f."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero:
        return f
    f._check_same(g)
    mf, mg = f.min_exponents(), g.min_exponents()
    # min exponents are additive over products, so the quotient's shift is forced
    fshift = f.shift(tuple(-m for m in mf))
    gshift = g.shift(tuple(-m for m in mg))
    q = _poly_exact_div(fshift, gshift)
    if q is None:
        return None
    return q.shift(tuple(a - b for a, b in zip(mf, mg)))


def _exact_div_strict(f, g):
    q = exact_div(f, g)
    if q is None:
        raise ArithmeticError("internal: division expected to be exact")
    return q


# -- GCD -----------------------------------------------------------------


def _active_vars(f, g):
    out = []
    span = [False] * f.nvars
    for poly in (f, g):
        if poly.is_zero:
            continue
        lo, hi = poly.min_exponents(), poly.max_exponents()
        for i in range(f.nvars):
            if hi[i] > lo[i] or hi[i] > 0:
                span[i] = True
    for i, s in enumerate(span):
        if s:
            out.append(i)
    return out


def _coeffs_in(f, x):
    """Coefficients of powers of variable x, as polynomials with x-exponent 0."""
    out = {}
    for exps, c in f.terms.items():
        d = exps[x]
        rest = exps[:x] + (0,) + exps[x + 1:]
        bucket = out.setdefault(d, {})
        bucket[rest] = c
    return {
        d: LaurentPoly(f.ring, f.nvars, terms) for d, terms in sorted(out.items())
    }


def _from_coeffs(ring, nvars, x, coeffs):
    terms = {}
    for d, poly in coeffs.items():
        for exps, c in poly.terms.items():
            e = exps[:x] + (d,) + exps[x + 1:]
            terms[e] = c
    return LaurentPoly(ring, nvars, terms)


def _scalar_gcd(ring, a, b):
    if ring.kind == "Z":
        import math

        return math.gcd(a, b)
    return ring.one()


def _content_pp(f, x):
    coeffs = _coeffs_in(f, x)
    content = LaurentPoly.zero(f.ring, f.nvars)
    for poly in coeffs.values():
        content = _poly_gcd(content, poly)
        if is_unit(content):
            break
    if is_unit(content):
        content = LaurentPoly.one(f.ring, f.nvars)
        return content, f
    pp = _exact_div_strict(f, content)
    return content, pp


def _lc_deg(f, x):
    d = f.degree_in(x)
    lc = {e[:x] + (0,) + e[x + 1:]: c for e, c in f.terms.items() if e[x] == d}
    return LaurentPoly(f.ring, f.nvars, lc), d


def _pseudo_rem(A, B, x):
    """prem(A, B) in variable x with the deterministic lc(B)^(dA-dB+1) scaling."""
    R = A.ring
    lB, dB = _lc_deg(B, x)
    dA = A.degree_in(x)
    if dB < 0:
        raise ZeroDivisionError("pseudo-remainder by zero")
    if dA < dB:
        return A
    steps = 0
    rem = A
    while not rem.is_zero and rem.degree_in(x) >= dB:
        lR, dR = _lc_deg(rem, x)
        xshift = [0] * A.nvars
        xshift[x] = dR - dB
        rem = rem * lB - (lR * B).shift(tuple(xshift))
        steps += 1
    want = dA - dB + 1
    for _ in range(want - steps):
        rem = rem * lB
    return rem


def _prs_gcd(A, B, x):
    """GCD of two x-primitive polynomials via the subresultant PRS."""
    one = LaurentPoly.one(A.ring, A.nvars)
    if A.degree_in(x) < B.degree_in(x):
        A, B = B, A
    if B.is_zero:
        return _content_pp(A, x)[1]
    g = one
    h = one
    while True:
        delta = A.degree_in(x) - B.degree_in(x)
        R = _pseudo_rem(A, B, x)
        if R.is_zero:
            if B.degree_in(x) == 0:
                return one
            return _content_pp(B, x)[1]
        if B.degree_in(x) == 0:
            return one
        A, B = B, _exact_div_strict(R, g * h**delta)
        g, _ = _lc_deg(A, x)
        if delta > 0:
            h = _exact_div_strict(g**delta, h ** (delta - 1)) if delta > 1 else g
    # unreachable


def _poly_gcd(f, g):
    """GCD of polynomials with nonnegative exponents, up to canonical associate."""
    if f.is_zero:
        return g
    if g.is_zero:
        return f
    active = _active_vars(f, g)
    if not active:
        return LaurentPoly.constant(
            f.ring, f.nvars, _scalar_gcd(f.ring, f.constant_value(), g.constant_value())
        )
    x = active[-1]
    cf, pf = _content_pp(f, x)
    cg, pg = _content_pp(g, x)
    c = _poly_gcd(cf, cg)
    h = _prs_gcd(pf, pg, x)
    h = _content_pp(h, x)[1]
    return c * h


def laurent_gcd(f, g):
    """GCD in the Laurent ring, returned as the canonical associate.

    gcd(f, 0) = canonical_associate(f); gcd(0, 0) = 0.  Over Z content is
    part of the answer (gcd(2*t1, 4) = 2); over a field the result is
    monic at its lex-least term.
    """
    if f.is_zero and g.is_zero:
        return f
    if f.is_zero:
        return canonical_associate(g)
    if g.is_zero:
        return canonical_associate(f)
    f._check_same(g)
    fp = f.shift(tuple(-m for m in f.min_exponents()))
    gp = g.shift(tuple(-m for m in g.min_exponents()))
    return canonical_associate(_poly_gcd(fp, gp))


def gcd_list(polys, stop_at_unit=True):
    """Fold laurent_gcd over a list (deterministic order; [] is an error)."""
    acc = None
    for f in polys:
        acc = f if acc is None else laurent_gcd(acc, f)
        if stop_at_unit and acc is not None and is_unit(acc):
            return canonical_associate(acc)
    if acc is None:
        raise ValueError("gcd of an empty list")
    return canonical_associate(acc) if not acc.is_zero else acc


# -- derivatives, squarefree part ----------------------------------------


def partial_derivative(f, i):
    R = f.ring
    terms = {}
    for exps, c in f.terms.items():
        k = exps[i]
        if k == 0:
            continue
        cc = R.mul(c, R.from_int(k))
        if cc == 0:
            continue
        e = exps[:i] + (k - 1,) + exps[i + 1:]
        terms[e] = cc
    return LaurentPoly(R, f.nvars, terms)


def _pth_root(f, p):
    # valid when every exponent is divisible by p; Frobenius fixes F_p coefficients
    terms = {}
    for exps, c in f.terms.items():
        terms[tuple(e // p for e in exps)] = c
    return LaurentPoly(f.ring, f.nvars, terms)


def squarefree_part(f):
    """Radical of f up to canonical associate (content over Z retained).

    Char 0: f / gcd(f, all partials).  Char p: factors with exponent
    divisible by p hide in the gcd; they are a p-th power and are handled
    by exponent division and recursion.
    """
    if f.is_zero:
        return f
    f = canonical_associate(f)
    if len(f.terms) == 1:
        return f
    partials = [partial_derivative(f, i) for i in range(f.nvars)]
    live = [d for d in partials if not d.is_zero]
    p = f.ring.char
    if not live:
        if p == 0:
            raise ArithmeticError("nonconstant char-0 polynomial with zero gradient")
        return squarefree_part(_pth_root(f, p))
    d = f
    for g in live:
        d = laurent_gcd(d, g)
        if is_unit(d):
            return f
    h = canonical_associate(_exact_div_strict(f, d))
    if p == 0:
        return h
    rem = d
    g = laurent_gcd(rem, h)
    while not is_unit(g):
        rem = _exact_div_strict(rem, g)
        g = laurent_gcd(rem, h)
    rem = canonical_associate(rem)
    if len(rem.terms) == 1:
        return h
    return canonical_associate(h * squarefree_part(rem))


# -- initial forms and reductions ----------------------------------------


def initial_form_valued(f, w, v):
    """Terms minimizing v(a_u) + <u, w>, as a polynomial (keeps coefficients).

    w is a tuple of exact rationals of length nvars.  Zero input is
    rejected: the zero polynomial has no initial form.
    """
    if f.is_zero:
        raise ValueError("initial form of the zero polynomial")
    if len(w) != f.nvars:
        raise ValueError("weight vector has wrong length")
    if not v.compatible_with(f.ring):
        raise ValueError("valuation/ring mismatch")
    w = tuple(Fraction(x) for x in w)
    best = None
    for exps, c in f.terms.items():
        weight = valuate(v, c, f.ring) + sum(e * x for e, x in zip(exps, w))
        if best is None or weight < best:
            best = weight
    keep = {}
    for exps, c in f.terms.items():
        weight = valuate(v, c, f.ring) + sum(e * x for e, x in zip(exps, w))
        if weight == best:
            keep[exps] = c
    return LaurentPoly(f.ring, f.nvars, keep)


def initial_form_chi(f, chi):
    """Terms of minimal chi-degree <u, chi>; coefficients untouched."""
    if f.is_zero:
        raise ValueError("initial form of the zero polynomial")
    if len(chi) != f.nvars:
        raise ValueError("character vector has wrong length")
    chi = tuple(Fraction(x) for x in chi)
    degs = {exps: sum(e * x for e, x in zip(exps, chi)) for exps in f.terms}
    best = min(degs.values())
    return LaurentPoly(
        f.ring, f.nvars, {e: c for e, c in f.terms.items() if degs[e] == best}
    )


def reduce_mod_p(f, p):
    """Termwise reduction to F_p; requires p-integral coefficients."""
    target = GF(p)
    if f.ring.kind == "FP":
        raise ValueError("polynomial already has prime-field coefficients")
    return LaurentPoly(
        target,
        f.nvars,
        {
            e: r
            for e, c in f.terms.items()
            if (r := reduce_scalar(c, p, f.ring)) != 0
        },
    )


def coefficient_primes(f):
    """Sorted primes dividing some numerator/denominator of a coefficient."""
    from .rings import prime_factors

    primes = set()
    for c in f.terms.values():
        if f.ring.kind == "Q":
            for part in (c.numerator, c.denominator):
                if part not in (0, 1, -1):
                    primes.update(prime_factors(part))
        elif f.ring.kind == "Z":
            if c not in (0, 1, -1):
                primes.update(prime_factors(c))
        else:
            raise ValueError("coefficient primes only make sense over Z or Q")
    return sorted(primes)
