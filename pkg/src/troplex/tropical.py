"""Tropicalization of Laurent polynomials, exactly, in the plane.

Three flavors:

* trop_hypersurface(f, v): the corner locus of w -> min_u (v(a_u) + <u, w>),
  i.e. where the minimum is attained by at least two terms.  Computed for
  one or two variables by enumerating term-pair tie loci and clipping each
  by the remaining terms' inequalities; every cell is a rational point,
  segment, ray, or (as two rays) a line.
* trop_Z_principal(f): the integer-coefficient version {chi :
  init_chi(f) is not +-monomial}, read off the Newton polytope's normal
  fan: edge normals always contribute rays, vertex cones contribute
  2-dimensional cells exactly when the vertex coefficient is not a unit.
* union_over_valuations(gens): the union over the trivial valuation, p-adic
  valuations, and mod-p reductions for all candidate primes p (primes
  dividing some coefficient), reported per valuation and combined on the
  sphere.

Everything is exact: bases and endpoints are Fractions, directions are
primitive integer vectors, and membership predicates share no code with
the cell enumeration, so they can cross-check each other in tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .laurent import (
    coefficient_primes,
    initial_form_chi,
    initial_form_valued,
    is_unit,
    reduce_mod_p,
)
from .rings import TRIVIAL, padic, valuate
from .sphere import SphereArcSet, antipode, cross, normalize_dir, same_dir, union_all


class Cell:
    """One closed convex piece of a tropical set.

    kind "vertex": the point base.
    kind "segment": from base to end.
    kind "ray": base + s*dir, s >= 0.
    kind "cone2": base + s*dir + t*dir2, s, t >= 0 (salient, ccw from dir
    to dir2); only produced by the integer tropicalization.
    label: the exponent tuples whose terms achieve the minimum on the
    cell's relative interior.
    """

    __slots__ = ("kind", "base", "end", "dir", "dir2", "label")

    def __init__(self, kind, base, end=None, dir=None, dir2=None, label=()):
        self.kind = kind
        self.base = tuple(Fraction(x) for x in base)
        self.end = None if end is None else tuple(Fraction(x) for x in end)
        self.dir = None if dir is None else tuple(dir)
        self.dir2 = None if dir2 is None else tuple(dir2)
        self.label = tuple(sorted(label))

    def key(self):
        return (self.kind, self.base, self.end, self.dir, self.dir2)

    def __repr__(self):
        if self.kind == "vertex":
            return f"<vertex {_fmt_pt(self.base)}>"
        if self.kind == "segment":
            return f"<segment {_fmt_pt(self.base)} to {_fmt_pt(self.end)}>"
        if self.kind == "ray":
            return f"<ray {_fmt_pt(self.base)} dir {self.dir}>"
        return f"<cone2 {_fmt_pt(self.base)} dirs {self.dir}, {self.dir2}>"

    def interior_point(self):
        if self.kind == "vertex":
            return self.base
        if self.kind == "segment":
            return tuple((a + b) / 2 for a, b in zip(self.base, self.end))
        if self.kind == "ray":
            return tuple(a + d for a, d in zip(self.base, self.dir))
        return tuple(
            a + d1 + d2 for a, d1, d2 in zip(self.base, self.dir, self.dir2)
        )

    def contains(self, w):
        w = tuple(Fraction(x) for x in w)
        if self.kind == "vertex":
            return w == self.base
        if self.kind == "segment":
            return _on_segment(self.base, self.end, w)
        if self.kind == "ray":
            s = _ray_param(self.base, self.dir, w)
            return s is not None and s >= 0
        return _in_cone2(self.base, self.dir, self.dir2, w)


def _fmt_pt(p):
    return "(" + ", ".join(str(x) for x in p) + ")"


def _on_segment(p, q, w):
    p = tuple(Fraction(x) for x in p)
    q = tuple(Fraction(x) for x in q)
    w = tuple(Fraction(x) for x in w)
    d = tuple(b - a for a, b in zip(p, q))
    r = tuple(b - a for a, b in zip(p, w))
    if len(p) == 1:
        lo, hi = sorted((p[0], q[0]))
        return lo <= w[0] <= hi
    if d[0] * r[1] - d[1] * r[0] != 0:
        return False
    t = None
    for dd, rr in zip(d, r):
        if dd != 0:
            t = rr / dd
            break
    if t is None:
        return all(x == 0 for x in r)
    return 0 <= t <= 1 and all(rr == t * dd for dd, rr in zip(d, r))


def _ray_param(base, direction, w):
    r = tuple(b - a for a, b in zip(base, w))
    if len(base) == 2 and direction[0] * r[1] - direction[1] * r[0] != 0:
        return None
    s = None
    for dd, rr in zip(direction, r):
        if dd != 0:
            s = Fraction(rr, dd) if not isinstance(rr, Fraction) else rr / dd
            break
    if s is None:
        return Fraction(0) if all(x == 0 for x in r) else None
    if all(rr == s * dd for dd, rr in zip(direction, r)):
        return s
    return None


def _in_cone2(base, d1, d2, w):
    r = tuple(b - a for a, b in zip(base, w))
    det = d1[0] * d2[1] - d1[1] * d2[0]
    if det == 0:
        raise ValueError("cone2 with dependent directions")
    s = Fraction(r[0] * d2[1] - r[1] * d2[0], det)
    t = Fraction(d1[0] * r[1] - d1[1] * r[0], det)
    return s >= 0 and t >= 0


class TropicalComplex:
    def __init__(self, nvars, cells, full_plane=False, note=""):
        self.nvars = nvars
        self.cells = list(cells)
        self.full_plane = full_plane
        self.note = note

    def __repr__(self):
        if self.full_plane:
            return f"<TropicalComplex full R^{self.nvars}>"
        return f"<TropicalComplex {len(self.cells)} cells in R^{self.nvars}>"

    @property
    def is_empty(self):
        return not self.full_plane and not self.cells

    def contains(self, w):
        if self.full_plane:
            return True
        return any(c.contains(w) for c in self.cells)

    def vertices(self):
        """0-cells of the complex: cell corner points that are not smooth
        interior points (a point with exactly two opposite incident
        directions and no other cell data is interior to an edge)."""
        incid = {}
        for c in self.cells:
            if c.kind == "vertex":
                incid.setdefault(c.base, set()).add(None)
            elif c.kind == "segment":
                d = _primitive(tuple(b - a for a, b in zip(c.base, c.end)))
                incid.setdefault(c.base, set()).add(d)
                incid.setdefault(c.end, set()).add(antipode(d))
            elif c.kind == "ray":
                incid.setdefault(c.base, set()).add(tuple(c.dir))
            else:
                incid.setdefault(c.base, set()).add(tuple(c.dir))
                incid.setdefault(c.base, set()).add(tuple(c.dir2))
        out = []
        for pt, dirs in sorted(incid.items()):
            real = [d for d in dirs if d is not None]
            if len(real) == 2 and real[0] == antipode(real[1]):
                continue
            out.append(pt)
        return out

    def incident_edges(self, pt):
        """(outgoing primitive direction, cell) pairs at a point."""
        pt = tuple(Fraction(x) for x in pt)
        out = []
        for c in self.cells:
            if c.kind == "segment":
                if c.base == pt:
                    out.append((_primitive(tuple(b - a for a, b in zip(c.base, c.end))), c))
                elif c.end == pt:
                    out.append((_primitive(tuple(b - a for a, b in zip(c.end, c.base))), c))
            elif c.kind == "ray" and c.base == pt:
                out.append((tuple(c.dir), c))
        return out


def _primitive(v):
    return normalize_dir(v) if len(v) == 2 else _primitive1(v)


def _primitive1(v):
    x = Fraction(v[0])
    if x == 0:
        raise ValueError("zero vector")
    return (1,) if x > 0 else (-1,)


def cell_weight(c):
    """Multiplicity of a cell dual to a Newton-polytope edge: the lattice
    length between the extreme exponents of its label."""
    if len(c.label) < 2:
        raise ValueError("cell label has no extent, no dual edge")
    lo, hi = c.label[0], c.label[-1]
    g = 0
    for a, b in zip(lo, hi):
        g = gcd(g, abs(b - a))
    if g == 0:
        raise ValueError("degenerate label")
    return g


def full_plane_complex(nvars=2, note=""):
    """All of R^2 as four closed quadrant cones (keeps the cell algebra
    uniform: projection and membership need no special casing)."""
    if nvars != 2:
        raise ValueError("full-plane cells are only materialized in the plane")
    quads = [
        ((1, 0), (0, 1)),
        ((0, 1), (-1, 0)),
        ((-1, 0), (0, -1)),
        ((0, -1), (1, 0)),
    ]
    cells = [Cell("cone2", (0, 0), dir=a, dir2=b) for a, b in quads]
    return TropicalComplex(2, cells, full_plane=True, note=note)


# -- corner locus over a valued field ---------------------------------------


def _term_heights(f, valuation):
    return [
        (exps, valuate(valuation, c, f.ring)) for exps, c in sorted(f.terms.items())
    ]


def trop_contains(f, valuation, w):
    """Membership oracle: the minimum of v(a_u) + <u, w> ties."""
    return len(initial_form_valued(f, w, valuation).terms) >= 2


def trop_hypersurface(f, valuation=TRIVIAL):
    """Exact corner-locus complex for nvars <= 2."""
    if f.is_zero:
        raise ValueError("cannot tropicalize the zero polynomial")
    if not valuation.compatible_with(f.ring):
        raise ValueError("valuation/ring mismatch")
    if f.nvars > 2:
        raise ValueError("exact cells need nvars <= 2; use trop_contains oracle")
    items = _term_heights(f, valuation)
    if len(items) == 1:
        return TropicalComplex(f.nvars, [], note="single term: empty corner locus")
    if f.nvars == 0:
        raise ValueError("no variables to tropicalize")
    if f.nvars == 1:
        return _trop_line(f, items)
    return _trop_plane(f, items)


def _trop_line(f, items):
    points = set()
    n = len(items)
    for i in range(n):
        u1, h1 = items[i]
        for j in range(i + 1, n):
            u2, h2 = items[j]
            du = u1[0] - u2[0]
            if du == 0:
                continue
            x = (h2 - h1) / du
            value = h1 + u1[0] * x
            if all(value <= h + u[0] * x for u, h in items):
                points.add(x)
    cells = [Cell("vertex", (x,)) for x in sorted(points)]
    for c in cells:
        c.label = _argmin_label(items, c.base)
    return TropicalComplex(1, cells)


def _argmin_label(items, w):
    vals = [(h + sum(e * x for e, x in zip(u, w)), u) for u, h in items]
    best = min(v for v, _ in vals)
    return tuple(sorted(u for v, u in vals if v == best))


def _trop_plane(f, items):
    n = len(items)
    raw = []
    for i in range(n):
        u1, h1 = items[i]
        for j in range(i + 1, n):
            u2, h2 = items[j]
            a = (u1[0] - u2[0], u1[1] - u2[1])
            if a == (0, 0):
                continue
            raw.extend(_clip_tie_line(items, i, j, a, Fraction(h2 - h1)))
    cells = _dedupe_cells(raw)
    for c in cells:
        c.label = _argmin_label(items, c.interior_point())
    return TropicalComplex(2, cells)


def _clip_tie_line(items, i, j, a, rhs):
    """Cells of {w : a.w = rhs, term i minimal} as vertex/segment/rays."""
    u1, h1 = items[i]
    norm = Fraction(a[0] * a[0] + a[1] * a[1])
    base = (rhs * a[0] / norm, rhs * a[1] / norm)
    d = normalize_dir((-a[1], a[0]))
    lo, hi = None, None  # None encodes the infinite end
    feasible = True
    for k, (u3, h3) in enumerate(items):
        if k in (i, j):
            continue
        # (h1 + u1.w) <= (h3 + u3.w) along w = base + s*d
        du = (u1[0] - u3[0], u1[1] - u3[1])
        c0 = (h1 - h3) + du[0] * base[0] + du[1] * base[1]
        c1 = du[0] * d[0] + du[1] * d[1]
        if c1 == 0:
            if c0 > 0:
                feasible = False
                break
            continue
        bound = -c0 / c1
        if c1 > 0:
            if hi is None or bound < hi:
                hi = bound
        else:
            if lo is None or bound > lo:
                lo = bound
    if not feasible:
        return []
    if lo is not None and hi is not None and lo > hi:
        return []
    at = lambda s: (base[0] + s * d[0], base[1] + s * d[1])
    if lo is not None and hi is not None:
        if lo == hi:
            return [Cell("vertex", at(lo))]
        return [Cell("segment", at(lo), end=at(hi))]
    if lo is not None:
        return [Cell("ray", at(lo), dir=d)]
    if hi is not None:
        return [Cell("ray", at(hi), dir=antipode(d))]
    return [Cell("ray", base, dir=d), Cell("ray", base, dir=antipode(d))]


def _cell_subsumed(c, d):
    """Is cell c geometrically contained in a different cell d?"""
    if c.kind == "vertex":
        return d.kind != "vertex" and d.contains(c.base)
    if c.kind == "segment":
        if d.kind in ("vertex",):
            return False
        return d.contains(c.base) and d.contains(c.end) and d.kind in ("segment", "ray", "cone2")
    if c.kind == "ray":
        if d.kind == "ray":
            return tuple(c.dir) == tuple(d.dir) and d.contains(c.base)
        if d.kind == "cone2":
            return d.contains(c.base) and d.contains(c.interior_point())
        return False
    return False


def _dedupe_cells(cells, subsume=True):
    uniq = {}
    for c in cells:
        uniq.setdefault(c.key(), c)
    cells = list(uniq.values())
    out = []
    for c in cells:
        if subsume and any(d is not c and _cell_subsumed(c, d) for d in cells):
            continue
        out.append(c)
    kind_order = {"vertex": 0, "segment": 1, "ray": 2, "cone2": 3}
    out.sort(key=lambda c: (kind_order[c.kind], c.base, c.dir or (), c.end or ()))
    return out


# -- integer-coefficient tropicalization ------------------------------------


def trop_Z_contains(f, chi):
    """chi lies in Trop_Z((f)) iff init_chi(f) is not a unit of Z[t^{+-1}]."""
    if f.ring.kind != "Z":
        raise ValueError("integer tropicalization needs Z coefficients")
    return not is_unit(initial_form_chi(f, chi))


def _convex_hull(points):
    """Monotone chain; returns ccw hull vertices, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    def half(seq):
        out = []
        for p in seq:
            while (
                len(out) >= 2
                and cross(
                    (out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                    (p[0] - out[-1][0], p[1] - out[-1][1]),
                )
                <= 0
            ):
                out.pop()
            out.append(p)
        return out
    lower = half(pts)
    upper = half(list(reversed(pts)))
    return lower[:-1] + upper[:-1]


def _halfplane_cells(e, label):
    """{chi : chi.e >= 0} as two salient ccw cones."""
    a = (-e[1], e[0])
    return [
        Cell("cone2", (0, 0), dir=antipode(a), dir2=e, label=label),
        Cell("cone2", (0, 0), dir=e, dir2=a, label=label),
    ]


def trop_Z_principal(f):
    """Trop_Z of the principal ideal (f), from the Newton polytope.

    Sound for principal ideals because initial forms are multiplicative
    over a domain: init_chi((f)) = (init_chi(f)), so chi is in Trop_Z
    exactly when init_chi(f) fails to be +-monomial.
    """
    if f.ring.kind != "Z":
        raise ValueError("integer tropicalization needs Z coefficients")
    if f.is_zero:
        return full_plane_complex(f.nvars, note="zero ideal: everything")
    if f.nvars != 2:
        raise ValueError("exact cells need nvars = 2; use trop_Z_contains oracle")
    support = sorted(f.terms)
    if len(support) == 1:
        u = support[0]
        if f.ring.is_unit(f.terms[u]):
            return TropicalComplex(2, [], note="unit monomial: empty")
        return full_plane_complex(2, note="non-unit monomial: everything")
    hull = _convex_hull(support)
    cells = []
    if len(hull) == 2:
        # one-dimensional Newton polytope
        lo, hi = hull
        e = normalize_dir((hi[0] - lo[0], hi[1] - lo[1]))
        perp = (-e[1], e[0])
        all_label = tuple(support)
        cells.append(Cell("ray", (0, 0), dir=perp, label=all_label))
        cells.append(Cell("ray", (0, 0), dir=antipode(perp), label=all_label))
        # chi.e > 0 minimizes at lo, chi.e < 0 at hi
        if not f.ring.is_unit(f.terms[lo]):
            cells.extend(_halfplane_cells(e, (lo,)))
        if not f.ring.is_unit(f.terms[hi]):
            cells.extend(_halfplane_cells(antipode(e), (hi,)))
        return TropicalComplex(2, _dedupe_cells(cells, subsume=False))
    k = len(hull)
    inward = []
    for idx in range(k):
        u, v = hull[idx], hull[(idx + 1) % k]
        d = (v[0] - u[0], v[1] - u[1])
        n_in = normalize_dir((-d[1], d[0]))
        edge_support = tuple(p for p in support if _on_segment(u, v, p))
        cells.append(Cell("ray", (0, 0), dir=n_in, label=edge_support))
        inward.append(n_in)
    for idx in range(k):
        v = hull[idx]
        if f.ring.is_unit(f.terms[v]):
            continue
        prev_n = inward[(idx - 1) % k]
        next_n = inward[idx]
        cells.append(Cell("cone2", (0, 0), dir=prev_n, dir2=next_n, label=(v,)))
    return TropicalComplex(2, _dedupe_cells(cells, subsume=False))


# -- sphere projection -------------------------------------------------------


def _short_arc(da, db):
    """Direction set spanned between two directions, the narrow way."""
    if same_dir(da, db):
        return SphereArcSet.point(da)
    if same_dir(da, antipode(db)):
        return SphereArcSet.points([da, db])
    if cross(da, db) > 0:
        return SphereArcSet.arc(da, db)
    return SphereArcSet.arc(db, da)


def _project_cell(c):
    origin = all(x == 0 for x in c.base)
    if c.kind == "vertex":
        if origin:
            return SphereArcSet.empty()
        return SphereArcSet.point(c.base)
    if c.kind == "segment":
        base_zero = all(x == 0 for x in c.base)
        end_zero = all(x == 0 for x in c.end)
        if base_zero and end_zero:
            return SphereArcSet.empty()
        if base_zero:
            return SphereArcSet.point(c.end)
        if end_zero:
            return SphereArcSet.point(c.base)
        da, db = normalize_dir(c.base), normalize_dir(c.end)
        if same_dir(da, antipode(db)):
            # passes through the origin
            return SphereArcSet.points([da, db])
        return _short_arc(da, db)
    if c.kind == "ray":
        du = normalize_dir(c.dir)
        if origin:
            return SphereArcSet.point(du)
        da = normalize_dir(c.base)
        if same_dir(da, antipode(du)):
            return SphereArcSet.points([da, du])
        return _short_arc(da, du)
    # cone2: emitted with apex at the origin by construction
    if not origin:
        raise ValueError("cone2 cells are expected to have their apex at 0")
    if same_dir(c.dir, antipode(c.dir2)):
        raise ValueError("cone2 spanning a half plane should be split")
    return SphereArcSet.arc(c.dir, c.dir2)


def sphere_projection(T):
    """Directions of the nonzero points of T, as an exact arc set (nvars 2)."""
    if T.nvars != 2:
        raise ValueError("sphere projection is exact only in the plane")
    if T.full_plane:
        return SphereArcSet.full_circle()
    return union_all(_project_cell(c) for c in T.cells)


# -- union over valuations, prime by prime ------------------------------------


class ValuationEntry:
    def __init__(self, label, field_tag, valuation_desc, complexes, combined, arcs):
        self.label = label
        self.field_tag = field_tag
        self.valuation_desc = valuation_desc
        self.complexes = complexes  # one per generator
        self.combined = combined  # TropicalComplex (exact or prevariety)
        self.arcs = arcs

    def __repr__(self):
        return f"<ValuationEntry {self.label}: {self.combined!r}>"


class ValuationUnionReport:
    def __init__(self, primes, entries, sphere_union, exact, notes):
        self.primes = primes
        self.entries = entries
        self.sphere_union = sphere_union
        self.exact = exact
        self.notes = notes


def _intersect_interval(av, bv):
    lo = av[0] if bv[0] is None else bv[0] if av[0] is None else max(av[0], bv[0])
    hi = av[1] if bv[1] is None else bv[1] if av[1] is None else min(av[1], bv[1])
    return lo, hi


def _as_line_cell(c):
    """(point, primitive dir, param interval) for a 1-dim cell."""
    if c.kind == "segment":
        d = _primitive(tuple(b - a for a, b in zip(c.base, c.end)))
        length = None
        for dd, rr in zip(d, (b - a for a, b in zip(c.base, c.end))):
            if dd != 0:
                length = rr / dd
                break
        return c.base, d, (Fraction(0), length)
    if c.kind == "ray":
        return c.base, tuple(c.dir), (Fraction(0), None)
    raise ValueError(c.kind)


def _intersect_cells(c1, c2):
    if c1.kind == "vertex":
        return [Cell("vertex", c1.base)] if c2.contains(c1.base) else []
    if c2.kind == "vertex":
        return [Cell("vertex", c2.base)] if c1.contains(c2.base) else []
    if c1.kind == "cone2" or c2.kind == "cone2":
        raise ValueError("prevariety intersection expects curves, not 2-cells")
    p1, d1, iv1 = _as_line_cell(c1)
    p2, d2, iv2 = _as_line_cell(c2)
    det = cross(d1, d2)
    if det != 0:
        # transverse lines: at most one point
        r = (p2[0] - p1[0], p2[1] - p1[1])
        s = Fraction(r[0] * d2[1] - r[1] * d2[0], det)
        w = (p1[0] + s * d1[0], p1[1] + s * d1[1])
        if c1.contains(w) and c2.contains(w):
            return [Cell("vertex", w)]
        return []
    # parallel: same line?
    r = (p2[0] - p1[0], p2[1] - p1[1])
    if cross(d1, r) != 0:
        return []
    # express cell2's interval in cell1's parameter
    shift = None
    for dd, rr in zip(d1, r):
        if dd != 0:
            shift = rr / dd
            break
    shift = shift if shift is not None else Fraction(0)
    flip = same_dir(d1, antipode(d2))
    lo2, hi2 = iv2
    if flip:
        lo2, hi2 = (None if hi2 is None else -hi2), (None if lo2 is None else -lo2)
    iv2_in_1 = (
        None if lo2 is None else lo2 + shift,
        None if hi2 is None else hi2 + shift,
    )
    lo, hi = _intersect_interval(iv1, iv2_in_1)
    if lo is not None and hi is not None and lo > hi:
        return []
    at = lambda s: (p1[0] + s * d1[0], p1[1] + s * d1[1])
    if lo is not None and hi is not None:
        if lo == hi:
            return [Cell("vertex", at(lo))]
        return [Cell("segment", at(lo), end=at(hi))]
    if lo is not None:
        return [Cell("ray", at(lo), dir=d1)]
    if hi is not None:
        return [Cell("ray", at(hi), dir=antipode(d1))]
    return [Cell("ray", p1, dir=d1), Cell("ray", p1, dir=antipode(d1))]


def intersect_complexes(A, B):
    """Exact pairwise intersection of two planar curve complexes."""
    if A.full_plane:
        return B
    if B.full_plane:
        return A
    out = []
    for c1 in A.cells:
        for c2 in B.cells:
            out.extend(_intersect_cells(c1, c2))
    return TropicalComplex(2, _dedupe_cells(out))


def union_over_valuations(gens, extra_primes=()):
    """Tropicalize over Q-trivial, p-adic, and mod-p for candidate primes.

    gens: list of LaurentPoly over Z (or an IdealGens).  The candidate
    prime set is every prime dividing a coefficient of some generator
    (plus extra_primes).  For a principal ideal this is complete: for any
    other prime, reduction mod p keeps all supports and all coefficient
    valuations are zero, so every tropicalization equals the trivial one.
    For several generators each entry is the prevariety (intersection of
    the generators' tropical curves), which contains the variety; reports
    carry that flag.
    """
    if hasattr(gens, "generators"):
        gens = gens.generators
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    nvars = gens[0].nvars
    if any(g.ring.kind != "Z" for g in gens):
        raise ValueError("prime-union tropicalization needs Z coefficients")
    principal = len(gens) == 1
    primes = set(extra_primes)
    for g in gens:
        primes.update(coefficient_primes(g))
    primes = sorted(primes)
    notes = []
    if not principal:
        notes.append(
            "approximation: prevariety (intersection of generator curves) "
            "contains the tropical variety; candidate primes are heuristic"
        )
    settings = [("trivial over Q", "Q", TRIVIAL, None)]
    for p in primes:
        settings.append((f"{p}-adic over Q", "Q", padic(p), None))
        settings.append((f"trivial over F_{p}", f"fp:{p}", TRIVIAL, p))
    entries = []
    for label, tag, val, red in settings:
        complexes = []
        for g in gens:
            if red is None:
                complexes.append(trop_hypersurface(g, val))
            else:
                gp = reduce_mod_p(g, red)
                if gp.is_zero:
                    notes.append(f"a generator reduces to 0 mod {red}")
                    complexes.append(
                        full_plane_complex(nvars, note=f"zero mod {red}")
                    )
                else:
                    complexes.append(trop_hypersurface(gp, val))
        combined = complexes[0]
        for c in complexes[1:]:
            combined = intersect_complexes(combined, c)
        arcs = sphere_projection(combined)
        entries.append(ValuationEntry(label, tag, label, complexes, combined, arcs))
    sphere_union = union_all(e.arcs for e in entries)
    return ValuationUnionReport(primes, entries, sphere_union, principal, notes)
