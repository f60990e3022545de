"""Finite presentations, Fox calculus, and matrix representations.

Words are tuples of nonzero signed integers (Tietze form): ``3`` means the
third generator, ``-3`` its inverse.  Relators are stored as given and are
*not* freely reduced, since Fox derivatives depend only on the free word
but builders want readable relators.

The chain-complex conventions: for a presentation with n generators and m
relators and a rank-r representation, ``alexander_matrices`` returns

* ``d2``: (m*r) x (n*r), block (j, i) = (sigma (x) phi)(dR_j/dx_i),
* ``d1``: (n*r) x r, block i = (sigma (x) phi)(x_i) - I_r,

so the Fox fundamental identity makes the product ``d2 * d1`` vanish.
"""

from __future__ import annotations

import os
from fractions import Fraction

from . import linalg
from .laurent import LaurentPoly
from .rings import QQ, ZZ, Ring

DEFAULT_MAX_QUOTIENT = 5040


# -- words ----------------------------------------------------------------


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert_word(word):
    return tuple(-letter for letter in reversed(word))


def parse_word(text, names):
    """Parse ``"x1^-1 x2^2"`` into a Tietze tuple using the name list."""
    index = {name: i + 1 for i, name in enumerate(names)}
    out = []
    for atom in text.split():
        if "^" in atom:
            name, _, exp = atom.partition("^")
            power = int(exp)
        else:
            name, power = atom, 1
        if name not in index:
            raise ValueError(f"unknown generator {name!r}")
        if power == 0:
            continue
        letter = index[name] if power > 0 else -index[name]
        out.extend([letter] * abs(power))
    return tuple(out)


def word_to_str(word, names):
    if not word:
        return ""
    pieces = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        count = j - i
        letter = word[i]
        name = names[abs(letter) - 1]
        power = count if letter > 0 else -count
        pieces.append(name if power == 1 else f"{name}^{power}")
        i = j
    return " ".join(pieces)


def commutator(a, b):
    """[a, b] = a b a^-1 b^-1 for single generators or words."""
    wa = a if isinstance(a, tuple) else (a,)
    wb = b if isinstance(b, tuple) else (b,)
    return wa + wb + invert_word(wa) + invert_word(wb)


# -- presentations and abelianization ------------------------------------


class Presentation:
    def __init__(self, names, relators):
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.names = list(names)
        self.ngens = len(names)
        rels = []
        for rel in relators:
            rel = tuple(rel)
            for letter in rel:
                if letter == 0 or abs(letter) > self.ngens:
                    raise ValueError(f"letter {letter} out of range")
            rels.append(rel)
        self.relators = rels
        self.nrels = len(rels)
        self._ab = None

    def __repr__(self):
        return f"<Presentation {self.ngens} gens, {self.nrels} relators>"

    def exponent_matrix(self):
        """n x m integer matrix; column j is the abelianized relator j."""
        M = [[0] * self.nrels for _ in range(self.ngens)]
        for j, rel in enumerate(self.relators):
            for letter in rel:
                M[abs(letter) - 1][j] += 1 if letter > 0 else -1
        return M

    def abelianization(self):
        if self._ab is None:
            self._ab = AbelianizationData(self)
        return self._ab


class AbelianizationData:
    """Smith-form data for G_ab: free rank, projections, torsion invariants."""

    def __init__(self, pres):
        M = pres.exponent_matrix()
        n = pres.ngens
        diag, U = linalg.smith_normal_form(M) if n else ([], [])
        rank = sum(1 for d in diag if d != 0)
        self.free_rank = n - rank
        self.torsion = [d for d in diag if d > 1]
        torsion_rows = [i for i, d in enumerate(diag) if d > 1]
        self.gen_free = [
            tuple(U[i][j] for i in range(rank, n)) for j in range(n)
        ]
        self.gen_torsion = [
            tuple(U[i][j] % diag[i] for i in torsion_rows) for j in range(n)
        ]

    def free_image(self, word):
        b = self.free_rank
        out = [0] * b
        for letter in word:
            vec = self.gen_free[abs(letter) - 1]
            s = 1 if letter > 0 else -1
            for k in range(b):
                out[k] += s * vec[k]
        return tuple(out)


# -- representations ------------------------------------------------------


class Representation:
    """A homomorphism to GL_r over Z, Q, or F_p, given on generators."""

    def __init__(self, ring, matrices):
        self.ring = ring
        self.mats = []
        self.invs = []
        rank = None
        for mat in matrices:
            mat = [[ring.check(x) for x in row] for row in mat]
            r = len(mat)
            if any(len(row) != r for row in mat):
                raise ValueError("representation matrices must be square")
            if rank is None:
                rank = r
            elif r != rank:
                raise ValueError("representation matrices must share one rank")
            inv = linalg.smat_inverse(ring, mat)
            if inv is None:
                raise ValueError(f"matrix not invertible over {ring!r}")
            self.mats.append(mat)
            self.invs.append(inv)
        if rank is None:
            raise ValueError("a representation needs at least one generator")
        self.rank = rank
        self.ngens = len(self.mats)

    @classmethod
    def trivial(cls, ring, ngens, rank=1):
        eye = linalg.smat_identity(ring, rank)
        return cls(ring, [eye for _ in range(ngens)])

    def image(self, letter):
        return self.mats[letter - 1] if letter > 0 else self.invs[-letter - 1]

    def word_image(self, word):
        out = linalg.smat_identity(self.ring, self.rank)
        for letter in word:
            out = linalg.smat_mul(self.ring, out, self.image(letter))
        return out

    def identity(self):
        return linalg.smat_identity(self.ring, self.rank)

    def over(self, ring):
        """The same matrices reinterpreted/reduced in another ring."""
        if ring == self.ring:
            return self
        convert = _scalar_converter(self.ring, ring)
        return Representation(
            ring, [[[convert(x) for x in row] for row in mat] for mat in self.mats]
        )

    def trace_of(self, word):
        mat = self.word_image(word)
        tr = self.ring.zero()
        for i in range(self.rank):
            tr = self.ring.add(tr, mat[i][i])
        return tr


def _scalar_converter(src, dst):
    from .rings import reduce_scalar

    if dst.kind == "FP":
        return lambda x: reduce_scalar(x, dst.p, src)
    if src.kind == "Z" and dst.kind == "Q":
        return lambda x: Fraction(x)
    if src.kind == "Q" and dst.kind == "Z":
        def to_int(x):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return int(x)

        return to_int
    if src == dst:
        return lambda x: x
    raise ValueError(f"cannot convert scalars from {src!r} to {dst!r}")


def verify_representation(pres, rep):
    """True iff every relator maps to the identity matrix."""
    if rep.ngens != pres.ngens:
        raise ValueError("generator count mismatch")
    eye = rep.identity()
    return all(rep.word_image(rel) == eye for rel in pres.relators)


# -- Fox calculus ----------------------------------------------------------


def fox_derivative(word, i):
    """The free Fox derivative d(word)/d(x_{i+1}) as {prefix word: int}.

    Rules: d(x)/dx = 1, d(x^-1)/dx = -x^-1, d(uv)/dx = du/dx + u dv/dx.
    Prefixes are freely reduced; zero coefficients are dropped.
    """
    target = i + 1
    out = {}
    prefix = []
    for letter in word:
        if letter == target:
            key = tuple(prefix)
            out[key] = out.get(key, 0) + 1
        if prefix and prefix[-1] == -letter:
            prefix.pop()
        else:
            prefix.append(letter)
        if letter == -target:
            key = tuple(prefix)
            out[key] = out.get(key, 0) - 1
    return {w: c for w, c in out.items() if c != 0}


# -- epimorphisms to free abelian groups ----------------------------------


class AbelianEpi:
    """phi: G ->> Z^m, given by an integer vector per generator."""

    def __init__(self, pres, vectors):
        if len(vectors) != pres.ngens:
            raise ValueError("need one vector per generator")
        m = len(vectors[0]) if vectors else 0
        vectors = [tuple(v) for v in vectors]
        if any(len(v) != m for v in vectors):
            raise ValueError("phi vectors must share one length")
        for rel in pres.relators:
            img = [0] * m
            for letter in rel:
                s = 1 if letter > 0 else -1
                vec = vectors[abs(letter) - 1]
                for k in range(m):
                    img[k] += s * vec[k]
            if any(img):
                raise ValueError("phi does not kill every relator")
        if m > 0:
            diag, _ = linalg.smith_normal_form(
                [list(v) for v in vectors], track_left=False
            )
            if sum(1 for d in diag if d == 1) < m or any(
                d not in (0, 1) for d in diag
            ):
                raise ValueError("phi is not surjective onto Z^m (Smith form)")
        self.pres = pres
        self.m = m
        self.vectors = vectors

    @classmethod
    def from_abelianization(cls, pres):
        ab = pres.abelianization()
        return cls(pres, ab.gen_free)

    def word_value(self, word):
        out = [0] * self.m
        for letter in word:
            s = 1 if letter > 0 else -1
            vec = self.vectors[abs(letter) - 1]
            for k in range(self.m):
                out[k] += s * vec[k]
        return tuple(out)

    def word_monomial(self, word, ring=ZZ):
        return LaurentPoly.monomial(ring, self.m, self.word_value(word), ring.one())


def evaluate_word(word, rep=None, phi=None, ring=ZZ):
    """sigma(w), the monomial t^phi(w), or their tensor, as available.

    With both a representation and an epimorphism this is the r x r
    LaurentPoly matrix ``t^phi(w) * sigma(w)`` used throughout the twisted
    chain complex.
    """
    if rep is None and phi is None:
        raise ValueError("need a representation, an epimorphism, or both")
    if rep is None:
        return phi.word_monomial(word, ring)
    if phi is None:
        return rep.word_image(word)
    exps = phi.word_value(word)
    mat = rep.word_image(word)
    return [
        [
            LaurentPoly.monomial(rep.ring, phi.m, exps, entry)
            for entry in row
        ]
        for row in mat
    ]


# -- twisted chain complex --------------------------------------------------


def _specialize_fox(elem, rep, phi):
    """(sigma (x) phi) applied to a group-ring element {word: int}."""
    r = rep.rank
    nv = phi.m
    ring = rep.ring
    out = [[LaurentPoly.zero(ring, nv) for _ in range(r)] for _ in range(r)]
    for word, coeff in sorted(elem.items()):
        exps = phi.word_value(word)
        mat = rep.word_image(word)
        c = ring.from_int(coeff)
        for a in range(r):
            for b in range(r):
                entry = ring.mul(c, mat[a][b])
                if entry != 0:
                    out[a][b] = out[a][b] + LaurentPoly.monomial(ring, nv, exps, entry)
    return out


def alexander_matrices(pres, rep, phi=None):
    """(d2, d1) of the twisted chain complex; see the module docstring."""
    if phi is None:
        phi = AbelianEpi.from_abelianization(pres)
    if rep.ngens != pres.ngens:
        raise ValueError("generator count mismatch")
    r = rep.rank
    n, m = pres.ngens, pres.nrels
    nv = phi.m
    ring = rep.ring
    d2 = [[None] * (n * r) for _ in range(m * r)]
    for j, rel in enumerate(pres.relators):
        for i in range(n):
            block = _specialize_fox(fox_derivative(rel, i), rep, phi)
            for a in range(r):
                for b in range(r):
                    d2[j * r + a][i * r + b] = block[a][b]
    d1 = [[None] * r for _ in range(n * r)]
    for i in range(n):
        exps = phi.word_value((i + 1,))
        mat = rep.image(i + 1)
        for a in range(r):
            for b in range(r):
                entry = LaurentPoly.monomial(ring, nv, exps, mat[a][b])
                if a == b:
                    entry = entry - LaurentPoly.one(ring, nv)
                d1[i * r + a][b] = entry
    return d2, d1


def _character_values(pres, ring, rho_free, torsion_values):
    ab = pres.abelianization()
    b = ab.free_rank
    if len(rho_free) != b:
        raise ValueError(f"need {b} character values (free rank)")
    rho = [ring.check(x) for x in rho_free]
    if any(x == 0 for x in rho):
        raise ValueError("character values must be nonzero")
    tors = []
    if ab.torsion:
        torsion_values = torsion_values or [ring.one()] * len(ab.torsion)
        if len(torsion_values) != len(ab.torsion):
            raise ValueError("need one torsion value per invariant")
        for d, tau in zip(ab.torsion, torsion_values):
            tau = ring.check(tau)
            acc = ring.one()
            for _ in range(d):
                acc = ring.mul(acc, tau)
            if acc != ring.one():
                raise ValueError(f"torsion value {tau} does not satisfy tau^{d} = 1")
            tors.append(tau)
    elif torsion_values:
        raise ValueError("presentation has no torsion characters")

    def power(base, k):
        if k < 0:
            return power(ring.inv(base), -k)
        acc = ring.one()
        for _ in range(k):
            acc = ring.mul(acc, base)
        return acc

    values = []
    for g in range(pres.ngens):
        val = ring.one()
        for x, e in zip(rho, ab.gen_free[g]):
            val = ring.mul(val, power(x, e))
        for tau, e in zip(tors, ab.gen_torsion[g]):
            val = ring.mul(val, power(tau, e))
        values.append(val)
    return values


def homology_dims_at_character(pres, rep, rho_free, torsion_values=None):
    """(dim H_0, dim H_1) of the sigma (x) rho - twisted complex at a character.

    rho_free lists nonzero field values for the free abelianization
    coordinates; torsion_values (optional) for the torsion invariants.
    Representations over Z are computed over Q.
    """
    ring = QQ if rep.ring.kind == "Z" else rep.ring
    if not ring.is_field:
        raise ValueError("character homology needs field coefficients")
    rep = rep.over(ring)
    values = _character_values(pres, ring, rho_free, torsion_values)
    inv_values = [ring.inv(v) for v in values]
    r = rep.rank
    n, m = pres.ngens, pres.nrels

    def scaled_image(letter):
        mat = rep.image(letter)
        scale = values[letter - 1] if letter > 0 else inv_values[-letter - 1]
        return [[ring.mul(scale, x) for x in row] for row in mat]

    def scaled_word(word):
        out = linalg.smat_identity(ring, r)
        for letter in word:
            out = linalg.smat_mul(ring, out, scaled_image(letter))
        return out

    d1 = [[ring.zero()] * r for _ in range(n * r)]
    for i in range(n):
        mat = scaled_image(i + 1)
        for a in range(r):
            for b in range(r):
                entry = mat[a][b]
                if a == b:
                    entry = ring.sub(entry, ring.one())
                d1[i * r + a][b] = entry
    d2 = [[ring.zero()] * (n * r) for _ in range(m * r)]
    for j, rel in enumerate(pres.relators):
        for i in range(n):
            block = [[ring.zero()] * r for _ in range(r)]
            for word, coeff in fox_derivative(rel, i).items():
                mat = scaled_word(word)
                c = ring.from_int(coeff)
                for a in range(r):
                    for b in range(r):
                        block[a][b] = ring.add(block[a][b], ring.mul(c, mat[a][b]))
            for a in range(r):
                for b in range(r):
                    d2[j * r + a][i * r + b] = block[a][b]
    rank1 = linalg.smat_rank(ring, d1)
    rank2 = linalg.smat_rank(ring, d2)
    dim_h0 = r - rank1
    dim_h1 = n * r - rank1 - rank2
    return dim_h0, dim_h1


# -- presentation builders --------------------------------------------------


def build_orbifold(genus, weights):
    """Orbifold group of a genus-g surface with cone points of orders mu_j.

    Generators x_1, y_1, .., x_g, y_g, z_1, .., z_s; relators
    [x_1,y_1]..[x_g,y_g] z_1..z_s and z_j^{mu_j}.
    """
    if genus < 0:
        raise ValueError("genus must be >= 0")
    weights = list(weights)
    if any(mu < 1 for mu in weights):
        raise ValueError("cone orders must be >= 1")
    names = []
    for i in range(1, genus + 1):
        names.append(f"x{i}")
        names.append(f"y{i}")
    s = len(weights)
    for j in range(1, s + 1):
        names.append(f"z{j}")
    surface = ()
    for i in range(genus):
        x, y = 2 * i + 1, 2 * i + 2
        surface += commutator(x, y)
    for j in range(s):
        surface += (2 * genus + j + 1,)
    relators = [surface]
    for j, mu in enumerate(weights):
        relators.append(tuple([2 * genus + j + 1] * mu))
    return Presentation(names, relators)


def build_weighted_raag(nverts, edges, names=None):
    """Weighted right-angled Artin group: relators [a_i, a_j]^weight.

    edges lists (i, j, weight) with 1-based vertex indices and weight >= 1;
    weight 1 is a plain commuting relation.
    """
    if names is None:
        names = [f"a{i}" for i in range(1, nverts + 1)]
    if len(names) != nverts:
        raise ValueError("need one name per vertex")
    relators = []
    for i, j, weight in edges:
        if not (1 <= i <= nverts and 1 <= j <= nverts) or i == j:
            raise ValueError(f"bad edge ({i}, {j})")
        if weight < 1:
            raise ValueError("edge weights must be >= 1")
        relators.append(commutator(i, j) * weight)
    return Presentation(names, relators)


def build_product(pres_a, pres_b):
    """Presentation of the direct product: both sets of relators plus
    commutators between the two generator families."""
    used = set(pres_a.names)
    names = list(pres_a.names)
    for name in pres_b.names:
        new = name
        while new in used:
            new = new + "'"
        used.add(new)
        names.append(new)
    shift = pres_a.ngens
    relators = [tuple(rel) for rel in pres_a.relators]
    for rel in pres_b.relators:
        relators.append(
            tuple(letter + shift if letter > 0 else letter - shift for letter in rel)
        )
    for i in range(1, pres_a.ngens + 1):
        for j in range(1, pres_b.ngens + 1):
            relators.append(commutator(i, j + shift))
    return Presentation(names, relators)


# -- finite quotients and their regular representations ---------------------


def _perm_mul(p, q):
    """(p o q)(x) = p(q(x)); matches matrix-product order for P(p) P(q)."""
    return tuple(p[x] for x in q)


def _perm_inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def permutation_sign(p):
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def closure_size(perms, max_size=None):
    return len(_closure(perms, max_size))


def _closure(perms, max_size=None):
    if max_size is None:
        max_size = int(os.environ.get("TROPLEX_MAX_QUOTIENT", DEFAULT_MAX_QUOTIENT))
    degree = len(perms[0])
    if any(len(p) != degree for p in perms):
        raise ValueError("permutations must share one degree")
    if any(sorted(p) != list(range(degree)) for p in perms):
        raise ValueError("not a permutation (0-based images expected)")
    identity = tuple(range(degree))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for p in perms:
                h = _perm_mul(p, g)
                if h not in elements:
                    elements.add(h)
                    nxt.append(h)
                    if len(elements) > max_size:
                        raise ValueError(
                            f"quotient group exceeds {max_size} elements "
                            "(raise TROPLEX_MAX_QUOTIENT to allow more)"
                        )
        frontier = nxt
    return sorted(elements)


def regular_representation(pres, perms, ring=ZZ, max_size=None):
    """Left regular representation of the finite quotient generated by perms.

    perms gives one 0-based permutation tuple per generator of pres; the
    assignment must kill every relator.  The result is a Representation by
    |Q| x |Q| permutation matrices over ring.
    """
    if len(perms) != pres.ngens:
        raise ValueError("need one permutation per generator")
    perms = [tuple(p) for p in perms]
    degree = len(perms[0])
    if any(sorted(p) != list(range(degree)) for p in perms):
        raise ValueError("not a permutation (0-based images expected)")
    inv = {i + 1: perms[i] for i in range(len(perms))}
    for i, p in enumerate(perms):
        inv[-(i + 1)] = _perm_inv(p)
    identity = tuple(range(len(perms[0])))
    for rel in pres.relators:
        acc = identity
        for letter in rel:
            acc = _perm_mul(acc, inv[letter])
        if acc != identity:
            raise ValueError("permutations do not satisfy the relators")
    elements = _closure(perms, max_size)
    position = {g: k for k, g in enumerate(elements)}
    size = len(elements)
    mats = []
    for p in perms:
        mat = [[ring.zero()] * size for _ in range(size)]
        for b, g in enumerate(elements):
            a = position[_perm_mul(p, g)]
            mat[a][b] = ring.one()
        mats.append(mat)
    return Representation(ring, mats)
