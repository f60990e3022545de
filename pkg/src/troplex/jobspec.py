"""Job documents: a single JSON file describing a presentation plus
optional representations, characters, and coefficient settings.

Validated against the bundled schema before any computation; unknown
fields are rejected so typos fail loudly instead of being ignored.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

import jsonschema

from . import fpgroup
from .rings import GF, QQ, TRIVIAL, ZZ, padic, ring_from_tag


class JobError(ValueError):
    """Bad input document (schema violation or inconsistent contents)."""


def _load_schema():
    with resources.files("troplex.data").joinpath("schema.json").open("rb") as fh:
        return json.load(fh)


_SCHEMA = None


def validate_document(doc):
    global _SCHEMA
    if _SCHEMA is None:
        _SCHEMA = _load_schema()
    try:
        jsonschema.validate(doc, _SCHEMA)
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path) or "(root)"
        raise JobError(f"invalid job document at {path}: {e.message}") from None


def _parse_entry(ring, x):
    """Matrix entries are JSON integers or strings like "3" or "-1/3"."""
    if isinstance(x, int):
        return ring.check(Fraction(x) if ring.kind == "Q" else x)
    if isinstance(x, str):
        try:
            val = Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise JobError(f"bad matrix entry {x!r}") from None
        if ring.kind == "Q":
            return val
        if val.denominator != 1:
            raise JobError(f"entry {x!r} is not an element of {ring!r}")
        return ring.check(int(val))
    raise JobError(f"bad matrix entry {x!r}")


class RepSpec:
    """Deferred representation: built against a presentation on demand."""

    def __init__(self, name, block):
        self.name = name
        self.block = block
        keys = [k for k in ("trivial", "matrices", "permutations") if k in block]
        if len(keys) != 1:
            raise JobError(
                f"representation {name!r} needs exactly one of "
                "trivial/matrices/permutations"
            )
        self.kind = keys[0]
        if self.kind == "trivial" and not block["trivial"]:
            raise JobError(f"representation {name!r}: trivial must be true")

    def ring(self):
        return ring_from_tag(self.block.get("ring", "Z"))

    def build(self, pres, max_size=None):
        ring = self.ring()
        if self.kind == "trivial":
            rank = self.block.get("rank", 1)
            return fpgroup.Representation.trivial(ring, pres.ngens, rank=rank)
        if self.kind == "matrices":
            mats = []
            for gname in pres.names:
                if gname not in self.block["matrices"]:
                    raise JobError(
                        f"representation {self.name!r}: no matrix for generator {gname!r}"
                    )
                raw = self.block["matrices"][gname]
                mats.append([[_parse_entry(ring, x) for x in row] for row in raw])
            extra = set(self.block["matrices"]) - set(pres.names)
            if extra:
                raise JobError(
                    f"representation {self.name!r}: matrices for unknown "
                    f"generators {sorted(extra)}"
                )
            return fpgroup.Representation(ring, mats)
        perms = []
        blk = self.block["permutations"]
        for gname in pres.names:
            if gname not in blk:
                raise JobError(
                    f"representation {self.name!r}: no permutation for generator {gname!r}"
                )
            perms.append(tuple(blk[gname]))
        extra = set(blk) - set(pres.names)
        if extra:
            raise JobError(
                f"representation {self.name!r}: permutations for unknown "
                f"generators {sorted(extra)}"
            )
        deg = len(perms[0])
        for p in perms:
            if sorted(p) != list(range(deg)):
                raise JobError(
                    f"representation {self.name!r}: {list(p)} is not a "
                    f"permutation of 0..{deg - 1}"
                )
        return fpgroup.regular_representation(pres, perms, ring=ring, max_size=max_size)


class JobSpec:
    def __init__(self, doc):
        validate_document(doc)
        self.doc = doc
        self.name = doc.get("name", "")
        p = doc["presentation"]
        names = p["generators"]
        try:
            relators = [fpgroup.parse_word(w, names) for w in p["relators"]]
            self.presentation = fpgroup.Presentation(names, relators)
        except ValueError as e:
            raise JobError(str(e)) from None
        self.rep_specs = {
            name: RepSpec(name, block)
            for name, block in doc.get("representations", {}).items()
        }
        self.phi_blocks = doc.get("phis", {})
        self.valuations = doc.get("valuations", [])

    def __eq__(self, other):
        return isinstance(other, JobSpec) and self.doc == other.doc

    def representation(self, name, max_size=None):
        if name not in self.rep_specs:
            known = sorted(self.rep_specs) or ["(none)"]
            raise JobError(
                f"unknown representation {name!r}; document defines {', '.join(known)}"
            )
        try:
            return self.rep_specs[name].build(self.presentation, max_size=max_size)
        except ValueError as e:
            raise JobError(str(e)) from None

    def phi(self, name):
        """A named character lattice map, or 'ab' for the full free
        abelianization."""
        if name == "ab":
            return fpgroup.AbelianEpi.from_abelianization(self.presentation)
        if name not in self.phi_blocks:
            known = sorted(self.phi_blocks) or ["(none)"]
            raise JobError(f"unknown phi {name!r}; document defines {', '.join(known)}")
        blk = self.phi_blocks[name]
        vectors = []
        for gname in self.presentation.names:
            if gname not in blk:
                raise JobError(f"phi {name!r}: no vector for generator {gname!r}")
            vectors.append(tuple(blk[gname]))
        extra = set(blk) - set(self.presentation.names)
        if extra:
            raise JobError(f"phi {name!r}: vectors for unknown generators {sorted(extra)}")
        try:
            return fpgroup.AbelianEpi(self.presentation, vectors)
        except ValueError as e:
            raise JobError(str(e)) from None


def parse_valuation(text):
    """Coefficient-setting strings: 'Z', 'trivial', 'p-adic:P', 'fp:P'.

    Returns ("Z", None), ("field", Valuation), or ("reduce", p) - the last
    meaning: push the representation into F_p, then use the trivial
    valuation there.
    """
    if text == "Z":
        return ("Z", None)
    if text == "trivial":
        return ("field", TRIVIAL)
    if text.startswith("p-adic:"):
        try:
            return ("field", padic(int(text[7:])))
        except ValueError as e:
            raise JobError(str(e)) from None
    if text.startswith("fp:"):
        p = int(text[3:])
        GF(p)  # primality check
        return ("reduce", p)
    raise JobError(f"unknown valuation {text!r} (want Z, trivial, p-adic:P, or fp:P)")


def parse_field(text):
    """Field tags for the obstruction test: 'q' or 'fp:P'."""
    if text in ("q", "Q"):
        return QQ
    if text.startswith("fp:"):
        return GF(int(text[3:]))
    raise JobError(f"unknown field {text!r} (want q or fp:P)")


def load_job(path):
    try:
        with open(path, "rb") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise JobError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise JobError(f"{path} is not valid JSON: {e}") from None
    return JobSpec(doc)


def bundled_path(name):
    """Filesystem path of a bundled example document."""
    return resources.files("troplex.data").joinpath(name)


def presentation_document(name, pres, extra=None):
    """A job document for a presentation built by a generator command."""
    doc = {
        "name": name,
        "presentation": {
            "generators": list(pres.names),
            "relators": [fpgroup.word_to_str(rel, pres.names) for rel in pres.relators],
        },
        "representations": {"trivial": {"ring": "Z", "trivial": True}},
    }
    if extra:
        doc.update(extra)
    validate_document(doc)
    return doc


def dump_document(doc, fh):
    json.dump(doc, fh, indent=2, sort_keys=True)
    fh.write("\n")
