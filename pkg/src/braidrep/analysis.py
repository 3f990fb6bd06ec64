"""Faithfulness and reducibility analysis of catalog representations.

Witness pairs: each catalog family comes with a designated pair of words
with provably equal images (a pair of distinct group/monoid elements that
the representation cannot separate).  ``equal_image_witness`` verifies the
equality exactly and can search the catalog for a *separating* representation
certifying that the two words really are distinct elements; the word problem
itself is out of scope, so a witness without a separating certificate stays
"uncertified".

Reducibility: every local representation here fixes the line of the last
standard basis vector, so the top-left block of each image is a composition
factor.  For the dimension-3 families the block factors are 2x2 and a common
invariant line is searched for exactly over the working field; verdicts are
field-relative (no algebraic extensions are taken).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .catalog import (
    DIM3_FAMILY_IDS, ETA_IDS, ZETA_IDS, ZETAP_IDS, Representation,
    build_family, family, sample_bindings,
)
from .matrices import Line, Matrix, ShapeError, common_invariant_line
from .presentations import (
    EMPTY_WORD, GAMMA, SIGMA, build_presentation, gamma, rho, sigma, word,
    word_to_json,
)
from .rings import QQ

__all__ = [
    "WitnessReport", "ReducibilityReport", "equal_image_witness",
    "kernel_generators", "designated_witness", "unfaithfulness_audit",
    "reducibility_audit", "restriction_to_braid", "braid_restriction_report",
]


@dataclass(frozen=True)
class WitnessReport:
    theorem_tag: str
    word_a: tuple
    word_b: tuple
    images_equal: bool
    separating_rep: tuple | None   # (family_id, bindings) or None

    def to_json(self):
        out = {"theorem": self.theorem_tag,
               "word_a": word_to_json(self.word_a),
               "word_b": word_to_json(self.word_b),
               "images_equal": self.images_equal,
               "separating_rep": None}
        if self.separating_rep is not None:
            fid, bindings = self.separating_rep
            out["separating_rep"] = {
                "family": fid,
                "bindings": {k: str(v) for k, v in bindings.items()}}
        return out


@dataclass(frozen=True)
class ReducibilityReport:
    theorem_tag: str
    preserved_last_axis: bool
    block_factors: tuple
    common_line: Line | None

    def to_json(self):
        return {
            "theorem": self.theorem_tag,
            "preserved_last_axis": self.preserved_last_axis,
            "block_factors": [m.to_json() for m in self.block_factors],
            "common_line": (None if self.common_line is None
                            else self.common_line.to_json()),
        }


def _same_structure_families(structure):
    if structure == "TVB":
        return ZETA_IDS
    if structure == "STVB":
        return ETA_IDS
    return ()


def find_separating_representation(structure, w1, w2, rng=None, samples=12):
    """A catalog representation under which the two words have different
    images, or None if the sampled catalog cannot tell them apart."""
    rng = rng if rng is not None else random.Random(0)
    for family_id in _same_structure_families(structure):
        for _ in range(samples):
            bindings = sample_bindings(family_id, rng)
            rep = build_family(family_id, bindings)
            try:
                if rep.evaluate(w1) != rep.evaluate(w2):
                    return (family_id, bindings)
            except Exception:
                continue
    return None


def equal_image_witness(rep, w1, w2, search_separating=False, rng=None):
    """Exact image comparison of two words, optionally with a catalog search
    for a separating certificate when the images coincide."""
    rep.presentation.validate_word(w1)
    rep.presentation.validate_word(w2)
    equal = rep.evaluate(w1) == rep.evaluate(w2)
    separating = None
    if equal and search_separating:
        separating = find_separating_representation(
            rep.presentation.structure, w1, w2, rng=rng)
    return WitnessReport("", w1, w2, equal, separating)


def kernel_generators(rep):
    """Generators whose image is exactly the identity matrix."""
    ident = Matrix.identity(rep.ring, rep.dim)
    return [g for g in rep.presentation.generators if rep.images[g] == ident]


def designated_witness(family_id):
    """The unfaithfulness witness pair attached to each catalog family."""
    fam = family(family_id)
    if family_id in ("zeta1", "eta1"):
        pair = (word(sigma(1), rho(1)), word(rho(1), sigma(1)))
    elif family_id in ("zetap1", "zetap2"):
        pair = (word(gamma(1), sigma(1), gamma(2)),
                word(gamma(2), sigma(1), gamma(1)))
    elif family_id == "zetap5":
        pair = (word(sigma(1)), EMPTY_WORD)
    else:
        pair = (word(gamma(1)), EMPTY_WORD)
    if fam.kind == "zeta":
        tag = "3.2"
    elif fam.kind == "zetap":
        tag = "3.5"
    else:
        tag = "4.2"
    return pair[0], pair[1], tag


def unfaithfulness_audit(family_id, bindings=None, n=None, branch=1,
                         search_separating=False, rng=None):
    """Verify the family's designated witness pair has equal images."""
    fam = family(family_id)
    if fam.kind == "zetap" and n is None:
        n = 3
    rep = build_family(family_id, bindings, n=n, branch=branch)
    w1, w2, tag = designated_witness(family_id)
    report = equal_image_witness(rep, w1, w2,
                                 search_separating=search_separating, rng=rng)
    return WitnessReport(tag, report.word_a, report.word_b,
                         report.images_equal, report.separating_rep)


def _fixes_last_axis(matrix):
    last = matrix.dim - 1
    if matrix.rows[last][last].is_zero:
        return False
    return all(matrix.rows[i][last].is_zero for i in range(last))


def reducibility_audit(rep):
    """Last-axis preservation, composition-factor blocks, and (for block
    size 2) the common-invariant-line verdict over the working field."""
    if rep.dim < 2:
        raise ShapeError("reducibility audit needs dimension >= 2")
    tag = "4.3" if rep.presentation.structure in ("STVB", "STVG") else "3.3"
    gens = list(rep.presentation.generators)
    mats = [rep.images[g] for g in gens]
    preserved = all(_fixes_last_axis(m) for m in mats)
    if not preserved:
        return ReducibilityReport(tag, False, (), None)
    blocks = tuple(
        Matrix(rep.ring, [row[:-1] for row in m.rows[:-1]]) for m in mats)
    line = None
    if blocks and blocks[0].dim == 2:
        line = common_invariant_line(list(blocks), ring=rep.ring)
    return ReducibilityReport(tag, True, blocks, line)


def restriction_to_braid(rep):
    """Forget everything but the sigma images; a representation of B_n."""
    n = rep.presentation.n
    pres = build_presentation("B", n)
    images = {g: rep.images[g] for g in pres.generators}
    return Representation(pres, rep.ring, rep.dim, images,
                          verify_images=False)


def braid_restriction_report(family_id, n, bindings=None, branch=1):
    """The degree-n irreducibility hook for the antidiagonal zetap families.

    Restricting to the braid subgroup, the n x n composition factor is
    irreducible exactly when b*c != 1; this criterion is recorded (with
    b = s^2*c under the radical-free parameters) and the restriction is
    relation-checked, but irreducibility itself is cited, not recomputed.
    """
    fam = family(family_id)
    if fam.kind != "zetap" or fam.blocks > 4:
        raise ValueError("the braid restriction hook covers zetap1..zetap4")
    rep = build_family(family_id, bindings, n=n, branch=branch)
    restricted = restriction_to_braid(rep)
    report = restricted.check_relations()
    if bindings is None:
        ring = rep.ring
        c, s = ring.var("c"), ring.var("s")
    else:
        ring = rep.ring
        c = bindings["c"] if hasattr(bindings["c"], "ring") else QQ.scalar(bindings["c"])
        s = bindings["s"] if hasattr(bindings["s"], "ring") else QQ.scalar(bindings["s"])
    bc = (s * s * c) * c
    bc_is_one = (bc - 1).is_zero
    return {
        "family": family_id,
        "n": n,
        "restriction_passes": report.all_pass,
        "bc": bc,
        "bc_is_one": bc_is_one,
        "not_further_reducible_cited": None if bc_is_one else True,
        "criterion": "degree-n factor irreducible iff b*c != 1 (cited)",
    }
