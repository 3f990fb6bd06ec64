"""The representation catalog: Burau, LKB, and the local families.

Every representation is a total map from the generators of one of the
presentations to exact matrices over a declared ring.  The dimension-3
families of TVB_2 (zeta1..zeta8) and of STVB_2 (eta1..eta13) and the
homogeneous dimension-(n+1) families of TVB_n (zetap1..zetap7) are built
from their published 2x2 blocks; Burau and LKB are built over Laurent rings.

The zetap1..zetap4 blocks contain square roots of a parameter ratio in their
published form.  They are constructed here radical-free: with free nonzero
parameters (c, s) and b defined as s^2*c, the ratio sqrt(b/c) equals s
exactly.  Both square-root sign branches are exposed via ``branch=+1/-1``.

Constructing a family with concrete parameters validates its published
domain constraints and raises ``FamilyConstraintError`` naming the violated
inequality.  Symbolic construction (no bindings) works over the fraction
field in the family parameters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .matrices import Matrix, NonInvertibleError, block_embed
from .presentations import (
    GAMMA, RHO, SIGMA, TAU, TAU_BAR, Generator, MonoidInverseError,
    Presentation, build_presentation, gamma, rho, sigma, tau, word_to_json,
)
from .rings import QQ, Element, FractionField, LaurentRing, Ring

__all__ = [
    "Representation", "RelationCheck", "RelationReport", "Family",
    "FamilyConstraintError", "FAMILY_IDS", "ZETA_IDS", "ZETAP_IDS", "ETA_IDS",
    "DIM3_FAMILY_IDS", "family", "build_family", "sample_bindings",
    "rep_burau", "rep_lkb", "rep_zeta", "rep_zeta_prime", "rep_eta",
]


class FamilyConstraintError(ValueError):
    def __init__(self, family_id, label):
        super().__init__(f"{family_id}: parameter constraint violated: {label}")
        self.family_id = family_id
        self.label = label


@dataclass(frozen=True)
class RelationCheck:
    tag: str
    lhs: tuple
    rhs: tuple
    ok: bool
    difference: Matrix | None

    def to_json(self):
        out = {"tag": self.tag, "lhs": word_to_json(self.lhs),
               "rhs": word_to_json(self.rhs),
               "status": "pass" if self.ok else "fail"}
        if self.difference is not None:
            out["difference"] = self.difference.to_json()
        return out


@dataclass(frozen=True)
class RelationReport:
    checks: tuple

    @property
    def all_pass(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def failing_tags(self):
        return sorted({c.tag for c in self.checks if not c.ok})

    def to_json(self):
        return [c.to_json() for c in self.checks]


class Representation:
    """A map generator -> matrix over one ring, tied to a presentation."""

    def __init__(self, presentation, ring, dim, images, verify_images=True):
        self.presentation = presentation
        self.ring = ring
        self.dim = dim
        self.images = dict(images)
        self._inverses = {}
        missing = [g for g in presentation.generators if g not in self.images]
        if missing:
            raise ValueError(f"missing images for {missing}")
        for g, m in self.images.items():
            if m.ring != ring or m.dim != dim:
                raise ValueError(f"image of {g} has wrong ring or dimension")
        if verify_images:
            for g, m in self.images.items():
                if g.family in presentation.monoid_families:
                    continue
                if not m.det().is_unit:
                    raise NonInvertibleError(
                        f"image of {g} must be invertible (determinant "
                        f"{m.det()})")

    def image(self, gen):
        return self.images[gen]

    def _image_inverse(self, gen):
        got = self._inverses.get(gen)
        if got is None:
            got = self.images[gen].inverse()
            self._inverses[gen] = got
        return got

    def evaluate(self, w):
        """Ordered product of letter images; the empty word gives identity."""
        self.presentation.validate_word(w)
        out = Matrix.identity(self.ring, self.dim)
        for g, e in w:
            out = out * (self.images[g] if e == 1 else self._image_inverse(g))
        return out

    def check_relations(self):
        checks = []
        for rel in self.presentation.relations:
            lhs = self.evaluate(rel.lhs)
            rhs = self.evaluate(rel.rhs)
            ok = lhs == rhs
            checks.append(RelationCheck(rel.tag, rel.lhs, rel.rhs, ok,
                                        None if ok else lhs - rhs))
        return RelationReport(tuple(checks))

    def substitute(self, bindings, ring=None):
        """Instantiate a symbolic representation at parameter values."""
        target = ring if ring is not None else QQ
        images = {
            g: Matrix(target, [[v.substitute(bindings, target) for v in row]
                               for row in m.rows])
            for g, m in self.images.items()
        }
        return Representation(self.presentation, target, self.dim, images,
                              verify_images=False)

    def to_json(self):
        return {
            "presentation": self.presentation.to_json(),
            "ring": self.ring.descriptor(),
            "dim": self.dim,
            "images": {str(g): m.to_json() for g, m in self.images.items()},
        }

    @staticmethod
    def from_json(obj, verify_images=False):
        pres = Presentation.from_json(obj["presentation"])
        ring = Ring.from_descriptor(obj["ring"])
        images = {Generator.parse(name): Matrix.from_json(m)
                  for name, m in obj["images"].items()}
        return Representation(pres, ring, obj["dim"], images,
                              verify_images=verify_images)


# ---------------------------------------------------------------------------
# the catalog families

@dataclass(frozen=True)
class Family:
    family_id: str
    kind: str              # "zeta" | "zetap" | "eta"
    structure: str
    params: tuple
    constraints: tuple     # (label, fn(bind) -> Element)
    blocks: object         # fn(bind) -> {"sigma": rows, "rho": rows, ...}


def _i2(one):
    zero = one - one
    return [[one, zero], [zero, one]]


def _zeta_blocks_1(b):
    bb, d, x = b["b"], b["d"], b["x"]
    one = x.ring.one
    return {"sigma": [[d, bb], [bb / (x * x), d]],
            "rho": [[0 * one, x], [one / x, 0 * one]],
            "gamma": [[-one, 0 * one], [0 * one, one]]}


def _zeta_blocks_2(b):
    bb, d, w, x = b["b"], b["d"], b["w"], b["x"]
    one = x.ring.one
    return {"sigma": [[(2 * bb * w + d * x) / x, bb],
                      [(bb - bb * w * w) / (x * x), d]],
            "rho": [[w, x], [(one - w * w) / x, -w]],
            "gamma": _i2(one)}


def _zeta_blocks_34(b, rho_sign):
    one = b["a"].ring.one
    return {"sigma": [[b["a"], b["b"]], [b["c"], b["d"]]],
            "rho": [[rho_sign * one, 0 * one], [0 * one, rho_sign * one]],
            "gamma": _i2(one)}


def _zeta_blocks_56(b, which):
    a, c, d = b["a"], b["c"], b["d"]
    one = a.ring.one
    if which == 5:
        rho_rows = [[-one, 0 * one], [(2 * c) / (d - a), one]]
    else:
        rho_rows = [[one, 0 * one], [(2 * c) / (a - d), -one]]
    return {"sigma": [[a, 0 * one], [c, d]], "rho": rho_rows,
            "gamma": _i2(one)}


def _zeta_blocks_78(b, which):
    d, y = b["d"], b["y"]
    one = d.ring.one
    if which == 7:
        rho_rows = [[one, 0 * one], [y, -one]]
    else:
        rho_rows = [[-one, 0 * one], [y, one]]
    return {"sigma": [[d, 0 * one], [0 * one, d]], "rho": rho_rows,
            "gamma": _i2(one)}


def _eta_blocks_1(b):
    a, bb, x, f, g = (b[k] for k in ("a", "b", "x", "f", "g"))
    one = x.ring.one
    return {"sigma": [[a, bb], [bb / (x * x), a]],
            "rho": [[0 * one, x], [one / x, 0 * one]],
            "tau": [[f, g], [g / (x * x), f]],
            "gamma": [[-one, 0 * one], [0 * one, one]]}


def _eta_blocks_2(b):
    a, bb, x, z, f, g = (b[k] for k in ("a", "b", "x", "z", "f", "g"))
    one = x.ring.one
    return {"sigma": [[a, bb],
                      [(bb - bb * z * z) / (x * x), (a * x + 2 * bb * z) / x]],
            "rho": [[-z, x], [(one - z * z) / x, z]],
            "tau": [[f, g],
                    [(g - g * z * z) / (x * x), (f * x + 2 * g * z) / x]],
            "gamma": _i2(one)}


def _eta_blocks_34(b, rho_sign):
    a, bb, c, d, f, g = (b[k] for k in ("a", "b", "c", "d", "f", "g"))
    one = a.ring.one
    return {"sigma": [[a, bb], [c, d]],
            "rho": [[rho_sign * one, 0 * one], [0 * one, rho_sign * one]],
            "tau": [[f, g], [c * g / bb, (bb * f - a * g + d * g) / bb]],
            "gamma": _i2(one)}


def _eta_blocks_59(b, rho_sign):
    a, f, g, h, k = (b[k] for k in ("a", "f", "g", "h", "k"))
    one = a.ring.one
    return {"sigma": [[a, 0 * one], [0 * one, a]],
            "rho": [[rho_sign * one, 0 * one], [0 * one, rho_sign * one]],
            "tau": [[f, g], [h, k]], "gamma": _i2(one)}


def _eta_blocks_610(b, rho_sign):
    a, c, d, f, h = (b[k] for k in ("a", "c", "d", "f", "h"))
    one = a.ring.one
    return {"sigma": [[a, 0 * one], [c, d]],
            "rho": [[rho_sign * one, 0 * one], [0 * one, rho_sign * one]],
            "tau": [[f, 0 * one], [h, (c * f - a * h + d * h) / c]],
            "gamma": _i2(one)}


def _eta_blocks_78(b, which):
    a, c, y, f, h = (b[k] for k in ("a", "c", "y", "f", "h"))
    one = a.ring.one
    if which == 7:
        rho_rows = [[one, 0 * one], [y, -one]]
        s22 = (a * y - 2 * c) / y
        t22 = (f * y - 2 * h) / y
    else:
        rho_rows = [[-one, 0 * one], [y, one]]
        s22 = (a * y + 2 * c) / y
        t22 = (f * y + 2 * h) / y
    return {"sigma": [[a, 0 * one], [c, s22]], "rho": rho_rows,
            "tau": [[f, 0 * one], [h, t22]], "gamma": _i2(one)}


def _eta_blocks_111213(b, which):
    a, d, f, k = (b[k2] for k2 in ("a", "d", "f", "k"))
    one = a.ring.one
    if which == 11:
        rho_rows = [[one, 0 * one], [0 * one, -one]]
    elif which == 12:
        rho_rows = [[-one, 0 * one], [0 * one, one]]
    else:
        rho_rows = _i2(one)
    return {"sigma": [[a, 0 * one], [0 * one, d]], "rho": rho_rows,
            "tau": [[f, 0 * one], [0 * one, k]], "gamma": _i2(one)}


def _zetap_blocks(which, b, branch):
    one = (b["c"].ring.one if which <= 4 else
           b["x"].ring.one if which <= 6 else QQ.one)
    zero = 0 * one
    if which <= 4:
        c, s = b["c"], b["s"]
        t = s if branch == 1 else -s
        bb = s * s * c
        sig = [[zero, bb], [c, zero]]
        if which in (1, 3):
            rho_rows = [[zero, -t], [-(one / t), zero]]
        else:
            rho_rows = [[zero, t], [one / t, zero]]
        gam = ([[-one, zero], [zero, one]] if which <= 2 else _i2(one))
        return {"sigma": sig, "rho": rho_rows, "gamma": gam}
    if which in (5, 6):
        x = b["x"]
        gam = ([[-one, zero], [zero, one]] if which == 5 else _i2(one))
        return {"sigma": _i2(one), "rho": [[zero, x], [one / x, zero]],
                "gamma": gam}
    return {"sigma": _i2(one), "rho": _i2(one), "gamma": _i2(one)}


def _c(label, fn):
    return (label, fn)


_FAMILIES = {}


def _register(fam):
    _FAMILIES[fam.family_id] = fam


for _spec in [
    Family("zeta1", "zeta", "TVB", ("b", "d", "x"),
           (_c("b^2 - d^2*x^2 != 0",
               lambda b: b["b"] ** 2 - b["d"] ** 2 * b["x"] ** 2),
            _c("x != 0", lambda b: b["x"])),
           _zeta_blocks_1),
    Family("zeta2", "zeta", "TVB", ("b", "d", "w", "x"),
           (_c("(d*x + b*w)^2 - b^2 != 0 (sigma block determinant)",
               lambda b: (b["d"] * b["x"] + b["b"] * b["w"]) ** 2 - b["b"] ** 2),
            _c("x != 0", lambda b: b["x"])),
           _zeta_blocks_2),
    Family("zeta3", "zeta", "TVB", ("a", "b", "c", "d"),
           (_c("a*d - b*c != 0",
               lambda b: b["a"] * b["d"] - b["b"] * b["c"]),),
           lambda b: _zeta_blocks_34(b, -1)),
    Family("zeta4", "zeta", "TVB", ("a", "b", "c", "d"),
           (_c("a*d - b*c != 0",
               lambda b: b["a"] * b["d"] - b["b"] * b["c"]),),
           lambda b: _zeta_blocks_34(b, 1)),
    Family("zeta5", "zeta", "TVB", ("a", "c", "d"),
           (_c("a*d != 0", lambda b: b["a"] * b["d"]),
            _c("a != d", lambda b: b["a"] - b["d"])),
           lambda b: _zeta_blocks_56(b, 5)),
    Family("zeta6", "zeta", "TVB", ("a", "c", "d"),
           (_c("a*d != 0", lambda b: b["a"] * b["d"]),
            _c("a != d", lambda b: b["a"] - b["d"])),
           lambda b: _zeta_blocks_56(b, 6)),
    Family("zeta7", "zeta", "TVB", ("d", "y"),
           (_c("d != 0", lambda b: b["d"]),),
           lambda b: _zeta_blocks_78(b, 7)),
    Family("zeta8", "zeta", "TVB", ("d", "y"),
           (_c("d != 0", lambda b: b["d"]),),
           lambda b: _zeta_blocks_78(b, 8)),
    Family("eta1", "eta", "STVB", ("a", "b", "x", "f", "g"),
           (_c("a^2*x^2 - b^2 != 0",
               lambda b: b["a"] ** 2 * b["x"] ** 2 - b["b"] ** 2),
            _c("x != 0", lambda b: b["x"])),
           _eta_blocks_1),
    Family("eta2", "eta", "STVB", ("a", "b", "x", "z", "f", "g"),
           (_c("a^2*x^2 + 2*a*b*x*z - b^2 + b^2*z^2 != 0",
               lambda b: (b["a"] ** 2 * b["x"] ** 2
                          + 2 * b["a"] * b["b"] * b["x"] * b["z"]
                          - b["b"] ** 2 + b["b"] ** 2 * b["z"] ** 2)),
            _c("x != 0", lambda b: b["x"])),
           _eta_blocks_2),
    Family("eta3", "eta", "STVB", ("a", "b", "c", "d", "f", "g"),
           (_c("a*d - b*c != 0",
               lambda b: b["a"] * b["d"] - b["b"] * b["c"]),
            _c("b != 0", lambda b: b["b"])),
           lambda b: _eta_blocks_34(b, -1)),
    Family("eta4", "eta", "STVB", ("a", "b", "c", "d", "f", "g"),
           (_c("a*d - b*c != 0",
               lambda b: b["a"] * b["d"] - b["b"] * b["c"]),
            _c("b != 0", lambda b: b["b"])),
           lambda b: _eta_blocks_34(b, 1)),
    Family("eta5", "eta", "STVB", ("a", "f", "g", "h", "k"),
           (_c("a != 0", lambda b: b["a"]),),
           lambda b: _eta_blocks_59(b, -1)),
    Family("eta6", "eta", "STVB", ("a", "c", "d", "f", "h"),
           (_c("a*d != 0", lambda b: b["a"] * b["d"]),
            _c("c != 0", lambda b: b["c"])),
           lambda b: _eta_blocks_610(b, -1)),
    Family("eta7", "eta", "STVB", ("a", "c", "y", "f", "h"),
           (_c("a*(a*y - 2*c) != 0",
               lambda b: b["a"] * (b["a"] * b["y"] - 2 * b["c"])),
            _c("y != 0", lambda b: b["y"])),
           lambda b: _eta_blocks_78(b, 7)),
    Family("eta8", "eta", "STVB", ("a", "c", "y", "f", "h"),
           (_c("a*(a*y + 2*c) != 0",
               lambda b: b["a"] * (b["a"] * b["y"] + 2 * b["c"])),
            _c("y != 0", lambda b: b["y"])),
           lambda b: _eta_blocks_78(b, 8)),
    Family("eta9", "eta", "STVB", ("a", "f", "g", "h", "k"),
           (_c("a != 0", lambda b: b["a"]),),
           lambda b: _eta_blocks_59(b, 1)),
    Family("eta10", "eta", "STVB", ("a", "c", "d", "f", "h"),
           (_c("a*d != 0", lambda b: b["a"] * b["d"]),
            _c("c != 0", lambda b: b["c"])),
           lambda b: _eta_blocks_610(b, 1)),
    Family("eta11", "eta", "STVB", ("a", "d", "f", "k"),
           (_c("a*d != 0", lambda b: b["a"] * b["d"]),),
           lambda b: _eta_blocks_111213(b, 11)),
    Family("eta12", "eta", "STVB", ("a", "d", "f", "k"),
           (_c("a*d != 0", lambda b: b["a"] * b["d"]),),
           lambda b: _eta_blocks_111213(b, 12)),
    Family("eta13", "eta", "STVB", ("a", "d", "f", "k"),
           (_c("a*d != 0", lambda b: b["a"] * b["d"]),),
           lambda b: _eta_blocks_111213(b, 13)),
]:
    _register(_spec)

for _k in range(1, 5):
    _register(Family(
        f"zetap{_k}", "zetap", "TVB", ("c", "s"),
        (_c("c != 0", lambda b: b["c"]), _c("s != 0", lambda b: b["s"])),
        _k))
for _k in (5, 6):
    _register(Family(f"zetap{_k}", "zetap", "TVB", ("x",),
                     (_c("x != 0", lambda b: b["x"]),), _k))
_register(Family("zetap7", "zetap", "TVB", (), (), 7))

ZETA_IDS = tuple(f"zeta{i}" for i in range(1, 9))
ZETAP_IDS = tuple(f"zetap{i}" for i in range(1, 8))
ETA_IDS = tuple(f"eta{i}" for i in range(1, 14))
DIM3_FAMILY_IDS = ZETA_IDS + ETA_IDS
FAMILY_IDS = ZETA_IDS + ZETAP_IDS + ETA_IDS


def family(family_id):
    try:
        return _FAMILIES[family_id]
    except KeyError:
        raise ValueError(f"unknown family {family_id!r}") from None


def _resolve_bindings(fam, bindings):
    """Symbolic bindings over the fraction field when none are given."""
    if bindings is None:
        if not fam.params:
            return QQ, {}
        ring = FractionField(fam.params)
        return ring, {p: ring.var(p) for p in fam.params}
    missing = [p for p in fam.params if p not in bindings]
    if missing:
        raise ValueError(f"{fam.family_id}: missing parameters {missing}")
    ring = None
    for v in bindings.values():
        if isinstance(v, Element):
            ring = v.ring
            break
    if ring is None:
        ring = QQ
    fixed = {}
    for p in fam.params:
        v = bindings[p]
        fixed[p] = v if isinstance(v, Element) else ring.scalar(v)
    return ring, fixed


def _check_constraints(fam, bind):
    for label, fn in fam.constraints:
        if fn(bind).is_zero:
            raise FamilyConstraintError(fam.family_id, label)


def _emb(rows, position, total, ring):
    return block_embed(Matrix(ring, rows), position, total)


def build_family(family_id, bindings=None, n=None, branch=1):
    """Construct a catalog representation, symbolic unless bindings given."""
    fam = family(family_id)
    ring, bind = _resolve_bindings(fam, bindings)
    _check_constraints(fam, bind)
    if fam.kind == "zetap":
        if n is None or n < 3:
            raise ValueError("zetap families need a strand count n >= 3")
        if branch not in (1, -1):
            raise ValueError("branch must be +1 or -1")
        blocks = _zetap_blocks(fam.blocks, bind, branch)
        pres = build_presentation("TVB", n)
        dim = n + 1
        images = {}
        for i in range(1, n):
            images[sigma(i)] = _emb(blocks["sigma"], i, dim, ring)
            images[rho(i)] = _emb(blocks["rho"], i, dim, ring)
        for j in range(1, n + 1):
            images[gamma(j)] = _emb(blocks["gamma"], j, dim, ring)
        return Representation(pres, ring, dim, images)
    blocks = fam.blocks(bind)
    pres = build_presentation(fam.structure, 2)
    images = {
        sigma(1): _emb(blocks["sigma"], 1, 3, ring),
        rho(1): _emb(blocks["rho"], 1, 3, ring),
        gamma(1): _emb(blocks["gamma"], 1, 3, ring),
        gamma(2): _emb(blocks["gamma"], 2, 3, ring),
    }
    if fam.structure == "STVB":
        images[tau(1)] = _emb(blocks["tau"], 1, 3, ring)
    return Representation(pres, ring, 3, images)


def rep_zeta(k, bindings=None):
    return build_family(f"zeta{k}", bindings)


def rep_eta(k, bindings=None):
    return build_family(f"eta{k}", bindings)


def rep_zeta_prime(k, n, bindings=None, branch=1):
    return build_family(f"zetap{k}", bindings, n=n, branch=branch)


# Extra genericity demanded of random samples so that classification
# round-trips land on the generating family (eta9 subsumes diagonal
# tau images of eta13 when the sigma block is scalar).
_SAMPLER_RULES = {
    "eta13": lambda b: b["a"] != b["d"],
}


def sample_bindings(family_id, rng: random.Random):
    """Random rational parameters satisfying the family's constraints."""
    fam = family(family_id)
    for _ in range(1000):
        bind = {p: Fraction(rng.choice([n for n in range(-9, 10) if n]),
                            rng.randint(1, 4))
                for p in fam.params}
        rule = _SAMPLER_RULES.get(family_id)
        if rule is not None and not rule(bind):
            continue
        fixed = {p: QQ.scalar(v) for p, v in bind.items()}
        try:
            _check_constraints(fam, fixed)
        except FamilyConstraintError:
            continue
        return bind
    raise RuntimeError(f"could not sample parameters for {family_id}")


# ---------------------------------------------------------------------------
# Burau and LKB

def rep_burau(n):
    """The Burau representation of B_n over Laurent polynomials in t."""
    if n < 2:
        raise ValueError("Burau needs n >= 2")
    ring = LaurentRing(("t",))
    t = ring.var("t")
    one = ring.one
    block = [[one - t, t], [one, 0 * one]]
    pres = build_presentation("B", n)
    images = {sigma(i): _emb(block, i, n, ring) for i in range(1, n)}
    return Representation(pres, ring, n, images)


def lkb_basis(n):
    """Ordered basis index pairs (i, j), i < j, lexicographically."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _lkb_column(n, k, pair, ring):
    """Expansion of the image of basis vector x_{i,j} under sigma_k."""
    t, q = ring.var("t"), ring.var("q")
    one = ring.one
    i, j = pair
    if i == k and j == k + 1:
        return {(k, k + 1): t * q * q}
    if j == k and i < k:
        return {(i, k): one - q, (i, k + 1): q}
    if j == k + 1 and i < k:
        return {(i, k): one, (k, k + 1): t * q ** (k - i + 1) * (q - one)}
    if i == k and j > k + 1:
        return {(k, k + 1): t * q * (q - one), (k + 1, j): q}
    if i == k + 1 and j > k + 1:
        return {(k, j): one, (k + 1, j): one - q}
    if j < k or i > k + 1:
        return {(i, j): one}
    # i < k < k+1 < j
    return {(i, j): one, (k, k + 1): t * q ** (k - i) * (q - one) ** 2}


def rep_lkb(n):
    """The LKB representation of B_n over Laurent polynomials in t, q.

    Dimension n(n-1)/2; column for basis pair (i, j) is the image expansion
    of x_{i,j}.
    """
    if n < 3:
        raise ValueError("LKB needs n >= 3")
    ring = LaurentRing(("t", "q"))
    basis = lkb_basis(n)
    index = {p: m for m, p in enumerate(basis)}
    dim = len(basis)
    zero = ring.zero
    images = {}
    for k in range(1, n):
        cols = [[zero for _ in range(dim)] for _ in range(dim)]
        for pair in basis:
            col = index[pair]
            for target, coef in _lkb_column(n, k, pair, ring).items():
                cols[index[target]][col] = coef
        images[sigma(k)] = Matrix(ring, cols)
    pres = build_presentation("B", n)
    return Representation(pres, ring, dim, images)
