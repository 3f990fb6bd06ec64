"""Polynomial systems behind the dimension-3 classifications, and the
classifier that sends concrete solutions back to catalog families.

``generate_system`` applies every defining relation of TVB_2 (resp. STVB_2)
to the generic local ansatz

    sigma1 block [[a, b], [c, d]],  rho1 block [[w, x], [y, z]],
    gamma1 block [[p, q], [r, s]] (the same block embedded at position 2
    for gamma2), and for STVB_2 a tau1 block [[f, g], [h, k]],

and collects the entrywise differences as polynomial equations, dropping
identically-zero entries and duplicates under canonical polynomial equality.
``verify_family`` substitutes a family's symbolic entries into every
equation and checks that all of them vanish as rational functions.

``classify_solution`` pattern-matches concrete generator images against the
families in the order the classification case split produces them; a match
reports recovered parameters and is only returned when rebuilding the family
from them reproduces the input matrices exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import (
    FamilyConstraintError, Representation, build_family, family,
)
from .matrices import Matrix, ShapeError
from .presentations import build_presentation, gamma, rho, sigma, tau
from .rings import NonUnitError, PolynomialRing

__all__ = [
    "Equation", "PolynomialSystem", "FamilyMatch", "ClassifyResult",
    "TVB_UNKNOWNS", "STVB_UNKNOWNS", "generate_system", "substitute_system",
    "gamma_forcing_report", "published_reduced_equations",
    "sets_equal_up_to_sign", "verify_ansatz", "verify_family",
    "ansatz_bindings_for_family", "classify_solution",
]

TVB_UNKNOWNS = ("a", "b", "c", "d", "w", "x", "y", "z", "p", "q", "r", "s")
STVB_UNKNOWNS = TVB_UNKNOWNS + ("f", "g", "h", "k")

# classification case order: the gamma-nontrivial family first, then the
# rho = I / rho = -I branches, the x != 0 branch, and the x = 0 branches
ZETA_CASE_ORDER = ("zeta1", "zeta4", "zeta3", "zeta2",
                   "zeta5", "zeta6", "zeta7", "zeta8")
ETA_CASE_ORDER = ("eta1", "eta4", "eta9", "eta10", "eta13",
                  "eta3", "eta5", "eta6", "eta2",
                  "eta7", "eta11", "eta8", "eta12")


@dataclass(frozen=True)
class Equation:
    polynomial: object   # Element of the ansatz polynomial ring
    provenance: str

    def to_json(self):
        return {"polynomial": str(self.polynomial), "provenance": self.provenance}


@dataclass(frozen=True)
class PolynomialSystem:
    structure: str
    unknowns: tuple
    equations: tuple

    @property
    def ring(self):
        return self.equations[0].polynomial.ring if self.equations else None

    def to_json(self):
        return [eq.to_json() for eq in self.equations]


def _ansatz_images(ring, structure):
    v = {name: ring.var(name) for name in ring.variables}
    one, zero = ring.one, ring.zero

    def emb1(rows):
        return Matrix(ring, [[rows[0][0], rows[0][1], zero],
                             [rows[1][0], rows[1][1], zero],
                             [zero, zero, one]])

    def emb2(rows):
        return Matrix(ring, [[one, zero, zero],
                             [zero, rows[0][0], rows[0][1]],
                             [zero, rows[1][0], rows[1][1]]])

    images = {
        sigma(1): emb1([[v["a"], v["b"]], [v["c"], v["d"]]]),
        rho(1): emb1([[v["w"], v["x"]], [v["y"], v["z"]]]),
        gamma(1): emb1([[v["p"], v["q"]], [v["r"], v["s"]]]),
        gamma(2): emb2([[v["p"], v["q"]], [v["r"], v["s"]]]),
    }
    if structure == "STVB":
        images[tau(1)] = emb1([[v["f"], v["g"]], [v["h"], v["k"]]])
    return images


def _word_image(images, w, ring):
    out = Matrix.identity(ring, 3)
    for g, e in w:
        if e != 1:
            raise ValueError("relation words here are positive")
        out = out * images[g]
    return out


def generate_system(structure):
    """The classification system for TVB_2 or STVB_2."""
    if structure not in ("TVB", "STVB"):
        raise ValueError("systems are generated for TVB or STVB")
    unknowns = TVB_UNKNOWNS if structure == "TVB" else STVB_UNKNOWNS
    ring = PolynomialRing(unknowns)
    images = _ansatz_images(ring, structure)
    pres = build_presentation(structure, 2)
    equations = []
    seen = set()
    for rel in pres.relations:
        diff = (_word_image(images, rel.lhs, ring)
                - _word_image(images, rel.rhs, ring))
        for row in diff.rows:
            for entry in row:
                if entry.is_zero:
                    continue
                key = str(entry)
                if key in seen:
                    continue
                seen.add(key)
                equations.append(Equation(entry, rel.tag))
    return PolynomialSystem(structure, unknowns, tuple(equations))


def substitute_system(system, bindings):
    """Substitute values for some unknowns; zero and duplicate equations are
    dropped, provenances kept from first occurrence."""
    equations = []
    seen = set()
    for eq in system.equations:
        poly = eq.polynomial.substitute(bindings)
        if poly.is_zero:
            continue
        key = str(poly)
        if key in seen:
            continue
        seen.add(key)
        equations.append(Equation(poly, eq.provenance))
    return PolynomialSystem(system.structure, system.unknowns, tuple(equations))


def _support(poly):
    names = poly.ring.variables
    out = set()
    for exp in poly.data:
        for name, e in zip(names, exp):
            if e:
                out.add(name)
    return out


def gamma_forcing_report(system):
    """Check that the subsystem in p, q, r, s alone syntactically forces
    q = 0, r = 0 and s = 1 (monomial equations force vanishing; a linear
    equation in s alone forces its root)."""
    sub = [eq for eq in system.equations
           if _support(eq.polynomial) <= {"p", "q", "r", "s"}]
    forced = {"q": False, "r": False, "s": False}
    for eq in sub:
        poly = eq.polynomial
        support = _support(poly)
        if len(poly.data) == 1 and len(support) == 1:
            name = support.pop()
            if name in ("q", "r"):
                forced[name] = True
        if support == {"s"}:
            s_exps = [exp for exp in poly.data]
            names = poly.ring.variables
            si = names.index("s")
            if all(exp[si] <= 1 for exp in s_exps):
                lin = {e[si]: c for e, c in poly.data.items()}
                alpha = lin.get(1)
                beta = lin.get(0, 0)
                if alpha and -beta / alpha == 1:
                    forced["s"] = True
    return {"subsystem_size": len(sub),
            "q_forced_zero": forced["q"],
            "r_forced_zero": forced["r"],
            "s_forced_one": forced["s"]}


def published_reduced_equations(ring):
    """The eleven equations of the reduced TVB_2 system in standard form."""
    v = {name: ring.var(name) for name in ring.variables}
    a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    w, x, y, z = v["w"], v["x"], v["y"], v["z"]
    p = v["p"]
    one = ring.one
    return [
        w * w + x * y - one,
        x * (w + z),
        y * (w + z),
        z * z + x * y - one,
        p * p - one,
        w * (one - p),
        z * (one - p),
        -a * p * p + w * (a * w + c * x) + (b * w + d * x) * y,
        -b * p * p + x * (a * w + c * x) + (b * w + d * x) * z,
        -c * p * p + w * (a * y + c * z) + y * (b * y + d * z),
        -d * p * p + x * (a * y + c * z) + z * (b * y + d * z),
    ]


def sets_equal_up_to_sign(polys_a, polys_b):
    """Order-independent set comparison, identifying each p with -p."""
    def canon(p):
        return min(str(p), str(-p))
    return ({canon(p) for p in polys_a} == {canon(p) for p in polys_b}
            and len(polys_a) == len(polys_b))


def _blocks_of(rep_images):
    def block1(m):
        return [[m.entry(0, 0), m.entry(0, 1)], [m.entry(1, 0), m.entry(1, 1)]]

    def block2(m):
        return [[m.entry(1, 1), m.entry(1, 2)], [m.entry(2, 1), m.entry(2, 2)]]

    out = {"sigma": block1(rep_images[sigma(1)]),
           "rho": block1(rep_images[rho(1)]),
           "gamma1": block1(rep_images[gamma(1)]),
           "gamma2": block2(rep_images[gamma(2)])}
    if tau(1) in rep_images:
        out["tau"] = block1(rep_images[tau(1)])
    return out


def ansatz_bindings_for_family(family_id):
    """The ansatz unknowns as rational functions of the family parameters."""
    rep = build_family(family_id, None)
    blocks = _blocks_of(rep.images)
    s_b, r_b, g_b = blocks["sigma"], blocks["rho"], blocks["gamma1"]
    bind = {
        "a": s_b[0][0], "b": s_b[0][1], "c": s_b[1][0], "d": s_b[1][1],
        "w": r_b[0][0], "x": r_b[0][1], "y": r_b[1][0], "z": r_b[1][1],
        "p": g_b[0][0], "q": g_b[0][1], "r": g_b[1][0], "s": g_b[1][1],
    }
    if "tau" in blocks:
        t_b = blocks["tau"]
        bind.update({"f": t_b[0][0], "g": t_b[0][1],
                     "h": t_b[1][0], "k": t_b[1][1]})
    return bind, rep.ring


def verify_ansatz(system, bindings, ring):
    """Substitute values for every ansatz unknown into every equation.

    Returns (all_vanish, failing) where failing lists (provenance, equation).
    """
    failing = []
    for eq in system.equations:
        value = eq.polynomial.substitute(bindings, ring)
        if not value.is_zero:
            failing.append((eq.provenance, str(eq.polynomial)))
    return (not failing, failing)


def verify_family(system, family_id):
    """True iff the family's symbolic entries annul every system equation."""
    fam = family(family_id)
    expected = "TVB" if fam.kind == "zeta" else "STVB"
    if fam.kind == "zetap" or system.structure != expected:
        raise ValueError(f"{family_id} does not target the {system.structure}"
                         " system")
    bindings, ring = ansatz_bindings_for_family(family_id)
    ok, _ = verify_ansatz(system, bindings, ring)
    return ok


# parameter read-off per family; full validation happens by rebuilding
_RECOVERY = {
    "zeta1": lambda B: {"b": B["sigma"][0][1], "d": B["sigma"][0][0],
                        "x": B["rho"][0][1]},
    "zeta2": lambda B: {"b": B["sigma"][0][1], "d": B["sigma"][1][1],
                        "w": B["rho"][0][0], "x": B["rho"][0][1]},
    "zeta3": lambda B: {"a": B["sigma"][0][0], "b": B["sigma"][0][1],
                        "c": B["sigma"][1][0], "d": B["sigma"][1][1]},
    "zeta5": lambda B: {"a": B["sigma"][0][0], "c": B["sigma"][1][0],
                        "d": B["sigma"][1][1]},
    "zeta7": lambda B: {"d": B["sigma"][0][0], "y": B["rho"][1][0]},
    "eta1": lambda B: {"a": B["sigma"][0][0], "b": B["sigma"][0][1],
                       "x": B["rho"][0][1], "f": B["tau"][0][0],
                       "g": B["tau"][0][1]},
    "eta2": lambda B: {"a": B["sigma"][0][0], "b": B["sigma"][0][1],
                       "x": B["rho"][0][1], "z": B["rho"][1][1],
                       "f": B["tau"][0][0], "g": B["tau"][0][1]},
    "eta3": lambda B: {"a": B["sigma"][0][0], "b": B["sigma"][0][1],
                       "c": B["sigma"][1][0], "d": B["sigma"][1][1],
                       "f": B["tau"][0][0], "g": B["tau"][0][1]},
    "eta5": lambda B: {"a": B["sigma"][0][0], "f": B["tau"][0][0],
                       "g": B["tau"][0][1], "h": B["tau"][1][0],
                       "k": B["tau"][1][1]},
    "eta6": lambda B: {"a": B["sigma"][0][0], "c": B["sigma"][1][0],
                       "d": B["sigma"][1][1], "f": B["tau"][0][0],
                       "h": B["tau"][1][0]},
    "eta7": lambda B: {"a": B["sigma"][0][0], "c": B["sigma"][1][0],
                       "y": B["rho"][1][0], "f": B["tau"][0][0],
                       "h": B["tau"][1][0]},
    "eta11": lambda B: {"a": B["sigma"][0][0], "d": B["sigma"][1][1],
                        "f": B["tau"][0][0], "k": B["tau"][1][1]},
}
for _alias, _base in (("zeta4", "zeta3"), ("zeta6", "zeta5"),
                      ("zeta8", "zeta7"), ("eta4", "eta3"),
                      ("eta9", "eta5"), ("eta8", "eta7"),
                      ("eta10", "eta6"), ("eta12", "eta11"),
                      ("eta13", "eta11")):
    _RECOVERY[_alias] = _RECOVERY[_base]


@dataclass(frozen=True)
class FamilyMatch:
    family_id: str
    bindings: dict
    residual: bool

    def to_json(self):
        return {"family": self.family_id,
                "bindings": {k: str(v) for k, v in self.bindings.items()},
                "residual": self.residual}


@dataclass(frozen=True)
class ClassifyResult:
    primary: FamilyMatch | None
    all_matches: tuple
    failing_relations: tuple

    def to_json(self):
        return {
            "family": None if self.primary is None else self.primary.family_id,
            "bindings": (None if self.primary is None
                         else {k: str(v)
                               for k, v in self.primary.bindings.items()}),
            "all_matches": [m.family_id for m in self.all_matches],
            "failing_relations": list(self.failing_relations),
        }


def _check_local_shape(images, structure):
    pres = build_presentation(structure, 2)
    for g in pres.generators:
        if g not in images:
            raise ShapeError(f"missing image for {g}")
        m = images[g]
        if m.dim != 3:
            raise ShapeError(f"image of {g} is not 3x3")
        if not m.ring.is_field:
            raise ShapeError("classification expects entries in a field")
        if g == gamma(2):
            fixed = [(0, 1), (0, 2), (1, 0), (2, 0)]
            corner = (0, 0)
        else:
            fixed = [(0, 2), (1, 2), (2, 0), (2, 1)]
            corner = (2, 2)
        if any(not m.entry(i, j).is_zero for i, j in fixed):
            raise ShapeError(f"image of {g} is not in local block form")
        if m.entry(*corner) != m.ring.one:
            raise ShapeError(f"image of {g} is not in local block form")
    return pres


def _try_family(family_id, blocks, images):
    recover = _RECOVERY[family_id]
    try:
        bindings = recover(blocks)
    except KeyError:
        return None
    try:
        rebuilt = build_family(family_id, bindings)
    except (FamilyConstraintError, NonUnitError, ZeroDivisionError):
        return None
    if all(rebuilt.images[g] == images[g] for g in rebuilt.images):
        return FamilyMatch(family_id, bindings, True)
    return None


def classify_solution(images, structure):
    """Match concrete local generator images against the catalog families.

    ``images`` maps the TVB_2 / STVB_2 generators to 3x3 matrices over a
    field.  Inputs that fail some defining relation are not classified; the
    failing relation tags are reported instead.
    """
    pres = _check_local_shape(images, structure)
    ring = images[sigma(1)].ring
    rep = Representation(pres, ring, 3, images, verify_images=False)
    report = rep.check_relations()
    if not report.all_pass:
        return ClassifyResult(None, (), tuple(report.failing_tags()))
    blocks = _blocks_of(images)
    order = ZETA_CASE_ORDER if structure == "TVB" else ETA_CASE_ORDER
    matches = []
    for family_id in order:
        got = _try_family(family_id, blocks, images)
        if got is not None:
            matches.append(got)
    if not matches:
        return ClassifyResult(None, (), ())
    return ClassifyResult(matches[0], tuple(matches), ())
