"""One-shot audit: re-verify every cataloged claim and report per-claim
verdicts.

Each entry carries a claim tag (3.1 .. 5.2), a verdict, and details.  A
verdict of ``pass`` means every machine check succeeded and agrees with the
cataloged claim; ``flagged`` means every machine check succeeded but the
computed ground truth disagrees with the claim somewhere, with the
discrepancy documented in the details; ``fail`` means a machine check itself
came out false.

Two documented discrepancies are expected on the reducibility claims:

* zeta2 / eta2: the sigma (and tau) blocks are affine polynomials of the rho
  block, which is a non-scalar involution with rational eigenlines at every
  valid parameter point, so a common invariant line always exists even
  though the claim asserts no further reducibility.
* the degree-1 iff conditions exclude a=d (resp. f=k) although at b=0, a=d,
  c!=0 (resp. g=0, f=k, h!=0) the blocks are lower triangular and share
  span(0, 1).

All sampling is deterministic in the seed; verdicts are seed-independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .analysis import (
    braid_restriction_report, find_separating_representation,
    kernel_generators, reducibility_audit, unfaithfulness_audit,
)
from .catalog import (
    ETA_IDS, ZETA_IDS, ZETAP_IDS, build_family, family, sample_bindings,
)
from .classifier import (
    gamma_forcing_report, generate_system, published_reduced_equations,
    sets_equal_up_to_sign, substitute_system, verify_family,
)
from .extensions import (
    PhiCoefficients, SingularTauError, phi_extend, phi_tau_zeta1,
    promote_to_group, solve_phi_match,
)
from .matrices import line_is_invariant
from .presentations import rho, sigma, tau, word
from .rings import QQ, FractionField

__all__ = ["AuditEntry", "AuditSummary", "run_audit", "AUDIT_TAGS"]

AUDIT_TAGS = ("3.1", "3.2", "3.3", "3.4", "3.5", "3.7",
              "4.1", "4.2", "4.3", "5.1", "5.2")

NOTE_ZETA2 = (
    "documented discrepancy: the zeta2 sigma block equals "
    "(b/x)*rho + ((b*w+d*x)/x)*I, and the rho block is a non-scalar "
    "involution with rational invariant lines at every valid parameter "
    "point, so a common invariant line always exists although the claim "
    "asserts no further reduction to degree 1")
NOTE_ETA2 = (
    "documented discrepancy: the eta2 sigma and tau blocks are affine "
    "polynomials of the rho block, so a common invariant line always "
    "exists although the claim asserts no further reduction to degree 1")
NOTE_IFF_EDGE_33 = (
    "documented iff edge case: at b=0, a=d, c!=0 the zeta3/zeta4 blocks "
    "are lower triangular and share span(0,1) although the claimed iff "
    "condition requires a != d")
NOTE_IFF_EDGE_43 = (
    "documented iff edge case: at g=0, f=k, h!=0 the eta5/eta9 blocks "
    "share span(0,1) although the claimed iff condition requires f != k")
NOTE_NO_SEPARATION = (
    "no separating representation exists in the catalog for this pair: "
    "every cataloged family sends commuting images to sigma1 and rho1, so "
    "distinctness of the witness words stays a cataloged assertion")


@dataclass(frozen=True)
class AuditEntry:
    theorem_tag: str
    claim_summary: str
    verdict: str        # "pass" | "fail" | "flagged"
    details: dict

    def to_json(self):
        return {"theorem_tag": self.theorem_tag,
                "claim_summary": self.claim_summary,
                "verdict": self.verdict, "details": self.details}


@dataclass(frozen=True)
class AuditSummary:
    seed: int
    samples: int
    entries: tuple

    @property
    def any_fail(self):
        return any(e.verdict == "fail" for e in self.entries)

    def counts(self):
        out = {"pass": 0, "fail": 0, "flagged": 0}
        for e in self.entries:
            out[e.verdict] += 1
        return out

    def to_json(self):
        return {"seed": self.seed, "samples": self.samples,
                "counts": self.counts(),
                "entries": [e.to_json() for e in self.entries]}


def _nonzero_fraction(rng):
    return Fraction(rng.choice([n for n in range(-9, 10) if n]),
                    rng.randint(1, 4))


def _family_relation_sweep(ids, rng, samples, n=None, branches=(1,)):
    """Symbolic plus sampled relation checks for a list of families."""
    problems = []
    for family_id in ids:
        fam = family(family_id)
        for branch in (branches if fam.kind == "zetap" else (1,)):
            symbolic = build_family(family_id, None, n=n, branch=branch)
            if not symbolic.check_relations().all_pass:
                problems.append(f"{family_id} branch {branch}: symbolic")
        for _ in range(samples):
            bindings = sample_bindings(family_id, rng)
            rep = build_family(family_id, bindings, n=n)
            if not rep.check_relations().all_pass:
                problems.append(f"{family_id}: sample {bindings}")
    return problems


def _check_3_1(rng, samples):
    problems = _family_relation_sweep(ZETA_IDS, rng, samples)
    system = generate_system("TVB")
    count = len(system.equations)
    for family_id in ZETA_IDS:
        if not verify_family(system, family_id):
            problems.append(f"{family_id}: system verification")
    reduced = substitute_system(system, {"q": 0, "r": 0, "s": 1})
    published = published_reduced_equations(system.ring)
    reduced_match = sets_equal_up_to_sign(
        [eq.polynomial for eq in reduced.equations], published)
    if not reduced_match:
        problems.append("reduced system differs from the published set")
    forcing = gamma_forcing_report(system)
    if not (forcing["q_forced_zero"] and forcing["r_forced_zero"]
            and forcing["s_forced_one"]):
        problems.append("gamma block values not syntactically forced")
    verdict = "fail" if problems else ("pass" if count == 31 else "flagged")
    details = {
        "families_checked": list(ZETA_IDS),
        "raw_equation_count": count,
        "cataloged_equation_count": 31,
        "unknowns": len(system.unknowns),
        "reduced_matches_published_set": reduced_match,
        "gamma_forcing": forcing,
        "problems": problems,
    }
    return AuditEntry(
        "3.1", "eight dimension-3 families satisfy all TVB_2 relations; the "
        "ansatz yields 31 equations in 12 unknowns reducing to the published "
        "eleven", verdict, details)


def _check_3_2(rng, samples):
    problems = []
    for family_id in ZETA_IDS:
        report = unfaithfulness_audit(family_id)
        if not report.images_equal:
            problems.append(f"{family_id}: witness images differ")
        for _ in range(max(1, samples // 5)):
            sampled = unfaithfulness_audit(
                family_id, sample_bindings(family_id, rng))
            if not sampled.images_equal:
                problems.append(f"{family_id}: sampled witness images differ")
    for family_id in ZETA_IDS[1:]:
        rep = build_family(family_id, None)
        kernel = {str(g) for g in kernel_generators(rep)}
        if not {"gamma:1", "gamma:2"} <= kernel:
            problems.append(f"{family_id}: gamma generators not in kernel")
    separating = find_separating_representation(
        "TVB", word(sigma(1), rho(1)), word(rho(1), sigma(1)), rng=rng)
    if separating is not None:
        separating = {"family": separating[0],
                      "bindings": {k: str(v) for k, v in separating[1].items()}}
    details = {
        "witnesses_verified": list(ZETA_IDS),
        "separating_certificate_for_zeta1_witness": separating,
        "note": NOTE_NO_SEPARATION,
        "problems": problems,
    }
    return AuditEntry(
        "3.2", "every zeta family maps its designated distinct word pair to "
        "equal matrices", "fail" if problems else "pass", details)


def _line_verdict(rep):
    report = reducibility_audit(rep)
    if not report.preserved_last_axis:
        return None, "last axis not preserved"
    line = report.common_line
    if line is not None:
        for block in report.block_factors:
            if not line_is_invariant(block, line):
                return None, "reported line is not invariant"
    return line, None


def _sample_with(rng, family_id, fixed=None, reject=None, tries=400):
    for _ in range(tries):
        bindings = sample_bindings(family_id, rng)
        if fixed:
            bindings.update(fixed)
        fam = family(family_id)
        try:
            values = {p: QQ.scalar(v) for p, v in bindings.items()}
            for label, fn in fam.constraints:
                if fn(values).is_zero:
                    raise ValueError(label)
        except ValueError:
            continue
        if reject is not None and reject(bindings):
            continue
        return bindings
    raise RuntimeError(f"sampling failed for {family_id}")


def _is_square(fr):
    if fr < 0:
        return False
    from math import isqrt
    return (isqrt(fr.numerator) ** 2 == fr.numerator
            and isqrt(fr.denominator) ** 2 == fr.denominator)


def _check_3_3(rng, samples):
    problems = []
    notes = [NOTE_ZETA2, NOTE_IFF_EDGE_33]
    per_family = {}

    def expect(family_id, bindings, want_present):
        rep = build_family(family_id, bindings)
        line, err = _line_verdict(rep)
        if err:
            problems.append(f"{family_id}: {err}")
            return
        got_present = line is not None
        if got_present != want_present:
            problems.append(
                f"{family_id} at {bindings}: expected "
                f"{'a common line' if want_present else 'no common line'}")

    for _ in range(samples):
        expect("zeta1", sample_bindings("zeta1", rng), False)
        # ground truth for zeta2 is "present" at every valid point
        expect("zeta2", sample_bindings("zeta2", rng), True)
        for fid in ("zeta3", "zeta4"):
            b = _sample_with(rng, fid, fixed={"b": Fraction(0)},
                             reject=lambda bb: bb["a"] == bb["d"])
            expect(fid, b, True)
        for fid in ("zeta5", "zeta6", "zeta7", "zeta8"):
            expect(fid, sample_bindings(fid, rng), True)
    # documented iff edge case: b=0, a=d, c!=0 still shares span(0,1)
    edge = {"a": Fraction(2), "b": Fraction(0), "c": Fraction(3),
            "d": Fraction(2)}
    expect("zeta3", edge, True)
    expect("zeta4", edge, True)
    per_family["zeta1"] = "none (matches claim)"
    per_family["zeta2"] = "present (claim says none; see notes)"
    per_family["zeta3/zeta4 at b=0, a!=d"] = "present (matches claim)"
    per_family["zeta3/zeta4 at b=0, a=d, c!=0"] = (
        "present (iff edge case; see notes)")
    per_family["zeta5..zeta8"] = "present (matches claim)"
    details = {"per_family": per_family, "notes": notes, "problems": problems}
    return AuditEntry(
        "3.3", "all zeta families preserve the last axis; common-invariant-"
        "line ground truth established per family",
        "fail" if problems else "flagged", details)


def _check_3_4(rng, samples):
    problems = []
    for n in (3, 4):
        problems += _family_relation_sweep(
            ZETAP_IDS, rng, max(1, samples // 10), n=n, branches=(1, -1))
    details = {"strand_counts": [3, 4], "branches": [1, -1],
               "problems": problems}
    return AuditEntry(
        "3.4", "the seven homogeneous families satisfy all TVB_n relations "
        "for n = 3 and n = 4 under the radical-free parameters, both sign "
        "branches", "fail" if problems else "pass", details)


def _check_3_5(rng, samples):
    problems = []
    for family_id in ZETAP_IDS:
        report = unfaithfulness_audit(family_id, n=3)
        if not report.images_equal:
            problems.append(f"{family_id}: witness images differ")
        for _ in range(max(1, samples // 10)):
            bindings = sample_bindings(family_id, rng)
            sampled = unfaithfulness_audit(family_id, bindings, n=3)
            if not sampled.images_equal:
                problems.append(f"{family_id}: sampled witness images differ")
    details = {"witnesses_verified": list(ZETAP_IDS), "problems": problems}
    return AuditEntry(
        "3.5", "every homogeneous family maps its designated distinct word "
        "pair to equal matrices", "fail" if problems else "pass", details)


def _check_3_7(rng, samples):
    problems = []
    reports = {}
    for family_id in ("zetap1", "zetap2", "zetap3", "zetap4"):
        symbolic = braid_restriction_report(family_id, 3)
        if not symbolic["restriction_passes"]:
            problems.append(f"{family_id}: symbolic restriction fails")
        reports[family_id] = symbolic["criterion"]
        for _ in range(max(1, samples // 10)):
            bindings = sample_bindings(family_id, rng)
            got = braid_restriction_report(family_id, 3, bindings)
            if not got["restriction_passes"]:
                problems.append(f"{family_id}: sampled restriction fails")
        boundary = braid_restriction_report(
            family_id, 3, {"c": Fraction(1), "s": Fraction(1)})
        if not (boundary["bc_is_one"] and boundary["restriction_passes"]):
            problems.append(f"{family_id}: bc=1 boundary not exercised")
    details = {"criterion_recorded": reports,
               "boundary": "bc = 1 exercised at c=1, s=1",
               "problems": problems}
    return AuditEntry(
        "3.7", "restrictions of the antidiagonal families to the braid "
        "subgroup satisfy its relations; the bc != 1 irreducibility "
        "criterion is recorded, not recomputed",
        "fail" if problems else "pass", details)


def _check_4_1(rng, samples):
    problems = _family_relation_sweep(ETA_IDS, rng, samples)
    system = generate_system("STVB")
    for family_id in ETA_IDS:
        if not verify_family(system, family_id):
            problems.append(f"{family_id}: system verification")
    # group promotion succeeds exactly when the tau image is invertible
    for family_id in ETA_IDS:
        symbolic = build_family(family_id, None)
        promoted = promote_to_group(symbolic)
        if not promoted.check_relations().all_pass:
            problems.append(f"{family_id}: symbolic promotion fails relations")
        singular = {p: Fraction(0) for p in ("f", "g", "h", "k")
                    if p in family(family_id).params}
        bindings = _sample_with(rng, family_id, fixed=singular)
        rep = build_family(family_id, bindings)
        try:
            promote_to_group(rep)
            problems.append(f"{family_id}: singular tau image promoted")
        except SingularTauError:
            pass
        for _ in range(max(1, samples // 10)):
            bindings = sample_bindings(family_id, rng)
            rep = build_family(family_id, bindings)
            invertible = not rep.images[tau(1)].det().is_zero
            try:
                promoted = promote_to_group(rep)
                if not invertible:
                    problems.append(f"{family_id}: singular tau promoted")
                elif not promoted.check_relations().all_pass:
                    problems.append(f"{family_id}: promoted relations fail")
            except SingularTauError:
                if invertible:
                    problems.append(f"{family_id}: invertible tau rejected")
    details = {"families_checked": list(ETA_IDS),
               "stvb_equation_count": len(system.equations),
               "problems": problems}
    return AuditEntry(
        "4.1", "thirteen dimension-3 families satisfy all STVB_2 relations; "
        "group promotion succeeds exactly for invertible singular images",
        "fail" if problems else "pass", details)


def _check_4_2(rng, samples):
    problems = []
    for family_id in ETA_IDS:
        report = unfaithfulness_audit(family_id)
        if not report.images_equal:
            problems.append(f"{family_id}: witness images differ")
        for _ in range(max(1, samples // 5)):
            sampled = unfaithfulness_audit(
                family_id, sample_bindings(family_id, rng))
            if not sampled.images_equal:
                problems.append(f"{family_id}: sampled witness images differ")
    for family_id in ETA_IDS[1:]:
        rep = build_family(family_id, None)
        kernel = {str(g) for g in kernel_generators(rep)}
        if not {"gamma:1", "gamma:2"} <= kernel:
            problems.append(f"{family_id}: gamma generators not in kernel")
    details = {"witnesses_verified": list(ETA_IDS), "problems": problems}
    return AuditEntry(
        "4.2", "every eta family maps its designated distinct word pair to "
        "equal matrices", "fail" if problems else "pass", details)


def _check_4_3(rng, samples):
    problems = []
    notes = [NOTE_ETA2, NOTE_IFF_EDGE_43]

    def expect(family_id, bindings, want_present):
        rep = build_family(family_id, bindings)
        line, err = _line_verdict(rep)
        if err:
            problems.append(f"{family_id}: {err}")
            return
        if (line is not None) != want_present:
            problems.append(
                f"{family_id} at {bindings}: expected "
                f"{'a common line' if want_present else 'no common line'}")

    def disc_square(bb):
        return _is_square((bb["d"] - bb["a"]) ** 2 + 4 * bb["b"] * bb["c"])

    def tau_disc_square(bb):
        return _is_square((bb["f"] - bb["k"]) ** 2 + 4 * bb["g"] * bb["h"])

    for _ in range(samples):
        expect("eta1", sample_bindings("eta1", rng), False)
        expect("eta2", sample_bindings("eta2", rng), True)
        # field-relative "none": sample away from square discriminants
        for fid in ("eta3", "eta4"):
            expect(fid, _sample_with(rng, fid, reject=disc_square), False)
        for fid in ("eta5", "eta9"):
            expect(fid, _sample_with(
                rng, fid, fixed={"g": Fraction(0)},
                reject=lambda bb: bb["f"] == bb["k"]), True)
            expect(fid, _sample_with(rng, fid, reject=tau_disc_square), False)
        for fid in ("eta6", "eta7", "eta8", "eta10", "eta11", "eta12",
                    "eta13"):
            expect(fid, sample_bindings(fid, rng), True)
    # documented iff edge case: g=0, f=k, h!=0 still shares span(0,1)
    for fid in ("eta5", "eta9"):
        expect(fid, {"a": Fraction(2), "f": Fraction(3), "g": Fraction(0),
                     "h": Fraction(1), "k": Fraction(3)}, True)
    per_family = {
        "eta1": "none (matches claim)",
        "eta2": "present (claim says none; see notes)",
        "eta3/eta4": "none on non-square discriminants (field-relative)",
        "eta5/eta9 at g=0, f!=k": "present (matches claim)",
        "eta5/eta9 generic g!=0": "none (field-relative)",
        "eta5/eta9 at g=0, f=k, h!=0": "present (iff edge case; see notes)",
        "eta6..eta13 except eta9": "present (matches claim)",
    }
    details = {"per_family": per_family, "notes": notes, "problems": problems}
    return AuditEntry(
        "4.3", "all eta families preserve the last axis; common-invariant-"
        "line ground truth established per family",
        "fail" if problems else "flagged", details)


def _check_5_1(rng, samples):
    problems = []
    ring = FractionField(("b", "d", "x", "t", "u", "v"))
    b, d, x, t, u, v = (ring.var(name) for name in ring.variables)
    base = build_family("zeta1", {"b": b, "d": d, "x": x})
    extended = phi_extend(base, PhiCoefficients(t, u, v))
    closed = phi_tau_zeta1(b, d, x, PhiCoefficients(t, u, v))
    if extended.images[tau(1)] != closed:
        problems.append("closed-form tau image differs from the constructor")
    if not extended.check_relations().all_pass:
        problems.append("symbolic extension fails STVB_2 relations")
    corner = closed.entry(2, 2)
    if corner != t + u + v:
        problems.append("corner entry is not t+u+v")
    for _ in range(max(1, samples // 10)):
        bindings = sample_bindings("zeta1", rng)
        coeffs = PhiCoefficients(*(QQ.scalar(_nonzero_fraction(rng))
                                   for _ in range(3)))
        rep = phi_extend(build_family("zeta1", bindings), coeffs)
        if not rep.check_relations().all_pass:
            problems.append(f"extension at {bindings} fails relations")
    details = {"problems": problems}
    return AuditEntry(
        "5.1", "the singular extension of the zeta1 family reproduces the "
        "displayed tau image entrywise as rational-function identities",
        "fail" if problems else "pass", details)


def _check_5_2(rng, samples):
    problems = []
    ring = FractionField(("b", "d", "x", "f", "g"))
    b, d, x, f, g = (ring.var(name) for name in ring.variables)
    result = solve_phi_match({"b": b, "d": d, "x": x, "f": f, "g": g})
    if result.status != "unique" or not result.matches_closed_forms:
        problems.append("symbolic solve does not match the closed forms")
    else:
        eta = build_family("eta1", {"a": d, "b": b, "x": x, "f": f, "g": g})
        base = build_family("zeta1", {"b": b, "d": d, "x": x})
        rebuilt = phi_extend(base, result.coeffs)
        if eta.images[tau(1)] != rebuilt.images[tau(1)]:
            problems.append("round-trip tau image mismatch")
    singular = solve_phi_match({"b": 1, "d": 2, "x": 1, "f": 3, "g": 5})
    if not (singular.determinant.is_zero and singular.rank < 3
            and singular.status == "inconsistent"):
        problems.append("singular locus not detected as singular")
    consistent = solve_phi_match({"b": 1, "d": 2, "x": 1, "f": 3, "g": 2})
    if consistent.status != "underdetermined":
        problems.append("consistent singular system not reported as such")
    details = {
        "singular_locus": "b^3 - b*(d-1)^2*x^2 = 0",
        "singular_example": singular.to_json(),
        "problems": problems,
    }
    return AuditEntry(
        "5.2", "the independent linear solve reproduces the displayed "
        "matching coefficients and detects the vanishing-denominator locus",
        "fail" if problems else "pass", details)


_CHECKS = {
    "3.1": _check_3_1, "3.2": _check_3_2, "3.3": _check_3_3,
    "3.4": _check_3_4, "3.5": _check_3_5, "3.7": _check_3_7,
    "4.1": _check_4_1, "4.2": _check_4_2, "4.3": _check_4_3,
    "5.1": _check_5_1, "5.2": _check_5_2,
}


def run_audit(seed=1, samples=50, only=None):
    """Run the full audit (or one entry) with deterministic sampling."""
    if only is not None and only not in AUDIT_TAGS:
        raise ValueError(f"unknown claim tag {only!r}")
    entries = []
    for tag in AUDIT_TAGS:
        if only is not None and tag != only:
            continue
        rng = random.Random(f"{seed}:{tag}")
        entries.append(_CHECKS[tag](rng, samples))
    return AuditSummary(seed, samples, tuple(entries))
