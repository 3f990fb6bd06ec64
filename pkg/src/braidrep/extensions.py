"""Extensions of TVB representations to the singular structures.

``phi_extend`` turns any representation of TVB_n with invertible sigma
images into a representation of STVB_n by sending each singular generator to
t * image(sigma_i) + u * image(sigma_i)^-1 + v * I.  For the zeta1 family the
resulting tau image has a closed form, built directly by ``phi_tau_zeta1``.

``solve_phi_match`` answers when an eta1 representation coincides with such
an extension of zeta1: equating the three distinct entries of the two tau
images gives a 3x3 linear system in (t, u, v) whose determinant vanishes
exactly on the locus b^3 - b*(d-1)^2*x^2 = 0.  Off that locus the unique
solution is compared against the published closed forms; on it the solver
reports rank data (and inconsistency, when there is no solution at all,
which exhibits local extensions that are not of this form).

``promote_to_group`` adjoins inverse images for the singular generators,
turning an STVB representation with invertible tau images into an STVG one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Representation, build_family
from .matrices import Matrix, NonInvertibleError
from .presentations import (
    TAU, Generator, build_presentation, sigma, tau, tau_bar,
)
from .rings import DomainError, Element, QQ

__all__ = [
    "PhiCoefficients", "PhiMatchResult", "SingularTauError", "phi_extend",
    "phi_tau_zeta1", "phi_match_closed_forms", "solve_phi_match",
    "promote_to_group",
]


class SingularTauError(ValueError):
    pass


@dataclass(frozen=True)
class PhiCoefficients:
    t: Element
    u: Element
    v: Element

    def to_json(self):
        return {"t": str(self.t), "u": str(self.u), "v": str(self.v)}


def _coerce_coeffs(ring, coeffs):
    def fix(v):
        if isinstance(v, Element):
            if v.ring != ring:
                raise ValueError("coefficients must live in the base ring")
            return v
        return ring.scalar(v)
    return PhiCoefficients(fix(coeffs.t), fix(coeffs.u), fix(coeffs.v))


def phi_extend(base, coeffs):
    """Extend a TVB_n representation to STVB_n with the given coefficients."""
    if base.presentation.structure != "TVB":
        raise ValueError(
            f"phi extension needs a TVB representation, got "
            f"{base.presentation.structure}")
    ring = base.ring
    coeffs = _coerce_coeffs(ring, coeffs)
    n = base.presentation.n
    ident = Matrix.identity(ring, base.dim)
    pres = build_presentation("STVB", n)
    images = dict(base.images)
    for i in range(1, n):
        s_img = base.images[sigma(i)]
        try:
            s_inv = s_img.inverse()
        except NonInvertibleError as exc:
            raise NonInvertibleError(
                f"sigma:{i} image is not invertible: {exc}") from exc
        images[tau(i)] = (s_img.scale(coeffs.t) + s_inv.scale(coeffs.u)
                          + ident.scale(coeffs.v))
    return Representation(pres, ring, base.dim, images)


def phi_tau_zeta1(b, d, x, coeffs):
    """The closed-form tau image of the extension of zeta1, as displayed."""
    ring = x.ring if isinstance(x, Element) else QQ
    b = b if isinstance(b, Element) else ring.scalar(b)
    d = d if isinstance(d, Element) else ring.scalar(d)
    x = x if isinstance(x, Element) else ring.scalar(x)
    coeffs = _coerce_coeffs(ring, coeffs)
    t, u, v = coeffs.t, coeffs.u, coeffs.v
    dd = d * d * x * x - b * b
    if dd.is_zero:
        raise DomainError("parameter outside domain: d^2*x^2 - b^2 vanishes")
    if x.is_zero:
        raise DomainError("parameter outside domain: x vanishes")
    x2 = x * x
    diag = d * (u * x2 / dd + t) + v
    zero = ring.zero
    return Matrix(ring, [
        [diag, b * (u * x2 / (-dd) + t), zero],
        [b * (u / (-dd) + t / x2), diag, zero],
        [zero, zero, t + u + v],
    ])


@dataclass(frozen=True)
class PhiMatchResult:
    status: str                 # "unique" | "inconsistent" | "underdetermined"
    coeffs: PhiCoefficients | None
    rank: int
    determinant: Element
    matches_closed_forms: bool | None

    def to_json(self):
        return {
            "status": self.status,
            "coefficients": None if self.coeffs is None else self.coeffs.to_json(),
            "rank": self.rank,
            "determinant": str(self.determinant),
            "matches_closed_forms": self.matches_closed_forms,
        }


def phi_match_closed_forms(b, d, x, f, g):
    """The published closed forms for (t, u, v); denominator must not vanish."""
    den = b ** 3 - b * (d - 1) ** 2 * x ** 2
    if den.is_zero:
        raise DomainError(
            "parameter outside domain: b^3 - b*(d-1)^2*x^2 vanishes")
    t = (b ** 2 * g + x ** 2 * (b * (f - 1) - (d - 1) * d * g)) / den
    u = -((b - d * x) * (b + d * x) * (b * (f - 1) - d * g + g)) / den
    v = (b ** 3 * f - b ** 2 * d * g - b * x ** 2 * (d * (d * f - 2) + f)
         + d * (d * d - 1) * g * x ** 2) / den
    return PhiCoefficients(t, u, v)


def _solve_3x3(ring, rows, rhs):
    """Gauss elimination with rank tracking over a field."""
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    m = 3
    rank = 0
    for col in range(m):
        pivot = None
        for r in range(rank, m):
            if not aug[r][col].is_zero:
                pivot = r
                break
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = aug[rank][col].inverse()
        aug[rank] = [v * inv for v in aug[rank]]
        for r in range(m):
            if r != rank and not aug[r][col].is_zero:
                factor = aug[r][col]
                aug[r] = [a - factor * p for a, p in zip(aug[r], aug[rank])]
        rank += 1
    consistent = all(aug[r][m].is_zero for r in range(rank, m))
    solution = None
    if rank == m:
        solution = tuple(aug[r][m] for r in range(m))
    return rank, consistent, solution


def solve_phi_match(params):
    """Match an eta1 tau image with an extension of zeta1 sharing b, d, x.

    ``params`` binds b, d, x, f, g (the eta1 family's diagonal sigma entry is
    called d here).  Returns a PhiMatchResult; ``coeffs`` is present exactly
    when the linear system is nonsingular.
    """
    ring = None
    for v in params.values():
        if isinstance(v, Element):
            ring = v.ring
            break
    if ring is None:
        ring = QQ
    b, d, x, f, g = (params[k] if isinstance(params[k], Element)
                     else ring.scalar(params[k]) for k in "bdxfg")
    dd = d * d * x * x - b * b
    if dd.is_zero or x.is_zero:
        raise DomainError(
            "parameter outside domain: eta1/zeta1 constraints require "
            "d^2*x^2 - b^2 != 0 and x != 0")
    one, zero = ring.one, ring.zero
    x2 = x * x
    rows = [
        [d, d * x2 / dd, one],
        [b, b * x2 / (-dd), zero],
        [one, one, one],
    ]
    rhs = [f, g, one]
    det = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
           - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
           + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
    rank, consistent, solution = _solve_3x3(ring, rows, rhs)
    if solution is not None:
        coeffs = PhiCoefficients(*solution)
        den = b ** 3 - b * (d - 1) ** 2 * x ** 2
        matches = None
        if not den.is_zero:
            closed = phi_match_closed_forms(b, d, x, f, g)
            matches = (coeffs.t == closed.t and coeffs.u == closed.u
                       and coeffs.v == closed.v)
        return PhiMatchResult("unique", coeffs, rank, det, matches)
    status = "underdetermined" if consistent else "inconsistent"
    return PhiMatchResult(status, None, rank, det, None)


def promote_to_group(rep):
    """Adjoin inverse tau images: STVB_n -> STVG_n (or SM_n -> SB_n)."""
    structure = rep.presentation.structure
    target = {"STVB": "STVG", "SM": "SB"}.get(structure)
    if target is None:
        raise ValueError(f"cannot promote a {structure} representation")
    n = rep.presentation.n
    pres = build_presentation(target, n)
    images = dict(rep.images)
    for i in range(1, n):
        t_img = rep.images[tau(i)]
        det = t_img.det()
        if not det.is_unit:
            raise SingularTauError(
                f"tau:{i} image is singular (determinant {det}); "
                f"no group promotion")
        images[tau_bar(i)] = t_img.inverse()
    return Representation(pres, rep.ring, rep.dim, images)
