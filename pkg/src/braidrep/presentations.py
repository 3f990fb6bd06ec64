"""Generators, words, and defining presentations of the braid-like structures.

Seven structures are built here, each by instantiating its relation schemas
for a given strand count n:

  B     braid group on n strands (generators sigma_i)
  VB    virtual braid group (adds involutive rho_i)
  TVB   twisted virtual braid group (adds involutive gamma_1..gamma_n)
  SM    singular braid monoid (adds non-invertible tau_i to B)
  SB    singular braid group (adjoins formal inverses tau_bar_i)
  STVB  singular twisted virtual braid monoid (tau_i added to TVB)
  STVG  singular twisted virtual braid group (adjoins tau_bar_i to STVB)

Every relation carries a stable tag (``2.1`` .. ``2.22``, a ``bar`` suffix
for substituted copies, ``inv``/``barcomm`` for the group-closure schemas)
used throughout the reports.  Commutation schemas within a single family are
instantiated once per unordered pair; mixed-family commutations are
instantiated for every index pair the schema allows.
"""

from __future__ import annotations

from dataclasses import dataclass

SIGMA = "sigma"
RHO = "rho"
GAMMA = "gamma"
TAU = "tau"
TAU_BAR = "tau_bar"

STRUCTURES = ("B", "VB", "TVB", "SM", "SB", "STVB", "STVG")


class PresentationError(ValueError):
    pass


class MonoidInverseError(PresentationError):
    """A monoid-only generator was used with a negative exponent."""


class WordError(PresentationError):
    pass


@dataclass(frozen=True, order=True)
class Generator:
    family: str
    index: int

    def __str__(self):
        return f"{self.family}:{self.index}"

    @staticmethod
    def parse(text):
        try:
            family, index = text.split(":")
            gen = Generator(family, int(index))
        except ValueError as exc:
            raise WordError(f"bad generator {text!r}") from exc
        if gen.family not in (SIGMA, RHO, GAMMA, TAU, TAU_BAR) or gen.index < 1:
            raise WordError(f"bad generator {text!r}")
        return gen


def sigma(i):
    return Generator(SIGMA, i)


def rho(i):
    return Generator(RHO, i)


def gamma(i):
    return Generator(GAMMA, i)


def tau(i):
    return Generator(TAU, i)


def tau_bar(i):
    return Generator(TAU_BAR, i)


# A word is a tuple of (generator, exponent) letters with exponent +1 or -1.
EMPTY_WORD = ()


def word(*letters):
    out = []
    for item in letters:
        if isinstance(item, Generator):
            out.append((item, 1))
        else:
            gen, exp = item
            if exp not in (1, -1):
                raise WordError("letter exponents must be +1 or -1")
            out.append((gen, exp))
    return tuple(out)


def word_str(w):
    if not w:
        return "e"
    return ".".join(str(g) if e == 1 else f"{g}^-1" for g, e in w)


def word_to_json(w):
    return [f"{g}^{e}" for g, e in w]


def word_from_json(items):
    out = []
    for text in items:
        if "^" in text:
            head, _, tail = text.rpartition("^")
            try:
                exp = int(tail)
            except ValueError as exc:
                raise WordError(f"bad letter {text!r}") from exc
        else:
            head, exp = text, 1
        out.append((Generator.parse(head), exp))
    return word(*out)


def free_reduce(w):
    """Cancel adjacent g g^-1 and g^-1 g pairs until none remain."""
    stack = []
    for letter in w:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def word_invert(w, monoid_families=frozenset()):
    for g, _ in w:
        if g.family in monoid_families:
            raise MonoidInverseError(f"{g} has no inverse in a monoid context")
    return tuple((g, -e) for g, e in reversed(w))


@dataclass(frozen=True)
class Relation:
    lhs: tuple
    rhs: tuple
    tag: str

    def to_json(self):
        return {"tag": self.tag, "lhs": word_to_json(self.lhs),
                "rhs": word_to_json(self.rhs)}


@dataclass(frozen=True)
class Presentation:
    structure: str
    n: int
    generators: tuple
    relations: tuple
    monoid_families: frozenset

    def validate_word(self, w):
        gens = set(self.generators)
        for g, e in w:
            if g not in gens:
                raise WordError(f"{g} is not a generator of {self.structure}_{self.n}")
            if e == -1 and g.family in self.monoid_families:
                raise MonoidInverseError(
                    f"{g} has no inverse in {self.structure}_{self.n}")

    def to_json(self):
        return {
            "structure": self.structure,
            "n": self.n,
            "generators": [str(g) for g in self.generators],
            "relations": [r.to_json() for r in self.relations],
            "monoid_families": sorted(self.monoid_families),
        }

    @staticmethod
    def from_json(obj):
        built = build_presentation(obj["structure"], obj["n"])
        if (obj.get("generators") and
                obj["generators"] != [str(g) for g in built.generators]):
            raise PresentationError("generator list does not match the structure")
        return built


def _bar_word(w):
    return tuple((Generator(TAU_BAR, g.index) if g.family == TAU else g, e)
                 for g, e in w)


def _bar_relation(rel):
    return Relation(_bar_word(rel.lhs), _bar_word(rel.rhs), rel.tag + "bar")


def _braid_schema(fam, n, tag_braid, tag_comm):
    rels = []
    for i in range(1, n - 1):
        a, b = Generator(fam, i), Generator(fam, i + 1)
        rels.append(Relation(word(a, b, a), word(b, a, b), tag_braid))
    for i in range(1, n):
        for j in range(i + 2, n):
            a, b = Generator(fam, i), Generator(fam, j)
            rels.append(Relation(word(a, b), word(b, a), tag_comm))
    return rels


def _mixed_comm(fam_a, range_a, fam_b, range_b, tag):
    rels = []
    for i in range_a:
        for j in range_b:
            if abs(i - j) >= 2:
                a, b = Generator(fam_a, i), Generator(fam_b, j)
                rels.append(Relation(word(a, b), word(b, a), tag))
    return rels


def _tau_schema(n):
    """The singular-crossing relations shared by SM and STVB."""
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(Relation(word(tau(i), tau(j)), word(tau(j), tau(i)), "2.14"))
    rels += _mixed_comm(TAU, range(1, n), SIGMA, range(1, n), "2.15")
    for i in range(1, n):
        rels.append(Relation(word(tau(i), sigma(i)), word(sigma(i), tau(i)), "2.16"))
    for i in range(1, n - 1):
        rels.append(Relation(word(sigma(i), sigma(i + 1), tau(i)),
                             word(tau(i + 1), sigma(i), sigma(i + 1)), "2.17"))
        rels.append(Relation(word(sigma(i + 1), sigma(i), tau(i + 1)),
                             word(tau(i), sigma(i + 1), sigma(i)), "2.18"))
    return rels


def _stvb_tau_schema(n):
    rels = _tau_schema(n)
    rels += _mixed_comm(TAU, range(1, n), RHO, range(1, n), "2.19")
    for i in range(1, n - 1):
        rels.append(Relation(word(rho(i), tau(i + 1), rho(i)),
                             word(rho(i + 1), tau(i), rho(i + 1)), "2.20"))
    rels += _mixed_comm(TAU, range(1, n), GAMMA, range(1, n + 1), "2.21")
    for i in range(1, n):
        rels.append(Relation(
            word(rho(i), tau(i), rho(i)),
            word(gamma(i + 1), gamma(i), tau(i), gamma(i), gamma(i + 1)), "2.22"))
    return rels


def build_presentation(structure, n):
    """The presentation of the requested structure on n strands, n >= 2."""
    if structure not in STRUCTURES:
        raise PresentationError(f"unknown structure {structure!r}")
    if n < 2:
        raise PresentationError("strand count must be at least 2")

    sigmas = [sigma(i) for i in range(1, n)]
    rhos = [rho(i) for i in range(1, n)]
    gammas = [gamma(j) for j in range(1, n + 1)]
    taus = [tau(i) for i in range(1, n)]
    tau_bars = [tau_bar(i) for i in range(1, n)]

    rels = _braid_schema(SIGMA, n, "2.1", "2.2")
    gens = list(sigmas)
    monoid = frozenset()

    if structure in ("VB", "TVB", "STVB", "STVG"):
        gens += rhos
        for i in range(1, n):
            rels.append(Relation(word(rho(i), rho(i)), EMPTY_WORD, "2.3"))
        for i in range(1, n):
            for j in range(i + 2, n):
                rels.append(Relation(word(rho(i), rho(j)), word(rho(j), rho(i)), "2.4"))
        for i in range(1, n - 1):
            rels.append(Relation(word(rho(i), rho(i + 1), rho(i)),
                                 word(rho(i + 1), rho(i), rho(i + 1)), "2.5"))
        rels += _mixed_comm(SIGMA, range(1, n), RHO, range(1, n), "2.6")
        for i in range(1, n - 1):
            rels.append(Relation(word(rho(i), rho(i + 1), sigma(i)),
                                 word(sigma(i + 1), rho(i), rho(i + 1)), "2.7"))

    if structure in ("TVB", "STVB", "STVG"):
        gens += gammas
        for i in range(1, n + 1):
            rels.append(Relation(word(gamma(i), gamma(i)), EMPTY_WORD, "2.8"))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                rels.append(Relation(word(gamma(i), gamma(j)),
                                     word(gamma(j), gamma(i)), "2.9"))
        rels += _mixed_comm(GAMMA, range(1, n + 1), RHO, range(1, n), "2.10")
        rels += _mixed_comm(GAMMA, range(1, n + 1), SIGMA, range(1, n), "2.11")
        for i in range(1, n):
            rels.append(Relation(word(rho(i), gamma(i)),
                                 word(gamma(i + 1), rho(i)), "2.12"))
        for i in range(1, n):
            rels.append(Relation(
                word(rho(i), sigma(i), rho(i)),
                word(gamma(i + 1), gamma(i), sigma(i), gamma(i), gamma(i + 1)),
                "2.13"))

    if structure in ("SM", "SB"):
        gens += taus
        rels += _tau_schema(n)
        monoid = frozenset({TAU})

    if structure in ("STVB", "STVG"):
        gens += taus
        rels += _stvb_tau_schema(n)
        monoid = frozenset({TAU})

    if structure in ("SB", "STVG"):
        gens += tau_bars
        tau_rels = [r for r in rels
                    if any(g.family == TAU for g, _ in r.lhs + r.rhs)]
        rels += [_bar_relation(r) for r in tau_rels]
        for i in range(1, n):
            rels.append(Relation(word(tau(i), tau_bar(i)), EMPTY_WORD, "inv"))
            rels.append(Relation(word(tau_bar(i), tau(i)), EMPTY_WORD, "inv"))
        if structure == "STVG":
            for i in range(1, n):
                for j in range(1, n):
                    if abs(i - j) >= 2:
                        rels.append(Relation(word(tau(j), tau_bar(i)),
                                             word(tau_bar(i), tau(j)), "barcomm"))
        monoid = frozenset()

    return Presentation(structure, n, tuple(gens), tuple(rels), monoid)
