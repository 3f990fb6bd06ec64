"""Exact scalar arithmetic for the rings used throughout the package.

Four rings are provided: the rationals, multivariate polynomials over the
rationals, their fraction field (rational functions), and Laurent polynomial
rings in one or two variables.  All values are immutable, carry a reference
to their ring, and support ``+ - * / **`` with exact results.  Mixing values
from different rings raises ``RingMismatchError``; plain ``int`` and
``Fraction`` constants coerce into any ring.

Rational functions are kept in a cheap canonical form (common monomial factor
removed, monic denominator under graded-lex order).  Full multivariate gcd is
deliberately avoided: equality of a/b and c/d is decided by a*d - c*b == 0,
which is exact and total.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

_F0 = Fraction(0)
_F1 = Fraction(1)


class RingError(ValueError):
    """Base class for scalar arithmetic errors."""


class RingMismatchError(RingError):
    """Operands belong to different rings."""


class NonUnitError(RingError):
    """Inversion of a non-unit was requested."""


class DomainError(RingError):
    """A substitution left the domain of definition (vanishing denominator)."""


class ParseError(RingError):
    """Malformed scalar string."""


# ---------------------------------------------------------------------------
# raw term-map helpers: a polynomial is a dict {exponent tuple: Fraction}
# with no zero coefficients stored.

def _gl_key(exp):
    # graded-lex: total degree first, then exponent vector in variable order
    return (sum(exp), exp)


def _tadd(a, b):
    out = dict(a)
    for e, c in b.items():
        nc = out.get(e, _F0) + c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def _tneg(a):
    return {e: -c for e, c in a.items()}


def _tmul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(i + j for i, j in zip(e1, e2))
            nc = out.get(e, _F0) + c1 * c2
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
    return out


def _tscale(a, c):
    if not c:
        return {}
    return {e: cc * c for e, cc in a.items()}


def _tshift(a, shift):
    """Divide every term by the monomial with exponent vector ``shift``."""
    return {tuple(i - s for i, s in zip(e, shift)): c for e, c in a.items()}


def _fraction_sqrt(q: Fraction):
    if q < 0:
        return None
    pn, pd = isqrt(q.numerator), isqrt(q.denominator)
    if pn * pn != q.numerator or pd * pd != q.denominator:
        return None
    return Fraction(pn, pd)


def _term_sqrt(terms):
    """Exact square root of a term map, or None if it is not a square."""
    if not terms:
        return {}
    lead = max(terms, key=_gl_key)
    if any(e % 2 for e in lead):
        return None
    lc = _fraction_sqrt(terms[lead])
    if lc is None:
        return None
    root_lead = tuple(e // 2 for e in lead)
    root = {root_lead: lc}
    limit = 4 * len(terms) + 16
    for _ in range(limit):
        rem = _tadd(terms, _tneg(_tmul(root, root)))
        if not rem:
            return root
        r = max(rem, key=_gl_key)
        delta_exp = tuple(i - j for i, j in zip(r, root_lead))
        if any(e < 0 for e in delta_exp):
            return None
        delta = {delta_exp: rem[r] / (2 * lc)}
        root = _tadd(root, delta)
    return None


_RAT_RE = re.compile(r"[+-]?\d+(?:/[1-9]\d*)?$")
_POW_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)\^(-?\d+)$")
_FRAC_RE = re.compile(r"\(([^()]*)\)/\(([^()]*)\)$")


def _parse_fraction(text):
    if not _RAT_RE.match(text):
        raise ParseError(f"not a rational literal: {text!r}")
    return Fraction(text)


class Element:
    """A scalar value in one of the rings.  Immutable by convention."""

    __slots__ = ("ring", "data")

    def __init__(self, ring, data):
        self.ring = ring
        self.data = data

    # -- coercion helpers ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine {self.ring} and {other.ring} values")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Element(self.ring, self.ring._add(self.data, o.data))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, self.ring._neg(self.data))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Element(self.ring, self.ring._add(self.data, self.ring._neg(o.data)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Element(self.ring, self.ring._add(o.data, self.ring._neg(self.data)))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Element(self.ring, self.ring._mul(self.data, o.data))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self.inverse() if k < 0 else self
        out = self.ring.one
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self):
        return Element(self.ring, self.ring._invert(self.data))

    # -- predicates ----------------------------------------------------------
    @property
    def is_zero(self):
        return self.ring._is_zero(self.data)

    @property
    def is_unit(self):
        return self.ring._is_unit(self.data)

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring._eq(self.data, o.data)

    __hash__ = None

    # -- conversions ----------------------------------------------------------
    def __str__(self):
        return self.ring._to_str(self.data)

    def __repr__(self):
        return f"<{self.ring.kind} {self}>"

    def substitute(self, bindings, ring=None):
        """Image under the substitution homomorphism sending named variables
        to values of the target ring; unbound variables carry through."""
        target = ring if ring is not None else self.ring
        fixed = {}
        for name, value in bindings.items():
            if isinstance(value, (int, Fraction)):
                value = target.scalar(value)
            elif not isinstance(value, Element) or value.ring != target:
                raise RingMismatchError(
                    f"binding for {name!r} is not a value of the target ring")
            fixed[name] = value
        return self.ring._substitute(self.data, fixed, target)

    def as_fraction(self):
        """The value as a Fraction; only for variable-free values."""
        return self.ring._as_fraction(self.data)


class Ring:
    kind = ""
    is_field = False

    def __init__(self, variables=()):
        self.variables = tuple(variables)
        for v in self.variables:
            if not re.match(r"[A-Za-z_][A-Za-z_0-9]*$", v):
                raise RingError(f"bad variable name {v!r}")
        if len(set(self.variables)) != len(self.variables):
            raise RingError("duplicate variable names")

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.kind == self.kind
                and other.variables == self.variables)

    def __hash__(self):
        return hash((self.kind, self.variables))

    def __repr__(self):
        if self.variables:
            return f"{self.kind}({', '.join(self.variables)})"
        return self.kind

    # -- construction ----------------------------------------------------------
    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def scalar(self, value):
        raise NotImplementedError

    def var(self, name):
        raise RingError(f"{self} has no variables")

    def vars(self):
        return tuple(self.var(v) for v in self.variables)

    def parse(self, text):
        return Element(self, self._parse(text))

    def sqrt(self, element):
        """Exact square root in the ring, or None; fields only."""
        raise RingError(f"square roots not supported in {self}")

    # -- descriptors -------------------------------------------------------------
    def descriptor(self):
        d = {"kind": self.kind}
        if self.variables:
            d["variables"] = list(self.variables)
        return d

    @staticmethod
    def from_descriptor(desc):
        kind = desc.get("kind")
        variables = tuple(desc.get("variables", ()))
        if kind == "rational":
            return QQ
        if kind == "polynomial":
            return PolynomialRing(variables)
        if kind == "rational_function":
            return FractionField(variables)
        if kind == "laurent":
            return LaurentRing(variables)
        raise ParseError(f"unknown ring descriptor {desc!r}")

    def _as_fraction(self, data):
        raise RingError(f"{self} value is not a plain rational")


class RationalRing(Ring):
    """The field of rational numbers; values are Fractions."""

    kind = "rational"
    is_field = True

    def __init__(self):
        super().__init__(())

    def scalar(self, value):
        return Element(self, Fraction(value))

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _invert(self, a):
        if not a:
            raise NonUnitError("0 is not invertible")
        return 1 / a

    def _is_zero(self, a):
        return not a

    def _is_unit(self, a):
        return bool(a)

    def _eq(self, a, b):
        return a == b

    def _to_str(self, a):
        return str(a)

    def _parse(self, text):
        return _parse_fraction(text)

    def _substitute(self, data, bindings, target):
        return target.scalar(data)

    def _as_fraction(self, data):
        return data

    def sqrt(self, element):
        r = _fraction_sqrt(element.data)
        return None if r is None else self.scalar(r)


class _TermRing(Ring):
    """Shared arithmetic for polynomial and Laurent rings (term maps)."""

    allow_negative = False

    def scalar(self, value):
        c = Fraction(value)
        return Element(self, {self._zero_exp(): c} if c else {})

    def _zero_exp(self):
        return (0,) * len(self.variables)

    def var(self, name):
        try:
            i = self.variables.index(name)
        except ValueError:
            raise RingError(f"{self} has no variable {name!r}") from None
        exp = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return Element(self, {exp: _F1})

    def _add(self, a, b):
        return _tadd(a, b)

    def _neg(self, a):
        return _tneg(a)

    def _mul(self, a, b):
        return _tmul(a, b)

    def _is_zero(self, a):
        return not a

    def _eq(self, a, b):
        return a == b

    def _to_str(self, a):
        if not a:
            return "0"
        parts = []
        for exp in sorted(a, key=_gl_key, reverse=True):
            factors = [str(a[exp])]
            for name, e in zip(self.variables, exp):
                if e:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return "+".join(parts)

    def _parse(self, text):
        if text == "0":
            return {}
        terms = {}
        for part in text.split("+"):
            factors = part.split("*")
            coef = _parse_fraction(factors[0])
            exp = [0] * len(self.variables)
            pos = -1
            for factor in factors[1:]:
                m = _POW_RE.match(factor)
                if not m:
                    raise ParseError(f"bad term factor {factor!r}")
                name, e = m.group(1), int(m.group(2))
                if name not in self.variables:
                    raise ParseError(f"unknown variable {name!r} for {self}")
                i = self.variables.index(name)
                if i <= pos:
                    raise ParseError(f"variables out of order in {part!r}")
                pos = i
                if e == 0:
                    raise ParseError(f"zero exponent written in {part!r}")
                if e < 0 and not self.allow_negative:
                    raise ParseError(f"negative exponent {e} not allowed in {self}")
                exp[i] = e
            key = tuple(exp)
            if key in terms:
                raise ParseError(f"duplicate monomial in {text!r}")
            if coef:
                terms[key] = coef
        return terms

    def _substitute(self, data, bindings, target):
        total = target.zero
        for exp, coef in data.items():
            term = target.scalar(coef)
            for name, e in zip(self.variables, exp):
                if not e:
                    continue
                value = bindings.get(name)
                if value is None:
                    value = target.var(name)
                if e < 0:
                    try:
                        value = value.inverse()
                    except NonUnitError as exc:
                        raise DomainError(
                            f"parameter outside domain: {name}^{e} at a "
                            f"non-invertible value") from exc
                    e = -e
                term = term * value ** e
            total = total + term
        return total

    def _as_fraction(self, data):
        if not data:
            return _F0
        if set(data) == {self._zero_exp()}:
            return data[self._zero_exp()]
        raise RingError("value involves variables")


class PolynomialRing(_TermRing):
    """Multivariate polynomials over the rationals."""

    kind = "polynomial"

    def __init__(self, variables):
        if not variables:
            raise RingError("polynomial ring needs at least one variable")
        super().__init__(variables)

    def _invert(self, a):
        if len(a) == 1 and self._zero_exp() in a:
            return {self._zero_exp(): 1 / a[self._zero_exp()]}
        raise NonUnitError(f"{self._to_str(a)} is not a unit in {self}")

    def _is_unit(self, a):
        return len(a) == 1 and self._zero_exp() in a


class LaurentRing(_TermRing):
    """Laurent polynomials in one or two variables; units are monomials."""

    kind = "laurent"
    allow_negative = True

    def __init__(self, variables):
        if len(variables) not in (1, 2):
            raise RingError("Laurent rings here carry one or two variables")
        super().__init__(variables)

    def _invert(self, a):
        if len(a) != 1:
            raise NonUnitError(f"{self._to_str(a)} is not a unit in {self}")
        (exp, coef), = a.items()
        return {tuple(-e for e in exp): 1 / coef}

    def _is_unit(self, a):
        return len(a) == 1


class FractionField(Ring):
    """Rational functions: formal quotients of multivariate polynomials."""

    kind = "rational_function"
    is_field = True

    def __init__(self, variables):
        if not variables:
            raise RingError("fraction field needs at least one variable")
        super().__init__(variables)
        self._poly = PolynomialRing(variables)

    def _canon(self, num, den):
        if not den:
            raise RingError("denominator is not the zero polynomial")
        if not num:
            return ({}, {self._poly._zero_exp(): _F1})
        nshift = tuple(min(e[i] for e in num) for i in range(len(self.variables)))
        dshift = tuple(min(e[i] for e in den) for i in range(len(self.variables)))
        shift = tuple(min(a, b) for a, b in zip(nshift, dshift))
        if any(shift):
            num = _tshift(num, shift)
            den = _tshift(den, shift)
        lead = max(den, key=_gl_key)
        lc = den[lead]
        if lc != 1:
            inv = 1 / lc
            num = _tscale(num, inv)
            den = _tscale(den, inv)
        return (num, den)

    def make(self, num_terms, den_terms):
        return Element(self, self._canon(num_terms, den_terms))

    def scalar(self, value):
        c = Fraction(value)
        one = {self._poly._zero_exp(): _F1}
        return Element(self, ({self._poly._zero_exp(): c} if c else {}, one))

    def var(self, name):
        v = self._poly.var(name).data
        return Element(self, self._canon(v, {self._poly._zero_exp(): _F1}))

    def from_polynomial(self, element):
        if element.ring != self._poly:
            raise RingMismatchError("expected a polynomial over the same variables")
        return self.make(element.data, {self._poly._zero_exp(): _F1})

    def _add(self, a, b):
        an, ad = a
        bn, bd = b
        num = _tadd(_tmul(an, bd), _tmul(bn, ad))
        return self._canon(num, _tmul(ad, bd))

    def _neg(self, a):
        return (_tneg(a[0]), a[1])

    def _mul(self, a, b):
        return self._canon(_tmul(a[0], b[0]), _tmul(a[1], b[1]))

    def _invert(self, a):
        num, den = a
        if not num:
            raise NonUnitError("0 is not invertible")
        return self._canon(den, num)

    def _is_zero(self, a):
        return not a[0]

    def _is_unit(self, a):
        return bool(a[0])

    def _eq(self, a, b):
        # cross-multiplication: a/b == c/d  iff  a*d - c*b == 0
        return _tadd(_tmul(a[0], b[1]), _tneg(_tmul(b[0], a[1]))) == {}

    def _to_str(self, a):
        num, den = a
        if den == {self._poly._zero_exp(): _F1}:
            return self._poly._to_str(num)
        return f"({self._poly._to_str(num)})/({self._poly._to_str(den)})"

    def _parse(self, text):
        m = _FRAC_RE.match(text)
        if m:
            num = self._poly._parse(m.group(1))
            den = self._poly._parse(m.group(2))
            return self._canon(num, den)
        return self._canon(self._poly._parse(text),
                           {self._poly._zero_exp(): _F1})

    def _substitute(self, data, bindings, target):
        num, den = data
        num_val = self._poly._substitute(num, bindings, target)
        den_val = self._poly._substitute(den, bindings, target)
        if den_val.is_zero:
            raise DomainError(
                f"parameter outside domain: denominator "
                f"{self._poly._to_str(den)} vanishes")
        return num_val * den_val.inverse()

    def _as_fraction(self, data):
        num, den = data
        n = self._poly._as_fraction(num)
        d = self._poly._as_fraction(den)
        return n / d

    def sqrt(self, element):
        num, den = element.data
        root = _term_sqrt(_tmul(num, den))
        if root is None:
            return None
        return self.make(root, den)

    def numerator(self, element):
        return Element(self._poly, dict(element.data[0]))

    def denominator(self, element):
        return Element(self._poly, dict(element.data[1]))


QQ = RationalRing()
