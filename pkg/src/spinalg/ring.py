"""Exact arithmetic in the completed local ring of a smoothed node.

The ring is K[t][x, y] / (x*y - t^l) over a prime field K = F_p.  Every
element has a unique normal form in which no monomial contains both x and
y: whenever a product creates x^a * y^b, the smaller exponent is traded
for t via x*y -> t^l.  All operations return normal forms, so equality is
literal comparison of term dictionaries.

A monomial is keyed (x exponent, y exponent, t exponent); normal forms
have x*y exponent product zero.  The deformation parameter t can be left
generic or pinned to a field constant (TMode), t = 0 being the node.
"""
from __future__ import annotations

from .field import FieldConfig

Monomial = tuple[int, int, int]


class TMode:
    """Evaluation mode for t: generic (free variable) or a field constant."""

    __slots__ = ("value",)

    def __init__(self, value: int | None = None):
        self.value = value

    @classmethod
    def generic(cls) -> TMode:
        return cls(None)

    @classmethod
    def specialized(cls, c: int) -> TMode:
        return cls(int(c))

    @property
    def is_generic(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        return isinstance(other, TMode) and self.value == other.value

    def __hash__(self):
        return hash(("TMode", self.value))

    def __repr__(self):
        return "TMode.generic()" if self.is_generic else f"TMode.specialized({self.value})"


GENERIC = TMode.generic()


class NodeRing:
    """K[t][x, y] / (x*y - t^l) with unique mixed-monomial-free normal forms."""

    __slots__ = ("field", "l")

    def __init__(self, field: FieldConfig, l: int):
        if not isinstance(l, int) or l < 1:
            raise ValueError("node parameter l must be a positive integer")
        self.field = field
        self.l = l

    def __eq__(self, other):
        return isinstance(other, NodeRing) and self.field == other.field and self.l == other.l

    def __hash__(self):
        return hash((self.field, self.l))

    def __repr__(self):
        return f"NodeRing(p={self.field.p}, l={self.l})"

    # -- construction -------------------------------------------------

    def _normalize(self, raw) -> dict[Monomial, int]:
        """Fold raw (monomial, coeff) pairs into the canonical term dict.

        Rewrites each monomial once: x^a y^b t^c with a, b > 0 becomes
        x^(a-m) y^(b-m) t^(c+l*m) for m = min(a, b), which already has
        x- or y-exponent zero, so a single pass is confluent.
        """
        p = self.field.p
        terms: dict[Monomial, int] = {}
        for (xe, ye, te), coeff in raw:
            if xe < 0 or ye < 0 or te < 0:
                raise ValueError(f"negative exponent in monomial {(xe, ye, te)}")
            m = min(xe, ye)
            if m:
                xe, ye, te = xe - m, ye - m, te + self.l * m
            key = (xe, ye, te)
            c = (terms.get(key, 0) + coeff) % p
            if c:
                terms[key] = c
            else:
                terms.pop(key, None)
        return terms

    def from_terms(self, raw) -> RingElement:
        """Element from an iterable or mapping of (x, y, t) exponents to coefficients."""
        if hasattr(raw, "items"):
            raw = raw.items()
        return RingElement(self, self._normalize(raw))

    def zero(self) -> RingElement:
        return RingElement(self, {})

    def const(self, c: int) -> RingElement:
        return self.from_terms([((0, 0, 0), c)])

    def one(self) -> RingElement:
        return self.const(1)

    def monomial(self, coeff: int = 1, x: int = 0, y: int = 0, t: int = 0) -> RingElement:
        return self.from_terms([((x, y, t), coeff)])

    def t(self, exp: int = 1) -> RingElement:
        return self.monomial(t=exp)

    def x(self, exp: int = 1) -> RingElement:
        return self.monomial(x=exp)

    def y(self, exp: int = 1) -> RingElement:
        return self.monomial(y=exp)


def _mono_str(key: Monomial, coeff: int) -> str:
    xe, ye, te = key
    parts = []
    if te:
        parts.append("t" if te == 1 else f"t^{te}")
    if xe:
        parts.append("x" if xe == 1 else f"x^{xe}")
    if ye:
        parts.append("y" if ye == 1 else f"y^{ye}")
    if not parts:
        return str(coeff)
    body = "*".join(parts)
    return body if coeff == 1 else f"{coeff}*{body}"


class RingElement:
    """Normal-form element of a NodeRing.  Treat as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: NodeRing, terms: dict[Monomial, int]):
        self.ring = ring
        self.terms = terms

    # -- queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, x: int = 0, y: int = 0, t: int = 0) -> int:
        return self.terms.get((x, y, t), 0)

    def xy_degree(self) -> int:
        """Largest x- or y-exponent across terms (used for degree filtrations)."""
        return max((xe + ye for (xe, ye, _te) in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms ordered by t-degree, then x-degree, then y-degree."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError("elements live in different rings")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        raw = list(self.terms.items()) + list(other.terms.items())
        return self.ring.from_terms(raw)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return RingElement(self.ring, {k: (p - c) % p for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        raw = []
        for (x1, y1, t1), c1 in self.terms.items():
            for (x2, y2, t2), c2 in coerced.terms.items():
                raw.append(((x1 + x2, y1 + y2, t1 + t2), c1 * c2))
        return self.ring.from_terms(raw)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- evaluation ---------------------------------------------------

    def specialize(self, mode: TMode) -> RingElement:
        """Substitute t by the mode's constant; generic mode is the identity."""
        if mode.is_generic:
            return self
        c = self.ring.field.reduce(mode.value)
        raw = [((xe, ye, 0), coeff * pow(c, te, self.ring.field.p))
               for (xe, ye, te), coeff in self.terms.items()]
        return self.ring.from_terms(raw)

    def localize(self, at: str) -> LaurentElement:
        """Image in K[t][v, 1/v] after inverting v = x (or v = y).

        Inverting x sends y to t^l / x; inverting y sends x to t^l / y.
        """
        if at not in ("x", "y"):
            raise ValueError("localization variable must be 'x' or 'y'")
        l = self.ring.l
        terms: dict[tuple[int, int], int] = {}
        for (xe, ye, te), coeff in self.terms.items():
            if at == "x":
                key = (xe - ye, te + l * ye)
            else:
                key = (ye - xe, te + l * xe)
            c = (terms.get(key, 0) + coeff) % self.ring.field.p
            if c:
                terms[key] = c
            else:
                terms.pop(key, None)
        return LaurentElement(self.ring.field, at, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(_mono_str(k, c) for k, c in self.sorted_terms())


class LaurentElement:
    """Element of K[t][v, 1/v], the node ring with x or y made a unit."""

    __slots__ = ("field", "var", "terms")

    def __init__(self, field: FieldConfig, var: str, terms: dict[tuple[int, int], int]):
        self.field = field
        self.var = var
        self.terms = {k: c % field.p for k, c in terms.items() if c % field.p}

    @classmethod
    def monomial(cls, field: FieldConfig, var: str, coeff: int = 1,
                 vexp: int = 0, texp: int = 0) -> LaurentElement:
        if texp < 0:
            raise ValueError("t exponent must stay nonnegative")
        return cls(field, var, {(vexp, texp): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: LaurentElement):
        if self.field != other.field or self.var != other.var:
            raise ValueError("localized elements live in different rings")

    def __add__(self, other: LaurentElement):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentElement(self.field, self.var, terms)

    def __neg__(self):
        return LaurentElement(self.field, self.var,
                              {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: LaurentElement):
        self._check(other)
        terms: dict[tuple[int, int], int] = {}
        for (v1, t1), c1 in self.terms.items():
            for (v2, t2), c2 in other.terms.items():
                k = (v1 + v2, t1 + t2)
                terms[k] = terms.get(k, 0) + c1 * c2
        return LaurentElement(self.field, self.var, terms)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentElement)
            and self.field == other.field
            and self.var == other.var
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.var, frozenset(self.terms.items())))

    def as_unit_monomial(self) -> tuple[int, int] | None:
        """(coeff, v-exponent) when the element is c * v^k, else None.

        Such elements are exactly the units among monomials: t is not
        inverted, so a unit must have t-exponent zero.
        """
        if len(self.terms) != 1:
            return None
        (vexp, texp), coeff = next(iter(self.terms.items()))
        if texp != 0:
            return None
        return coeff, vexp

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (vexp, texp), coeff in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            bits = []
            if texp:
                bits.append("t" if texp == 1 else f"t^{texp}")
            if vexp:
                bits.append(self.var if vexp == 1 else f"{self.var}^{vexp}")
            body = "*".join(bits)
            if not body:
                parts.append(str(coeff))
            else:
                parts.append(body if coeff == 1 else f"{coeff}*{body}")
        return " + ".join(parts)
