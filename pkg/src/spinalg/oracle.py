"""Independent upstairs model: invariant monomials on the covering chart.

On the degree-l cyclic cover of the node the root sheaf trivializes:
everything lives in K[t][z, w, S, 1/S] / (z*w - t), where S is the
trivializing section and the group acts on z, w, S with characters
1, -1, b mod l.  The downstairs objects are the invariant parts:

    x = z^l,  y = w^l,  t = z*w,
    generator e1 of M(i, j)  =  z^i * S^s,
    generator e2 of M(i, j)  =  w^j * S^s,

for any symbol exponent s with i + b*s = 0 (mod l).  Multiplying
upstairs and re-expressing invariants downstairs recomputes every
product and power image by a route that never touches the presentation
formulas, which is what makes this module an oracle for them.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .field import FieldConfig
from .modules import ModuleElement, ModulePresentation

UpMonomial = tuple[int, int, int, int]  # (z, w, t, S) exponents; S may be negative


@dataclass(frozen=True)
class SpinChart:
    """Covering chart data: field, local index l, symbol character b."""

    field: FieldConfig
    l: int
    b: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("local index l must be a positive integer")
        if gcd(self.b, self.l) != 1:
            raise ValueError(f"symbol character must be a unit mod l; got b={self.b}, l={self.l}")

    def character(self, mon: UpMonomial) -> int:
        ze, we, _te, se = mon
        return (ze - we + self.b * se) % self.l

    # -- element constructors ------------------------------------------

    def _normalize(self, raw) -> dict[UpMonomial, int]:
        p = self.field.p
        terms: dict[UpMonomial, int] = {}
        for (ze, we, te, se), coeff in raw:
            if ze < 0 or we < 0 or te < 0:
                raise ValueError("z, w, t exponents must be nonnegative")
            m = min(ze, we)
            if m:
                ze, we, te = ze - m, we - m, te + m
            key = (ze, we, te, se)
            c = (terms.get(key, 0) + coeff) % p
            if c:
                terms[key] = c
            else:
                terms.pop(key, None)
        return terms

    def from_terms(self, raw) -> UpstairsElement:
        if hasattr(raw, "items"):
            raw = raw.items()
        return UpstairsElement(self, self._normalize(raw))

    def zero(self) -> UpstairsElement:
        return UpstairsElement(self, {})

    def const(self, c: int) -> UpstairsElement:
        return self.from_terms([((0, 0, 0, 0), c)])

    def monomial(self, coeff: int = 1, z: int = 0, w: int = 0, t: int = 0, s: int = 0) -> UpstairsElement:
        return self.from_terms([((z, w, t, s), coeff)])


class UpstairsElement:
    """Normal-form element of K[t][z, w, S, 1/S] / (z*w - t)."""

    __slots__ = ("chart", "terms")

    def __init__(self, chart: SpinChart, terms: dict[UpMonomial, int]):
        self.chart = chart
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, int):
            return self.chart.const(other)
        if isinstance(other, UpstairsElement):
            if other.chart != self.chart:
                raise ValueError("elements live on different charts")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.chart.from_terms(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        p = self.chart.field.p
        return UpstairsElement(self.chart, {k: (p - c) % p for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        raw = []
        for (z1, w1, t1, s1), c1 in self.terms.items():
            for (z2, w2, t2, s2), c2 in other.terms.items():
                raw.append(((z1 + z2, w1 + w2, t1 + t2, s1 + s2), c1 * c2))
        return self.chart.from_terms(raw)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.chart.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, UpstairsElement)
            and self.chart == other.chart
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.chart, frozenset(self.terms.items())))

    def invariant_part(self) -> UpstairsElement:
        """Subsum of monomials with trivial group character."""
        return UpstairsElement(
            self.chart,
            {k: c for k, c in self.terms.items() if self.chart.character(k) == 0})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        order = sorted(self.terms.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1], kv[0][3]))
        for (ze, we, te, se), coeff in order:
            bits = []
            if te:
                bits.append("t" if te == 1 else f"t^{te}")
            if ze:
                bits.append("z" if ze == 1 else f"z^{ze}")
            if we:
                bits.append("w" if we == 1 else f"w^{we}")
            if se:
                bits.append("S" if se == 1 else f"S^{se}")
            body = "*".join(bits)
            parts.append(body if coeff == 1 and body else (f"{coeff}*{body}" if body else str(coeff)))
        return " + ".join(parts)


def oracle_product(a: UpstairsElement, b: UpstairsElement) -> UpstairsElement:
    return a * b


def invariant_part(elem: UpstairsElement) -> UpstairsElement:
    return elem.invariant_part()


# -- bridges between the chart and presented modules --------------------


def symbol_exponent(chart: SpinChart, pres: ModulePresentation) -> int:
    """Least s >= 0 with b*s = j (mod l), making w^j S^s (and z^i S^s) invariant."""
    if pres.ring.l != chart.l or pres.ring.field != chart.field:
        raise ValueError("module and chart disagree on l or the field")
    binv = pow(chart.b % chart.l, -1, chart.l) if chart.l > 1 else 0
    return (pres.j * binv) % chart.l if chart.l > 1 else 0


def lift_element(chart: SpinChart, elem: ModuleElement, s_exp: int) -> UpstairsElement:
    """Upstairs image of a module element, the generators lifted at S^s_exp."""
    pres = elem.presentation
    if pres.ring.l != chart.l or pres.ring.field != chart.field:
        raise ValueError("module and chart disagree on l or the field")
    l = chart.l
    raw = []
    for (xe, ye, te), c in elem.f.terms.items():
        # f multiplies e1 = z^i S^s; for the free module f may carry y too
        raw.append(((xe * l + pres.i, ye * l, te, s_exp), c))
    for (xe, ye, te), c in elem.g.terms.items():
        raw.append(((xe * l, ye * l + pres.j, te, s_exp), c))
    return chart.from_terms(raw)


def lower_element(chart: SpinChart, up: UpstairsElement, pres: ModulePresentation,
                  s_exp: int) -> ModuleElement:
    """Downstairs module element matching an invariant upstairs element.

    Every monomial must sit at S^s_exp, be invariant, and reduce to a
    multiple of a lifted generator; otherwise the element does not come
    from the module and a ValueError reports the offending monomial.
    """
    if pres.ring.l != chart.l or pres.ring.field != chart.field:
        raise ValueError("module and chart disagree on l or the field")
    l = chart.l
    c1_raw, c2_raw = [], []
    for mon, c in up.terms.items():
        ze, we, te, se = mon
        if se != s_exp:
            raise ValueError(f"monomial {mon} sits at the wrong symbol power")
        if chart.character(mon) != 0:
            raise ValueError(f"monomial {mon} is not invariant")
        if we == 0 and (ze - pres.i) % l == 0 and ze >= pres.i:
            c1_raw.append((((ze - pres.i) // l, 0, te), c))
        elif ze == 0 and (we - pres.j) % l == 0 and we >= pres.j:
            c2_raw.append(((0, (we - pres.j) // l, te), c))
        else:
            raise ValueError(f"monomial {mon} does not lie over M({pres.i},{pres.j})")
    ring = pres.ring
    return pres.element(ring.from_terms(c1_raw), ring.from_terms(c2_raw))


def _generator_lift(chart: SpinChart, pres: ModulePresentation, key: int, s_exp: int) -> UpstairsElement:
    if key == 1:
        return chart.monomial(z=pres.i, s=s_exp)
    return chart.monomial(w=pres.j, s=s_exp)


def oracle_product_images(a: ModulePresentation, b: ModulePresentation,
                          target: ModulePresentation) -> dict:
    """Generator-pair product images computed purely upstairs."""
    chart = SpinChart(a.ring.field, a.ring.l, 1)
    sa, sb = symbol_exponent(chart, a), symbol_exponent(chart, b)
    images = {}
    for ka in a.generator_keys:
        for kb in b.generator_keys:
            up = _generator_lift(chart, a, ka, sa) * _generator_lift(chart, b, kb, sb)
            images[(ka, kb)] = lower_element(chart, up, target, sa + sb)
    return images


def oracle_sym_power_images(pres: ModulePresentation, m: int,
                            target: ModulePresentation) -> dict:
    """Symmetric-power images e1^(m-k) e2^k computed purely upstairs."""
    chart = SpinChart(pres.ring.field, pres.ring.l, 1)
    s = symbol_exponent(chart, pres)
    lift1 = _generator_lift(chart, pres, 1, s)
    lift2 = _generator_lift(chart, pres, 2, s)
    images = {}
    keys = (0,) if pres.is_free else tuple(range(m + 1))
    for k in keys:
        up = lift1 ** (m - k) * lift2 ** k
        images[k] = lower_element(chart, up, target, m * s)
    return images
