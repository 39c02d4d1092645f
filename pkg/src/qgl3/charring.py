"""Exact formal character ring over the A2 weight lattice.

Characters live in the integral group ring ZX with basis e(lam) and product
e(lam)e(mu) = e(lam+mu).  Everything here is exact integer arithmetic; the
two independent constructions of the induced-module character (tableau
enumeration and the alternating-sum quotient) cross-check each other.
"""

from __future__ import annotations

import json
from typing import Callable, Iterable

from qgl3 import kernels
from qgl3.lattice import (
    RHO,
    FacetType,
    Weight,
    decompose,
    dominance_key,
    dominantize,
    dual_weight,
    facet_classify,
    ordinary_orbit,
)


class FormalChar:
    """Sparse integer combination of basis elements e(weight).

    Instances are treated as immutable values: no method mutates self, and
    the wrapped dict must not be modified after construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Weight, int] | None = None, _raw: bool = False):
        if coeffs is None:
            self.coeffs = {}
        elif _raw:
            self.coeffs = coeffs
        else:
            self.coeffs = {Weight(*w): c for w, c in coeffs.items() if c}

    @classmethod
    def basis(cls, w: Weight, coeff: int = 1) -> "FormalChar":
        return cls({Weight(*w): coeff} if coeff else {}, _raw=True)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormalChar) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, w: Weight) -> int:
        return self.coeffs.get(w, 0)

    def __add__(self, other: "FormalChar") -> "FormalChar":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            n = out.get(w, 0) + c
            if n:
                out[w] = n
            elif w in out:
                del out[w]
        return FormalChar(out, _raw=True)

    def __sub__(self, other: "FormalChar") -> "FormalChar":
        return self + (-other)

    def __neg__(self) -> "FormalChar":
        return FormalChar({w: -c for w, c in self.coeffs.items()}, _raw=True)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return FormalChar()
            return FormalChar({w: c * other for w, c in self.coeffs.items()}, _raw=True)
        raw = kernels.convolve(self.coeffs, other.coeffs)
        return FormalChar({Weight(*w): c for w, c in raw.items()}, _raw=True)

    __rmul__ = __mul__

    @property
    def dimension(self) -> int:
        return sum(self.coeffs.values())

    def support(self) -> set[Weight]:
        return set(self.coeffs)

    def map_support(self, f: Callable[[Weight], Weight]) -> "FormalChar":
        out: dict[Weight, int] = {}
        for w, c in self.coeffs.items():
            k = f(w)
            n = out.get(k, 0) + c
            if n:
                out[k] = n
            elif k in out:
                del out[k]
        return FormalChar(out, _raw=True)

    def leading_weight(self) -> Weight:
        """Support weight maximal for the dominance-compatible (height, a) key."""
        if not self.coeffs:
            raise ValueError("zero character has no leading weight")
        return max(self.coeffs, key=dominance_key)

    def to_triples(self) -> list[list[int]]:
        return sorted([w[0], w[1], c] for w, c in self.coeffs.items())

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> "FormalChar":
        out: dict[Weight, int] = {}
        for a, b, c in triples:
            w = Weight(a, b)
            out[w] = out.get(w, 0) + c
        return cls(out)

    def to_json(self) -> str:
        return json.dumps(self.to_triples())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for w in sorted(self.coeffs, key=dominance_key, reverse=True):
            c = self.coeffs[w]
            if c == 1:
                terms.append(f"e{w}")
            else:
                terms.append(f"{c}*e{w}")
        return " + ".join(terms)


ZERO_CHAR = FormalChar()
ONE_CHAR = FormalChar.basis(Weight(0, 0))


def e(a: int, b: int) -> FormalChar:
    return FormalChar.basis(Weight(a, b))


_weyl_cache: dict[Weight, FormalChar] = {}


def weyl_char(lam: Weight) -> FormalChar:
    """Character of the induced module of highest weight lam.

    Computed by counting semistandard tableaux on the two-row shape
    (a+b, b) in three letters and projecting contents to SL3 coordinates.
    """
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"weyl_char needs a dominant weight, got {lam}")
    cached = _weyl_cache.get(lam)
    if cached is None:
        raw = kernels.ssyt_weight_counts(lam.a + lam.b, lam.b)
        cached = FormalChar({Weight(*w): c for w, c in raw.items()}, _raw=True)
        _weyl_cache[lam] = cached
    return cached


def weyl_dimension(lam: Weight) -> int:
    a, b = lam
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def alt_weyl_sum(mu: Weight) -> FormalChar:
    """Antisymmetrized orbit sum of e(mu) under the linear Weyl action."""
    out = FormalChar()
    for sign, w in ordinary_orbit(mu):
        out = out + FormalChar.basis(w, sign)
    return out


def divide_exact(num: FormalChar, den: FormalChar, max_terms: int = 200000) -> FormalChar:
    """Exact quotient in the group ring, for divisions known to be exact.

    Greedy cancellation of the lexicographically leading terms; each step
    produces one quotient term, so the loop is bounded by the quotient
    support size.
    """
    if not den:
        raise ZeroDivisionError("division by the zero character")
    lead_d = max(den.coeffs)  # plain lex order is addition-compatible
    cd = den.coeffs[lead_d]
    rem = num
    quot: dict[Weight, int] = {}
    for _ in range(max_terms):
        if not rem:
            return FormalChar(quot, _raw=True)
        lead_r = max(rem.coeffs)
        cr = rem.coeffs[lead_r]
        if cr % cd:
            raise ValueError("inexact division in group ring")
        t = Weight(lead_r[0] - lead_d[0], lead_r[1] - lead_d[1])
        c = cr // cd
        quot[t] = c
        rem = rem - den * FormalChar.basis(t, c)
    raise ValueError("inexact division in group ring")


def weyl_char_alternating(lam: Weight) -> FormalChar:
    """Second, independent route to weyl_char: quotient of alternating sums."""
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"weyl_char_alternating needs a dominant weight, got {lam}")
    return divide_exact(alt_weyl_sum(lam + RHO), alt_weyl_sum(RHO))


def euler_char(mu: Weight) -> FormalChar:
    """Weyl character extended by the sign rule; zero on singular weights."""
    sign, rep = dominantize(mu)
    if sign == 0:
        return ZERO_CHAR
    ch = weyl_char(rep)
    return ch if sign == 1 else -ch


def frobenius_twist(x: FormalChar, l: int) -> FormalChar:
    """Scale every support weight by l."""
    return FormalChar({Weight(w[0] * l, w[1] * l): c for w, c in x.coeffs.items()}, _raw=True)


def dual_char(x: FormalChar) -> FormalChar:
    """Contragredient character: swap the two coordinates of every weight."""
    return x.map_support(dual_weight)


class SimpleCharTable:
    """Append-only cache of restricted simple characters for one order l."""

    def __init__(self, l: int):
        self.l = l
        self.cache: dict[Weight, FormalChar] = {}

    def get(self, lam: Weight) -> FormalChar:
        hit = self.cache.get(lam)
        if hit is None:
            hit = _restricted_simple_char_uncached(lam, self.l)
            self.cache[lam] = hit
        return hit

    def to_jsonable(self) -> dict:
        return {
            "l": self.l,
            "entries": {f"{w.a},{w.b}": ch.to_triples() for w, ch in self.cache.items()},
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "SimpleCharTable":
        table = cls(int(data["l"]))
        for key, triples in data["entries"].items():
            a, b = key.split(",")
            table.cache[Weight(int(a), int(b))] = FormalChar.from_triples(triples)
        return table


_simple_tables: dict[int, SimpleCharTable] = {}


def simple_table(l: int) -> SimpleCharTable:
    table = _simple_tables.get(l)
    if table is None:
        table = SimpleCharTable(l)
        _simple_tables[l] = table
    return table


def load_simple_tables(dirpath) -> None:
    """Seed the per-l caches from JSON files written by save_simple_tables."""
    import os

    for name in os.listdir(dirpath):
        if name.startswith("simple-chars-l") and name.endswith(".json"):
            with open(os.path.join(dirpath, name)) as fh:
                table = SimpleCharTable.from_jsonable(json.load(fh))
            _simple_tables.setdefault(table.l, table)


def save_simple_tables(dirpath) -> None:
    import os

    os.makedirs(dirpath, exist_ok=True)
    for l, table in _simple_tables.items():
        if not table.cache:
            continue
        path = os.path.join(dirpath, f"simple-chars-l{l}.json")
        with open(path, "w") as fh:
            json.dump(table.to_jsonable(), fh)


def _is_restricted(lam: Weight, l: int) -> bool:
    return 0 <= lam[0] <= l - 1 and 0 <= lam[1] <= l - 1


def _restricted_simple_char_uncached(lam: Weight, l: int) -> FormalChar:
    if not _is_restricted(lam, l):
        raise ValueError(f"{lam} is not a restricted weight for l={l}")
    if facet_classify(lam, l) is FacetType.UP_ALCOVE:
        # Up-alcove induced modules have exactly two composition factors; the
        # head is the mirror weight in the alcove below.
        u, v = lam
        mirror = Weight(l - v - 2, l - u - 2)
        return weyl_char(lam) - weyl_char(mirror)
    return weyl_char(lam)


def restricted_simple_char(lam: Weight, l: int) -> FormalChar:
    """Character of the restricted simple module of highest weight lam."""
    return simple_table(l).get(Weight(*lam))


def small_nabla_factors(lam: Weight, l: int) -> list[Weight]:
    """Composition factor weights, socle first, of the small induced modules.

    Covers the four ranges where the induced module has at most two factors:
    restricted non-up-alcove weights, restricted up-alcove weights, and the
    two strips l(1,0) + C-closure and l(0,1) + C-closure.
    """
    lam = Weight(*lam)
    cls, res = decompose(lam, l)
    if cls == Weight(0, 0):
        if not _is_restricted(lam, l):
            raise ValueError(f"{lam} is outside the small induced-module ranges for l={l}")
        if facet_classify(lam, l) is FacetType.UP_ALCOVE:
            u, v = lam
            return [lam, Weight(l - v - 2, l - u - 2)]
        return [lam]
    if cls == Weight(1, 0) and res[0] + res[1] <= l - 2:
        r, s = res
        return [lam, Weight(l - r - 2, r + s + 1)]
    if cls == Weight(0, 1) and res[0] + res[1] <= l - 2:
        r, s = res
        return [lam, Weight(r + s + 1, l - r - 2)]
    raise ValueError(
        f"{lam} is outside the small induced-module ranges for l={l}: need a "
        "restricted weight, or l(1,0)+(r,s) or l(0,1)+(r,s) with r+s <= l-2"
    )


def chi_l(mu: Weight, l: int) -> FormalChar:
    """Twisted-tensor character: euler_char of the classical part, twisted,
    times the restricted simple character.  Zero when the classical part is
    singular; a negated character when it is regular non-dominant."""
    cls, res = decompose(mu, l)
    eu = euler_char(cls)
    if not eu:
        return ZERO_CHAR
    return frobenius_twist(eu, l) * restricted_simple_char(res, l)


def simple_char_p0(lam: Weight, l: int, p: int = 0) -> FormalChar:
    """Simple character via the twisted tensor factorization, characteristic 0.

    In positive characteristic the classical factor is no longer an induced
    module and its character is not available here, so p != 0 is refused.
    """
    if p != 0:
        raise ValueError("simple characters are only computed in characteristic 0")
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"simple_char_p0 needs a dominant weight, got {lam}")
    cls, res = decompose(lam, l)
    return frobenius_twist(weyl_char(cls), l) * restricted_simple_char(res, l)


def decompose_into_weyl(x: FormalChar) -> dict[Weight, int]:
    """Write a W-invariant character as an integer combination of weyl_chars.

    Greedy peeling by the dominance-maximal support weight; exact for any
    genuine (possibly virtual) finite-dimensional character.
    """
    rem = x
    out: dict[Weight, int] = {}
    while rem:
        top = rem.leading_weight()
        if not top.is_dominant():
            raise ValueError(f"support is not W-invariant: leading weight {top}")
        c = rem.coeffs[top]
        out[top] = c
        rem = rem - weyl_char(top) * c
    return out


def tensor_multiplicity(target: Weight, x: Weight, y: Weight) -> int:
    """Multiplicity of the induced character of `target` in weyl(x)*weyl(y)."""
    return decompose_into_weyl(weyl_char(x) * weyl_char(y)).get(Weight(*target), 0)
