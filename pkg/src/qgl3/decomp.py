"""Character decomposition of induced modules into twisted-tensor factors.

chi_decomposition writes the induced character of a dominant weight as a
signed sum of chi_l terms, one family of factor weights per facet type;
zhat_factors gives the analogous composition-factor weights for the modules
induced from the Borel to the first-kernel thickening, whose character is
the l^3-dimensional product zhat_char.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from qgl3.charring import FormalChar, chi_l, restricted_simple_char
from qgl3.lattice import (
    FacetType,
    POSITIVE_ROOTS,
    Weight,
    classify_restricted,
    decompose,
    dominantize,
)

_CASE_BY_FACET = {
    FacetType.VERTEX: "i",
    FacetType.RIGHT_WALL: "ii",
    FacetType.LEFT_WALL: "iii",
    FacetType.HORIZONTAL_WALL: "iv",
    FacetType.DOWN_ALCOVE: "v",
    FacetType.UP_ALCOVE: "vi",
}


def down_alcove_family(cls: Weight, res: Weight, l: int) -> list[Weight]:
    """The nine factor weights for lam = l*cls + res with res in the open
    fundamental alcove, in subscript order (factor 1 is lam itself)."""
    a, b = cls
    r, s = res
    la, lb = l * a, l * b
    return [
        Weight(la + r, lb + s),
        Weight(la + r + s + 1, lb - s - 2),
        Weight(la + l - r - s - 3, lb - 2 * l + r),
        Weight(la - r - 2, lb + r + s + 1),
        Weight(la - 2 * l + s, lb + l - r - s - 3),
        Weight(la + s, lb - r - s - 3),
        Weight(la - l + r, lb - l + s),
        Weight(la - r - s - 3, lb + r),
        Weight(la - s - 2, lb - r - 2),
    ]


def up_alcove_family(cls: Weight, res: Weight, l: int) -> list[Weight]:
    """The nine factor weights for lam = l*cls + (l-s-2, l-r-2), subscript
    order (factor 4 is lam itself)."""
    a, b = cls
    u, v = res
    r, s = l - v - 2, l - u - 2
    la, lb = l * a, l * b
    return [
        Weight(la - l + s, lb + 2 * l - r - s - 3),
        Weight(la - r - 2, lb + r + s + 1),
        Weight(la - l + r, lb - l + s),
        Weight(la + l - s - 2, lb + l - r - 2),
        Weight(la - r - s - 3, lb + r),
        Weight(la + 2 * l - r - s - 3, lb - l + r),
        Weight(la + s, lb - r - s - 3),
        Weight(la + r, lb + s),
        Weight(la + r + s + 1, lb - s - 2),
    ]


def _wall_factors_top_down(cls: Weight, res: Weight, facet: FacetType, l: int) -> list[Weight]:
    """Wall-case factor weights in displayed order, highest layer first."""
    a, b = cls
    if facet is FacetType.RIGHT_WALL:
        r = res[1]
        s = l - r - 2
        return [
            l * Weight(a, b - 1) + Weight(s, l - 1),
            l * Weight(a + 1, b - 1) + Weight(r, s),
            l * Weight(a - 1, b) + Weight(r, s),
            l * cls + res,
        ]
    if facet is FacetType.LEFT_WALL:
        s = res[0]
        r = l - s - 2
        return [
            l * Weight(a - 1, b) + Weight(l - 1, r),
            l * Weight(a - 1, b + 1) + Weight(r, s),
            l * Weight(a, b - 1) + Weight(r, s),
            l * cls + res,
        ]
    r, s = res
    return [
        l * Weight(a - 1, b - 1) + Weight(r, s),
        l * Weight(a, b - 1) + Weight(l - 1, r),
        l * Weight(a - 1, b) + Weight(s, l - 1),
        l * cls + res,
    ]


@dataclass(frozen=True)
class DecompResult:
    lam: Weight
    l: int
    facet: FacetType
    case_id: str
    factors: tuple[Weight, ...]

    def character(self) -> FormalChar:
        out = FormalChar()
        for f in self.factors:
            out = out + chi_l(f, self.l)
        return out

    def nonzero_flags(self) -> list[bool]:
        """Per factor: does its chi_l term survive as a virtual character."""
        return [bool(chi_l(f, self.l)) for f in self.factors]

    def surviving_factors(self) -> list[Weight]:
        """Factors that are genuine twisted-tensor modules of the filtration.

        A factor survives when its classical part is dominant and its chi_l
        is not cancelled by an opposite-sign factor with the same normalized
        classical part and restricted part (such pairs occur exactly when
        the classical part of lam touches the dominant boundary).
        """
        net: dict[tuple[Weight, Weight], int] = {}
        rows = []
        for f in self.factors:
            cls, res = decompose(f, self.l)
            sign, rep = dominantize(cls)
            rows.append((f, cls, res, sign, rep))
            if sign:
                key = (rep, res)
                net[key] = net.get(key, 0) + sign
        out = [
            f
            for f, cls, res, sign, rep in rows
            if sign == 1 and cls.is_dominant() and net[(rep, res)] > 0
        ]
        check = FormalChar()
        for f in out:
            check = check + chi_l(f, self.l)
        if check != self.character():
            raise AssertionError(f"factor cancellation bookkeeping failed for {self.lam}")
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "lambda": list(self.lam),
                "l": self.l,
                "case": self.case_id,
                "factors": [list(f) for f in self.factors],
                "nonzero": self.nonzero_flags(),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "DecompResult":
        data = json.loads(text)
        lam = Weight(*data["lambda"])
        return cls(
            lam=lam,
            l=data["l"],
            facet=classify_restricted(decompose(lam, data["l"]).restricted, data["l"]),
            case_id=data["case"],
            factors=tuple(Weight(*f) for f in data["factors"]),
        )


def chi_decomposition(lam: Weight, l: int) -> DecompResult:
    """Factor weights of the good twisted-tensor filtration of the induced
    module of highest weight lam, raw (vanishing chi_l entries included)."""
    lam = Weight(*lam)
    if not lam.is_dominant():
        raise ValueError(f"chi_decomposition needs a dominant weight, got {lam}")
    if l < 2:
        raise ValueError(f"need l >= 2, got {l}")
    cls, res = decompose(lam, l)
    facet = classify_restricted(res, l)
    if facet is FacetType.VERTEX:
        factors = [lam]
    elif facet is FacetType.DOWN_ALCOVE:
        factors = down_alcove_family(cls, res, l)
    elif facet is FacetType.UP_ALCOVE:
        factors = up_alcove_family(cls, res, l)
    else:
        factors = _wall_factors_top_down(cls, res, facet, l)
    return DecompResult(lam, l, facet, _CASE_BY_FACET[facet], tuple(factors))


def zhat_factors(lam: Weight, l: int) -> list[Weight]:
    """Composition-factor weights of the Borel-induced module of weight lam.

    The classical part of lam may be arbitrary; the case split depends only
    on the restricted part.  Wall cases are listed socle first.
    """
    lam = Weight(*lam)
    cls, res = decompose(lam, l)
    facet = classify_restricted(res, l)
    if facet is FacetType.VERTEX:
        return [lam]
    if facet is FacetType.DOWN_ALCOVE:
        return down_alcove_family(cls, res, l)
    if facet is FacetType.UP_ALCOVE:
        return up_alcove_family(cls, res, l)
    if facet is FacetType.RIGHT_WALL:
        r = res[1]
        s = l - r - 2
        return [
            lam,
            l * (cls - Weight(1, 0)) + Weight(r, s),
            l * (cls + Weight(1, -1)) + Weight(r, s),
            l * (cls - Weight(0, 1)) + Weight(s, l - 1),
        ]
    if facet is FacetType.LEFT_WALL:
        s = res[0]
        r = l - s - 2
        return [
            lam,
            l * (cls - Weight(0, 1)) + Weight(r, s),
            l * (cls + Weight(-1, 1)) + Weight(r, s),
            l * (cls - Weight(1, 0)) + Weight(l - 1, r),
        ]
    r, s = res
    return [
        lam,
        l * (cls - Weight(1, 0)) + Weight(s, l - 1),
        l * (cls - Weight(0, 1)) + Weight(l - 1, r),
        l * (cls - Weight(1, 1)) + Weight(r, s),
    ]


def hat_simple_char(nu: Weight, l: int) -> FormalChar:
    """Character of the simple thickened-kernel module of weight nu:
    restricted simple character shifted by the twisted classical part."""
    cls, res = decompose(nu, l)
    return restricted_simple_char(res, l) * FormalChar.basis(l * cls)


def zhat_char(lam: Weight, l: int) -> FormalChar:
    """Character e(lam) * prod over positive roots of (1 + e(-root) + ... +
    e(-(l-1) root)); total dimension l^3."""
    out = FormalChar.basis(Weight(*lam))
    for root in POSITIVE_ROOTS:
        v = root.vector
        geo = FormalChar({Weight(-j * v[0], -j * v[1]): 1 for j in range(l)})
        out = out * geo
    return out


def nabla_l_char(mu: Weight, l: int) -> FormalChar:
    """Character of the twisted-tensor module of weight mu.

    Unlike chi_l this insists the classical part be dominant, separating
    module-level queries from virtual Euler characteristic terms.
    """
    cls, _ = decompose(mu, l)
    if not cls.is_dominant():
        raise ValueError(
            f"{mu} has non-dominant classical part {cls}; no module of this weight"
        )
    return chi_l(mu, l)


def chi_l_expansion(x: FormalChar, l: int, max_terms: int = 100000) -> list[tuple[Weight, int]]:
    """Expand a W-invariant character in the chi_l basis by greedy peeling.

    Valid for characters of modules with a good twisted-tensor filtration
    (and their virtual combinations); terms come out in decreasing
    dominance-key order of the leading weights.
    """
    rem = x
    out: list[tuple[Weight, int]] = []
    for _ in range(max_terms):
        if not rem:
            return out
        top = rem.leading_weight()
        if not top.is_dominant():
            raise ValueError(f"not expandable: leading weight {top} is not dominant")
        c = rem.coeffs[top]
        out.append((top, c))
        rem = rem - chi_l(top, l) * c
    raise ValueError("chi_l expansion did not terminate")


def filtered_linked(x: FormalChar, orbit_of: Weight, l: int) -> FormalChar:
    """Part of a filtered character lying in the dot orbit of orbit_of."""
    from qgl3.lattice import linked

    out = FormalChar()
    for w, c in chi_l_expansion(x, l):
        if linked(w, orbit_of, l):
            out = out + chi_l(w, l) * c
    return out
