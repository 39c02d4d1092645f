"""First extension groups between simple modules.

The restricted-kernel Ext groups are finite lookup tables whose values are
classical characters (trivial or twisted induced of a fundamental weight);
the thickened-kernel and full-group Ext dimensions reduce to these tables
by exact character arithmetic in characteristic zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from qgl3.charring import (
    FormalChar,
    ONE_CHAR,
    tensor_multiplicity,
    weyl_char,
    weyl_dimension,
)
from qgl3.decomp import zhat_factors
from qgl3.lattice import (
    FacetType,
    Weight,
    classify_restricted,
    decompose,
    dual_weight,
)

ExtPart = Union[str, Weight]  # "k" or the untwisted induced weight

TRIV = "k"
NABLA01 = Weight(0, 1)
NABLA10 = Weight(1, 0)


@dataclass(frozen=True)
class ExtValue:
    """Multiset of labels realizing a restricted-kernel Ext group."""

    parts: tuple[ExtPart, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def dimension(self) -> int:
        return sum(1 if p == TRIV else weyl_dimension(p) for p in self.parts)

    def realization(self) -> FormalChar:
        out = FormalChar()
        for p in self.parts:
            out = out + (ONE_CHAR if p == TRIV else weyl_char(p))
        return out

    def labels(self) -> list[str]:
        return sorted(TRIV if p == TRIV else f"nabla({p[0]},{p[1]})" for p in self.parts)

    @classmethod
    def from_labels(cls, labels) -> "ExtValue":
        parts = []
        for label in labels:
            if label == TRIV:
                parts.append(TRIV)
            elif label.startswith("nabla(") and label.endswith(")"):
                a, b = label[6:-1].split(",")
                parts.append(Weight(int(a), int(b)))
            else:
                raise ValueError(f"bad ext label {label!r}")
        return cls(_normalize(parts))

    def label_dual(self) -> "ExtValue":
        return ExtValue(_normalize(TRIV if p == TRIV else dual_weight(p) for p in self.parts))


def _normalize(parts) -> tuple[ExtPart, ...]:
    return tuple(sorted(parts, key=lambda p: ("", 0, 0) if p == TRIV else ("n", p[0], p[1])))


EXT_ZERO = ExtValue()
_L3_FULL = ExtValue(_normalize([TRIV, NABLA01, NABLA10]))


def _require_restricted(w: Weight, l: int) -> Weight:
    w = Weight(*w)
    if not (0 <= w.a <= l - 1 and 0 <= w.b <= l - 1):
        raise ValueError(f"{w} is not restricted for l={l}")
    return w


def ext1_g1(alpha: Weight, beta: Weight, l: int) -> ExtValue:
    """Ext^1 over the Frobenius kernel between restricted simples.

    Nonzero only inside the wall triples {(r,s), (l-1,r), (s,l-1)} with
    r+s = l-2, and between a down-alcove weight and the three weights
    adjacent to its mirror pair.  For l = 3 the alcove entries all become
    k + nabla(0,1) + nabla(1,0).  Steinberg rows and columns, and the
    diagonal, vanish.
    """
    alpha = _require_restricted(alpha, l)
    beta = _require_restricted(beta, l)
    if alpha == beta:
        return EXT_ZERO

    # Wall triples, one per 0 <= r <= l-2.
    for r in range(l - 1):
        s = l - 2 - r
        w_mid, w_right, w_left = Weight(r, s), Weight(l - 1, r), Weight(s, l - 1)
        entries = {
            (w_mid, w_right): ExtValue((NABLA01,)),
            (w_mid, w_left): ExtValue((NABLA10,)),
            (w_right, w_mid): ExtValue((NABLA10,)),
            (w_left, w_mid): ExtValue((NABLA01,)),
        }
        hit = entries.get((alpha, beta))
        if hit is not None:
            return hit

    # Alcove pairs: alpha in the open fundamental alcove paired with weights
    # around its up-alcove mirror, and the transposed block.
    def alcove_entry(rs: Weight, target: Weight, down_to_up: bool) -> ExtValue | None:
        r, s = rs
        if down_to_up:
            cols = {
                Weight(l - s - 2, l - r - 2): ExtValue((TRIV,)),
                Weight(r + s + 1, l - s - 2): ExtValue((NABLA01,)),
                Weight(l - r - 2, r + s + 1): ExtValue((NABLA10,)),
            }
        else:
            cols = {
                Weight(r, s): ExtValue((TRIV,)),
                Weight(s, l - r - s - 3): ExtValue((NABLA01,)),
                Weight(l - r - s - 3, r): ExtValue((NABLA10,)),
            }
        hit = cols.get(target)
        if hit is None:
            return None
        return _L3_FULL if l == 3 else hit

    if classify_restricted(alpha, l) is FacetType.DOWN_ALCOVE:
        hit = alcove_entry(alpha, beta, down_to_up=True)
        if hit is not None:
            return hit
    if classify_restricted(alpha, l) is FacetType.UP_ALCOVE:
        rs = Weight(l - alpha.b - 2, l - alpha.a - 2)
        hit = alcove_entry(rs, beta, down_to_up=False)
        if hit is not None:
            return hit
    return EXT_ZERO


def ext1_g(mu: Weight, lam: Weight, l: int, p: int = 0) -> int:
    """dim Ext^1 between full simple modules.  Always 0 or 1.

    Equal restricted parts reduce to the classical parts recursively at the
    same l, i.e. the Frobenius quotient is taken to carry the same
    combinatorics one level up (the reading under which the printed small
    extension families hold uniformly, and the analogue of the l^i rule
    used at the thickened-kernel level); distinct restricted parts pair the
    restricted-kernel table value against the classical parts by exact
    tensor multiplicities.  Only the characteristic-zero pairing rule is
    implemented, so p != 0 is refused.
    """
    if p != 0:
        raise ValueError("ext1_g is only computed in characteristic 0")
    mu, lam = Weight(*mu), Weight(*lam)
    if not (mu.is_dominant() and lam.is_dominant()):
        raise ValueError(f"ext1_g needs dominant weights, got {mu}, {lam}")
    if mu == lam:
        return 0
    mc, mr = decompose(mu, l)
    lc, lr = decompose(lam, l)
    if mr == lr:
        return ext1_g(mc, lc, l, p)
    total = 0
    for part in ext1_g1(mr, lr, l).parts:
        if part == TRIV:
            total += int(mc == lc)
        else:
            total += tensor_multiplicity(mc, part, lc)
    if total > 1:
        raise AssertionError(f"ext1_g({mu}, {lam}) exceeded dimension one")
    return total


def _is_l_power(t: int, l: int) -> bool:
    if t < 1:
        return False
    while t % l == 0:
        t //= l
    return t == 1


def ext1_g1b_general(lam: Weight, mu: Weight, l: int, p: int = 0) -> int:
    """dim Ext^1 between simple thickened-kernel modules, characteristic 0.

    Dominant classical difference: pair the restricted-kernel table value
    against the twisted induced character of the difference.  Non-dominant
    difference: exactly the pairs with equal restricted parts differing by
    -l^i times a simple root extend, one-dimensionally.
    """
    if p != 0:
        raise ValueError("ext1_g1b_general is only computed in characteristic 0")
    lam, mu = Weight(*lam), Weight(*mu)
    lc, lr = decompose(lam, l)
    mc, mr = decompose(mu, l)
    diff = mc - lc
    if diff.is_dominant():
        if lr == mr:
            return 0
        total = 0
        for part in ext1_g1(lr, mr, l).parts:
            if part == TRIV:
                total += int(diff == Weight(0, 0))
            else:
                total += int(dual_weight(part) == diff)
        if total > 1:
            raise AssertionError(f"ext1_g1b_general({lam}, {mu}) exceeded dimension one")
        return total
    if lr != mr:
        return 0
    for root_vec in (Weight(2, -1), Weight(-1, 2)):
        v = -diff
        # v = t * root_vec with t a (possibly trivial) power of l
        if root_vec.a and v.a % root_vec.a == 0:
            t = v.a // root_vec.a
            if t * root_vec == v and _is_l_power(t, l):
                return 1
    return 0


# Extension tables between the composition factors of a Borel-induced
# module, indexed by (row, column) positions in the socle-first factor list
# of zhat_factors.  Rows label the upper factor, columns the lower one.

_CHAIN_PAIRS = {(2, 1), (3, 2), (4, 3)}
_DIAMOND_PAIRS = {(2, 1), (3, 1), (4, 2), (4, 3)}
_DOWN_PAIRS = {
    (2, 1), (2, 6),
    (3, 2),
    (4, 1), (4, 8),
    (5, 4),
    (6, 2), (6, 5),
    (7, 2), (7, 4), (7, 9),
    (8, 3), (8, 4),
    (9, 6), (9, 7), (9, 8),
}
# The up-alcove table is the duality image of the down-alcove one under the
# factor correspondence induced by dualizing the induced module; the printed
# version carries one stray entry (row of the socle factor, first column)
# that both that correspondence and the general reduction rule exclude.
_UP_PAIRS = {
    (1, 7),
    (2, 1), (2, 5), (2, 8),
    (3, 2), (3, 9),
    (4, 8),
    (5, 2), (5, 4),
    (6, 5),
    (7, 4), (7, 9),
    (8, 4),
    (9, 6), (9, 7), (9, 8),
}

_PAIRS_BY_FACET = {
    FacetType.VERTEX: frozenset(),
    FacetType.RIGHT_WALL: frozenset(_CHAIN_PAIRS),
    FacetType.LEFT_WALL: frozenset(_CHAIN_PAIRS),
    FacetType.HORIZONTAL_WALL: frozenset({(3, 1), (2, 1), (4, 3), (4, 2)}),
    FacetType.DOWN_ALCOVE: frozenset(_DOWN_PAIRS),
    FacetType.UP_ALCOVE: frozenset(_UP_PAIRS),
}


def ext1_g1b(mu: Weight, lam: Weight, eta: Weight, l: int) -> int:
    """Table lookup: dim Ext^1(upper lam, lower eta) among the composition
    factors of the Borel-induced module of weight mu."""
    mu, lam, eta = Weight(*mu), Weight(*lam), Weight(*eta)
    factors = zhat_factors(mu, l)
    index = {f: i + 1 for i, f in enumerate(factors)}
    if len(index) != len(factors):
        raise ValueError(f"degenerate factor list for {mu}")
    missing = [w for w in (lam, eta) if w not in index]
    if missing:
        raise ValueError(
            f"{missing[0]} is not a composition factor of the induced module of "
            f"weight {mu} (l={l}); factors are {[tuple(f) for f in factors]}"
        )
    facet = classify_restricted(decompose(mu, l).restricted, l)
    return int((index[lam], index[eta]) in _PAIRS_BY_FACET[facet])


# Socle of the tensor with the fundamental three-dimensional module, one row
# per restricted weight pattern.  Each row carries the least l for which it
# is stated.  The (0, l-1) row is an editorial reconstruction of a malformed
# printed entry and is excluded from acceptance checks.


def socle_editorial_inputs(l: int) -> set[Weight]:
    return {Weight(0, l - 1)}


def _socle_row(res: Weight, l: int) -> list[Weight]:
    r, s = res

    def deep_down() -> bool:
        return r >= 1 and s >= 1 and r + s <= l - 3

    rows = [
        (r == 0 and s == 0, 2, [Weight(1, 0)]),
        (r == 0 and 1 <= s <= l - 3, 4, [Weight(1, s), Weight(0, s - 1)]),
        (r == 0 and s == l - 2, 3, [Weight(0, l - 3)]),
        (1 <= r <= l - 3 and r + s == l - 2, 4, [Weight(r, s - 1), Weight(r - 1, s + 1)]),
        (s == 0 and 1 <= r <= l - 2, 3, [Weight(r + 1, 0), Weight(r - 1, 1)]),
        (deep_down(), 4, [Weight(r + 1, s), Weight(r - 1, s + 1), Weight(r, s - 1)]),
        (r == 0 and s == l - 1, 2, [Weight(1, l - 1), Weight(0, l - 2)]),
        (s == l - 1 and 1 <= r <= l - 2, 3, [Weight(r + 1, l - 1), Weight(r, l - 2)]),
        (r == l - 1 and s == l - 1, 2, [Weight(l - 1, l - 2)]),
        (r == 1 and s == l - 2, 3, [Weight(2, l - 2), Weight(0, l - 1)]),
        (s == l - 2 and 2 <= r <= l - 2, 4,
         [Weight(r + 1, l - 2), Weight(r, l - 3), Weight(r - 1, l - 3)]),
        (2 <= r <= l - 3 and r + s == l - 1, 4, [Weight(r + 1, s), Weight(r - 1, s + 1)]),
        (r == l - 2 and s == 1, 4, [Weight(l - 1, 1), Weight(l - 3, 2)]),
        (r == l - 1 and s == 0, 2, [Weight(l - 2, 1)]),
        (r == l - 1 and 1 <= s <= l - 2, 3, [Weight(l - 2, s + 1), Weight(l - 1, s - 1)]),
        (r == l - 2 and 2 <= s <= l - 2, 4, [Weight(l - 1, s), Weight(l - 2, s - 1), Weight(l - 3, s + 1)]),
        (classify_restricted(res, l) is FacetType.UP_ALCOVE, 4,
         [Weight(r + 1, s), Weight(r - 1, s + 1), Weight(r, s - 1)]),
    ]
    blocked = None
    for matches, l_min, out in rows:
        if matches:
            if l >= l_min:
                return out
            blocked = l_min
    if blocked is not None:
        raise ValueError(f"socle table row for {res} requires l >= {blocked}, got {l}")
    raise ValueError(f"no socle table row covers {res} for l={l}")


def socle_fundamental_tensor(lam: Weight, l: int, which: Weight = Weight(1, 0)) -> list[Weight]:
    """Socle weights of L(which) tensor L(lam), which in {(1,0), (0,1)}.

    The restricted table row is shifted by l times the classical part; the
    (0,1) case is the coordinate-swap dual of the (1,0) case.
    """
    lam = Weight(*lam)
    which = Weight(*which)
    if not lam.is_dominant():
        raise ValueError(f"socle_fundamental_tensor needs a dominant weight, got {lam}")
    if which == Weight(0, 1):
        return [dual_weight(w) for w in socle_fundamental_tensor(dual_weight(lam), l)]
    if which != Weight(1, 0):
        raise ValueError(f"which must be (1,0) or (0,1), got {which}")
    cls, res = decompose(lam, l)
    return [l * cls + entry for entry in _socle_row(res, l)]
