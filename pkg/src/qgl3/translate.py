"""Translation of twisted-tensor filtration factors between facets.

Translating onto a wall either relabels a factor or kills it, depending on
whether the image lies in the upper closure of the source facet.  Off a
wall, the translate of a single factor carries a good filtration whose
(classical, restricted) factor pairs are given by fixed case tables; an
entry with non-dominant classical part stands for the zero module but is
kept, flagged, so the lists match the displayed shapes.

The off-wall table for a right-wall source prints one of its interior rows
twice in its source; the duplicate is dropped here, which is what both the
generic factor count 6+6+3+3 = 18 and the exact aggregate character
identity require.
"""

from __future__ import annotations

from dataclasses import dataclass

from qgl3.charring import FormalChar, frobenius_twist, restricted_simple_char, weyl_char
from qgl3.decomp import chi_decomposition
from qgl3.lattice import (
    POSITIVE_ROOTS,
    FacetType,
    PositiveRoot,
    Weight,
    affine_reflect,
    apply_wall_reflections,
    classify_restricted,
    decompose,
    facet_classify,
    facet_stabilizer_walls,
    facet_windows,
    fundamental_rep,
    in_closure,
    in_upper_closure,
    pairing,
    stabilizer_orbit,
)


@dataclass(frozen=True)
class WallTranslationResult:
    input: Weight
    output: Weight | None


@dataclass(frozen=True)
class OffWallEntry:
    classical: Weight
    restricted: Weight

    def as_weight(self, l: int) -> Weight:
        return l * self.classical + self.restricted

    @property
    def vanishes(self) -> bool:
        return not self.classical.is_dominant()

    def character(self, l: int) -> FormalChar:
        if self.vanishes:
            return FormalChar()
        return frobenius_twist(weyl_char(self.classical), l) * restricted_simple_char(
            self.restricted, l
        )


@dataclass(frozen=True)
class OffWallFactorList:
    factors: tuple[OffWallEntry, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def character(self, l: int) -> FormalChar:
        out = FormalChar()
        for f in self.factors:
            out = out + f.character(l)
        return out

    def to_jsonable(self) -> list:
        return [
            {
                "classical": list(f.classical),
                "restricted": list(f.restricted),
                "vanishes": f.vanishes,
            }
            for f in self.factors
        ]


def translate_onto_wall(
    nu: Weight, lam_orbit: Weight, mu_orbit: Weight, l: int
) -> WallTranslationResult:
    """Translate the factor of weight nu from the orbit of lam_orbit to the
    orbit of mu_orbit; the image survives exactly when it lies in the upper
    closure of nu's facet."""
    nu, lam_orbit, mu_orbit = Weight(*nu), Weight(*lam_orbit), Weight(*mu_orbit)
    if not nu.is_dominant():
        raise ValueError(f"translate_onto_wall needs a dominant weight, got {nu}")
    rep, moves = fundamental_rep(nu, l)
    if rep != Weight(*lam_orbit):
        raise ValueError(
            f"{nu} is not in the orbit of {lam_orbit} (representative {rep}, l={l})"
        )
    lam_windows = facet_windows(lam_orbit, l)
    if not in_closure(mu_orbit, lam_windows, l):
        raise ValueError(f"{mu_orbit} is not in the closure of the facet of {lam_orbit}")
    stab_walls = facet_stabilizer_walls(lam_orbit, l)
    candidates = {
        apply_wall_reflections(moves, y)
        for y in stabilizer_orbit(mu_orbit, stab_walls, l)
    }
    nu_windows = facet_windows(nu, l)
    survivors = sorted(x for x in candidates if in_upper_closure(x, nu_windows, l))
    if len(survivors) > 1:
        raise RuntimeError(f"ambiguous wall translation for {nu}: {survivors}")
    return WallTranslationResult(nu, survivors[0] if survivors else None)


def _entries(*pairs: tuple[Weight, Weight]) -> OffWallFactorList:
    return OffWallFactorList(tuple(OffWallEntry(c, r) for c, r in pairs))


def translate_off_wall(
    mu_cls: Weight, mu_res: Weight, target_res: Weight, l: int
) -> OffWallFactorList:
    """Factor list, top layer first, of the translate of the twisted-tensor
    factor with classical part mu_cls and wall-type restricted part mu_res
    into the adjacent facet of restricted type target_res."""
    mu_cls = Weight(*mu_cls)
    mu_res = Weight(*mu_res)
    target_res = Weight(*target_res)

    if l == 2:
        key = (tuple(mu_res), tuple(target_res))
        c = mu_cls
        if key == ((1, 0), (0, 0)):
            return _entries(
                (c, Weight(0, 1)),
                (c + Weight(1, 0), Weight(0, 0)),
                (c + Weight(-1, 1), Weight(0, 0)),
                (c + Weight(0, -1), Weight(0, 0)),
                (c, Weight(0, 1)),
            )
        if key == ((0, 1), (0, 0)):
            return _entries(
                (c, Weight(1, 0)),
                (c + Weight(0, 1), Weight(0, 0)),
                (c + Weight(1, -1), Weight(0, 0)),
                (c + Weight(-1, 0), Weight(0, 0)),
                (c, Weight(1, 0)),
            )
        if key in (((0, 0), (1, 0)), ((0, 0), (0, 1))):
            return _entries((c, target_res))
        if key in (((1, 0), (0, 1)), ((0, 1), (1, 0))):
            return _entries((c, Weight(0, 0)))
        raise ValueError(f"unsupported l=2 translation {mu_res} -> {target_res}")

    src = classify_restricted(mu_res, l)
    tgt = classify_restricted(target_res, l)
    c = mu_cls
    if src is FacetType.RIGHT_WALL and tgt is FacetType.DOWN_ALCOVE:
        a, b = target_res
        return _entries(
            (c, Weight(l - a - 2, a + b + 1)),
            (c + Weight(1, 0), target_res),
            (c + Weight(-1, 1), target_res),
            (c + Weight(0, -1), target_res),
            (c, Weight(l - a - b - 3, a)),
            (c, Weight(l - a - 2, a + b + 1)),
        )
    if src is FacetType.LEFT_WALL and tgt is FacetType.DOWN_ALCOVE:
        a, b = target_res
        return _entries(
            (c, Weight(a + b + 1, l - b - 2)),
            (c + Weight(0, 1), target_res),
            (c + Weight(1, -1), target_res),
            (c + Weight(-1, 0), target_res),
            (c, Weight(b, l - a - b - 3)),
            (c, Weight(a + b + 1, l - b - 2)),
        )
    if src is FacetType.HORIZONTAL_WALL and tgt is FacetType.UP_ALCOVE:
        u, v = target_res
        mirror = Weight(l - 2 - v, l - 2 - u)
        return _entries((c, mirror), (c, target_res), (c, mirror))
    raise ValueError(
        f"unsupported translation {mu_res} ({src.value}) -> {target_res} ({tgt.value}) for l={l}"
    )


def _alcove_windows(x: Weight, wall: tuple[PositiveRoot, int], side: str, l: int):
    """Windows of the alcove adjacent to the single-wall weight x, on the
    given side ('above' or 'below') of its wall."""
    root0, value = wall
    out = []
    for root in POSITIVE_ROOTS:
        p = pairing(x, root)
        if root is root0:
            n = value // l + (1 if side == "above" else 0)
        else:
            if p % l == 0:
                raise ValueError(f"{x} lies on more than one wall")
            n = -(-p // l)
        out.append((False, n))
    return tuple(out)


def _single_wall(x: Weight, l: int) -> tuple[PositiveRoot, int] | None:
    walls = facet_stabilizer_walls(x, l)
    return walls[0] if len(walls) == 1 else None


def _in_lower_closure(nu: Weight, windows, l: int) -> bool:
    return in_closure(nu, windows, l) and not in_upper_closure(nu, windows, l)


def _admissible_target(nu: Weight, x: Weight, l: int) -> bool:
    """Does (source nu on a wall, target x) form a supported configuration:
    x inside an alcove with nu in its lower closure, or (walls only) x on a
    wall of an alcove having nu in its lower closure."""
    x_walls = facet_stabilizer_walls(x, l)
    nu_wall = _single_wall(nu, l)
    if nu_wall is None:
        return False
    if not x_walls:
        return _in_lower_closure(nu, facet_windows(x, l), l)
    if len(x_walls) > 1:
        return False
    x_wall = x_walls[0]
    # Target on the upper closure of the alcove below its wall, source on a
    # lower wall of that alcove.
    below = _alcove_windows(x, x_wall, "below", l)
    if _in_lower_closure(nu, below, l):
        return True
    # Both on lower walls of the alcove above the target's wall.
    above = _alcove_windows(x, x_wall, "above", l)
    return x_wall[0] is not nu_wall[0] and _in_lower_closure(nu, above, l)


def local_target(nu: Weight, lam: Weight, l: int) -> Weight:
    """The weight of lam's orbit adjacent to the wall factor nu in the
    configuration the off-wall tables cover."""
    rep_nu, moves = fundamental_rep(nu, l)
    rep_lam, _ = fundamental_rep(lam, l)
    walls = facet_stabilizer_walls(rep_nu, l)
    candidates = {
        apply_wall_reflections(moves, y) for y in stabilizer_orbit(rep_lam, walls, l)
    }
    good = sorted(x for x in candidates if _admissible_target(nu, x, l))
    if len(good) != 1:
        raise RuntimeError(
            f"no unique admissible target for factor {nu} toward {lam} (l={l}): {good}"
        )
    return good[0]


def wall_weight_below(lam: Weight, l: int) -> tuple[Weight, tuple[PositiveRoot, int]]:
    """A dominant single-wall weight on a lower wall of the alcove whose
    upper closure contains lam, together with its wall."""
    lam = Weight(*lam)
    facet = facet_classify(lam, l)
    cls, _ = decompose(lam, l)
    if facet is FacetType.DOWN_ALCOVE:
        walls = [
            (PositiveRoot.ALPHA1, l * cls.a),
            (PositiveRoot.ALPHA2, l * cls.b),
        ]
        windows = facet_windows(lam, l)
    elif facet is FacetType.UP_ALCOVE:
        walls = [(PositiveRoot.RHO, l * (cls.a + cls.b + 1))]
        windows = facet_windows(lam, l)
    elif facet is FacetType.VERTEX:
        raise ValueError(f"{lam} is a vertex weight; no wall below")
    else:
        wall0 = _single_wall(lam, l)
        if wall0 is None:
            raise ValueError(f"{lam} lies on more than one wall")
        windows = _alcove_windows(lam, wall0, "below", l)
        walls = [
            (root, (n - 1) * l)
            for root, (_, n) in zip(POSITIVE_ROOTS, windows)
            if root is not wall0[0]
        ]
    for root, value in walls:
        mu = _wall_point(root, value, windows, l)
        if mu is not None:
            return mu, (root, value)
    raise ValueError(f"no dominant wall point below {lam} (l={l})")


def _wall_point(
    root: PositiveRoot, value: int, windows, l: int
) -> Weight | None:
    """A dominant weight with pairing value `value` against `root`, inside
    the closed windows, and on no other wall."""
    if value < 1:
        return None
    w1 = windows[0]
    w2 = windows[1]
    ranges = {
        PositiveRoot.ALPHA1: ((w1[1] - 1) * l, w1[1] * l),
        PositiveRoot.ALPHA2: ((w2[1] - 1) * l, w2[1] * l),
        PositiveRoot.RHO: ((windows[2][1] - 1) * l, windows[2][1] * l),
    }
    if root is PositiveRoot.RHO:
        lo, hi = ranges[PositiveRoot.ALPHA1]
        for p1 in range(max(lo, 1), hi + 1):
            p2 = value - p1
            lo2, hi2 = ranges[PositiveRoot.ALPHA2]
            if p1 % l and p2 % l and lo2 <= p2 <= hi2 and p2 >= 1:
                return Weight(p1 - 1, p2 - 1)
        return None
    other = PositiveRoot.ALPHA2 if root is PositiveRoot.ALPHA1 else PositiveRoot.ALPHA1
    lo2, hi2 = ranges[other]
    lor, hir = ranges[PositiveRoot.RHO]
    for p2 in range(max(lo2, 1), hi2 + 1):
        pr = value + p2
        if p2 % l and pr % l and lor <= pr <= hir:
            if root is PositiveRoot.ALPHA1:
                return Weight(value - 1, p2 - 1)
            return Weight(p2 - 1, value - 1)
    return None


def translate_factor_lists(
    lam: Weight, l: int
) -> tuple[list[tuple[Weight, OffWallFactorList]], Weight, Weight]:
    """Translate every genuine filtration factor of the wall weight below
    lam into lam's facet.  Returns (factor, translated list) pairs, the
    wall weight, and the mirror image of lam in the wall.

    Only surviving factors are translated: an entry of the raw weight list
    with non-dominant classical part is the zero module, and the zero
    module translates to zero.
    """
    lam = Weight(*lam)
    mu, (root, value) = wall_weight_below(lam, l)
    lists = []
    for nu in chi_decomposition(mu, l).surviving_factors():
        x = local_target(nu, lam, l)
        ncls, nres = decompose(nu, l)
        xres = decompose(x, l).restricted
        lists.append((nu, translate_off_wall(ncls, nres, xres, l)))
    mirror = affine_reflect(lam, root, value, 1)
    return lists, mu, mirror


def translate_nabla_factor_count(lam: Weight, l: int) -> int:
    """Number of factors of the translate of the wall weight below lam,
    for generic lam: 18 when l >= 3, 8 when l = 2.

    Generic means every source factor and every translated entry has a
    dominant (hence regular) classical part; non-generic inputs are
    rejected since the counts are only asserted generically.
    """
    lam = Weight(*lam)
    if l >= 3 and facet_classify(lam, l) not in (
        FacetType.DOWN_ALCOVE,
        FacetType.UP_ALCOVE,
    ):
        raise ValueError(f"{lam} is not an alcove weight for l={l}")
    lists, mu, _ = translate_factor_lists(lam, l)
    for nu in chi_decomposition(mu, l).factors:
        if not decompose(nu, l).classical.is_dominant():
            raise ValueError(f"non-generic: source factor {nu} has non-dominant classical part")
    for _, lst in lists:
        for entry in lst.factors:
            if entry.vanishes:
                raise ValueError(
                    f"non-generic: translated entry {entry.classical}|{entry.restricted} vanishes"
                )
    return sum(len(lst) for _, lst in lists)


def translated_character(lam: Weight, l: int) -> tuple[FormalChar, Weight]:
    """Character of the full translate and the mirror weight whose induced
    character it contains alongside lam's."""
    lists, _, mirror = translate_factor_lists(lam, l)
    total = FormalChar()
    for _, lst in lists:
        total = total + lst.character(l)
    return total, mirror
