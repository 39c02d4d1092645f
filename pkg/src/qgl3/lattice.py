"""Weight lattice, affine Weyl group and facet combinatorics for type A2.

Weights are written in fundamental-weight coordinates for SL3: the pair
(a, b) stands for a*omega_1 + b*omega_2.  The three positive roots are
alpha1 = (2,-1), alpha2 = (-1,2) and their sum rho = (1,1), and coroots are
identified with roots.  All affine reflections act through the dot action
w . x = w(x + rho) - rho, so the relevant pairing is <x + rho, beta~>.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator, NamedTuple


class Weight(NamedTuple):
    a: int
    b: int

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a + other[0], self.b + other[1])

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a - other[0], self.b - other[1])

    def __neg__(self) -> "Weight":
        return Weight(-self.a, -self.b)

    def __mul__(self, k: int) -> "Weight":
        if not isinstance(k, int):
            return NotImplemented
        return Weight(self.a * k, self.b * k)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


RHO = Weight(1, 1)


class PositiveRoot(Enum):
    ALPHA1 = 1
    ALPHA2 = 2
    RHO = 3

    @property
    def vector(self) -> Weight:
        return _ROOT_VECTORS[self]


_ROOT_VECTORS = {
    PositiveRoot.ALPHA1: Weight(2, -1),
    PositiveRoot.ALPHA2: Weight(-1, 2),
    PositiveRoot.RHO: Weight(1, 1),
}

POSITIVE_ROOTS = (PositiveRoot.ALPHA1, PositiveRoot.ALPHA2, PositiveRoot.RHO)
SIMPLE_ROOTS = (PositiveRoot.ALPHA1, PositiveRoot.ALPHA2)


class FacetType(Enum):
    VERTEX = "vertex"
    RIGHT_WALL = "right-wall"
    LEFT_WALL = "left-wall"
    HORIZONTAL_WALL = "horizontal-wall"
    DOWN_ALCOVE = "down-alcove"
    UP_ALCOVE = "up-alcove"


class RestrictedDecomposition(NamedTuple):
    classical: Weight
    restricted: Weight


def pairing(lam: Weight, root: PositiveRoot) -> int:
    """Return <lam + rho, root~>: a+1, b+1 or a+b+2."""
    a, b = lam
    if root is PositiveRoot.ALPHA1:
        return a + 1
    if root is PositiveRoot.ALPHA2:
        return b + 1
    return a + b + 2


def decompose(lam: Weight, l: int) -> RestrictedDecomposition:
    """Split lam = l*classical + restricted with restricted in [0, l-1]^2.

    The classical part may be non-dominant; the restricted part is always
    the componentwise residue of lam mod l.
    """
    if l < 2:
        raise ValueError(f"need l >= 2, got {l}")
    a, b = lam
    ra, rb = a % l, b % l
    return RestrictedDecomposition(Weight((a - ra) // l, (b - rb) // l), Weight(ra, rb))


def affine_reflect(lam: Weight, root: PositiveRoot, m: int, step: int = 1) -> Weight:
    """Dot-action reflection in the hyperplane <x + rho, root~> = m*step."""
    if step < 1:
        raise ValueError(f"need step >= 1, got {step}")
    c = pairing(lam, root) - m * step
    v = root.vector
    return Weight(lam[0] - c * v[0], lam[1] - c * v[1])


def dominantize(lam: Weight) -> tuple[int, Weight]:
    """Normalize lam under the finite dot action.

    Returns (0, lam) when lam is singular (some pairing vanishes), otherwise
    (det w, w . lam) for the unique w making the image dominant; the sign is
    the parity of the simple dot reflections applied.
    """
    cur = Weight(*lam)
    sign = 1
    while True:
        p1 = pairing(cur, PositiveRoot.ALPHA1)
        p2 = pairing(cur, PositiveRoot.ALPHA2)
        if p1 == 0 or p2 == 0 or p1 + p2 == 0:
            return 0, Weight(*lam)
        if p1 < 0:
            cur = affine_reflect(cur, PositiveRoot.ALPHA1, 0)
            sign = -sign
        elif p2 < 0:
            cur = affine_reflect(cur, PositiveRoot.ALPHA2, 0)
            sign = -sign
        else:
            return sign, cur


def classify_restricted(res: Weight, l: int) -> FacetType:
    """Facet type read off a restricted weight in [0, l-1]^2."""
    r, s = res
    if not (0 <= r <= l - 1 and 0 <= s <= l - 1):
        raise ValueError(f"{res} is not restricted for l={l}")
    if r == l - 1 and s == l - 1:
        return FacetType.VERTEX
    if r == l - 1:
        return FacetType.RIGHT_WALL
    if s == l - 1:
        return FacetType.LEFT_WALL
    if r + s == l - 2:
        return FacetType.HORIZONTAL_WALL
    if r + s <= l - 3:
        return FacetType.DOWN_ALCOVE
    return FacetType.UP_ALCOVE


def facet_classify(lam: Weight, l: int) -> FacetType:
    """Classify the affine facet of a dominant weight by its restricted part."""
    if not Weight(*lam).is_dominant():
        raise ValueError(f"facet_classify needs a dominant weight, got {lam}")
    return classify_restricted(decompose(lam, l).restricted, l)


def fundamental_rep(lam: Weight, l: int) -> tuple[Weight, list[tuple[PositiveRoot, int]]]:
    """Pull lam into the fundamental domain 0 <= <x+rho, alpha_i~>, <x+rho, rho~> <= l.

    Returns the representative together with the reflection walls applied, in
    order, as (root, wall value) pairs.  The loop is capped defensively; the
    true number of steps is far below the cap.
    """
    cur = Weight(*lam)
    moves: list[tuple[PositiveRoot, int]] = []
    cap = 10 * (abs(lam[0]) + abs(lam[1]) + l) + 20
    for _ in range(cap):
        p1 = pairing(cur, PositiveRoot.ALPHA1)
        p2 = pairing(cur, PositiveRoot.ALPHA2)
        pr = pairing(cur, PositiveRoot.RHO)
        if p1 < 0:
            cur = affine_reflect(cur, PositiveRoot.ALPHA1, 0)
            moves.append((PositiveRoot.ALPHA1, 0))
        elif p2 < 0:
            cur = affine_reflect(cur, PositiveRoot.ALPHA2, 0)
            moves.append((PositiveRoot.ALPHA2, 0))
        elif pr > l:
            cur = affine_reflect(cur, PositiveRoot.RHO, 1, l)
            moves.append((PositiveRoot.RHO, l))
        else:
            return cur, moves
    raise RuntimeError(f"fundamental_rep did not converge for {lam} (l={l})")


def apply_wall_reflections(moves: list[tuple[PositiveRoot, int]], x: Weight) -> Weight:
    """Apply the inverse of a recorded reflection word to x.

    If the word s_k ... s_1 maps nu to its representative, this maps
    representative-side data back to nu's side: x -> s_1 ... s_k (x).
    Each move is (root, absolute wall value).
    """
    cur = Weight(*x)
    for root, wall in reversed(moves):
        cur = affine_reflect(cur, root, wall, 1)
    return cur


def linked(lam: Weight, mu: Weight, l: int) -> bool:
    """True when lam and mu lie in the same affine dot orbit."""
    return fundamental_rep(lam, l)[0] == fundamental_rep(mu, l)[0]


def dual_weight(lam: Weight) -> Weight:
    """Contragredient weight -w0(lam) = (b, a)."""
    return Weight(lam[1], lam[0])


def ordinary_pairing(lam: Weight, root: PositiveRoot) -> int:
    return pairing(lam, root) - pairing(Weight(0, 0), root)


def ordinary_reflect(lam: Weight, root: PositiveRoot) -> Weight:
    """Linear (non-dot) reflection in the hyperplane <x, root~> = 0."""
    c = ordinary_pairing(lam, root)
    v = root.vector
    return Weight(lam[0] - c * v[0], lam[1] - c * v[1])


def weyl_group_elements() -> Iterator[tuple[int, tuple[PositiveRoot, ...]]]:
    """The six elements of the finite Weyl group as reduced words with signs."""
    s1, s2 = PositiveRoot.ALPHA1, PositiveRoot.ALPHA2
    yield 1, ()
    yield -1, (s1,)
    yield -1, (s2,)
    yield 1, (s1, s2)
    yield 1, (s2, s1)
    yield -1, (s1, s2, s1)


def ordinary_orbit(lam: Weight) -> list[tuple[int, Weight]]:
    """All (sign, w(lam)) pairs over the finite Weyl group, with repeats."""
    out = []
    for sign, word in weyl_group_elements():
        cur = Weight(*lam)
        for root in reversed(word):
            cur = ordinary_reflect(cur, root)
        out.append((sign, cur))
    return out


def ordinary_dominant_rep(lam: Weight) -> Weight:
    """Dominant representative of lam under the linear Weyl action."""
    x = sorted((lam[0] + lam[1], lam[1], 0), reverse=True)
    return Weight(x[0] - x[1], x[1] - x[2])


def dominance_key(w: Weight) -> tuple[int, int]:
    """Sort key compatible with the dominance order on W-invariant supports."""
    return (w[0] + w[1], w[0])


# Facet windows: for each positive root either the wall value (on_wall) or the
# open window ((n-1)l, nl) containing the pairing.


def facet_windows(lam: Weight, l: int) -> tuple[tuple[bool, int], ...]:
    out = []
    for root in POSITIVE_ROOTS:
        p = pairing(lam, root)
        if p % l == 0:
            out.append((True, p // l))
        else:
            out.append((False, -(-p // l)))
    return tuple(out)


def in_closure(x: Weight, windows: tuple[tuple[bool, int], ...], l: int) -> bool:
    for root, (on_wall, n) in zip(POSITIVE_ROOTS, windows):
        p = pairing(x, root)
        if on_wall:
            if p != n * l:
                return False
        elif not (n - 1) * l <= p <= n * l:
            return False
    return True


def in_upper_closure(x: Weight, windows: tuple[tuple[bool, int], ...], l: int) -> bool:
    for root, (on_wall, n) in zip(POSITIVE_ROOTS, windows):
        p = pairing(x, root)
        if on_wall:
            if p != n * l:
                return False
        elif not (n - 1) * l < p <= n * l:
            return False
    return True


def facet_stabilizer_walls(lam: Weight, l: int) -> list[tuple[PositiveRoot, int]]:
    """Walls through lam, as (root, wall value) reflection data."""
    return [
        (root, pairing(lam, root))
        for root in POSITIVE_ROOTS
        if pairing(lam, root) % l == 0
    ]


def stabilizer_orbit(x: Weight, walls: list[tuple[PositiveRoot, int]], l: int) -> set[Weight]:
    """Orbit of x under the reflections in the given walls (closed under words)."""
    for _, value in walls:
        if value % l != 0:
            raise ValueError("stabilizer wall value must be a multiple of l")
    seen = {Weight(*x)}
    frontier = [Weight(*x)]
    while frontier:
        cur = frontier.pop()
        for root, value in walls:
            img = affine_reflect(cur, root, value, 1)
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return seen
