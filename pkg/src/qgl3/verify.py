"""Verification sweeps: every module's exact identities over weight boxes.

Each suite yields (case, identity, observed, ok) tuples; a VerifyReport
aggregates them.  All checks are exact integer identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from qgl3.charring import (
    alt_weyl_sum,
    weyl_char,
    weyl_char_alternating,
    weyl_dimension,
)
from qgl3.decomp import chi_decomposition, hat_simple_char, zhat_char, zhat_factors
from qgl3.ext import ext1_g, ext1_g1, ext1_g1b, ext1_g1b_general
from qgl3.homs import hom_exists_mirror, witness_valid, zhat_head_weight
from qgl3.lattice import RHO, FacetType, PositiveRoot, Weight, facet_classify
from qgl3.structure import nabla_l_filtration, validate_graph, zhat_structure
from qgl3.translate import translate_nabla_factor_count, translated_character

Case = tuple[str, str, str, bool]


@dataclass
class VerifyReport:
    suite: str
    cases_run: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def absorb(self, case: Case) -> None:
        name, identity, observed, ok = case
        self.cases_run += 1
        if not ok:
            self.failures.append((name, identity, observed))


def _classical_box(box: int, rows: tuple[int, ...] | None = None) -> Iterator[Weight]:
    first = range(box + 1) if rows is None else rows
    for a, b in itertools.product(first, range(box + 1)):
        yield Weight(a, b)


def _restricted(l: int) -> Iterator[Weight]:
    for r, s in itertools.product(range(l), repeat=2):
        yield Weight(r, s)


def suite_denominator(l: int, box: int, rows: tuple[int, ...] | None = None) -> Iterator[Case]:
    a_rho = alt_weyl_sum(RHO)
    for lam in _classical_box(box, rows):
        ok = alt_weyl_sum(lam + RHO) == weyl_char(lam) * a_rho
        yield (f"lam={lam}", "A(lam+rho) = weyl(lam)*A(rho)", "ok" if ok else "mismatch", ok)
        ok2 = weyl_char_alternating(lam) == weyl_char(lam)
        yield (f"lam={lam}", "quotient path = tableau path", "ok" if ok2 else "mismatch", ok2)


def suite_dimension(l: int, box: int, rows: tuple[int, ...] | None = None) -> Iterator[Case]:
    for lam in _classical_box(box, rows):
        d = weyl_char(lam).dimension
        want = weyl_dimension(lam)
        yield (f"lam={lam}", f"dim = {want}", str(d), d == want)


def suite_decomposition(l: int, box: int, rows: tuple[int, ...] | None = None) -> Iterator[Case]:
    for cls in _classical_box(box, rows):
        for res in _restricted(l):
            lam = l * cls + res
            ok = chi_decomposition(lam, l).character() == weyl_char(lam)
            yield (
                f"l={l} lam={lam}",
                "sum of chi_l factors = weyl character",
                "ok" if ok else "mismatch",
                ok,
            )


def suite_zhat(l: int, box: int, rows: tuple[int, ...] | None = None) -> Iterator[Case]:
    for cls in _classical_box(box, rows):
        for res in _restricted(l):
            lam = l * cls + res
            zc = zhat_char(lam, l)
            total = None
            for nu in zhat_factors(lam, l):
                h = hat_simple_char(nu, l)
                total = h if total is None else total + h
            ok = total == zc and zc.dimension == l**3
            yield (
                f"l={l} lam={lam}",
                "sum of simple characters = induced character, dim l^3",
                "ok" if ok else "mismatch",
                ok,
            )


def suite_translate(l: int, box: int, rows: tuple[int, ...] | None = None) -> Iterator[Case]:
    from qgl3.charring import chi_l
    from qgl3.lattice import facet_windows, fundamental_rep, in_closure
    from qgl3.translate import translate_onto_wall

    b = max(2, min(box, 3))
    rows = None if rows is None else tuple(r for r in rows if r <= b)
    for cls in _classical_box(b, rows):
        for res in _restricted(l):
            lam = l * cls + res
            facet = facet_classify(lam, l)
            if l >= 3 and facet not in (FacetType.DOWN_ALCOVE, FacetType.UP_ALCOVE):
                continue
            if l == 2 and facet is FacetType.VERTEX:
                continue
            try:
                total, mirror = translated_character(lam, l)
            except ValueError:
                continue  # no dominant wall below
            if not mirror.is_dominant():
                continue
            ok = total == weyl_char(lam) + weyl_char(mirror)
            yield (
                f"l={l} lam={lam}",
                "translate character = weyl(lam) + weyl(mirror)",
                "ok" if ok else "mismatch",
                ok,
            )
            if l >= 3:
                # translate the surviving factors onto a wall of the
                # fundamental domain and compare with the image module;
                # meaningful whenever the image of lam itself survives
                rep, _ = fundamental_rep(lam, l)
                wall_rep = Weight(0, l - 2)
                image = None
                if in_closure(wall_rep, facet_windows(rep, l), l):
                    image = translate_onto_wall(lam, rep, wall_rep, l).output
                if image is not None:
                    acc = None
                    for f in chi_decomposition(lam, l).surviving_factors():
                        r = translate_onto_wall(f, rep, wall_rep, l)
                        if r.output is not None:
                            term = chi_l(r.output, l)
                            acc = term if acc is None else acc + term
                    ok2 = acc == weyl_char(image)
                    yield (
                        f"l={l} lam={lam}",
                        "onto-wall factor characters = image character",
                        "ok" if ok2 else "mismatch",
                        ok2,
                    )
            try:
                n = translate_nabla_factor_count(lam, l)
            except ValueError:
                continue  # non-generic
            want = 8 if l == 2 else 18
            yield (f"l={l} lam={lam}", f"generic factor count = {want}", str(n), n == want)


def suite_graphs(l: int, box: int, rows: tuple[int, ...] | None = None) -> Iterator[Case]:
    for cls in _classical_box(box, rows):
        for res in _restricted(l):
            lam = l * cls + res
            rep = validate_graph(zhat_structure(lam, l))
            yield (
                f"l={l} lam={lam} zhat",
                "all structure-graph checks",
                "ok" if rep.ok else str(rep.failures()),
                rep.ok,
            )
            repn = validate_graph(nabla_l_filtration(lam, l))
            yield (
                f"l={l} lam={lam} lfilt",
                "filtration nodes and character",
                "ok" if repn.ok else str(repn.failures()),
                repn.ok,
            )


def suite_ext_lemmas(l: int, box: int, rows: tuple[int, ...] | None = None) -> Iterator[Case]:
    if rows is not None and 0 not in rows:
        return

    def check(name, mu, lam, want):
        got = ext1_g(mu, lam, l)
        return (f"l={l} {name} {mu}->{lam}", f"dim = {want}", str(got), got == want)

    for r in range(l - 1):
        s = l - 2 - r
        yield check("wall-high", Weight(r, s), Weight(2 * l - 1, r), 1)
        yield check("wall-high-dual", Weight(r, s), Weight(s, 2 * l - 1), 1)
        yield check("wall-split", Weight(r, s), Weight(l + r, l + s), 1 if l == 3 else 0)
        yield check("wall2-a", Weight(l - 1, r), Weight(r, l + s), 1)
        yield check("wall2-b", Weight(s, l - 1), Weight(l + r, s), 1)
        yield check("wall2-zero-a", Weight(l - 1, r), Weight(l + s, l - 1), 0)
        yield check("wall2-zero-b", Weight(s, l - 1), Weight(l - 1, l + r), 0)
    for r in range(l - 2):
        for s in range(l - 2 - r):
            up = Weight(l - s - 2, l - r - 2)
            down = Weight(r, s)
            for nu, want in (
                (down, 1),
                (Weight(l + s, l - r - s - 3), 1),
                (Weight(l - r - s - 3, l + r), 1),
                (up, 0),
                (Weight(2 * l - s - 2, l - r - 2), 0),
                (Weight(l - s - 2, 2 * l - r - 2), 0),
                (Weight(l + r, l + s), 0),
            ):
                yield check("upalc", up, nu, want)
            for nu, want in (
                (up, 1),
                (Weight(l - r - 2, l + r + s + 1), 1),
                (Weight(l + r + s + 1, l - s - 2), 1),
                (down, 0),
                (Weight(l + s, l - r - s - 3), 0),
                (Weight(l - r - s - 3, l + r), 0),
                (Weight(s, 3 * l - r - s - 3), 0),
                (Weight(3 * l - r - s - 3, r), 0),
                (Weight(2 * l - s - 2, 2 * l - r - 2), 0),
                (Weight(l + r, l + s), 1 if l == 3 else 0),
            ):
                yield check("downalc", down, nu, want)
    # Steinberg rows vanish; triple entries are label-dual across the diagonal.
    st = Weight(l - 1, l - 1)
    for beta in _restricted(l):
        ok = not ext1_g1(st, beta, l) and not ext1_g1(beta, st, l)
        yield (f"l={l} steinberg {beta}", "Ext vanishes", "ok" if ok else "nonzero", ok)
    for r in range(l - 1):
        s = l - 2 - r
        triple = (Weight(r, s), Weight(l - 1, r), Weight(s, l - 1))
        for alpha in triple:
            for beta in triple:
                ok = ext1_g1(alpha, beta, l) == ext1_g1(beta, alpha, l).label_dual()
                yield (f"l={l} swap {alpha},{beta}", "label-dual symmetry", "ok" if ok else "broken", ok)
    # Tables against the general thickened-kernel rule, one weight per facet.
    cls = Weight(2, 2)
    for res in _restricted(l):
        mu = l * cls + res
        factors = zhat_factors(mu, l)
        for a in factors:
            for b in factors:
                t = ext1_g1b(mu, a, b, l)
                g = ext1_g1b_general(a, b, l)
                yield (
                    f"l={l} table mu={mu} {a}->{b}",
                    "table entry = general rule",
                    f"{t} vs {g}",
                    t == g,
                )


def suite_homs(l: int, box: int, rows: tuple[int, ...] | None = None) -> Iterator[Case]:
    for cls in _classical_box(box, rows):
        if cls.a < 1 or cls.b < 1:
            continue
        for res in _restricted(l):
            lam = l * cls + res
            if facet_classify(lam, l) is not FacetType.DOWN_ALCOVE:
                continue
            head = zhat_head_weight(lam, l)
            w = hom_exists_mirror(lam, head, l, 0)
            ok = (
                w is not None
                and w.beta is PositiveRoot.RHO
                and w.e == 0
                and witness_valid(lam, head, w, l, 0)
            )
            yield (f"l={l} lam={lam}", "rho witness onto the head weight", str(w), ok)
            back = hom_exists_mirror(head, lam, l, 0) if head.is_dominant() else None
            yield (f"l={l} lam={lam}", "antisymmetric", str(back), back is None)
            same = hom_exists_mirror(lam, lam, l, 0)
            yield (f"l={l} lam={lam}", "no witness on the diagonal", str(same), same is None)


SUITES = {
    "denominator": suite_denominator,
    "dimension": suite_dimension,
    "decomposition": suite_decomposition,
    "zhat": suite_zhat,
    "translate": suite_translate,
    "graphs": suite_graphs,
    "ext-lemmas": suite_ext_lemmas,
    "homs": suite_homs,
}


def _suite_chunk(name: str, l: int, box: int, rows: tuple[int, ...]) -> tuple[int, list]:
    count = 0
    failures = []
    for case in SUITES[name](l, box, rows):
        count += 1
        if not case[3]:
            failures.append((case[0], case[1], case[2]))
    return count, failures


def run_suite(
    name: str, l_values: list[int], box: int, stream=None, jobs: int = 1
) -> VerifyReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    report = VerifyReport(name)
    if jobs <= 1:
        for l in l_values:
            for case in SUITES[name](l, box):
                report.absorb(case)
                if stream is not None and not case[3]:
                    print(f"FAIL {name}: {case[0]}: {case[1]}: got {case[2]}", file=stream)
        return report
    from concurrent.futures import ProcessPoolExecutor

    all_rows = list(range(box + 1))
    chunks = [tuple(all_rows[i::jobs]) for i in range(jobs) if all_rows[i::jobs]]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_suite_chunk, name, l, box, chunk)
            for l in l_values
            for chunk in chunks
        ]
        for fut in futures:
            count, failures = fut.result()
            report.cases_run += count
            for f in failures:
                report.failures.append(f)
                if stream is not None:
                    print(f"FAIL {name}: {f[0]}: {f[1]}: got {f[2]}", file=stream)
    return report
