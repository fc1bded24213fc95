"""
Property sweeps over families of crystals and weight intervals.

Each suite enumerates the shapes with at most rank+1 parts and total
size up to a bound, then checks one family of invariants, recording
failures as data instead of raising.  Suites:

    oracles   Kostka-Foulkes agreement across all computation routes
    atoms     decomposition soundness, Z-constancy, operator closure
    strings   crystal-operator lemmas (pairing identity, string sums,
              conjugation-choice independence, commutation)
    arrows    in-degree identities of twisted graphs (length at stage
              0, closed form at infinity, labels, update rule)
    gammam    the in-degree difference across each reversed wall
    swapping  wall-crossing injections and stagewise recharge deltas
    hecke     reconstruction of Kostka polynomials from the atomic
              expansion

Sweeps may run independently per (rank, shape); all underlying data is
immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Optional

from .affine_graph import (
    STAGE_INFINITY,
    TwistedGraph,
    apply_affine_reflection,
    arr_infinity_formula,
    build_graph,
    stabilization_stage,
    stage_reflection,
)
from .atoms import bplus_components, decompose, validate_atom
from .charge_kostka import (
    HalfLaurentPolynomial,
    SwappingError,
    charge,
    hecke_atomic_expansion,
    kostka,
    kostka_from_hecke,
    llt_gamma_raw,
    recharge,
    swapping_map,
)
from .crystal import DEFAULT_MAX_ELEMENTS, Crystal, conjugating_permutation, normalize_shape
from .root_data import (
    LineOrder,
    Weight,
    bruhat_leq_dominant,
    in_parabolic,
    is_dominant,
    length,
    length_along,
    line_compare,
    pairing,
    positive_roots,
    root_vector,
)

SUITES = ("oracles", "atoms", "gammam", "arrows", "swapping", "strings", "hecke", "all")


@dataclass(frozen=True)
class VerifyFailure:
    case: str
    expected: str
    actual: str


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list[VerifyFailure] = field(default_factory=list)

    def record(self, ok: bool, case: str, expected, actual) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(VerifyFailure(case, str(expected), str(actual)))

    @property
    def exit_status(self) -> int:
        return 0 if not self.failures else 1


def partitions(total: int, max_parts: int, bound: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing positive tuples summing to total."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    top = min(total, bound if bound is not None else total)
    for first in range(top, 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def sweep_shapes(rank: int, max_weight: int) -> tuple[tuple[int, ...], ...]:
    """All shapes with at most rank+1 parts and size up to max_weight."""
    return tuple(
        shape
        for total in range(max_weight + 1)
        for shape in partitions(total, rank + 1)
    )


def dominant_interval(lam: Weight, rank: int) -> tuple[Weight, ...]:
    """Dominant weights below lam, largest first."""
    result = []
    for shape in partitions(sum(lam), rank + 1):
        mu = shape + (0,) * (rank + 1 - len(shape))
        if bruhat_leq_dominant(mu, lam):
            result.append(mu)
    return tuple(result)


def _fmt(mu) -> str:
    return ",".join(str(v) for v in mu)


def _sweep_crystals(rank, max_weight, max_elements) -> Iterator[tuple[Weight, Crystal]]:
    for shape in sweep_shapes(rank, max_weight):
        lam = normalize_shape(shape, rank)
        yield lam, Crystal.generate(lam, rank, max_elements)


# -- suite: oracles -----------------------------------------------------------


def check_oracles(report: VerifyReport, rank: int, max_weight: int, max_elements: int) -> None:
    one = HalfLaurentPolynomial.one()
    order = factorial(rank + 1)
    for lam, c in _sweep_crystals(rank, max_weight, max_elements):
        for mu in dominant_interval(lam, rank):
            base = f"n={rank} lam={_fmt(lam)} mu={_fmt(mu)}"
            k_new = kostka(lam, rank, mu, "new", crystal=c)
            k_ls = kostka(lam, rank, mu, "ls", crystal=c)
            k_llt = kostka(lam, rank, mu, "llt", crystal=c)
            count = kostka(lam, rank, mu, "count", crystal=c).evaluate_at_one()
            report.record(k_new == k_ls, f"{base} new=ls", k_new.text(), k_ls.text())
            report.record(k_new == k_llt, f"{base} new=llt", k_new.text(), k_llt.text())
            report.record(
                k_new.evaluate_at_one() == count,
                f"{base} value at q=1",
                count,
                k_new.evaluate_at_one(),
            )
            if mu == lam:
                report.record(k_new == one, f"{base} K(lam,lam)=1", "1", k_new.text())

        base = f"n={rank} lam={_fmt(lam)}"
        bad_divisible = 0
        bad_coincide = 0
        for x in range(c.size):
            raw = llt_gamma_raw(c, x)
            quotient, remainder = divmod(raw, order)
            if remainder:
                bad_divisible += 1
                continue
            if is_dominant(c.weight(x)) and charge(c, x) != quotient:
                bad_coincide += 1
        report.record(
            bad_divisible == 0, f"{base} gamma sums divisible by (n+1)!", 0, bad_divisible
        )
        report.record(
            bad_coincide == 0,
            f"{base} charge equals gamma on dominant elements",
            0,
            bad_coincide,
        )


# -- suite: atoms -------------------------------------------------------------


def check_atoms(report: VerifyReport, rank: int, max_weight: int, max_elements: int) -> None:
    for lam, c in _sweep_crystals(rank, max_weight, max_elements):
        base = f"n={rank} lam={_fmt(lam)}"
        dec = decompose(c)

        covered = sorted(x for atom in dec.atoms for x in atom.element_ids)
        report.record(
            covered == list(range(c.size)),
            f"{base} atoms partition the crystal",
            f"{c.size} elements",
            f"{len(covered)} covered",
        )

        for idx, atom in enumerate(dec.atoms):
            rep = validate_atom(atom, c)
            for check in rep.checks:
                report.record(
                    check.passed,
                    f"{base} atom#{idx} {check.name}",
                    "pass",
                    check.detail or "fail",
                )

        dominant_parts = sorted(
            tuple(x for x in atom.element_ids if is_dominant(c.weight(x)))
            for atom in dec.atoms
        )
        bplus_parts = sorted(bplus_components(c))
        report.record(
            dominant_parts == bplus_parts,
            f"{base} tilde components match atom restriction",
            dominant_parts,
            bplus_parts,
        )

        for mu in dominant_interval(lam, rank):
            holding = sum(
                1 for atom in dec.atoms if bruhat_leq_dominant(mu, atom.highest_weight)
            )
            report.record(
                holding == len(c.elements_of_weight(mu)),
                f"{base} multiplicity at mu={_fmt(mu)}",
                len(c.elements_of_weight(mu)),
                holding,
            )

        bad_closure = 0
        bad_iff = 0
        for x in range(c.size):
            atom_idx = dec.member_of[x]
            highest = dec.atoms[atom_idx].highest_weight
            for j in range(1, rank + 1):
                beta = (j, rank)
                for direction in ("f", "e"):
                    y = c.root_op(direction, beta, x)
                    if y is not None and dec.member_of[y] != atom_idx:
                        bad_closure += 1
                vec = root_vector(beta, rank)
                mu = c.weight(x)
                k = 1
                while True:
                    alive = c.root_op_power("f", beta, x, k) is not None
                    shifted = tuple(a - k * b for a, b in zip(mu, vec))
                    inside = bruhat_leq_dominant(shifted, highest)
                    if alive != inside:
                        bad_iff += 1
                        break
                    if not alive:
                        break
                    k += 1
        report.record(bad_closure == 0, f"{base} last-column operators preserve atoms", 0, bad_closure)
        report.record(bad_iff == 0, f"{base} lowering power matches interval depth", 0, bad_iff)


# -- suite: strings ------------------------------------------------------------


def _all_conjugators(rank: int, beta) -> list[tuple[int, ...]]:
    """Every permutation u with u(a_n) = beta (there are (n-1)! of them)."""
    from itertools import permutations as iter_perms

    j, k = beta
    size = rank + 1
    rest_targets = [t for t in range(size) if t != j - 1 and t != k]
    out = []
    for assignment in iter_perms(rest_targets):
        u = list(assignment) + [j - 1, k]
        out.append(tuple(u))
    return out


def check_strings(report: VerifyReport, rank: int, max_weight: int, max_elements: int) -> None:
    for lam, c in _sweep_crystals(rank, max_weight, max_elements):
        base = f"n={rank} lam={_fmt(lam)}"
        roots = positive_roots(rank)

        bad = 0
        for x in range(c.size):
            for beta in roots:
                stats = c.root_string_stats(beta, x)
                if stats.phi - stats.eps != pairing(c.weight(x), beta):
                    bad += 1
        report.record(bad == 0, f"{base} phi-eps pairing identity", 0, bad)

        bad = 0
        for i in range(1, rank):
            beta = (i, i + 1)
            for x in range(c.size):
                y = c.root_op("f", beta, x)
                if y is None:
                    continue
                if c.eps(i, x) + c.phi(i + 1, x) != c.eps(i, y) + c.phi(i + 1, y):
                    bad += 1
        report.record(bad == 0, f"{base} eps_i + phi_(i+1) constant on strings", 0, bad)

        if rank >= 3:
            bad = 0
            for beta in roots:
                reference = conjugating_permutation(rank, beta)
                for u in _all_conjugators(rank, beta):
                    if u == reference:
                        continue
                    for x in range(c.size):
                        for direction in ("f", "e"):
                            if c.tilde_op(direction, beta, x) != c.tilde_op(
                                direction, beta, x, u=u
                            ):
                                bad += 1
            report.record(bad == 0, f"{base} conjugator choice independence", 0, bad)

        bad = 0
        for x in range(c.size):
            mu = c.weight(x)
            if not is_dominant(mu):
                continue
            for j in range(1, rank + 1):
                for k in range(j + 1, rank + 1):
                    gamma = (j, k)
                    for split in range(j, k):
                        alpha, beta = (j, split), (split + 1, k)
                        if pairing(mu, alpha) <= 0 or pairing(mu, beta) <= 0:
                            continue
                        via_ab = c.tilde_op("f", alpha, x)
                        via_ab = via_ab if via_ab is None else c.tilde_op("f", beta, via_ab)
                        via_ba = c.tilde_op("f", beta, x)
                        via_ba = via_ba if via_ba is None else c.tilde_op("f", alpha, via_ba)
                        direct = c.tilde_op("f", gamma, x)
                        if direct is None or via_ab != direct or via_ba != direct:
                            bad += 1
        report.record(bad == 0, f"{base} sum-root commutation on dominant elements", 0, bad)


# -- suite: arrows -------------------------------------------------------------


def check_arrows(report: VerifyReport, rank: int, max_weight: int, max_elements: int) -> None:
    graphs: dict = {}

    def graph_at(lamp: Weight, stage) -> TwistedGraph:
        key = (lamp, stage)
        if key not in graphs:
            graphs[key] = build_graph(lamp, stage, rank)
        return graphs[key]

    for shape in sweep_shapes(rank, max_weight):
        lam = normalize_shape(shape, rank)
        base = f"n={rank} lam'={_fmt(lam)}"

        g0 = graph_at(lam, 0)
        bad = sum(1 for mu in g0.vertices if g0.arr(mu) != length(mu))
        report.record(bad == 0, f"{base} stage-0 in-degree equals length", 0, bad)

        ginf = graph_at(lam, STAGE_INFINITY)
        bad = sum(1 for mu in ginf.vertices if ginf.arr(mu) != arr_infinity_formula(mu, lam))
        report.record(bad == 0, f"{base} infinity in-degree closed form", 0, bad)

        stage_m = stabilization_stage(lam, rank)
        gm = graph_at(lam, stage_m)
        report.record(
            set(gm.edges) == set(ginf.edges),
            f"{base} stabilization at stage {stage_m}",
            "stage graph equals infinity graph",
            "differs",
        )

        for m in list(range(stage_m + 1)) + [STAGE_INFINITY]:
            g = graph_at(lam, m)
            bad = sum(
                1 for src, dst, label in g.edges if apply_affine_reflection(label, dst) != src
            )
            report.record(bad == 0, f"{base} stage {m} edge labels reflect head to tail", 0, bad)

        for m in range(stage_m):
            g, g_next = graph_at(lam, m), graph_at(lam, m + 1)
            t = stage_reflection(m + 1, rank)
            bad = 0
            for mu in g.vertices:
                tmu = apply_affine_reflection(t, mu)
                if tmu == mu:
                    expected = 0
                elif line_compare(mu, tmu) is LineOrder.LOWER:
                    expected = -1
                elif tmu in g.indegree:
                    expected = 1
                else:
                    expected = 0
                if g_next.arr(mu) - g.arr(mu) != expected:
                    bad += 1
            report.record(bad == 0, f"{base} update rule into stage {m + 1}", 0, bad)

    for lam, c in _sweep_crystals(rank, max_weight, max_elements):
        base = f"n={rank} lam={_fmt(lam)}"
        dec = decompose(c)
        bad = 0
        for x in range(c.size):
            mu = c.weight(x)
            ginf = graph_at(dec.atom_of(x).highest_weight, STAGE_INFINITY)
            formula = sum(
                c.root_string_stats(beta, x).phi
                if not in_parabolic(beta, rank)
                else length_along(mu, beta)
                for beta in positive_roots(rank)
            )
            if ginf.arr(mu) != formula:
                bad += 1
        report.record(bad == 0, f"{base} per-element infinity formula", 0, bad)


# -- suite: gammam --------------------------------------------------------------


def check_gammam(report: VerifyReport, rank: int, max_weight: int) -> None:
    for shape in sweep_shapes(rank, max_weight):
        lam = normalize_shape(shape, rank)
        base = f"n={rank} lam'={_fmt(lam)}"
        stage_m = stabilization_stage(lam, rank)
        for m in range(stage_m):
            g = build_graph(lam, m, rank)
            t = stage_reflection(m + 1, rank)
            bad = 0
            applicable = 0
            for mu in g.vertices:
                tmu = apply_affine_reflection(t, mu)
                if tmu == mu or tmu not in g.indegree:
                    continue
                if line_compare(mu, tmu) is LineOrder.GREATER:
                    applicable += 1
                    if g.arr(mu) != g.arr(tmu) - 1:
                        bad += 1
            report.record(
                bad == 0,
                f"{base} stage {m} in-degree difference ({applicable} pairs)",
                0,
                bad,
            )


# -- suite: swapping -------------------------------------------------------------


def check_swapping(report: VerifyReport, rank: int, max_weight: int, max_elements: int) -> None:
    for lam, c in _sweep_crystals(rank, max_weight, max_elements):
        base = f"n={rank} lam={_fmt(lam)}"
        dec = decompose(c)
        graphs: dict = {}

        def graph_at(lamp, stage) -> TwistedGraph:
            key = (lamp, stage)
            if key not in graphs:
                graphs[key] = build_graph(lamp, stage, rank)
            return graphs[key]

        stages: dict[Weight, int] = {}
        for atom in dec.atoms:
            if atom.highest_weight not in stages:
                stages[atom.highest_weight] = stabilization_stage(atom.highest_weight, rank)

        images: dict[tuple[int, Weight], list[int]] = {}

        for atom_idx, atom in enumerate(dec.atoms):
            lamp = atom.highest_weight
            element_at: dict[Weight, int] = {}
            duplicate = False
            for x in atom.element_ids:
                if c.weight(x) in element_at:
                    duplicate = True
                element_at[c.weight(x)] = x
            if duplicate:
                report.record(False, f"{base} atom#{atom_idx} weights repeat", "multiplicity one", "repeat")
                continue

            for m in range(stages[lamp]):
                coroot = stage_reflection(m + 1, rank)
                g = graph_at(lamp, m)
                g_next = graph_at(lamp, m + 1)
                psi_images = set()
                bad_totality = 0
                bad_weight = 0
                bad_atom = 0
                bad_drop = 0
                applicable = 0
                for mu in g.vertices:
                    tmu = apply_affine_reflection(coroot, mu)
                    if tmu == mu or tmu not in g.indegree:
                        continue
                    if line_compare(mu, tmu) is not LineOrder.GREATER:
                        continue
                    applicable += 1
                    x = element_at.get(tmu)
                    if x is None:
                        bad_totality += 1
                        continue
                    try:
                        y = swapping_map(c, dec, m, mu, x)
                    except SwappingError:
                        bad_totality += 1
                        continue
                    if c.weight(y) != mu:
                        bad_weight += 1
                    if dec.member_of[y] != atom_idx:
                        bad_atom += 1
                    drop = recharge(c, dec, x, m + 1, graphs) - recharge(c, dec, y, m + 1, graphs)
                    if drop != 1:
                        bad_drop += 1
                    psi_images.add(y)
                    images.setdefault((m, tmu), []).append(y)
                if applicable:
                    report.record(
                        bad_totality == 0,
                        f"{base} atom#{atom_idx} stage {m} psi total",
                        0,
                        bad_totality,
                    )
                    report.record(
                        bad_weight + bad_atom == 0,
                        f"{base} atom#{atom_idx} stage {m} psi lands at mu inside the atom",
                        0,
                        bad_weight + bad_atom,
                    )
                    report.record(
                        bad_drop == 0,
                        f"{base} atom#{atom_idx} stage {m} recharge drops by one",
                        0,
                        bad_drop,
                    )

                bad_delta = 0
                plus_cases = set()
                for x in atom.element_ids:
                    mu = c.weight(x)
                    tmu = apply_affine_reflection(coroot, mu)
                    if tmu == mu:
                        expected = 0
                    elif line_compare(mu, tmu) is LineOrder.LOWER:
                        expected = -1
                    elif tmu in g.indegree:
                        expected = 1
                        plus_cases.add(x)
                    else:
                        expected = 0
                    if g_next.arr(mu) - g.arr(mu) != expected:
                        bad_delta += 1
                report.record(
                    bad_delta == 0,
                    f"{base} atom#{atom_idx} stage {m} three-case delta",
                    0,
                    bad_delta,
                )
                report.record(
                    plus_cases == psi_images,
                    f"{base} atom#{atom_idx} stage {m} +1 cases are the psi images",
                    sorted(plus_cases),
                    sorted(psi_images),
                )

        for (m, tmu), targets in sorted(images.items()):
            report.record(
                len(targets) == len(set(targets)),
                f"{base} stage {m} psi injective on weight {_fmt(tmu)}",
                len(targets),
                len(set(targets)),
            )


# -- suite: hecke -----------------------------------------------------------------


def check_hecke(report: VerifyReport, rank: int, max_weight: int, max_elements: int) -> None:
    one = HalfLaurentPolynomial.one()
    for lam, c in _sweep_crystals(rank, max_weight, max_elements):
        base = f"n={rank} lam={_fmt(lam)}"
        dec = decompose(c)
        expansion = hecke_atomic_expansion(c, dec)
        report.record(
            expansion.coeffs.get(lam) == one,
            f"{base} leading coefficient",
            "1",
            (expansion.coeffs.get(lam) or HalfLaurentPolynomial.zero()).text("v"),
        )
        bad = sum(0 if poly.coefficients_nonnegative() else 1 for poly in expansion.coeffs.values())
        report.record(bad == 0, f"{base} coefficients nonnegative", 0, bad)
        for nu in dominant_interval(lam, rank):
            lhs = kostka_from_hecke(expansion, nu)
            rhs = kostka(lam, rank, nu, "new", crystal=c).scale_exponents(2)
            report.record(
                lhs == rhs,
                f"{base} reconstruction at nu={_fmt(nu)}",
                rhs.text("v"),
                lhs.text("v"),
            )


# -- driver ------------------------------------------------------------------------


def run_verify(
    suite: str,
    rank: int = 2,
    max_weight: int = 4,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> VerifyReport:
    """Run one named suite (or all of them) over the sweep bounds."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    report = VerifyReport(suite)
    selected = SUITES[:-1] if suite == "all" else (suite,)
    for name in selected:
        if name == "oracles":
            check_oracles(report, rank, max_weight, max_elements)
        elif name == "atoms":
            check_atoms(report, rank, max_weight, max_elements)
        elif name == "gammam":
            check_gammam(report, rank, max_weight)
        elif name == "arrows":
            check_arrows(report, rank, max_weight, max_elements)
        elif name == "swapping":
            check_swapping(report, rank, max_weight, max_elements)
        elif name == "strings":
            check_strings(report, rank, max_weight, max_elements)
        elif name == "hecke":
            check_hecke(report, rank, max_weight, max_elements)
    return report
