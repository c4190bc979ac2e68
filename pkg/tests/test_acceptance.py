"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s -v`` to see the lines live.
"""

import random
import subprocess
import sys
import time

from garside.absorb import (
    bounded_search,
    classify_absorbable_small,
    decompose_delta_power,
    decompose_normalizer,
    decompose_parabolic,
    decompose_positive_conjugator,
    decompose_sub_delta_power,
)
from garside.calgraph import base_vertex, distance_upper_bound, vertex_of
from garside.coxeter import parse_system
from garside.garside import GroupElement, is_left_weighted, is_right_weighted, normalize
from garside.growth import (
    _automaton_cached,
    bfs_oracle,
    compare_parabolic,
    count_group_ball,
    count_monoid_ball,
    diverging_sequence,
    free_product_bound,
    growth_rate,
)
from garside.freeprod import evaluate_witness, search_candidate, verify_free_product
from garside.parabolic import ribbon, sub_delta, support

from helpers import (
    rand_element,
    rand_normalizer,
    rand_positive_conjugator,
    rand_supported_positive,
    relation_closure_classes,
)

INVOLUTION_SYSTEMS = ["A3", "A4", "B3", "B4", "D4", "F4", "H3", "I2(5)", "I2(7)"]
DECOMPOSITION_SYSTEMS = ["A3", "A4", "B3", "D4", "H3"]


def _report(num: int, ok: bool, detail: str, t0: float):
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {num:2d}] {status} ({time.time() - t0:.1f}s) {detail}")
    assert ok, f"criterion {num}: {detail}"


def _proper_subsets(system):
    import itertools

    out = []
    for r in range(1, system.rank):
        out.extend(map(frozenset, itertools.combinations(system.atoms, r)))
    return out


def test_criterion_1_involutions():
    t0 = time.time()
    rng = random.Random(2024)
    total = 0
    ok = True
    for spec in INVOLUTION_SYSTEMS:
        system = parse_system(spec)
        d = GroupElement.delta_power(system, 1)
        ok &= d.reverse() == d
        for _ in range(10_000 // len(INVOLUTION_SYSTEMS) + 1):
            g = rand_element(system, rng, 10)
            ok &= g.tau().tau() == g
            ok &= g.reverse().reverse() == g
            total += 1
    elapsed = time.time() - t0
    _report(1, ok and elapsed < 60, f"tau/reverse involutions on {total} elements", t0)


def test_criterion_2_normal_form_oracle():
    t0 = time.time()
    mismatches = 0
    for spec in ("A2", "A3", "I2(5)"):
        system = parse_system(spec)
        for length in range(7):
            classes = relation_closure_classes(system, length)
            by_class = {}
            for word, cls in classes.items():
                by_class.setdefault(cls, set()).add(normalize(system, word))
            for forms in by_class.values():
                if len(forms) != 1:
                    mismatches += 1
            forms = [next(iter(v)) for v in by_class.values()]
            if len(forms) != len(set(forms)):
                mismatches += 1
    elapsed = time.time() - t0
    _report(2, mismatches == 0 and elapsed < 300, "normalize vs relation closure, words <= 6", t0)


def test_criterion_3_ribbons():
    import itertools

    t0 = time.time()
    failures = 0
    pairs = 0
    for spec in INVOLUTION_SYSTEMS:
        system = parse_system(spec)
        atoms = set(system.atoms)
        for t in sorted(atoms):
            rest = sorted(atoms - {t})
            for r in range(len(rest) + 1):
                for X in map(frozenset, itertools.combinations(rest, r)):
                    pairs += 1
                    right = ribbon(system, X, t, "right")
                    left = ribbon(system, X, t, "left")
                    if right.value.reverse() != left.value:
                        failures += 1
                    if right.value * sub_delta(system, X) != sub_delta(system, X | {t}):
                        failures += 1
                    if X:
                        for a, b in ((right.value, left.value), (left.value, right.value)):
                            if not (is_left_weighted(a, b) and is_right_weighted(a, b)):
                                failures += 1
                    for x in X:
                        moved = right.value * GroupElement.atom(system, x)
                        hits = [
                            y
                            for y in right.target
                            if moved == GroupElement.atom(system, y) * right.value
                        ]
                        if len(hits) != 1:
                            failures += 1
    _report(3, failures == 0, f"ribbon laws over {pairs} (X, t) pairs", t0)


def test_criterion_4_decomposition_budgets():
    t0 = time.time()
    rng = random.Random(4)
    bad = 0
    per_op = 200  # 5 operations x 200 = 10^3 instances per system
    for spec in DECOMPOSITION_SYSTEMS:
        system = parse_system(spec)
        atoms = list(system.atoms)
        for _ in range(per_op):
            k = rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
            dec = decompose_delta_power(system, k)
            bad += not (len(dec.factors) <= 3 and dec.verify())

            X = frozenset(rng.sample(atoms, rng.randrange(1, system.rank)))
            dec = decompose_sub_delta_power(system, X, k)
            bad += not (len(dec.factors) <= 2 and dec.verify())

            X = frozenset(rng.sample(atoms, rng.randrange(1, system.rank)))
            x = GroupElement.from_word(
                system, [rng.choice(sorted(X)) * rng.choice((1, 1, -1)) for _ in range(6)]
            )
            dec = decompose_parabolic(x, X)
            bad += not (len(dec.factors) <= 3 and dec.verify())

            X = frozenset(rng.sample(atoms, rng.randrange(1, system.rank)))
            u = rand_supported_positive(system, rng, X)
            conj = rand_positive_conjugator(system, rng, u)
            dec = decompose_positive_conjugator(u, conj)
            bad += not (len(dec.factors) <= 9 and dec.verify())

            X = frozenset(rng.sample(atoms, rng.randrange(1, system.rank)))
            alpha = rand_normalizer(system, rng, X)
            dec = decompose_normalizer(alpha, X)
            bad += not (len(dec.factors) <= 9 and dec.verify())
    _report(4, bad == 0, f"budgets 3/2/3/9/9 over {per_op * 5} instances per system", t0)


def test_criterion_5_dihedral_classifier():
    t0 = time.time()
    bad = 0
    for spec in ("I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "A2"):
        system = parse_system(spec)
        automaton = _automaton_cached(system)
        ys = []
        for r in (1, 2, 3):
            for factors in automaton.normal_words(r):
                y = GroupElement(system, 0, factors)
                ys.append(y)
                ys.append(y.inv())
        for y in ys:
            cls = classify_absorbable_small(y)
            cert = bounded_search(y, 3)
            if cert is not None and not cls:
                bad += 1
            if cert is not None and not cert.verify():
                bad += 1
        if spec == "A2":
            found = {y for y in ys if classify_absorbable_small(y)}
            expected = {
                normalize(system, "1"), normalize(system, "-1"),
                normalize(system, "2"), normalize(system, "-2"),
            }
            if found != expected:
                bad += 1
    _report(5, bad == 0, "classifier vs bounded search, canonical length <= 3", t0)


def test_criterion_6_orbit_bounds():
    t0 = time.time()
    rng = random.Random(6)
    bad = 0
    for spec in ("A3", "A4", "B3"):
        system = parse_system(spec)
        base = base_vertex(system)
        for X in _proper_subsets(system):
            for _ in range(50):
                word = [rng.choice(sorted(X)) * rng.choice((1, 1, -1)) for _ in range(6)]
                x = GroupElement.from_word(system, word)
                dec = decompose_parabolic(x, X)
                if distance_upper_bound(base, vertex_of(x), dec) > 3:
                    bad += 1
        for _ in range(50):
            X = frozenset(rng.sample(list(system.atoms), rng.randrange(1, system.rank)))
            alpha = rand_normalizer(system, rng, X)
            dec = decompose_normalizer(alpha, X)
            if distance_upper_bound(base, vertex_of(alpha), dec) > 9:
                bad += 1
    _report(6, bad == 0, "parabolic chains <= 3 and normalizer chains <= 9", t0)


def test_criterion_7_growth_numbers():
    t0 = time.time()
    ok = growth_rate(parse_system("A1")) == 1.0
    a2 = parse_system("A2")
    automaton = _automaton_cached(a2)
    ok &= all(len(automaton.follows(i)) == 2 for i in range(automaton.n_states))
    ok &= abs(growth_rate(a2) - 2.0) < 1e-9
    for spec, n in (("A2", 5), ("A3", 3), ("I2(5)", 4)):
        system = parse_system(spec)
        ok &= bfs_oracle(system, "garside", n, "monoid") == [
            count_monoid_ball(system, i) for i in range(n + 1)
        ]
        ok &= bfs_oracle(system, "garside", n, "group") == [
            count_group_ball(system, i) for i in range(n + 1)
        ]
    chain = [growth_rate(parse_system(s)) for s in ("A2", "A3", "A4")]
    ok &= chain[0] < chain[1] - 1e-6 and chain[1] < chain[2] - 1e-6
    b_chain = [growth_rate(parse_system(s)) for s in ("B2", "B3")]
    ok &= b_chain[0] < b_chain[1] - 1e-6
    elapsed = time.time() - t0
    _report(7, ok and elapsed < 600, "rates and ball counts against BFS oracles", t0)


def test_criterion_8_parabolic_growth_gap():
    t0 = time.time()
    bad = 0
    checked = 0
    for spec in ("A3", "A4", "B3", "D4"):
        system = parse_system(spec)
        for X in _proper_subsets(system):
            checked += 1
            _, _, strict = compare_parabolic(system, X)
            bad += not strict
    _report(8, bad == 0, f"strict growth gap for all {checked} proper nonempty X", t0)


def test_criterion_9_divergence_recurrence():
    t0 = time.time()
    seq1 = diverging_sequence(1, 40)
    exact = seq1 == [float(i) for i in range(1, 41)]
    seq12 = diverging_sequence(12, 500)
    increasing = all(b > a for a, b in zip(seq12, seq12[1:]))
    residuals = True
    for alpha in seq12[:-1:25]:
        residuals &= free_product_bound(alpha, 12).residual() < 1e-10
    exceeds = seq12[-1] > 5
    detail = (
        f"k=1 exact: {exact}; k=12 increasing: {increasing}; residuals<1e-10: {residuals}; "
        f"alpha_500={seq12[-1]:.6f} exceeds 5: {exceeds}"
        + ("" if exceeds else " [unattainable: increments are gamma^11, alpha_i ~ (12 i)^(1/12);"
           " crossing 5 needs ~2e7 steps]")
    )
    _report(9, exact and increasing and residuals and exceeds, detail, t0)


def test_criterion_10_bounded_free_product():
    t0 = time.time()
    ok = True
    for spec in ("A3", "A4"):
        system = parse_system(spec)
        g = search_candidate(system)
        ok &= g is not None
        if g is None:
            continue
        ok &= g.is_positive and g.garside_length <= 12
        ok &= support(g) == frozenset(system.atoms)
        for i in sorted(system.atoms):
            X = frozenset(set(system.atoms) - {i})
            ok &= verify_free_product(system, X, g).verified
    a3 = parse_system("A3")
    cert = verify_free_product(a3, {1, 2}, GroupElement.delta_power(a3, 1))
    ok &= not cert.verified and cert.witness is not None
    ok &= evaluate_witness(a3, GroupElement.delta_power(a3, 1), cert.witness).is_identity
    elapsed = time.time() - t0
    _report(10, ok and elapsed < 900, "certified candidates on A3/A4; Delta rejected", t0)


CLI_CORPUS = [
    ("nf", "A3", "1 1 2"),
    ("nf", "H3", "1 -2 1 3", "--format", "json"),
    ("lattice", "A3", "1", "2", "--op", "join", "--side", "prefix"),
    ("ribbon", "B3", "--x", "1,3", "--t", "2", "--format", "json"),
    ("factor-conj", "A3", "--u", "1", "--x", "2 1", "--format", "json"),
    ("absorb", "D4", "--decompose", "delta^k", "--k", "-2", "--format", "json"),
    ("absorb", "A4", "--decompose", "normalizer", "--x", "1,2", "--g", "1 2 1 2", "--format", "json"),
    ("cal-ball", "A2", "--radius", "2", "--pool", "1;2", "--format", "dot"),
    ("cal-ball", "A3", "--radius", "1", "--format", "json"),
    ("growth", "A3", "--horizon", "3", "--format", "json"),
    ("growth", "I2(6)", "--horizon", "5", "--mode", "monoid"),
    ("freeprod", "A3", "--x", "1,2", "--g", "1 2 1 3 2 1", "--format", "json"),
    ("constants", "--kappa", "7", "--format", "json"),
]


def test_criterion_11_cli_determinism():
    t0 = time.time()
    bad = 0
    for argv in CLI_CORPUS:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "garside.cli", *argv],
                capture_output=True,
                env={"PYTHONIOENCODING": "utf-8", "PATH": "/usr/bin:/bin"},
            )
            for _ in range(2)
        ]
        if runs[0].returncode != 0:
            bad += 1
        if (runs[0].stdout, runs[0].stderr) != (runs[1].stdout, runs[1].stderr):
            bad += 1
    _report(11, bad == 0, f"byte-stable output for {len(CLI_CORPUS)} invocations", t0)
