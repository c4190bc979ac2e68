import random

import pytest

from garside.coxeter import parse_system
from garside.errors import NotNormalizingError, PreconditionError
from garside.freeprod import (
    CONSTANTS,
    delzant_check,
    elliptic_orbit_report,
    evaluate_witness,
    parabolic_ball,
    search_candidate,
    verify_free_product,
)
from garside.garside import GroupElement, normalize
from garside.parabolic import member, sub_delta, support

A3 = parse_system("A3")


def test_constants():
    assert CONSTANTS.delta == 60
    assert CONSTANTS.garside_length_bound == 12
    assert CONSTANTS.orbit_bound_parabolic == 3
    assert CONSTANTS.orbit_bound_normalizer == 9
    assert CONSTANTS.wpd_exponent(0) == 319
    assert CONSTANTS.wpd_exponent(10) == 359
    assert CONSTANTS.wpd_count(0) == 638
    assert CONSTANTS.wpd_count(2.5) == 658


def test_parabolic_ball_lengths():
    ball = parabolic_ball(A3, {1, 2}, 2)
    assert len(set(ball)) == len(ball)
    assert all(member(t, {1, 2}) for t in ball)
    assert all(t.garside_length <= 2 for t in ball)
    # disconnected: product of A1 balls
    ball13 = parabolic_ball(A3, {1, 3}, 2)
    assert len(ball13) == 25


def test_verify_rejects_parabolic_member():
    with pytest.raises(PreconditionError):
        verify_free_product(A3, {1, 2}, normalize(A3, "1"))


def test_delta_fails_with_witness():
    cert = verify_free_product(A3, {1, 2}, GroupElement.delta_power(A3, 1))
    assert not cert.verified
    assert cert.witness is not None
    assert evaluate_witness(A3, GroupElement.delta_power(A3, 1), cert.witness).is_identity
    # the central square is the mechanism: t Delta^2 t^{-1} Delta^{-2} = 1
    exps = [v for kind, v in cert.witness if kind == "g"]
    assert sorted(map(abs, exps)) == [2, 2]


def test_verified_candidate_certificate_fields():
    g = search_candidate(A3)
    assert g is not None
    assert support(g) == frozenset(A3.atoms)
    assert g.garside_length <= 12
    cert = verify_free_product(A3, {1, 2}, g)
    assert cert.verified and cert.witness is None
    payload = cert.to_json()
    assert payload["L"] == 4 and payload["R"] == 2 and payload["E"] == 3
    assert payload["verified"] is True


def test_search_is_deterministic():
    assert search_candidate(A3) == search_candidate(A3)


def test_search_budget_honest():
    assert search_candidate(A3, len_bound=1, max_candidates=3) is None


def test_delzant_examples():
    spaced = [[abs(i - j) * 200 for j in range(6)] for i in range(6)]
    assert delzant_check(spaced, 1.0, 60) == (True, True)
    zero = [[0] * 4 for _ in range(4)]
    assert delzant_check(zero, 1.0, 60) == (False, False)
    # hypothesis fails but the conclusion holds: a slow arithmetic progression
    slow = [[abs(i - j) * 2 for j in range(5)] for i in range(5)]
    assert delzant_check(slow, 1.0, 60) == (False, True)
    with pytest.raises(PreconditionError):
        delzant_check([[0, 1], [2, 0]], 1.0, 60)


def test_delzant_hypothesis_implies_conclusion_on_random_instances():
    rng = random.Random(12)
    for _ in range(25):
        delta = rng.uniform(0, 5)
        a = rng.uniform(0.5, 3)
        n = rng.randrange(3, 8)
        # build points on a line spaced widely enough for the hypothesis
        gap = 2 * delta + a + rng.uniform(0.1, 2)
        xs = [0.0]
        for _ in range(n - 1):
            xs.append(xs[-1] + gap + rng.uniform(0, 1))
        dist = [[abs(xs[i] - xs[j]) for j in range(n)] for i in range(n)]
        hyp, conc = delzant_check(dist, a, delta)
        assert not hyp or conc


def test_elliptic_orbit_reports():
    rows = elliptic_orbit_report(sub_delta(A3, {1, 2}), {1, 2}, 10)
    assert all(r["bound"] <= 3 for r in rows)
    rows = elliptic_orbit_report(GroupElement.delta_power(A3, 2), {1, 2}, 10)
    assert all(r["bound"] == 0 for r in rows)
    rows = elliptic_orbit_report(GroupElement.delta_power(A3, 1), {1, 3}, 5)
    assert all(r["bound"] <= 9 for r in rows)
    with pytest.raises(NotNormalizingError):
        elliptic_orbit_report(GroupElement.atom(A3, 2), {1}, 3)
