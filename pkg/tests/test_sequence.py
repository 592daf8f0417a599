"""Partition planning, candidate assembly, and the solver report."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dubinseq.bounds import HeadingGrid
from dubinseq.dubins import Configuration, dubins_shortest, integrate
from dubinseq.errors import ValidationError
from dubinseq.instances import Instance, generate
from dubinseq.sequence import (
    build_candidate,
    opt_partition_diagnostic,
    plan_partition,
    solution_document,
    solve_sequence,
)

GRID = HeadingGrid(32)
rng = np.random.RandomState(23)


# ------------------------------------------------------------- partition


@given(st.integers(min_value=3, max_value=200), st.integers(min_value=0, max_value=2))
def test_partition_covers_every_index_once(n, offset):
    p = plan_partition(n, offset)
    seen = []
    for a, b, c in p.triples:
        seen += [a, b, c]
        assert (b, c) == (a + 1, a + 2)
    for a, b in p.lines:
        seen += [a, b]
        assert b == a + 1
    seen += list(p.free_points)
    assert sorted(seen) == list(range(n))


@given(st.integers(min_value=3, max_value=200), st.integers(min_value=0, max_value=2))
def test_partition_blocks_are_contiguous_and_connected(n, offset):
    p = plan_partition(n, offset)
    assert p.blocks[0][0] == 0
    assert p.blocks[-1][1] == n - 1
    for i, (first, last) in enumerate(p.blocks[:-1]):
        nxt = p.blocks[i + 1]
        assert nxt[0] == last + 1
        assert p.connectors[i] == (last, nxt[0])


def test_partition_offsets_have_expected_shape():
    p0 = plan_partition(9, 0)
    assert p0.triples == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
    assert p0.lines == () and p0.free_points == ()
    p1 = plan_partition(9, 1)
    assert p1.free_points == (0,) and p1.triples == ((1, 2, 3), (4, 5, 6))
    assert p1.lines == ((7, 8),)
    p2 = plan_partition(9, 2)
    assert p2.lines == ((0, 1),) and p2.triples == ((2, 3, 4), (5, 6, 7))
    assert p2.free_points == (8,)


def test_partition_argument_validation():
    with pytest.raises(ValueError):
        plan_partition(9, 3)
    with pytest.raises(ValueError):
        plan_partition(2, 0)


# ------------------------------------------------------------ candidates


def test_candidates_visit_waypoints_in_order():
    for seed, n in [(0, 6), (1, 7), (2, 8), (3, 3), (4, 4), (5, 5)]:
        inst = generate(n, 100.0, seed=seed)
        for offset in range(3):
            cand = build_candidate(inst, offset, eps=1e-4)
            L1, L2, L3 = opt_partition_diagnostic(inst, cand.path)
            assert (L1 + L2 + L3) == pytest.approx(cand.path.length, rel=1e-6)


def test_candidate_endpoints_are_first_and_last_waypoints():
    inst = generate(7, 100.0, seed=6)
    for offset in range(3):
        cand = build_candidate(inst, offset, eps=1e-4)
        sx, sy = cand.path.start.x, cand.path.start.y
        assert math.hypot(sx - inst.points[0][0], sy - inst.points[0][1]) <= 1e-6 * inst.rho
        end = integrate(cand.path)
        assert math.hypot(end.x - inst.points[-1][0], end.y - inst.points[-1][1]) <= 1e-6 * inst.rho


def test_ledger_prices_sum_to_cost():
    inst = generate(10, 100.0, seed=7)
    for offset in range(3):
        cand = build_candidate(inst, offset, eps=1e-4)
        assert math.fsum(e.cost for e in cand.ledger) == pytest.approx(cand.cost, rel=1e-12)
        kinds = {e.kind for e in cand.ledger}
        assert kinds <= {"triple", "line", "connector"}


def test_headings_are_normalized_and_complete():
    inst = generate(8, 100.0, seed=8)
    cand = build_candidate(inst, 1, eps=1e-4)
    assert len(cand.headings) == 8
    for h in cand.headings:
        assert 0.0 <= h < 2 * math.pi


def test_free_endpoint_takes_bearing():
    inst = generate(7, 100.0, seed=9)
    cand = build_candidate(inst, 1, eps=1e-4)  # offset 1: waypoint 0 is free
    (x0, y0), (x1, y1) = inst.points[0], inst.points[1]
    assert cand.headings[0] == pytest.approx(math.atan2(y1 - y0, x1 - x0) % (2 * math.pi))


def test_three_waypoints_offset_zero_is_the_three_point_solution():
    from dubinseq.three_point import solve_three_point

    inst = generate(3, 100.0, seed=19)
    cand = build_candidate(inst, 0, eps=1e-4)
    direct = solve_three_point(*inst.points, inst.rho, eps=1e-4)
    assert cand.cost == direct.path.length
    assert [e.kind for e in cand.ledger] == ["triple"]


def test_candidate_cost_obeys_composite_upper_bound():
    """Triples priced by the dense grid reference, connectors by the
    (1+pi) * gap factor: the assembled candidate can't exceed the sum."""
    from _oracles import three_point_grid_best

    inst = generate(12, 100.0, seed=20)
    cand = build_candidate(inst, 0, eps=1e-4)
    budget = 0.0
    for entry in cand.ledger:
        (xa, ya), (xb, yb) = inst.points[entry.first], inst.points[entry.last]
        if entry.kind == "triple":
            mid = inst.points[entry.first + 1]
            ref = three_point_grid_best(inst.points[entry.first], mid,
                                        inst.points[entry.last], inst.rho, 20_000)
            budget += (1 + 1e-4) * ref
        else:
            budget += (1 + math.pi) * math.hypot(xb - xa, yb - ya)
    assert cand.cost <= budget + 1e-9


# ---------------------------------------------------------------- solver


def test_chosen_is_cheapest_candidate():
    inst = generate(9, 100.0, seed=10)
    rep = solve_sequence(inst, grid=GRID)
    assert {c.label for c in rep.candidates} == {"F1", "F2", "F3"}
    assert rep.chosen.cost == min(c.cost for c in rep.candidates)


def test_guarantee_flag_tracks_multiple_of_three():
    assert solve_sequence(generate(6, 80.0, seed=1), grid=GRID).guarantee_applies
    assert not solve_sequence(generate(7, 80.0, seed=1), grid=GRID).guarantee_applies


def test_cost_respects_euclidean_bound():
    for seed in range(6):
        inst = generate(6 + seed, 90.0, seed=seed)
        rep = solve_sequence(inst, grid=GRID)
        assert rep.chosen.cost >= rep.bounds.euclidean - 1e-9
        assert rep.a_posteriori_ratio >= 1.0 - 1e-12


def test_factor_bound_against_grid_witness():
    """Necessary condition of the approximation factor: the chosen tour is
    within (1 + pi/3 + eps) of the witness tour, which is itself at least
    the unconstrained optimum."""
    cap = 1 + math.pi / 3 + 1e-4
    for seed in range(6):
        inst = generate(9, 100.0, seed=40 + seed)
        rep = solve_sequence(inst, eps=1e-4, grid=GRID)
        assert rep.chosen.cost <= cap * rep.bounds.grid_upper * (1 + 1e-12)


def test_collinear_is_euclidean_exact():
    inst = Instance(tuple((i * 250.0, 0.0) for i in range(9)), rho=100.0)
    rep = solve_sequence(inst, grid=GRID)
    assert rep.chosen.cost == rep.bounds.euclidean
    assert rep.a_posteriori_ratio == 1.0


def test_rigid_motion_leaves_costs_alone():
    inst = generate(6, 100.0, seed=14)
    ang, tx, ty = 2.31, 4000.0, -750.0
    c, s = math.cos(ang), math.sin(ang)
    moved = Instance(
        tuple((c * x - s * y + tx, s * x + c * y + ty) for x, y in inst.points),
        rho=inst.rho,
    )
    for offset in range(3):
        a = build_candidate(inst, offset, eps=1e-4)
        b = build_candidate(moved, offset, eps=1e-4)
        assert b.cost == pytest.approx(a.cost, rel=1e-9)


def test_mirror_leaves_costs_alone():
    inst = generate(6, 100.0, seed=15)
    flipped = Instance(tuple((x, -y) for x, y in inst.points), rho=inst.rho)
    for offset in range(3):
        a = build_candidate(inst, offset, eps=1e-4)
        b = build_candidate(flipped, offset, eps=1e-4)
        assert b.cost == pytest.approx(a.cost, rel=1e-12)


def test_document_matches_report():
    inst = generate(7, 100.0, seed=16)
    rep = solve_sequence(inst, grid=GRID)
    doc = solution_document(rep)
    assert doc["cost"] == rep.chosen.cost
    assert doc["chosen"] == rep.chosen.label
    assert set(doc["candidates"]) == {"F1", "F2", "F3"}
    assert len(doc["headings"]) == 7
    assert doc["guarantee_applies"] is False
    total = 0.0
    for seg in doc["segments"]:
        assert seg["kind"] in ("L", "R", "S")
        total += seg["extent"] * (1.0 if seg["kind"] == "S" else inst.rho)
    assert total == pytest.approx(rep.chosen.cost, rel=1e-9)


# ------------------------------------------------------------ diagnostic


def test_diagnostic_splits_sum_to_length():
    inst = generate(12, 100.0, seed=17)
    rep = solve_sequence(inst, grid=GRID)
    L1, L2, L3 = opt_partition_diagnostic(inst, rep.chosen.path)
    assert L1 + L2 + L3 == pytest.approx(rep.chosen.path.length, rel=1e-6)
    assert min(L1, L2, L3) <= rep.chosen.path.length / 3 + 1e-9


def test_diagnostic_three_point_split():
    """n=3: leg 1 lands in L2, leg 2 in L3, nothing in L1."""
    inst = generate(3, 100.0, seed=18)
    cand = build_candidate(inst, 0, eps=1e-4)
    L1, L2, L3 = opt_partition_diagnostic(inst, cand.path)
    assert L1 == 0.0
    assert L2 > 0.0 and L3 > 0.0
    assert L2 + L3 == pytest.approx(cand.path.length, rel=1e-6)


def test_diagnostic_rejects_missing_waypoint():
    inst = Instance(((0.0, 0.0), (250.0, 300.0), (500.0, 0.0)), rho=100.0)
    miss = dubins_shortest(Configuration(0, 0, 0), Configuration(500, 0, 0), 100.0)
    with pytest.raises(ValidationError):
        opt_partition_diagnostic(inst, miss)


def test_diagnostic_rejects_out_of_order_visits():
    inst = Instance(((0.0, 0.0), (500.0, 0.0), (250.0, 0.0)), rho=100.0)
    fwd = dubins_shortest(Configuration(0, 0, 0), Configuration(500, 0, 0), 100.0)
    with pytest.raises(ValidationError):
        opt_partition_diagnostic(inst, fwd)
