"""Acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line to the terminal.
"""

import random
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from knotforge import knot_table
from knotforge.alexander import alexander_polynomial, knot_determinant
from knotforge.cli import main
from knotforge.compose import SpliceSpec, connected_sum, splice_sites
from knotforge.conway import conway_polynomial, conway_to_alexander
from knotforge.diagram import UNKNOT, Diagram
from knotforge.laurent import LaurentPoly, determinant, eval_at_int, normalize_units, units_equal
from knotforge.reidemeister import walk
from knotforge.report import composition_table

HERE = Path(__file__).parent
NAMES = knot_table.NAMES


@pytest.fixture
def criterion(request, capsys):
    @contextmanager
    def run(n: int, label: str, limit: float):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\ncriterion {n}: {status}  {label} ({elapsed:.2f}s, limit {limit:g}s)")

    return run


def test_criterion_1_fixture_determinant(criterion):
    with criterion(1, "fixture minor determinant, bit-exact", 1.0):
        minor = knot_table.printed_fixture_matrix().minor(3, 3)
        det = determinant(minor)
        assert det == LaurentPoly.parse("2t - 3t^2 + 3t^3 - t^4")
        assert normalize_units(det) == LaurentPoly.parse("2 - 3t + 3t^2 - t^3")
        assert normalize_units(det).render() == "2 - 3t + 3t^2 - t^3"


def test_criterion_2_dual_algorithm_agreement(criterion):
    with criterion(2, "matrix vs skein on built-ins and listed compositions", 30.0):
        diagrams = [knot_table.get(n) for n in NAMES]
        diagrams += [connected_sum(knot_table.get(r.left), knot_table.get(r.right))
                     for r in knot_table.printed_rows()]
        assert len(diagrams) == 21
        for d in diagrams:
            assert units_equal(alexander_polynomial(d), conway_to_alexander(conway_polynomial(d)))


def test_criterion_3_known_anchors(criterion):
    with criterion(3, "known Alexander polynomials and determinants", 10.0):
        for name, want in (("3_1", "1 - t + t^2"), ("4_1", "1 - 3t + t^2")):
            d = knot_table.get(name)
            want = LaurentPoly.parse(want)
            assert units_equal(alexander_polynomial(d), want)
            assert units_equal(conway_to_alexander(conway_polynomial(d)), want)
        dets = {}
        for name in ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"):
            d = knot_table.get(name)
            by_matrix = knot_determinant(d)
            by_skein = abs(eval_at_int(conway_to_alexander(conway_polynomial(d)), -1))
            assert by_matrix == by_skein
            dets[name] = by_matrix
        assert list(dets.values()) == [3, 5, 5, 7, 9, 11, 13]


def test_criterion_4_unknot_is_identity(criterion):
    with criterion(4, "K # unknot at every splice site", 30.0):
        unknots = [UNKNOT, knot_table.get("1_1"), knot_table.get("2_1")]
        for name in NAMES:
            k = knot_table.get(name)
            delta = alexander_polynomial(k)
            for u in unknots:
                for i in splice_sites(k):
                    for j in splice_sites(u):
                        for match in (True, False):
                            for s in (connected_sum(k, u, SpliceSpec(i, j, match)),
                                      connected_sum(u, k, SpliceSpec(j, i, match))):
                                assert units_equal(alexander_polynomial(s), delta)
                                assert units_equal(conway_to_alexander(conway_polynomial(s)), delta)


def test_criterion_5_multiplicativity(criterion):
    with criterion(5, "multiplicativity over all pairs, sites and orientations", 120.0):
        diagrams = {n: knot_table.get(n) for n in NAMES}
        delta = {n: alexander_polynomial(d) for n, d in diagrams.items()}
        det = {n: knot_determinant(d) for n, d in diagrams.items()}
        count = 0
        for a in NAMES:
            for b in NAMES:
                for i in splice_sites(diagrams[a]):
                    for j in splice_sites(diagrams[b]):
                        for match in (True, False):
                            s = connected_sum(diagrams[a], diagrams[b], SpliceSpec(i, j, match))
                            ds = alexander_polynomial(s)
                            assert units_equal(ds, delta[a] * delta[b]), (a, b, i, j, match)
                            assert abs(eval_at_int(ds, -1)) == det[a] * det[b]
                            count += 1
        assert count > 3000


def _relabel(d: Diagram, rng: random.Random) -> Diagram:
    edges = list(range(d.edge_count))
    rng.shuffle(edges)
    order = list(range(len(d.pd)))
    rng.shuffle(order)
    pd = tuple(tuple(edges[e] for e in d.pd[x]) for x in order)
    return Diagram(pd, tuple(d.signs[x] for x in order), d.loops)


def test_criterion_6_invariance(criterion):
    with criterion(6, "Reidemeister walks, row/column sweep, relabeling", 300.0):
        for name in NAMES:
            k = knot_table.get(name)
            ref = normalize_units(alexander_polynomial(k))
            for seed in range(100):
                steps = 1 + seed % 8
                for _, d in walk(k, steps, seed):
                    assert normalize_units(alexander_polynomial(d)) == ref, (name, seed)
            n = len(k.pd)
            for r in range(n):
                for c in range(n):
                    assert normalize_units(alexander_polynomial(k, r, c)) == ref
            rng = random.Random(name)
            for _ in range(20):
                assert normalize_units(alexander_polynomial(_relabel(k, rng))) == ref


def test_criterion_7_table_divergence(criterion, capsys):
    with criterion(7, "table: 1 reproduced row, 11 product passes, 11 not-unit-equal flags", 60.0):
        rows = composition_table()
        assert len(rows) == 11
        assert sum(r.fixture_reproduced for r in rows) == 1
        assert rows[0].fixture_reproduced
        assert rows[0].printed_value == "2-3t+3t^2-t^3"
        assert sum(r.product_check for r in rows) == 11
        assert sum(not r.printed_unit_equal for r in rows) == 11
        assert all(r.determinant == r.determinant_product for r in rows)

        assert main(["paper-table"]) == 0
        out = capsys.readouterr().out
        assert "fixture-reproduced rows: 1" in out
        assert "product checks passed: 11/11" in out
        assert "unit-equal to the invariant: 0/11" in out


def test_criterion_8_property_suites(criterion):
    with criterion(8, "property suites under fixed seeds", 120.0):
        suites = ["test_laurent.py", "test_diagram.py", "test_notation.py", "test_conway.py",
                  "test_reidemeister.py", "test_alexander.py"]
        proc = subprocess.run(
            [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *suites],
            cwd=HERE, capture_output=True, text=True, check=False,
        )
        assert proc.returncode == 0, proc.stdout[-2000:]
