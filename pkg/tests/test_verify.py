import json

import pytest

from clawlab.canon import is_isomorphic
from clawlab.families import FamilySpec, build_family
from clawlab.graphs import parse_graph6
from clawlab.invariants import (
    chromatic_number,
    clique_number,
    is_perfect,
)
from clawlab.verify import VerificationReport, induced_cycles, report_emit, verify
from conftest import brute_induced_cycle_sets, random_graph


class TestInducedCycles:
    def test_matches_brute_force(self, rng):
        for _ in range(100):
            g = random_graph(rng, rng.randrange(3, 9), 0.45)
            for min_len in (3, 4, 5, 6):
                got = {frozenset(c) for c in induced_cycles(g, min_len)}
                want = set()
                for L in range(min_len, g.n + 1):
                    want.update(brute_induced_cycle_sets(g, L))
                assert got == want

    def test_each_cycle_once(self, rng):
        g = random_graph(rng, 9, 0.5)
        cycles = list(induced_cycles(g, 3))
        assert len(cycles) == len({frozenset(c) for c in cycles})


class TestTheoremRuns:
    def test_t5_p5_clean(self):
        report = verify("T5_ALPHA3", 7, "P5")
        assert report.ok and report.class_size > 0

    def test_t4_c4_finds_f10(self):
        report = verify("T4_NOALPHA", 6, "C4")
        assert not report.ok
        f10, _ = build_family(FamilySpec("F0", 1))
        assert any(is_isomorphic(parse_graph6(g6), f10) for g6, _ in report.counterexamples)

    def test_t4_clean_for_p4_z1(self):
        assert verify("T4_NOALPHA", 7, "P4").ok
        assert verify("T4_NOALPHA", 7, "Z1").ok

    def test_t3_clean(self):
        assert verify("T3_OLARIU", 7).ok

    def test_t1_clean(self):
        assert verify("T1_BRAUSE", 8).ok

    def test_t6_clean(self):
        assert verify("T6_BULL", 8).ok

    def test_spgt_crosscheck(self):
        report = verify("SPGT_CROSSCHECK", 6)
        assert report.ok
        assert report.class_size == 1 + 2 + 4 + 11 + 34 + 156

    def test_lemma_suites_small(self):
        assert verify("L5_BENREBEA", 8).ok
        assert verify("L6_C5FREE", 8).ok
        assert verify("OBS2_NEIGHBORHOOD", 8).ok
        assert verify("L7_RULES", 8).ok

    def test_unknown_theorem(self):
        with pytest.raises(ValueError):
            verify("T9_NOPE", 5)

    def test_missing_y(self):
        with pytest.raises(ValueError):
            verify("T5_ALPHA3", 5)
        with pytest.raises(ValueError):
            verify("T4_NOALPHA", 5)

    def test_counterexamples_revalidate(self):
        report = verify("T4_NOALPHA", 6, "C4")
        for g6, reason in report.counterexamples:
            g = parse_graph6(g6)
            if reason.startswith("not omega-colourable"):
                chi, _ = chromatic_number(g)
                omega, _ = clique_number(g)
                assert chi > omega
            else:
                assert not is_perfect(g, "spgt").perfect
                assert not is_perfect(g, "direct").perfect


class TestReportEmit:
    def test_empty_json(self):
        report = VerificationReport("T5_ALPHA3", 6, "P5", 10, [], 0.1)
        assert report_emit(report, "json") == "[]"

    def test_empty_csv_header_only(self):
        report = VerificationReport("T5_ALPHA3", 6, "P5", 10, [], 0.1)
        assert report_emit(report, "csv").strip() == "theorem,y,max_n,class_size,elapsed,graph6,reason"

    def test_one_row(self):
        report = verify("T4_NOALPHA", 6, "C4")
        rows = json.loads(report_emit(report, "json"))
        assert rows and all(set(r) == {"theorem", "y", "max_n", "class_size", "elapsed", "graph6", "reason"} for r in rows)
        csv_text = report_emit(report, "csv")
        assert len(csv_text.strip().splitlines()) == len(rows) + 1

    def test_rows_sorted_by_size_then_label(self):
        from clawlab.canon import canonical_label

        report = verify("T4_NOALPHA", 6, "C4")
        rows = json.loads(report_emit(report, "json"))
        keys = [(parse_graph6(r["graph6"]).n, canonical_label(parse_graph6(r["graph6"])), r["reason"]) for r in rows]
        assert keys == sorted(keys)

    def test_json_csv_json_scalar_roundtrip(self):
        import csv as csvmod
        import io

        report = verify("T4_NOALPHA", 6, "C4")
        rows = json.loads(report_emit(report, "json"))
        parsed = list(csvmod.DictReader(io.StringIO(report_emit(report, "csv"))))
        for a, b in zip(rows, parsed):
            assert str(a["theorem"]) == b["theorem"]
            assert str(a["max_n"]) == b["max_n"]
            assert str(a["class_size"]) == b["class_size"]
            assert float(a["elapsed"]) == float(b["elapsed"])
            assert a["graph6"] == b["graph6"]
            assert a["reason"] == b["reason"]

    def test_unknown_format(self):
        report = VerificationReport("T5_ALPHA3", 6, "P5", 10, [], 0.1)
        with pytest.raises(ValueError):
            report_emit(report, "xml")
