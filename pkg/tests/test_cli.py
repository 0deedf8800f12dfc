import io
import json
from contextlib import redirect_stdout
from unittest import TestCase
from unittest.mock import patch

from stacksort_roots.cli import main
from stacksort_roots.model.enums import CertifyTarget


def _run(*argv):
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(list(argv))
    return code, buffer.getvalue()


def _run_json(*argv):
    code, out = _run(*argv)
    return code, json.loads(out)


class TestSortCommand(TestCase):
    def test_sort(self):
        code, report = _run_json("sort", "--word", "2 3 1", "--times", "2")
        self.assertEqual(code, 0)
        self.assertEqual(report["command"], "sort")
        self.assertEqual(report["parameters"], {"word": "2 3 1", "times": 2})
        self.assertEqual(report["results"], [{"step": 1, "word": "2 1 3"}, {"step": 2, "word": "1 2 3"}])

    def test_repeated_letters(self):
        code, report = _run_json("sort", "--word", "1 1")
        self.assertEqual(code, 2)
        self.assertEqual(report["status"], "usage_error")
        self.assertIn("error", report["results"][0])

    def test_text_format(self):
        code, out = _run("--format", "text", "sort", "--word", "3 1 2")
        self.assertEqual(code, 0)
        self.assertEqual(out, "sort: ok\nstep=1, word=1 2 3\n")

    def test_long_word(self):
        word = " ".join(str(l) for l in range(1500, 0, -1))
        code, report = _run_json("sort", "--word", word)
        self.assertEqual(code, 0)
        self.assertEqual(report["results"][0]["word"], " ".join(str(l) for l in range(1, 1501)))


class TestTableCommand(TestCase):
    def test_both_methods_match(self):
        code, report = _run_json("--jobs", "1", "table", "--n", "4", "--t", "2", "--method", "both")
        self.assertEqual(code, 0)
        closed, brute, match = report["results"]
        self.assertEqual(closed["method"], "closed_form")
        self.assertEqual(brute["method"], "brute_force")
        self.assertEqual(closed["counts"], [1, 10, 10, 1])
        self.assertEqual(brute["counts"], [1, 10, 10, 1])
        self.assertEqual(brute["external_total"], 22)
        self.assertEqual(match, {"match": True})

    def test_narayana_row(self):
        code, report = _run_json("--jobs", "1", "table", "--n", "5", "--t", "1", "--method", "closed")
        self.assertEqual(code, 0)
        self.assertEqual(report["results"][0]["counts"], [1, 10, 20, 10, 1])
        self.assertEqual(report["results"][0]["catalan_total"], 42)

    def test_eulerian_fallback(self):
        code, report = _run_json("--jobs", "1", "table", "--n", "4", "--t", "3", "--method", "closed")
        self.assertEqual(code, 0)
        self.assertEqual(report["results"][0]["method"], "closed_form_unavailable")
        self.assertEqual(report["results"][0]["counts"], [1, 11, 11, 1])

    def test_unsupported_closed_form(self):
        code, report = _run_json("--jobs", "1", "table", "--n", "6", "--t", "3", "--method", "closed")
        self.assertEqual(code, 2)
        self.assertEqual(report["status"], "usage_error")

    def test_enumeration_cap(self):
        code, _ = _run_json("--jobs", "1", "--max-n", "5", "table", "--n", "6", "--t", "1")
        self.assertEqual(code, 2)


class TestCertifyCommand(TestCase):
    def test_w2(self):
        code, report = _run_json("--jobs", "1", "certify", "--target", "w2", "--n", "1..6")
        self.assertEqual(code, 0)
        self.assertEqual([r["n"] for r in report["results"]], [1, 2, 3, 4, 5, 6])
        self.assertEqual(report["results"][2]["polynomial"], {"coeffs": ["1", "4", "1"]})
        self.assertTrue(all(r["certificate"]["real_rooted"] for r in report["results"]))

    def test_interlacing_narayana(self):
        code, report = _run_json("--jobs", "1", "certify", "--target", "interlacing-narayana", "--n", "2..15")
        self.assertEqual(code, 0)
        self.assertEqual(report["status"], "ok")
        self.assertEqual([r["n"] for r in report["results"]], list(range(2, 16)))
        self.assertTrue(all(r["interlaces"] for r in report["results"]))

    def test_lemma2_zeros_grid(self):
        code, report = _run_json("--jobs", "1", "certify", "--target", "lemma2-zeros", "--n", "2,3", "--r", "1/2,2")
        self.assertEqual(code, 0)
        self.assertEqual(report["parameters"]["r"], ["1/2", "2"])
        self.assertEqual([(r["n"], r["r"]) for r in report["results"]], [(2, "1/2"), (2, "2"), (3, "1/2"), (3, "2")])

    def test_pipeline_csv(self):
        code, out = _run("--jobs", "1", "--format", "csv", "certify", "--target", "pipeline", "--n", "3")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("# target=pipeline\n# n=3\n# status=ok\n"))

    def test_violation(self):
        def failing(n):
            return {"n": n, "passed": n != 3}

        with patch.dict('stacksort_roots.dispatch._TARGET_MATRIX', {CertifyTarget.W2: failing}):
            code, report = _run_json("--jobs", "1", "certify", "--target", "w2", "--n", "1..4")
        self.assertEqual(code, 1)
        self.assertEqual(report["status"], "violation")
        self.assertEqual(len(report["results"]), 4)

    def test_bad_target(self):
        code, report = _run_json("certify", "--target", "nope", "--n", "1")
        self.assertEqual(code, 2)
        self.assertEqual(report["status"], "usage_error")

    def test_bad_range(self):
        code, _ = _run_json("--jobs", "1", "certify", "--target", "w2", "--n", "5..2")
        self.assertEqual(code, 2)

    def test_bad_jobs(self):
        code, _ = _run_json("--jobs", "0", "certify", "--target", "w2", "--n", "1")
        self.assertEqual(code, 2)


class TestIdentitiesCommand(TestCase):
    def test_lemma2(self):
        code, report = _run_json("--jobs", "1", "identities", "--which", "lemma2", "--n", "1..3", "--r", "1/2,7/3")
        self.assertEqual(code, 0)
        self.assertEqual(len(report["results"]), 6)

    def test_jacobi_grid(self):
        code, report = _run_json("--jobs", "1", "identities", "--which", "jacobi-eq2", "--n", "0..3",
                                 "--alpha", "1,-7/4", "--beta", "1/2")
        self.assertEqual(code, 0)
        self.assertEqual(report["parameters"]["alpha"], ["1", "-7/4"])
        self.assertEqual(len(report["results"]), 8)

    def test_narayana_jacobi(self):
        code, report = _run_json("--jobs", "1", "identities", "--which", "narayana-jacobi", "--n", "0..8")
        self.assertEqual(code, 0)
        self.assertTrue(all(r["passed"] for r in report["results"]))

    def test_w2_forms(self):
        code, report = _run_json("--jobs", "1", "identities", "--which", "w2-forms", "--n", "1..5")
        self.assertEqual(code, 0)
        self.assertEqual(report["results"][3]["row"], [1, 10, 10, 1])

    def test_bad_rational(self):
        code, _ = _run_json("--jobs", "1", "identities", "--which", "lemma2", "--n", "1", "--r", "0.5x")
        self.assertEqual(code, 2)


class TestConjectureCommand(TestCase):
    def test_scan(self):
        code, report = _run_json("--jobs", "1", "conjecture", "--n-max", "5")
        self.assertEqual(code, 0)
        summary = report["results"][-1]
        self.assertEqual(summary, {"scanned": 11, "counterexamples": []})
        self.assertEqual(report["results"][0]["certificate"]["degree"], 0)

    def test_scan_beyond_cap(self):
        code, _ = _run_json("--jobs", "1", "--max-n", "4", "conjecture", "--n-max", "5")
        self.assertEqual(code, 2)
