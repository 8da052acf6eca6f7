"""
Tests voor de command-line interface: uitvoer, exitcodes en foutmeldingen.

Golden-bestanden staan in tests/golden/ en bevatten de volledige stdout.
"""

import io
from pathlib import Path

import pytest

from flewsat.algebra.flewalg import ALGEBRA_DIR, LATTICE_DIR
from flewsat.app.cli import build_parser, run

GOLDEN_DIR = Path(__file__).parent / "golden"

L3 = str(ALGEBRA_DIR / "lukasiewicz3.alg")
G3 = str(ALGEBRA_DIR / "godel3.alg")
BROKEN = str(ALGEBRA_DIR / "broken.alg")


def run_cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


# === Golden uitvoer ===

class TestGolden:
    def test_sat_lukasiewicz3(self):
        code, output = run_cli("sat", L3, "x1 <-> ~x1")
        assert code == 0
        assert output == golden("sat_lukasiewicz3.txt")

    def test_validate_kapotte_algebra(self):
        code, output = run_cli("alg", "validate", BROKEN)
        assert code == 1
        assert output == golden("validate_broken.txt")

    def test_classify_godel3(self):
        code, output = run_cli("classify", G3)
        assert code == 0
        assert output == golden("classify_godel3.txt")

    def test_chain_test_lukasiewicz3(self):
        code, output = run_cli("chain-test", L3)
        assert code == 0
        assert output == golden("chain_test_lukasiewicz3.txt")

    def test_reduce_dp(self):
        code, output = run_cli("reduce", "dp", "--alpha", "x1 /\\ ~x1", "--phi1", "x1", "--phi2", "x1 * ~x1")
        assert code == 0
        assert output == golden("reduce_dp.txt")


# === Scans ===

class TestScans:
    def test_taut_met_tegenvoorbeeld(self):
        code, output = run_cli("taut", L3, "x1 \\/ ~x1")
        assert code == 1
        assert "holds: false" in output
        assert "counterexample: x1=1/2" in output
        assert "value: 1/2" in output

    def test_satpos(self):
        code, output = run_cli("satpos", L3, "x1 * ~x1")
        assert code == 1
        assert "holds: false" in output

    def test_postaut(self):
        code, output = run_cli("postaut", L3, "x1 \\/ ~x1")
        assert code == 0
        assert "holds: true" in output

    def test_gesloten_term(self):
        code, output = run_cli("sat", L3, "1")
        assert code == 0
        assert "witness: (geen variabelen)" in output

    def test_budget_vlag(self):
        code, output = run_cli("--budget", "5", "sat", L3, "x1 * x2")
        assert code == 2
        assert output.startswith("error: budget overschreden: 9")

    def test_budget_na_werkwoord(self):
        code, output = run_cli("sat", "--budget", "5", L3, "x1 * x2")
        assert code == 2
        assert output.startswith("error: budget overschreden: 9")

    def test_budget_voor_werkwoord_blijft_staan(self):
        code, output = run_cli("--budget", "5", "sat", L3, "x1 * x2")
        assert code == 2
        code, _ = run_cli("--budget", "100", "sat", L3, "x1 * x2")
        assert code == 0

    def test_seed_in_beide_posities(self):
        parser = build_parser()
        assert parser.parse_args(["--seed", "3", "verify"]).seed == 3
        assert parser.parse_args(["verify", "--seed", "4"]).seed == 4
        assert parser.parse_args(["verify"]).seed is None

    def test_budget_uit_omgeving(self, monkeypatch):
        monkeypatch.setenv("FLEWSAT_BUDGET", "2")
        code, output = run_cli("sat", L3, "x1")
        assert code == 2
        assert "budget 2" in output


# === Algebrabestanden ===

class TestAlg:
    def test_make_lukasiewicz_gelijk_aan_datafile(self):
        code, output = run_cli("alg", "make", "lukasiewicz", "3")
        assert code == 0
        assert output == Path(L3).read_text(encoding="utf-8")

    def test_make_naar_bestand(self, tmp_path):
        target = tmp_path / "g4.alg"
        code, output = run_cli("alg", "make", "godel", "4", "-o", str(target))
        assert code == 0
        assert output == f"written: {target}\n"
        code, output = run_cli("alg", "validate", str(target))
        assert code == 0
        assert output.endswith("valid: true\n")

    def test_make_product(self):
        code, output = run_cli("alg", "make", "product", L3, G3)
        assert code == 0
        assert "size 9" in output.splitlines()

    def test_make_heyting(self):
        code, output = run_cli("alg", "make", "heyting", str(LATTICE_DIR / "square.lat"))
        assert code == 0
        assert output.startswith("flewalg 1\nsize 4\n")

    def test_niet_distributief_tralie(self):
        code, output = run_cli("alg", "make", "heyting", str(LATTICE_DIR / "m3.lat"))
        assert code == 2
        assert output.startswith("error:")

    def test_verkeerd_aantal_argumenten(self):
        code, output = run_cli("alg", "make", "lukasiewicz")
        assert code == 2
        assert output.startswith("error: alg make lukasiewicz verwacht 1")

    def test_ongeldig_getal(self):
        code, output = run_cli("alg", "make", "godel", "drie")
        assert code == 2
        assert output.startswith("error:")

    def test_show(self):
        code, output = run_cli("alg", "show", G3)
        assert code == 0
        assert "label: godel3" in output
        assert "names: 0 1/2 1" in output
        assert "chain: true" in output


# === Ketens en homomorfismen ===

class TestKetens:
    def test_komori_familie(self):
        code, output = run_cli("classify", "--family", "komori", "3")
        assert code == 0
        assert "algebra: komori 3" in output
        assert "hom-onto-2: false" in output

    def test_komori_een(self):
        _, output = run_cli("classify", "--family", "komori", "1")
        assert "hom-onto-2: true" in output

    def test_onbekende_familie(self):
        code, output = run_cli("classify", "--family", "chang", "1")
        assert code == 2
        assert output.startswith("error:")

    def test_classify_zonder_argumenten(self):
        code, _ = run_cli("classify")
        assert code == 2

    def test_hom_godel3(self):
        code, output = run_cli("hom", G3)
        assert code == 0
        assert "partition: {0}/{1/2,1}" in output

    def test_hom_lukasiewicz3(self):
        code, output = run_cli("hom", L3)
        assert code == 1
        assert output == "holds: false\n"

    def test_chain_test_weigert_geen_keten(self, tmp_path):
        target = tmp_path / "square.alg"
        run_cli("alg", "make", "heyting", str(LATTICE_DIR / "square.lat"), "-o", str(target))
        code, output = run_cli("chain-test", str(target))
        assert code == 2
        assert "geen keten" in output


# === Fragmenten ===

class TestFragmenten:
    def test_glivenko(self):
        code, output = run_cli("glivenko", "x1")
        assert code == 0
        assert "glivenko: ((x1 -> 0) -> 0)" in output

    def test_df(self):
        code, output = run_cli("df", "(x1 \\/ x2) * ~x1")
        assert code == 0
        assert output == "monomials: 2\ndf: x1 * ~x1 \\/ x2 * ~x1\n"

    def test_df_buiten_fragment(self):
        code, output = run_cli("df", "x1 /\\ x2")
        assert code == 2
        assert output.startswith("error:")

    def test_cvsat(self):
        code, output = run_cli("cvsat", "(x1 \\/ x2) * ~x1")
        assert code == 0
        assert "witness: x1=0 x2=1" in output

    def test_cvsat_onvervulbaar(self):
        code, output = run_cli("cvsat", "x1 * ~x1")
        assert code == 1
        assert output == "holds: false\n"

    def test_maxcv(self):
        code, output = run_cli("maxcv", "(x1 \\/ x2) * ~x1")
        assert code == 0
        assert output == "max: 1\nvertex: x1=0 x2=1\n"

    def test_mvsat(self):
        code, output = run_cli("mvsat", "x1 <-> ~x1", "--max-den", "2")
        assert code == 0
        assert "holds: true" in output
        assert "witness: x1=1/2" in output

    def test_mvsat_zonder_getuige(self):
        code, output = run_cli("mvsat", "x1 <-> ~x1", "--max-den", "1")
        assert code == 1
        assert "note: geen getuige met noemer <= 1" in output

    def test_dimacs(self, tmp_path):
        cnf = tmp_path / "small.cnf"
        cnf.write_text("c voorbeeld\np cnf 3 2\n1 -2 0\n2 3 0\n", encoding="utf-8")
        code, output = run_cli("dimacs", str(cnf), "--emit-term")
        assert code == 0
        assert "variables: 3" in output
        assert "clauses: 2" in output
        assert "holds: true" in output
        assert "roundtrip: true" in output

    def test_dimacs_fout(self, tmp_path):
        cnf = tmp_path / "bad.cnf"
        cnf.write_text("p cnf 1 1\n0\n", encoding="utf-8")
        code, output = run_cli("dimacs", str(cnf))
        assert code == 2
        assert "lege clausule" in output

    def test_reduce_weigert_geen_cf(self):
        code, output = run_cli("reduce", "dp", "--alpha", "x1", "--phi1", "x1 -> x2", "--phi2", "x1")
        assert code == 2
        assert "phi1 is geen CF-term" in output


# === Rekenkunde ===

class TestRekenkunde:
    @pytest.mark.parametrize("n,m,code", [(2, 4, 0), (3, 6, 0), (3, 4, 1), (4, 6, 1)])
    def test_contain(self, n, m, code):
        result, output = run_cli("contain", str(n), str(m))
        assert result == code
        assert f"algebra: L{m + 1}" in output
        assert f"divides: {str(m % n == 0).lower()}" in output

    def test_rstar(self):
        assert run_cli("rstar", "--primes", "2,3", "5/6") == (0, "q: 5/6\nholds: true\n")
        assert run_cli("rstar", "--primes", "2,3", "1/4")[0] == 1

    def test_rstar_ongeldige_invoer(self):
        code, output = run_cli("rstar", "--primes", "2,x", "1/2")
        assert code == 2
        assert output.startswith("error:")


# === Fouten ===

class TestFouten:
    def test_syntaxfout_is_een_regel(self):
        code, output = run_cli("sat", L3, "x1 &")
        assert code == 2
        assert len(output.splitlines()) == 1
        assert output.startswith("error:")
        assert "offset" in output

    def test_ontbrekend_bestand(self, tmp_path):
        code, output = run_cli("sat", str(tmp_path / "bestaat-niet.alg"), "x1")
        assert code == 2
        assert output.startswith("error:")

    def test_ongeldige_algebra_bij_scan(self):
        code, output = run_cli("sat", BROKEN, "x1")
        assert code == 2
        assert "residuation: fail at (1,1/2,0)" in output

    def test_onbekend_werkwoord(self):
        code, output = run_cli("frobnicate")
        assert code == 2
        assert len(output.splitlines()) == 1
        assert output.startswith("error:")

    def test_budget_moet_positief_zijn(self):
        code, output = run_cli("--budget", "0", "sat", L3, "x1")
        assert code == 2
        assert output.startswith("error:")
        assert "moet >= 1 zijn" in output

    def test_ontbrekend_argument(self):
        code, output = run_cli("sat", L3)
        assert code == 2
        assert output.startswith("error:")

    def test_diep_geneste_term(self):
        code, output = run_cli("glivenko", "~" * 3000 + "x1")
        assert code == 2
        assert output == "error: term te diep genest\n"

    def test_diep_geneste_term_bij_scan(self):
        code, output = run_cli("sat", L3, "(" * 3000 + "x1" + ")" * 3000)
        assert code == 2
        assert output.startswith("error:")


@pytest.mark.slow
def test_verify_quick():
    code, output = run_cli("verify", "--quick")
    assert code == 0
    assert output.endswith("passed: true\n")
