import json
from fractions import Fraction

import pytest

from semiflows import claims
from semiflows.config import ConfigError, RunConfig, load_config, parse_config
from semiflows.errors import ContractError
from semiflows.reports import emit_report, render_report

TINY = RunConfig(affine_d=3, twist_n=8, scale_d=3, horizon=8, samples=500, cascade_points=3)


def test_registry_shape():
    reg = claims.registry()
    assert [c.id for c in reg] == [f"C{i}" for i in range(1, 16)]
    assert {c.expected for c in reg} <= {claims.CONFIRMED, claims.OPEN}
    assert [c.id for c in reg if c.expected == claims.OPEN] == ["C5", "C8"]
    for c in reg:
        assert c.procedure.count(".") == 1 and c.anchor and c.statement


def test_unknown_claim():
    with pytest.raises(ContractError):
        claims.run_claim("C16")


@pytest.mark.parametrize("cid", ["C1", "C2", "C3", "C7", "C10"])
def test_fast_claims_confirmed(cid):
    r = claims.run_claim(cid)
    assert r.status == claims.CONFIRMED and not r.conflict


def test_c8_refuted_with_conflict():
    r = claims.run_claim("C8")
    assert r.status == claims.REFUTED and r.conflict and r.expected == claims.OPEN
    assert r.K == ["twist:0", "twist:3", "twist:5"]
    assert all(row["zplus_oracle"] and row["reference_zplus_oracle"] for row in r.evidence[:-1])


def test_c10_group_K():
    assert claims.run_claim("C10").K == [0, 1]


def test_c9_distal():
    r = claims.run_claim("C9")
    assert r.status == claims.CONFIRMED
    assert len(r.evidence[0]["same_radius_pairs"]) == 10


def test_tiny_truncations_can_be_inconclusive():
    assert claims.run_claim("C4", TINY).status == claims.INCONCLUSIVE
    assert claims.run_claim("C6", TINY).status == claims.INCONCLUSIVE


def test_finite_claims_never_inconclusive_at_tiny_scale():
    for cid in ("C3", "C13"):
        assert claims.run_claim(cid, TINY).status == claims.CONFIRMED


def test_reports_deterministic():
    a = render_report([claims.run_claim(c) for c in ("C7", "C8")], "json")
    b = render_report([claims.run_claim(c) for c in ("C7", "C8")], "json")
    assert a == b and a.endswith("\n")
    rows = json.loads(a)
    assert set(rows[0]) >= {"claim", "family", "truncation", "status", "K", "evidence"}


def test_zplus_oracle():
    assert claims.zplus_sumset_covers([0, 3, 5], [0, 4, 6, 8], [0, 3, 4, 5, 6, 7, 8])
    assert not claims.zplus_sumset_covers([0], [0, 4], [0, 3])


def test_lemma_corpus_small():
    out = claims.lemma_corpus_check(horizon=8, samples=2000, random_horizon=60, seed=1)
    assert out["exhaustive_sets"] == 256
    assert out["exhaustive_disagreements"] == out["min_window_mismatches"] == 0
    assert out["random_disagreements"] == out["random_min_window_mismatches"] == 0


class TestConfig:
    def test_defaults(self):
        cfg = RunConfig()
        assert (cfg.epsilon, cfg.scale_d, cfg.affine_d, cfg.twist_n) == (Fraction(1, 100), 20, 200, 200)

    def test_empty_file(self, tmp_path):
        p = tmp_path / "empty.cfg"
        p.write_text("")
        assert load_config(p) == RunConfig()

    def test_override(self):
        cfg = parse_config("# comment\nepsilon=1/50\n\ntwist_n = 40  # cap\n")
        assert cfg.epsilon == Fraction(1, 50) and cfg.twist_n == 40

    @pytest.mark.parametrize("text, line", [("affine_d=abc", 1), ("seed=1\nnonsense", 2),
                                            ("seed=1\ncolour=red", 2)])
    def test_errors_name_line(self, text, line):
        with pytest.raises(ConfigError, match=f"line {line}"):
            parse_config(text)

    def test_invalid_values(self):
        with pytest.raises(ConfigError):
            parse_config("affine_d=0")
        with pytest.raises(ConfigError):
            parse_config("format=xml")
        with pytest.raises(ConfigError):
            RunConfig(epsilon=Fraction(-1, 2))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "nope.cfg")


class TestReports:
    rows = [{"claim": "C1", "status": "CONFIRMED", "K": [], "evidence": [{"a": 1}], "conflict": False},
            {"claim": "C8", "status": "REFUTED", "K": ["twist:0"], "evidence": [], "conflict": True}]

    def test_csv_one_row_each(self):
        out = render_report(self.rows, "csv").splitlines()
        assert out[0].startswith("claim,status") and len(out) == 3

    def test_text_table(self):
        out = render_report(self.rows, "text")
        assert "status" in out.splitlines()[0] and "REFUTED" in out
        assert "CONFIRMED: 1, REFUTED: 1" in out

    def test_json_sorted(self):
        out = render_report(self.rows, "json")
        assert out.index('"K"') < out.index('"claim"')

    def test_bad_format(self):
        with pytest.raises(ConfigError):
            render_report(self.rows, "xml")

    def test_emit_to_file(self, tmp_path):
        p = tmp_path / "r.json"
        emit_report(self.rows, "json", str(p))
        emit_report(self.rows, "json", str(tmp_path / "s.json"))
        assert p.read_bytes() == (tmp_path / "s.json").read_bytes()

    def test_unwritable(self, tmp_path):
        with pytest.raises(ConfigError):
            emit_report(self.rows, "json", str(tmp_path / "missing" / "r.json"))
