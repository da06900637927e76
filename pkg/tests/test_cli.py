"""Command-line driver: config handling, report format, determinism,
figure rendering, and exit codes."""

import io
import json
import os

import pytest

from m22verify import cli
from m22verify.cli import (
    ClaimReport,
    CliError,
    Config,
    build_config,
    load_config_file,
    run_claim,
    verify,
)

CHEAP_CLAIMS = ["newton-fig1", "elkies-genus", "elkies-bound",
                "gtilde-divides", "decomp-3", "msub-square"]


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def test_load_config_file(tmp_path):
    path = tmp_path / "m22v.cfg"
    path.write_text("# comment\nthreads = 4\nlambda=101\nseed = 9\n")
    values = load_config_file(str(path))
    assert values == {"threads": "4", "lambda": "101", "seed": "9"}


def test_load_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "m22v.cfg"
    path.write_text("bogus = 1\n")
    with pytest.raises(CliError):
        load_config_file(str(path))


def test_flags_override_config_file(tmp_path):
    path = tmp_path / "m22v.cfg"
    path.write_text("threads=4\nseed=9\nlambda=101\n")

    class Args:
        config = str(path)
        data = None
        threads = 2
        seed = None
        lam = None
        checkpoint = None
        json = None

    cfg = build_config(Args())
    assert cfg.threads == 2      # flag wins
    assert cfg.seed == 9         # from file
    assert cfg.lam == 101        # from file


def test_data_dir_env_fallback(monkeypatch, tmp_path):
    monkeypatch.setenv(cli.DATA_ENV, str(tmp_path))
    cfg = Config()
    assert cfg.data_dir == str(tmp_path)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def test_claim_report_json_shape():
    r = ClaimReport("x", "PASS", {"v": 1}, 1, "literature", 5, 0, ["n"])
    obj = json.loads(r.to_json())
    assert obj["claim_id"] == "x"
    assert obj["status"] == "PASS"
    assert obj["expected"] == {"value": 1, "provenance": "literature"}
    assert "runtime_ms" in obj and "seed" in obj


def test_registry_has_all_claims():
    expected = {
        "branch-data", "msub-square", "selfcent-12", "elkies-genus",
        "elkies-bound", "elkies-count", "elkies-verdict", "split-6-12M22",
        "split-1344-2M22", "spec-35", "spec-11", "spec-5", "gtilde-divides",
        "newton-fig1", "decomp-3", "feit-f-indices", "orbit-1-21",
    }
    assert set(cli.CLAIMS) == expected


def test_list_claims_output():
    buf = io.StringIO()
    cli.list_claims(buf)
    text = buf.getvalue()
    assert "17 claims registered" in text
    assert "newton-fig1" in text


def test_unknown_claim_rejected():
    with pytest.raises(CliError):
        verify("no-such-claim", Config(), out=io.StringIO(), err=io.StringIO())


def test_run_claim_catches_exceptions():
    cfg = Config(data_dir="/nonexistent-data-dir")
    report = run_claim("orbit-1-21", cfg, {})
    assert report.status == "FAIL"
    assert "error" in report.computed


# ---------------------------------------------------------------------------
# verification runs
# ---------------------------------------------------------------------------

def strip_runtime(text):
    out = []
    for line in text.strip().splitlines():
        obj = json.loads(line)
        obj.pop("runtime_ms")
        out.append(json.dumps(obj, sort_keys=True))
    return "\n".join(out)


def run_cheap(tmp_path, tag):
    json_path = str(tmp_path / ("out-%s.jsonl" % tag))
    cfg = Config(json_out=json_path, seed=0)
    err = io.StringIO()
    reports = []
    ctx = {}
    with open(json_path, "w") as fh:
        for cid in CHEAP_CLAIMS:
            rep = run_claim(cid, cfg, ctx)
            reports.append(rep)
            fh.write(rep.to_json() + "\n")
    return json_path, reports


def test_cheap_claims_pass_and_are_deterministic(tmp_path):
    path_a, reports_a = run_cheap(tmp_path, "a")
    path_b, _ = run_cheap(tmp_path, "b")
    for rep in reports_a:
        assert rep.status == "PASS", (rep.claim_id, rep.computed)
    with open(path_a) as fa, open(path_b) as fb:
        assert strip_runtime(fa.read()) == strip_runtime(fb.read())


def test_verify_single_claim_exit_code_and_figures(tmp_path):
    json_path = str(tmp_path / "report.jsonl")
    cfg = Config(json_out=json_path, seed=0)
    out, err = io.StringIO(), io.StringIO()
    reports, code = verify("newton-fig1", cfg, out=out, err=err, figures=True)
    assert code == 0
    assert reports[0].status == "PASS"
    with open(json_path) as fh:
        obj = json.loads(fh.readline())
    assert obj["claim_id"] == "newton-fig1"
    assert os.path.exists(os.path.join(str(tmp_path), "newton_polygon.png"))
    assert "newton-fig1" in err.getvalue()


def test_verify_exit_code_on_failure(monkeypatch):
    def broken(cfg, ctx):
        return 1, 2, "definition", None, []
    monkeypatch.setitem(cli.CLAIMS, "newton-fig1",
                        ("broken stand-in", "instant", broken))
    out, err = io.StringIO(), io.StringIO()
    _reports, code = verify("newton-fig1", Config(), out=out, err=err,
                            figures=False)
    assert code == 1


def test_unverified_does_not_fail_run(tmp_path):
    """At a non-default field size the count claims report UNVERIFIED and
    the run still exits 0."""
    cfg = Config(lam=101, seed=0)
    out, err = io.StringIO(), io.StringIO()
    reports, code = verify("elkies-count", cfg, out=out, err=err,
                           figures=False)
    assert reports[0].status == "UNVERIFIED"
    assert code == 0


def test_main_list_runs():
    assert cli.main(["list"]) == 0
