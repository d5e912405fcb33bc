from __future__ import annotations

import json

import pytest

from modsimple.cli import main
from modsimple.corpus import (
    ResultCache,
    bundled_corpus_path,
    cache_key,
    exit_code,
    load_corpus,
    parse_corpus,
    run,
    search_steinberg_zero,
)
from modsimple.errors import MalformedInputError


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("MODSIMPLE_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.delenv("MODSIMPLE_WORKERS", raising=False)


# -- corpus files ---------------------------------------------------------------------------


def test_parse_corpus():
    entries = parse_corpus("# comment\n\ns3 | sym:3 | 2,3 | small solvable\na5|alt:5|5\n")
    assert [(e.name, e.builder, e.primes, e.tags) for e in entries] == [
        ("s3", "sym:3", (2, 3), ("small", "solvable")), ("a5", "alt:5", (5,), ())]


@pytest.mark.parametrize("text", ["s3 | sym:3", "s3 | sym:3 | 4", "s3 | sym:3 | x", "s3 | sym:3 | 2\ns3 | alt:4 | 2",
                                  " | sym:3 | 2", "s3 | sym:3 | "])
def test_malformed_corpus_lines(text):
    with pytest.raises(MalformedInputError):
        parse_corpus(text)


def test_bundled_corpus_loads():
    entries = load_corpus(bundled_corpus_path())
    assert len(entries) == 16
    assert {"s4", "a5", "fermat3", "f55", "a5xf55"} <= {e.name for e in entries}


def test_empty_corpus_runs_clean(tmp_path, capsys):
    path = tmp_path / "empty.corpus"
    path.write_text("# nothing here\n")
    assert main(["corpus", "run", str(path), "--out", str(tmp_path / "r.json")]) == 0
    rep = json.loads((tmp_path / "r.json").read_text())
    assert rep["reports"] == [] and rep["summary"] == {"pass": 0, "fail": 0, "unverified": 0}


# -- analyze --------------------------------------------------------------------------------


def test_analyze_json_report(tmp_path):
    out = tmp_path / "s4.json"
    assert main(["analyze", "sym:4", "-p", "3", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["schema_version"] == 1
    assert rep["m_s"] == 3 and rep["group"]["order"] == 24 and rep["outcome"] == "pass"


def test_analyze_summary_line_and_complex(capsys):
    assert main(["analyze", "sym:3", "-p", "2", "--complex", "elab"]) == 0
    out = capsys.readouterr().out
    assert "m_s=2" in out and "reduced Euler characteristic (elementary_abelian): 2" in out


def test_analyze_census_csv(tmp_path):
    path = tmp_path / "census.csv"
    assert main(["analyze", "sym:3", "-p", "2", "--census", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "kind,m,orders,stabilizer_order,orbit_size,sign" and len(lines) == 3


def test_analyze_from_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("degree: 4\n(0 1 2 3)\n(0 1)\n")
    assert main(["analyze", f"file:{path}", "-p", "3", "--json", str(tmp_path / "o.json")]) == 0
    assert json.loads((tmp_path / "o.json").read_text())["group"]["order"] == 24


def test_capability_limit_exits_2(tmp_path):
    assert main(["analyze", "mersenne_example:3", "-p", "3", "--json", str(tmp_path / "m.json")]) == 2
    rep = json.loads((tmp_path / "m.json").read_text())
    assert rep["outcome"] == "unverified"


@pytest.mark.parametrize("argv", [["analyze", "nonsense:3", "-p", "2"], ["analyze", "sym:3", "-p", "4"],
                                  ["analyze", "file:/does/not/exist", "-p", "2"],
                                  ["corpus", "run", "/does/not/exist.corpus"],
                                  ["search-steinberg-zero", "bundled", "-p", "6"],
                                  ["regular-orbits", "--n", "2", "--q", "4", "--p", "2"]])
def test_input_errors_exit_3(argv, capsys):
    assert main(argv) == 3
    assert "error:" in capsys.readouterr().err


def test_bad_seed_rejected():
    with pytest.raises(SystemExit):
        main(["--seed", "-1", "analyze", "sym:3", "-p", "2"])


# -- corpus runs ------------------------------------------------------------------------------


SMALL = "s3 | sym:3 | 2,3\nf21 | frobenius:7,3 | 3,7 | frobenius\nbad | nonsense:1 | 2\n"


def test_corpus_run_reports_build_errors(tmp_path):
    path = tmp_path / "small.corpus"
    path.write_text(SMALL)
    out = tmp_path / "r.json"
    code = main(["corpus", "run", str(path), "--out", str(out), "--no-cache"])
    rep = json.loads(out.read_text())
    assert [r["entry"] for r in rep["reports"]] == ["s3", "s3", "f21", "f21", "bad"]
    assert rep["reports"][-1]["error"]["kind"] == "build"
    assert rep["summary"] == {"pass": 4, "fail": 0, "unverified": 1}
    assert code == 2


def test_reruns_are_byte_identical(tmp_path):
    path = tmp_path / "small.corpus"
    path.write_text(SMALL)
    a, b, c = (tmp_path / n for n in ("a.json", "b.json", "c.json"))
    main(["corpus", "run", str(path), "--out", str(a), "--no-cache"])
    main(["corpus", "run", str(path), "--out", str(b)])
    main(["corpus", "run", str(path), "--out", str(c), "--workers", "2"])
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


def test_cache_round_trip(tmp_path):
    cache = ResultCache(tmp_path / "c")
    entries = parse_corpus("s3 | sym:3 | 2")
    first = run(entries, cache=cache)
    key = cache_key("sym:3", 2, 0)
    assert cache.get(key) is not None
    cache.put(key, {**cache.get(key), "m_s": -1})
    second = run(entries, cache=cache)
    assert second["reports"][0]["m_s"] == -1 and first["reports"][0]["m_s"] == 2
    assert cache_key("sym:3", 2, 1) != key


def test_exit_code_mapping():
    assert exit_code({"summary": {"pass": 3, "fail": 0, "unverified": 0}}) == 0
    assert exit_code({"summary": {"pass": 3, "fail": 1, "unverified": 2}}) == 1
    assert exit_code({"summary": {"pass": 3, "fail": 0, "unverified": 2}}) == 2


def test_bundled_corpus_all_pass(tmp_path, capsys):
    out = tmp_path / "bundled.json"
    assert main(["corpus", "run", "bundled", "--out", str(out), "--workers", "2"]) == 0
    rep = json.loads(out.read_text())
    assert rep["summary"]["pass"] == sum(len(e.primes) for e in load_corpus(bundled_corpus_path()))


# -- searches -------------------------------------------------------------------------------


def test_search_on_bundled_corpus(capsys):
    assert main(["search-steinberg-zero", "bundled", "-p", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["hits"] == []
    assert set(out["excluded"]) == {"s4", "a4", "c6", "d8", "q8"}


def test_search_excludes_groups_with_p_core():
    entries = parse_corpus("s4 | sym:4 | 2\nd8 | dihedral:4 | 2\nv4 | direct:[cyclic:2],[cyclic:2] | 2")
    out = search_steinberg_zero(entries, 2)
    assert out["hits"] == [] and out["excluded"] == ["s4", "d8", "v4"]


def test_regular_orbits_command(capsys):
    assert main(["regular-orbits", "--n", "4", "--q", "2", "--p", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"n": 4, "q": 2, "p": 5, "sylow_order": 5, "regular_orbits": 3, "orbits": 4}


# -- builders -------------------------------------------------------------------------------


@pytest.mark.parametrize("spec,order,degree", [("sl2:4", 60, 5), ("fermat_example:3", 72, 6),
                                               ("mersenne_example:3", 5184, 12),
                                               ("direct:alt:5,frobenius:11,5", 3300, 16),
                                               ("direct:[sym:3],[alt:5]", 360, 8),
                                               ("gens:4:(0 1 2 3);(0 2)", 8, 4), ("cyclic:1", 1, 1)])
def test_builder_specs(spec, order, degree):
    from modsimple.builders import build

    G = build(spec)
    assert (G.order, G.degree) == (order, degree)


@pytest.mark.parametrize("spec", ["nope:3", "sym:x", "sl2:9", "sl2:6", "direct:sym:3", "frobenius:11,3",
                                  "direct:[sym:3,[alt:5]", "fermat_example:4"])
def test_builder_errors(spec):
    from modsimple.builders import build
    from modsimple.errors import BuildError

    with pytest.raises((BuildError, MalformedInputError)):
        build(spec)
