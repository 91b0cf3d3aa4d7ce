import json

import pytest

from flagsym import (
    dim_g,
    enumerate_flags,
    main,
    onishchik_exception,
    simple_types,
    verify_theorem,
)
from flagsym.cli import _canonical_painting


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize(
    "family,rank,painted,tag",
    [
        ("G", 2, {2}, "c"),
        ("G", 2, {1}, None),
        ("G", 2, {1, 2}, None),
        ("B", 3, {3}, "b"),
        ("B", 4, {4}, "b"),
        ("B", 3, {1}, None),
        ("B", 3, {1, 3}, None),
        ("A", 3, {2, 3}, None),
        ("C", 3, {1}, "a"),
        ("C", 4, {1}, "a"),
        ("C", 3, {1, 2}, None),
        ("B", 2, {2}, "a"),  # sp(2) = so(5) presentation of CP^3
        ("B", 2, {1}, None),
    ],
)
def test_onishchik_exception_table(family, rank, painted, tag):
    assert onishchik_exception(family, rank, painted) == tag


def test_dim_g():
    assert dim_g("A", 3) == 15
    assert dim_g("G", 2) == 14
    assert dim_g("A", 1) == 3
    assert dim_g("B", 4) == 36
    assert dim_g("C", 3) == 21
    assert dim_g("D", 5) == 45
    assert dim_g("E", 6) == 78
    assert dim_g("F", 4) == 52


def test_simple_types_listing():
    assert simple_types(2) == [("A", 1), ("A", 2), ("B", 2), ("G", 2)]
    assert ("C", 3) in simple_types(3)
    assert ("D", 4) not in simple_types(3)
    assert simple_types(6, families=["A"]) == [("A", r) for r in range(1, 7)]
    with pytest.raises(ValueError):
        simple_types(9)


def test_enumerate_counts_family_a():
    report = enumerate_flags(max_rank=3, families=["A"], xi_samples=1)
    assert len(report.entries) == 1 + 3 + 7
    assert report.summary["total"] == 11


def test_enumerate_counts_rank_2():
    report = enumerate_flags(max_rank=2, xi_samples=1)
    by_family = {}
    for e in report.entries:
        by_family.setdefault((e.family, e.rank), []).append(e)
    assert len(by_family[("G", 2)]) == 3
    assert len(by_family[("B", 2)]) == 3
    assert len(report.entries) == 10


def test_enumerate_entries_unique_and_sorted():
    report = enumerate_flags(max_rank=3, xi_samples=1)
    keys = [(e.family, e.rank, e.painted) for e in report.entries]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_enumerate_dedup_automorphisms():
    full = enumerate_flags(max_rank=3, families=["A"], xi_samples=1)
    dedup = enumerate_flags(max_rank=3, families=["A"], xi_samples=1, dedup_automorphisms=True)
    specs = {e.spec for e in dedup.entries}
    # A3:{1,2} and A3:{2,3} collapse to one representative
    assert len(dedup.entries) < len(full.entries)
    assert ("A3:{1,2}" in specs) != ("A3:{2,3}" in specs)
    assert _canonical_painting("A", 3, frozenset({2, 3})) == frozenset({1, 2})


def test_verify_known_findings_rank_2_to_6():
    # the sweep is clean except for the two rank-2 full flag manifolds, which
    # genuinely violate the coindex bounds; pin that finding exactly
    report = enumerate_flags(max_rank=3, xi_samples=1)
    ok, violations = verify_theorem(report)
    assert not ok
    found = {(v["entry"], v["check"]) for v in violations}
    assert found == {
        ("A2:{1,2}", "coindex>=6"),
        ("A2:{1,2}", "dim_bound"),
        ("B2:{1,2}", "k6_uniqueness"),
    }


def test_verify_passes_on_clean_families():
    ok, violations = verify_theorem(
        enumerate_flags(max_rank=4, families=["D", "F", "G"], xi_samples=1)
    )
    assert ok and violations == []


def test_verify_k6_existence_tracked():
    # an A-family sweep that includes A3 must see both k = 6 paintings
    report = enumerate_flags(max_rank=3, families=["A"], xi_samples=1)
    _, violations = verify_theorem(report)
    assert not any(v["check"] == "k6_existence" for v in violations)
    k6 = [e.spec for e in report.entries if e.coindex == 6 and not e.symmetric]
    assert sorted(k6) == ["A3:{1,2}", "A3:{2,3}"]


def test_exception_entries_reported_not_asserted():
    report = enumerate_flags(max_rank=2, xi_samples=1)
    g22 = next(e for e in report.entries if e.spec == "G2:{2}")
    assert g22.exception == "c"
    assert g22.coindex == 6  # raw value is reported
    _, violations = verify_theorem(report)
    assert not any(v["entry"] == "G2:{2}" for v in violations)


def test_report_byte_stable(tmp_path, capsys):
    code1, _ = run_cli(capsys, "enumerate", "--max-rank", "2", "--seed", "11",
                       "--out", str(tmp_path / "a.json"))
    code2, _ = run_cli(capsys, "enumerate", "--max-rank", "2", "--seed", "11",
                       "--out", str(tmp_path / "b.json"))
    assert code1 == code2 == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_analyze_json_schema(capsys):
    code, out = run_cli(capsys, "analyze", "A3:{2,3}", "--json")
    assert code == 0
    record = json.loads(out)
    assert set(record) == {
        "family", "rank", "painted", "dim_g", "dim_M", "symmetric", "exception",
        "index", "coindex", "symmetry_roots", "leaf", "checks",
    }
    assert set(record["leaf"]) == {"u", "k_factors", "k_center_dim", "name"}
    assert set(record["checks"]) == {
        "oracle_agree", "diagram_agree", "hprime_closed", "kprime_commutes",
    }
    assert record["dim_g"] == 15 and record["dim_M"] == 10


def test_analyze_text_output(capsys):
    code, out = run_cli(capsys, "analyze", "G2:{1}")
    assert code == 0
    assert "index of symmetry: 2   coindex: 8" in out
    assert "CP^1" in out
    assert "checks: oracle ok" in out


def test_analyze_with_explicit_xi(capsys):
    code, out = run_cli(capsys, "analyze", "A3:{2,3}", "--xi", "1,2/3", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["checks"]["oracle_agree"] is True


def test_analyze_rejects_bad_spec(capsys):
    with pytest.raises(ValueError):
        main(["analyze", "A3:{9}"])


def test_verify_cli_exit_codes(capsys):
    code, out = run_cli(capsys, "verify", "--max-rank", "2", "--families", "G")
    assert code == 0 and out.startswith("PASS")
    code, out = run_cli(capsys, "verify", "--max-rank", "2")
    assert code == 1
    assert "A2:{1,2}" in out and "B2:{1,2}" in out


def test_dot_emission(tmp_path, capsys):
    code, _ = run_cli(
        capsys, "analyze", "G2:{1}", "--dot", str(tmp_path), "--json"
    )
    assert code == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["G2_1_extended.dot", "G2_1_painted.dot"]
    text = (tmp_path / "G2_1_painted.dot").read_text()
    assert "n1 -- n2" in text


def test_enumerate_stdout(capsys):
    code, out = run_cli(capsys, "enumerate", "--max-rank", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["total"] == 1
    assert payload["entries"][0]["symmetric"] is True
