from __future__ import annotations

import json

import pytest

from knottrap import conjectures
from knottrap.conjectures import HMResult
from knottrap.harness import (ALL_CHECKS, BUNDLED_CENSUS, CensusError, CensusOptions, LinkReport,
                              evaluate, load_census, parse_census, run_census, sweep)

TREFOIL_PD = "X(4,1,5,2) X(2,5,3,6) X(6,3,1,4)"
NON_ALT_BRAID = "3 ; 1 2 1 2"

SMALL = f"""# a small census
trefoil ; pd ; {TREFOIL_PD}
fig8 ; braid ; 3 ; 1 -2 1 -2
t25 ; braid ; 2 ; 1 1 1 1 1
"""


def write(tmp_path, text, name="c.txt"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_parse_census_entries_and_comments():
    entries = parse_census(SMALL)
    assert [e.name for e in entries] == ["trefoil", "fig8", "t25"]
    assert [e.kind for e in entries] == ["pd", "braid", "braid"]
    assert entries[1].data == "3 ; 1 -2 1 -2" and entries[1].line == 3


@pytest.mark.parametrize("text, line", [
    ("a ; pd ; X(1,2,3)\n", 1),
    ("a ; dt ; 4 6 2\n", 1),
    (f"a ; pd ; {TREFOIL_PD}\n\na ; pd ; {TREFOIL_PD}\n", 3),
    ("# only a comment\nnonsense\n", 2),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(CensusError, match=f"line {line}:"):
        parse_census(text)


def test_missing_file_exits_2(tmp_path, capsys):
    assert run_census(tmp_path / "missing.txt") == 2
    assert "cannot read census" in capsys.readouterr().err


def test_malformed_file_exits_2(tmp_path):
    assert run_census(write(tmp_path, "x ; pd ; X(1,1,1,1)\n")) == 2


def test_small_census_report(tmp_path):
    out = tmp_path / "r.json"
    code = run_census(write(tmp_path, SMALL), CensusOptions(report=str(out)))
    assert code == 0
    rows = json.loads(out.read_text())
    assert [r["name"] for r in rows] == ["trefoil", "fig8", "t25"]
    t25 = rows[2]
    assert t25["coeffs"] == [1, 1, 1, 1, 1] and t25["sigma"] == -4
    assert (t25["i0"], t25["sl"], t25["hm_holds"], t25["hm_sharp"]) == (1, 5, True, True)
    assert rows[1]["decomposition"] == {"pieces": 2, "max_sum_length": 2, "lengths": [2], "multiplicative": None}
    assert all(r["timings"] is None and r["reasons"] == {} for r in rows)
    assert set(rows[0]) == {f for f in LinkReport.__dataclass_fields__}


def test_non_alternating_entry_is_flagged(tmp_path):
    text = SMALL + f"bad ; braid ; {NON_ALT_BRAID}\n"
    res = sweep(write(tmp_path, text))
    assert res.exit_code == 0
    bad = res.reports[-1]
    assert bad.reasons["fox"] == "precondition: not alternating"
    assert bad.trapezoidal is None and bad.coeffs is not None
    assert all(r.trapezoidal for r in res.reports[:-1])


def test_all_entries_failing_preconditions_exits_2(tmp_path):
    assert sweep(write(tmp_path, f"bad ; braid ; {NON_ALT_BRAID}\n")).exit_code == 2


def test_check_subset_and_csv(tmp_path):
    res = sweep(write(tmp_path, SMALL), CensusOptions(checks=("fox",), format="csv"))
    assert res.exit_code == 0
    header, *lines = res.text.strip().split("\n")
    assert header.startswith("name,crossings,components,coeffs") and len(lines) == 3
    assert res.reports[0].hm_holds is None and res.reports[0].reasons["hm"] == "not requested"
    assert sweep(write(tmp_path, SMALL), CensusOptions(checks=("nope",))).exit_code == 2


def test_timings_only_on_request():
    entry = parse_census(SMALL)[0]
    assert evaluate(entry).timings is None
    t = evaluate(entry, ALL_CHECKS, timings=True).timings
    assert set(t) >= {"alexander", "signature"}


def test_violation_sets_exit_1_and_dumps(tmp_path, monkeypatch):
    def broken(c, s):
        return HMResult(False, False, 0, 9, 1, 1)

    monkeypatch.setattr(conjectures, "hm_check", broken)
    report = tmp_path / "r.json"
    code = run_census(write(tmp_path, SMALL), CensusOptions(report=str(report)))
    assert code == 1
    dump = json.loads((tmp_path / "r.json.violations.json").read_text())
    assert [d["name"] for d in dump] == ["trefoil", "fig8", "t25"]
    assert dump[0]["line"] == 2 and dump[0]["input"].startswith("trefoil ; pd")
    assert dump[0]["violations"] == ["hm: 0 < 9"]


def test_parallel_report_matches_serial(tmp_path):
    path = write(tmp_path, SMALL * 1 + "".join(
        f"t{n} ; braid ; 2 ; {' '.join(['1'] * n)}\n" for n in (7, 9, 11)))
    a = sweep(path, CensusOptions(jobs=1)).text
    b = sweep(path, CensusOptions(jobs=3)).text
    assert a == b


def test_bundled_census_shape():
    entries = load_census(BUNDLED_CENSUS)
    assert len(entries) >= 200
    assert all(e.kind == "pd" for e in entries)
    assert max(len(e.diagram()) for e in entries) == 10
