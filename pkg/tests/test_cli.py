import json
import subprocess
import sys

import pytest

from liecompact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN_ROOTS_A2 = """\
A2: rank 2, 6 roots, 3 positive
#  height  coords
-  ------  ------
1  1       [1, 0]
2  1       [0, 1]
3  2       [1, 1]
"""

GOLDEN_WEYL_A2 = """\
A2: longest element, length 3
word:     s1 s2 s1
-w0:      1->2 2->1
-w0 = id: no
"""

GOLDEN_CONSTANTS_A2 = """\
A2: 6 summable pairs (alpha before beta)
alpha    beta      N
-------  --------  --
[1, 0]   [0, 1]    1
[1, 0]   [-1, -1]  -1
[0, 1]   [-1, -1]  1
[1, 1]   [-1, 0]   -1
[1, 1]   [0, -1]   1
[-1, 0]  [0, -1]   -1
"""

GOLDEN_CERTIFY_A1 = """\
A1: compact real form certificate
  closure            PASS
  negative_definite  PASS
  antilinear_fixed   PASS
  gram diagonal:     -8 -8 -8
"""

GOLDEN_CLASSIFY_2 = """\
type  condition_v  witness    notes
----  -----------  ---------  -----
A1    yes          certified
A2    no           -
A2^2  yes          certified
B2    yes          certified
G2    yes          certified
cartan_type, compact_cartan and discrete_series equal condition_v (derived labels)
"""


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["roots", "A2"], GOLDEN_ROOTS_A2),
        (["weyl", "A2"], GOLDEN_WEYL_A2),
        (["constants", "A2"], GOLDEN_CONSTANTS_A2),
        (["certify", "A1"], GOLDEN_CERTIFY_A1),
        (["classify", "--all", "--max-rank", "2"], GOLDEN_CLASSIFY_2),
    ],
)
def test_table_golden(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == golden


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "A2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["positive_roots"] == [[1, 0], [0, 1], [1, 1]]
    assert set(data) == {"type", "cartan", "positive_roots"}


def test_roots_csv(capsys):
    code, out, _ = run(capsys, "roots", "B2", "--format", "csv")
    assert out.splitlines() == ["index,height,coords", "1,1,1 0", "2,1,0 1", "3,2,1 1", "4,3,1 2"]


def test_roots_parse_error(capsys):
    code, out, err = run(capsys, "roots", "Z9")
    assert code == 2 and out == "" and "Z" in err


def test_roots_count_only(capsys):
    assert run(capsys, "roots", "E8", "--count-only")[1] == "120\n"


def test_classify_single(capsys):
    code, out, _ = run(capsys, "classify", "E6", "--format", "json")
    assert code == 0 and json.loads(out)[0]["condition_v"] is False
    code, out, _ = run(capsys, "classify", "A3^2", "--format", "json")
    rec = json.loads(out)[0]
    assert rec["condition_v"] is True and rec["witness"]["certificate"]["negative_definite"]


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--all", "--max-rank", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "type,twist,condition_v,cartan_type,compact_inner_form,compact_cartan,discrete_series,witness"
    assert lines[2] == "A2,1,false,false,false,false,false,none"


def test_classify_invalid_twist(capsys):
    code, _, err = run(capsys, "classify", "B3^2")
    assert code == 2 and "twist" in err


def test_classify_needs_selector(capsys):
    assert run(capsys, "classify")[0] == 2


def test_classify_check_paper_small(capsys):
    assert run(capsys, "classify", "--all", "--max-rank", "4", "--check-paper")[0] == 0


def test_certify_exit_codes(capsys):
    code, out, err = run(capsys, "certify", "A2")
    assert code == 3 and out == "" and "no compact inner form" in err
    code, out, _ = run(capsys, "certify", "A1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "type": "A1",
        "closure": True,
        "negative_definite": True,
        "antilinear_fixed": True,
        "gram_diagonal_sample": [-8, -8, -8],
    }
    code, out, _ = run(capsys, "certify", "G2")
    assert code == 0 and out.count("PASS") == 3
    assert run(capsys, "certify", "D4^3")[0] == 3


def test_constants_outputs(capsys):
    code, out, _ = run(capsys, "constants", "A1", "--format", "csv")
    assert out == "alpha_coords,beta_coords,N\n"
    code, out, _ = run(capsys, "constants", "A2", "--format", "csv")
    assert len(out.splitlines()) == 1 + 6
    code, out, _ = run(capsys, "constants", "G2", "--format", "json")
    assert any(abs(r["N"]) == 3 for r in json.loads(out)["rows"])


def test_weyl_json(capsys):
    data = json.loads(run(capsys, "weyl", "E6", "--format", "json")[1])
    assert data["length"] == 36
    assert data["minus_w0"] == [6, 2, 5, 4, 3, 1]


def test_determinism(capsys):
    for argv in (["constants", "F4", "--format", "json"], ["classify", "--all", "--max-rank", "3", "--format", "json"]):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


def test_bad_format_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["roots", "A2", "--format", "xml"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "liecompact", "roots", "A2", "--count-only"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3\n"
