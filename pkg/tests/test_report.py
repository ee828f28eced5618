import csv
import io
import json
import math
import os
from fractions import Fraction

import pytest

from taffy.braids import BraidWord
from taffy.devices import device
from taffy.errors import TaffyError, UnknownDevice
from taffy.report import APPENDIX, CSV_HEADER, DEVICES, analyze, load_extra_braids, table, to_csv, to_json

PHI = (1 + math.sqrt(5)) / 2


@pytest.fixture(scope="module")
def rows():
    return table()


@pytest.mark.parametrize(
    "name, dilatation, p, efficiency",
    [
        ("standard-3-rod", 5.8284, Fraction(1), 1.7627),
        ("nitz", 2.6180, Fraction(1, 3), 2.8873),
        ("standard-4-rod", 5.8284, Fraction(1), 1.7627),
        ("six-rod", 3.7321, Fraction(1, 2), 2.6339),
    ],
)
def test_exact_rows(name, dilatation, p, efficiency):
    a = analyze(name)
    assert a.dilatation == pytest.approx(dilatation, abs=1e-4)
    assert a.period_fraction == p
    assert a.efficiency == pytest.approx(efficiency, abs=1e-4)
    assert str(a.char_poly) == DEVICES[name].expected["polynomial"]
    assert a.flag == ""


def test_three_and_four_rods_are_equally_good():
    tol = 1e-4
    assert abs(analyze("standard-3-rod").dilatation - analyze("standard-4-rod").dilatation) < 2 * tol


def test_mixograph_row_from_supplied_braid():
    a = analyze("mixograph")
    assert a.char_poly is None
    assert a.dilatation == pytest.approx(4.1858, abs=5e-4)
    assert a.efficiency == pytest.approx(8.5902, abs=1e-3)
    assert a.period_fraction == Fraction(1, 6)
    assert "supplied" in a.flag


def test_mixograph_compiled_kinematics_reported():
    a = analyze("mixograph", compiled=True)
    assert a.braid.n_strands == 7
    assert a.dilatation > 1
    assert a.flag == ""


def test_firchau_row():
    a = analyze("firchau")
    assert a.dilatation == 1.0
    assert a.efficiency == 0.0
    assert "not pseudo-Anosov" in a.flag


def test_appendix_needs_braid():
    with pytest.raises(TaffyError):
        analyze("mccarthy-1916a")
    with pytest.raises(UnknownDevice):
        analyze("eggbeater")


def test_appendix_with_supplied_word():
    # any word with dilatation phi^6 stands in for the device's motion
    a = analyze("mccarthy-1916a", braid=BraidWord.parse("1 -2 1 -2 1 -2", 4))
    assert str(a.char_poly) == "x^2 - 18x + 1"
    assert a.dilatation == pytest.approx(PHI**6, abs=1e-3)
    assert a.efficiency == pytest.approx(2.8873, abs=1e-4)
    assert (a.rods_total, a.rods_fixed) == (4, 3)


def _appendix_braids():
    path = os.environ.get("TAFFY_APPENDIX_BRAIDS")
    return load_extra_braids(path) if path else {}


@pytest.mark.parametrize("name", sorted(APPENDIX))
def test_appendix_fixtures(name):
    braid = _appendix_braids().get(name)
    if braid is None:
        pytest.skip("set TAFFY_APPENDIX_BRAIDS to a braid-word file to check this device")
    a = analyze(name, braid=braid)
    expected = APPENDIX[name].expected
    assert a.dilatation == pytest.approx(expected["dilatation"], abs=5e-4)
    assert a.efficiency == pytest.approx(expected["efficiency"], abs=1e-3)
    if a.char_poly is not None:
        assert str(a.char_poly) == expected["polynomial"]


def test_analyze_raw_spec():
    a = analyze(device("six_rod"), exact=True)
    assert str(a.char_poly) == "x^2 - 4x + 1"
    assert (a.rods_total, a.rods_fixed) == (6, 2)


def test_efficiency_consistency(rows):
    for row in rows:
        assert not isinstance(row, tuple)
        assert row.efficiency == pytest.approx(math.log(row.dilatation) / float(row.period_fraction), abs=1e-9)
        if "not pseudo-Anosov" not in row.flag:
            assert row.dilatation > 1


def test_csv_layout(rows):
    text = to_csv(rows)
    parsed = list(csv.reader(io.StringIO(text)))
    assert tuple(parsed[0]) == CSV_HEADER
    assert [r[0] for r in parsed[1:]] == list(DEVICES)
    assert parsed[2] == ["nitz", "3", "0", "x^2 - 3x + 1", "2.6180", "1/3", "2.8873"]


def test_csv_determinism(rows):
    assert to_csv(rows) == to_csv(table())


def test_json_mirror(rows):
    data = json.loads(to_json(rows))
    assert data[0]["name"] == "standard-3-rod"
    assert data[0]["period_fraction"] == "1"
    assert data[1]["braid"] == {"strands": 3, "letters": [2, -1]}


def test_extra_braids(tmp_path):
    path = tmp_path / "extra.json"
    path.write_text(json.dumps({"McCarthy-1916a": {"strands": 4, "braid": "1 -2 1 -2 1 -2"}, "nope": {"strands": 3, "braid": "1"}}))
    extra = load_extra_braids(path)
    rows = table(extra_braids=extra)
    names = [r[0] if isinstance(r, tuple) else r.name for r in rows]
    assert names[-2:] == ["mccarthy-1916a", "nope"]
    assert isinstance(rows[-1], tuple)
    assert "x^2 - 18x + 1" in to_csv(rows)
