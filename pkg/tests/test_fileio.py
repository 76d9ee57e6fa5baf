import json
import re

import numpy as np
import pytest

from symca.datasets import EYES_HAIR_CELLS
from symca.errors import SymCAError
from symca.fileio import (
    read_interval_table,
    read_result_json,
    read_survey_csv,
    write_interval_table,
    write_result_json,
    write_survey_csv,
)
from symca.interval_table import IntervalTable, interval_contingency
from symca.projection import symca

SURVEY = b"eyes,hair\ngreen|blue,black\nbrown,black\ngreen,blond|black\nbrown,blond\ngreen,blond\n"

EYES_HAIR_CSV = b""",black-h,brown-h,red-h,blond-h
black-e,60:60,119:123,20:28,4:7
brown-e,15:15,50:58,14:20,5:11
green-e,5:5,24:26,10:12,11:12
blue-e,20:20,70:84,16:17,90:100
"""


class TestSurvey:
    def test_five_individuals(self):
        x, y = read_survey_csv(SURVEY)
        assert (x.name, y.name) == ("eyes", "hair")
        assert x.modalities == ("blue", "brown", "green")
        assert y.modalities == ("black", "blond")
        assert x.observations[0] == frozenset({0, 2})
        assert y.observations[2] == frozenset({0, 1})
        # sorted order permutes the interval table, not its content
        t = interval_contingency(x, y)
        rows = dict(zip(t.row_labels, t.cells))
        assert rows == {
            "green": [(0, 2), (1, 2)],
            "blue": [(0, 1), (0, 0)],
            "brown": [(1, 1), (1, 1)],
        }

    def test_single_row(self):
        x, y = read_survey_csv("a,b\nu,v\n")
        assert x.observations == (frozenset({0}),) and y.modalities == ("v",)

    def test_empty_cell(self):
        with pytest.raises(SymCAError, match="row 2"):
            read_survey_csv(b"a,b\nu,v\n,w\n")

    def test_too_few_columns(self):
        with pytest.raises(SymCAError, match="2 columns"):
            read_survey_csv(b"a\nu\n")

    def test_ragged(self):
        with pytest.raises(SymCAError, match="row 1"):
            read_survey_csv(b"a,b\nu,v,w\n")

    def test_roundtrip(self):
        x, y = read_survey_csv(SURVEY)
        assert read_survey_csv(write_survey_csv(x, y)) == (x, y)


class TestIntervalTable:
    def test_eyes_hair_csv(self):
        t = read_interval_table(EYES_HAIR_CSV, "csv")
        assert t.shape == (4, 4)
        assert t.cells == [list(row) for row in EYES_HAIR_CELLS]
        assert t.col_labels == ("black-h", "brown-h", "red-h", "blond-h")
        assert t.row_labels == ("black-e", "brown-e", "green-e", "blue-e")

    def test_degenerate_cell(self):
        t = read_interval_table(b",c\nr,5:5\n", "csv")
        assert t.cells == [[(5, 5)]]

    def test_inverted(self):
        with pytest.raises(SymCAError, match=r"inverted interval at \(0,1\)"):
            read_interval_table(b",a,b\nr,1:1,7:4\n", "csv")

    @pytest.mark.parametrize(
        "text, msg",
        [
            (b",a\nr,-1:2\n", "negative"),
            (b",a,b\nr,1:2\n", "ragged"),
            (b",a\nr,x:2\n", "cannot parse"),
            (b",a\nr,3\n", "lo:hi"),
            (b",a\n", "at least one row"),
        ],
    )
    def test_csv_errors(self, text, msg):
        with pytest.raises(SymCAError, match=msg):
            read_interval_table(text, "csv")

    @pytest.mark.parametrize(
        "obj, msg",
        [
            ({"row_labels": ["r"], "col_labels": ["a"]}, "missing"),
            ({"row_labels": ["r"], "col_labels": ["a"], "cells": [[[3, 1]]]}, "inverted"),
            ({"row_labels": ["r"], "col_labels": ["a", "b"], "cells": [[[1, 1]]]}, "ragged"),
            ({"row_labels": ["r"], "col_labels": ["a"], "cells": [[[1.5, 2]]]}, "integer"),
        ],
    )
    def test_json_errors(self, obj, msg):
        with pytest.raises(SymCAError, match=msg):
            read_interval_table(json.dumps(obj).encode(), "json")

    def test_malformed_json(self):
        with pytest.raises(SymCAError, match="malformed"):
            read_interval_table(b"{", "json")

    @pytest.mark.parametrize("fmt", ["csv", "json"])
    def test_roundtrip(self, eyes_hair, fmt):
        data = write_interval_table(eyes_hair, fmt)
        back = read_interval_table(data, fmt)
        assert back == eyes_hair
        assert write_interval_table(back, fmt) == data


class TestResultJson:
    def test_eyes_hair_schema(self, eyes_hair):
        obj = json.loads(write_result_json(symca(eyes_hair)))
        assert sorted(obj) == ["cols", "eigenvalues", "inertia_share", "rows"]
        assert len(obj["rows"]) == 4 and len(obj["cols"]) == 4
        assert len(obj["eigenvalues"]) == 3
        for m in obj["rows"] + obj["cols"]:
            assert sorted(m) == ["coords", "label", "rect_hi", "rect_lo"]
            assert len(m["coords"]) == 3
            assert all(lo <= c <= hi for lo, c, hi in zip(m["rect_lo"], m["coords"], m["rect_hi"]))

    def test_degenerate(self):
        res = symca(IntervalTable.degenerate([[5, 1, 2], [1, 6, 2], [0, 2, 7]]))
        obj = json.loads(write_result_json(res))
        for m in obj["rows"] + obj["cols"]:
            assert m["rect_lo"] == m["coords"] == m["rect_hi"]

    def test_roundtrip_bytes(self, eyes_hair):
        data = write_result_json(symca(eyes_hair))
        assert write_result_json(read_result_json(data)) == data
        assert write_result_json(symca(eyes_hair)) == data

    def test_fifteen_digits(self, eyes_hair):
        res = symca(eyes_hair)
        text = write_result_json(res).decode()
        got = np.array(json.loads(text)["eigenvalues"])
        np.testing.assert_allclose(got, res.ca.eigenvalues, rtol=1e-14)
        for token in re.findall(r"-?\d+\.\d+(?:e-?\d+)?", text):
            mantissa = token.lstrip("-").split("e")[0].replace(".", "").lstrip("0")
            assert len(mantissa) <= 15, token

    def test_bad_result(self):
        with pytest.raises(SymCAError, match="missing"):
            read_result_json(b'{"eigenvalues": []}')
        bad = {"eigenvalues": [0.1], "inertia_share": [1.0], "rows": [{"label": "a", "coords": [1, 2], "rect_lo": [0], "rect_hi": [1]}], "cols": []}
        with pytest.raises(SymCAError, match="axes"):
            read_result_json(json.dumps(bad))
