import json

import pytest

from affschubert.lie.rootsys import build_root_system
from affschubert.order.series import bott_prefix, fork_stats
from affschubert.render.tables import (
    chains_frame,
    cpos_frame,
    levels_frame,
    render_frame,
    series_frame,
    verdicts_frame,
)
from affschubert.schubert.chains import enumerate_chains
from affschubert.schubert.cpo import enumerate_cpos
from affschubert.schubert.engine import ClassificationEngine


def test_levels_frame_matches_bott(a2, engine):
    levels = engine.enumerate_levels(a2, 6)
    df = levels_frame(levels, bott_prefix(a2, 6))
    assert list(df["count"]) == [1, 1, 2, 2, 3, 3, 4]
    assert df["match"].all()


def test_verdicts_frame(b3_exceptional, engine):
    verdict = ClassificationEngine(bruhat=engine).classify(b3_exceptional)
    df = verdicts_frame([verdict])
    row = df.iloc[0]
    assert row["lambda"] == "(3,0,-1)"
    assert row["labels"] == "ExceptionalB3"
    assert row["dim"] == 9


def test_cpos_frame_json(c2, engine):
    records = json.loads(render_frame(cpos_frame(enumerate_cpos(c2, engine)), "json"))
    assert records[0]["I"] == "-"
    assert [r["dim"] for r in records] == [r["a_size"] for r in records]


def test_chains_frame_csv(c2, engine):
    csv = render_frame(chains_frame(enumerate_chains(c2, 4, engine)), "csv")
    header = csv.splitlines()[0]
    assert header == "lambda,dim,word,cup_sequence,pd,pd_by_products,maximal"
    assert "1 2 1" in csv


def test_series_frame_fork_column():
    a2 = build_root_system("A", 2)
    df = series_frame(bott_prefix(a2, 4), fork_stats(a2))
    assert list(df.loc[df["fork"], "degree"]) == [2]
    a1 = build_root_system("A", 1)
    assert "fork" not in series_frame(bott_prefix(a1, 4), fork_stats(a1)).columns


def test_text_rendering(a2):
    text = render_frame(series_frame(bott_prefix(a2, 3)), "text")
    assert text.splitlines()[0].split() == ["degree", "coeff"]
    assert text.endswith("\n")


def test_unknown_format(a2):
    with pytest.raises(ValueError):
        render_frame(series_frame(bott_prefix(a2, 3)), "xml")
