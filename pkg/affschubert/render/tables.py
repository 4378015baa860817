"""
render/tables.py
----------------
Tabular views of enumeration results as pandas DataFrames, rendered to csv,
plain text or JSON records for the command-line front end.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd

from affschubert.core.result_schema import ClassificationVerdict, ordered_labels
from affschubert.lie.weyl import CorootElement
from affschubert.order.series import ForkStats, SeriesPrefix
from affschubert.schubert.chains import ChainDescriptor, chain_pd, chain_pd_by_products
from affschubert.schubert.cpo import CpoDescriptor

TABLE_FORMATS = ("csv", "text", "json")


def _coords_text(coords: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in coords) + ")"


def _seq_text(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values)


# ---------------------------------------------------------------------------
# Frames
# ---------------------------------------------------------------------------

def verdicts_frame(verdicts: Iterable[ClassificationVerdict]) -> pd.DataFrame:
    """Columns: lambda, lengthS, palindromic, labels, dim."""
    rows = [
        {
            "lambda": _coords_text(v.coords),
            "lengthS": v.dim,
            "palindromic": v.palindromic,
            "labels": "|".join(ordered_labels(v.labels)),
            "dim": v.dim,
        }
        for v in verdicts
    ]
    return pd.DataFrame(rows, columns=["lambda", "lengthS", "palindromic", "labels", "dim"])


def levels_frame(levels: Dict[int, List[CorootElement]], bott: SeriesPrefix) -> pd.DataFrame:
    """Per-level element counts next to the Bott series coefficient."""
    df = pd.DataFrame(
        {
            "lengthS": list(sorted(levels)),
            "count": [len(levels[k]) for k in sorted(levels)],
        }
    )
    df["bott"] = [bott.coeffs[k] for k in df["lengthS"]]
    df["match"] = df["count"] == df["bott"]
    return df


def cpos_frame(cpos: Iterable[CpoDescriptor]) -> pd.DataFrame:
    rows = [
        {
            "I": " ".join(f"s{s}" for s in d.nodes) or "-",
            "neighbors": " ".join(f"s{s}" for s in d.neighbors) or "-",
            "dim": d.dim,
            "a_size": d.a_size,
            "lambda": _coords_text(d.top.coords),
            "projective": d.projective,
        }
        for d in cpos
    ]
    return pd.DataFrame(rows, columns=["I", "neighbors", "dim", "a_size", "lambda", "projective"])


def chains_frame(chains: Iterable[ChainDescriptor]) -> pd.DataFrame:
    rows = [
        {
            "lambda": _coords_text(c.top.coords),
            "dim": c.dim,
            "word": str(c.word),
            "cup_sequence": _seq_text(c.cup_sequence),
            "pd": chain_pd(c),
            "pd_by_products": chain_pd_by_products(c),
            "maximal": c.maximal,
        }
        for c in chains
    ]
    return pd.DataFrame(
        rows,
        columns=["lambda", "dim", "word", "cup_sequence", "pd", "pd_by_products", "maximal"],
    )


def series_frame(prefix: SeriesPrefix, stats: Optional[ForkStats] = None) -> pd.DataFrame:
    """Bott coefficients by degree; k_G is flagged when known."""
    df = pd.DataFrame({"degree": range(len(prefix)), "coeff": list(prefix.coeffs)})
    if stats is not None and stats.bounded:
        df["fork"] = df["degree"] == stats.k_G
    return df


def spiral_frame(rows: Iterable[Dict[str, object]]) -> pd.DataFrame:
    """Rows with keys n, k, family, lambda, poincare, q_binomial, match."""
    return pd.DataFrame(
        list(rows), columns=["n", "k", "family", "lambda", "poincare", "q_binomial", "match"]
    )


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def render_frame(df: pd.DataFrame, fmt: str) -> str:
    """
    Render *df* as ``csv``, ``text`` or ``json``.

    Raises:
        ValueError: For any other format.
    """
    if fmt == "csv":
        return df.to_csv(index=False)
    if fmt == "text":
        return df.to_string(index=False) + "\n"
    if fmt == "json":
        return json.dumps(json.loads(df.to_json(orient="records")), indent=2) + "\n"
    raise ValueError(f"Unknown table format {fmt!r}; expected one of {TABLE_FORMATS}")
