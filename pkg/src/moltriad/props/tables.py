"""Loaders for the versioned plain-text contribution tables.

Every table ships under ``moltriad/props/data`` with a ``# version N`` header
line.  Loading is cached; tables are immutable after load.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources


def _lines(name: str) -> list[str]:
    text = resources.files("moltriad.props").joinpath("data", name).read_text()
    return [ln.rstrip("\n") for ln in text.splitlines()]


def table_version(name: str) -> int:
    for ln in _lines(name):
        if ln.startswith("# version"):
            return int(ln.split()[2])
    return 0


def _rows(name: str) -> list[list[str]]:
    out = []
    for ln in _lines(name):
        stripped = ln.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(stripped.split())
    return out


@lru_cache(maxsize=None)
def monoisotopic_masses() -> dict[str, float]:
    return {row[0]: float(row[1]) for row in _rows("masses.txt")}


@lru_cache(maxsize=None)
def isotope_masses() -> dict[tuple[str, int], float]:
    return {(row[0], int(row[1])): float(row[2]) for row in _rows("isotopes.txt")}


@lru_cache(maxsize=None)
def tpsa_contributions() -> dict[str, float]:
    return {row[0]: float(row[1]) for row in _rows("tpsa.txt")}


@lru_cache(maxsize=None)
def crippen_contributions() -> dict[str, float]:
    return {row[0]: float(row[1]) for row in _rows("crippen.txt")}


@lru_cache(maxsize=None)
def qed_parameters() -> dict[str, dict[str, float]]:
    fields = ("a", "b", "c", "d", "e", "f", "dmax", "weight")
    out = {}
    for row in _rows("qed_params.txt"):
        out[row[0]] = dict(zip(fields, map(float, row[1:])))
    return out


@lru_cache(maxsize=None)
def alert_patterns() -> list[tuple[str, str]]:
    rows = []
    for ln in _lines("alerts.txt"):
        stripped = ln.strip()
        if not stripped or stripped.startswith("#"):
            continue
        name, pattern = stripped.split(None, 1)
        rows.append((name, pattern.strip()))
    return rows


@lru_cache(maxsize=None)
def maccs_lite_keys() -> list[tuple[int, str, str]]:
    rows = []
    for ln in _lines("maccs_lite.txt"):
        stripped = ln.strip()
        if not stripped or stripped.startswith("#"):
            continue
        index, name, pattern = stripped.split(None, 2)
        rows.append((int(index), name, pattern.strip()))
    return rows


@lru_cache(maxsize=None)
def default_registry_ids() -> tuple[str, ...]:
    return tuple(row[0] for row in _rows("default.reg"))


def data_versions() -> dict[str, int]:
    names = (
        "masses.txt", "isotopes.txt", "tpsa.txt", "crippen.txt",
        "qed_params.txt", "alerts.txt", "maccs_lite.txt", "default.reg",
    )
    return {name: table_version(name) for name in names}
