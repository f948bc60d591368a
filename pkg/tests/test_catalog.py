import json

import pytest

from superhopf import catalog
from superhopf.catalog import (ALIASES, DATA_DIR, ENV_VAR, HOPF, CatalogError, UnknownIdError,
                               build)
from superhopf.classify import find_isomorphism
from superhopf.constructions import VariantKind, named_family, variant

# superbialgebra / Hopf counts for the nonzero rows of the 4-dimensional table
ROWS = {
    "A_{1|1}": (12, 1), "A_{2|1}": (22, 0), "A_{2|3}": (4, 0), "A_{3|2}": (9, 2),
    "A_{4|1}": (3, 0), "A_{6|1}": (18, 0), "A_{6|2}": (11, 0), "A_{11|2}": (1, 1),
    "A_{12|2}": (1, 1), "A_{13|1}": (21, 0), "A_{14|1}": (9, 0), "A_{14|2}": (4, 0),
    "A_{14|3}": (7, 0), "A_{15|1}": (9, 0), "A_{15|2}": (4, 0), "A_{15|3}": (7, 0),
    "A_{17|1}": (11, 0), "A_{17|2}": (2, 0),
}


def test_sizes(cat):
    assert len(cat.bialgebras(dim=4)) == 155
    assert len(cat.bialgebras(dim=3)) == 11
    assert len(cat.bialgebras(dim=2)) == 1
    assert len(cat.bialgebras()) == 167
    assert len(cat.select(tier=HOPF)) == 6


def test_counts_table(cat):
    rows = cat.counts(4)
    assert {k: v for k, v in rows.items() if v != (0, 0)} == ROWS
    assert rows["A_{10|1}"] == (0, 0)
    assert len([k for k in rows if k.startswith("A_{18;")]) == 8


def test_dim3_counts(cat):
    assert cat.counts(3) == {"A3_{1|1}": (0, 0), "A3_{1|2}": (0, 0), "A3_{2|1}": (2, 0),
                             "A3_{2|2}": (4, 0), "A3_{2|3}": (5, 0)}


def test_aliases(cat):
    for alias, ident in ALIASES.items():
        assert cat.get(alias).id == ident
    assert cat.get("H3").data.same_structure(named_family("LambdaK2"))


def test_named_families_match_catalog(cat):
    # the generator presentations use other bases than the table entries
    for name in ("H1", "H2", "H4"):
        assert find_isomorphism(named_family(name), cat.get(name).data).is_iso, name


def test_dim3_prefix_fallback(cat):
    # the 4-dim A_{2|2} carries no superbialgebra, so this lands on the 3-dim record
    assert cat.get("A_{2|2}^1").id == "A3_{2|2}^1"
    assert cat.get("A_{1|2}").id == "A_{1|2}"
    assert cat.get("A_{2|1}^1").family == "A_{2|1}"


def test_unknown_id(cat):
    with pytest.raises(UnknownIdError):
        cat.get("A_{99|1}^1")


def test_cross_reference(cat):
    e = cat.get("A_{15|1}^3")
    assert e.source == {"kind": "Op", "of": "A_{14|1}^5"}
    assert variant(cat.get("A_{14|1}^5").data, VariantKind.OP).same_structure(e.data)


def test_provenance_and_errata(cat):
    for e in cat.entries.values():
        assert e.provenance
    assert "A_{11|2}^1" in [e.id for e in cat.entries.values() if e.errata]
    assert all(isinstance(x, str) for e in cat.entries.values() for x in e.errata)


def test_hopf_records_carry_antipodes(cat):
    for e in cat.select(tier=HOPF):
        assert e.data.antipode is not None, e.id
    for e in cat.bialgebras():
        if e.tier != HOPF:
            assert e.data.antipode is None, e.id


def test_regeneration_matches_bundle(tmp_path):
    n = build.write_catalog(tmp_path)
    bundled = sorted(p.name for p in DATA_DIR.glob("*.json"))
    assert sorted(p.name for p in tmp_path.glob("*.json")) == bundled
    assert n == len(bundled) - 1
    for name in bundled:
        assert (tmp_path / name).read_text() == (DATA_DIR / name).read_text(), name


def test_env_override(tmp_path, monkeypatch):
    small = tmp_path / "small"
    small.mkdir()
    index = json.loads((DATA_DIR / "index.json").read_text())
    keep = [row for row in index if row["id"] in ("K", "LambdaK")]
    for row in keep:
        (small / row["file"]).write_text((DATA_DIR / row["file"]).read_text())
    (small / "index.json").write_text(json.dumps(keep))
    monkeypatch.setenv(ENV_VAR, str(small))
    assert catalog.catalog_dir() == small
    cat = catalog.load()
    assert len(cat) == 2 and cat.get("LambdaK").tier == HOPF


def test_broken_catalog(tmp_path):
    with pytest.raises(CatalogError):
        catalog.load(tmp_path)
    index = json.loads((DATA_DIR / "index.json").read_text())
    row = next(r for r in index if r["id"] == "A_{3|2}^1")
    doc = json.loads((DATA_DIR / row["file"]).read_text())
    doc["id"] = "something else"
    (tmp_path / row["file"]).write_text(json.dumps(doc))
    (tmp_path / "index.json").write_text(json.dumps([row]))
    with pytest.raises(CatalogError):
        catalog.load(tmp_path)
