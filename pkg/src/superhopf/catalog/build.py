"""Generate the bundled catalog documents from :mod:`.sources`.

Run ``python -m superhopf.catalog.build [--out DIR]``.  The output is
deterministic, and a test checks that regenerating it reproduces the
bundled data byte for byte.
"""

from __future__ import annotations

import argparse
import json
import re
from pathlib import Path

from ..antipode import solve_antipode
from ..constructions import VariantKind, named_family, variant
from ..structures import dumps
from . import ALGEBRA, DATA_DIR, HOPF, INDEX, SUPERALGEBRA, SUPERBIALGEBRA, sources


def slug(ident: str) -> str:
    s = ident.replace("/", "over").replace("|", "-").replace("^", "_").replace(";", "_")
    return re.sub(r"[^A-Za-z0-9_\-]", "", s)


def _bialgebra_records():
    """(data, index row) for every superbialgebra, op/cop entries included."""
    built = {}
    out = []
    for e in sources.ENTRIES:
        errata = [note for *_, note in sources.errata_for(e.id)]
        provenance = f"{e.where}^{e.k}"
        row = {"source": None, "errata": errata, "generators": None}
        if e.source:
            kind, alg, k = e.source
            of = f"{alg}^{k}"
            data = variant(built[of], VariantKind(kind)).with_changes(id=e.id)
            row["source"] = {"kind": kind, "of": of}
            provenance += f" = {kind.lower()} of {of}"
        else:
            data = sources.label_basis(e.algebra).extend(e.delta, e.eps, e.id)
            row["generators"] = {"delta": dict(e.delta),
                                 "eps": {g: str(v) for g, v in e.eps.items()}}
        if errata:
            provenance += " (corrected)"
        data = data.with_changes(provenance=provenance)
        built[e.id] = data
        out.append((data, row))
    lam = named_family("LambdaK").with_changes(
        provenance="2-dimensional connected superbialgebra K[x]/(x^2), x odd")
    out.append((lam.with_changes(antipode=None), {"source": None, "errata": [],
                                                 "generators": None}))
    return out


def build_records():
    """Every catalog record paired with its index row, in a fixed order."""
    records = []
    for ident in sources.superalgebra_ids():
        alg = sources.superalgebra(ident)
        if ident in sources.LABELS or alg.space.n1:
            alg = alg.with_changes(labels=dict(sources.label_basis(ident).labels))
        tier = SUPERALGEBRA if alg.space.n1 else ALGEBRA
        records.append((alg, {"tier": tier, "source": None, "errata": [], "generators": None}))
    for data, row in _bialgebra_records():
        res = solve_antipode(data, check=False)
        if res.found:
            data = data.with_changes(antipode=res.antipode)
        row["tier"] = HOPF if res.found else SUPERBIALGEBRA
        records.append((data, row))
    return records


def write_catalog(out: Path = DATA_DIR) -> int:
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    for old in out.glob("*.json"):
        old.unlink()
    index = []
    for data, row in build_records():
        name = slug(data.id) + ".json"
        (out / name).write_text(dumps(data))
        index.append({"id": data.id, "file": name, "tier": row["tier"],
                      "provenance": data.provenance, "source": row["source"],
                      "errata": row["errata"], "generators": row["generators"]})
    (out / INDEX).write_text(json.dumps(index, indent=1, sort_keys=True) + "\n")
    return len(index)


def main(argv=None):
    ap = argparse.ArgumentParser(prog="python -m superhopf.catalog.build")
    ap.add_argument("--out", type=Path, default=DATA_DIR)
    args = ap.parse_args(argv)
    n = write_catalog(args.out)
    print(f"wrote {n} documents to {args.out}")


if __name__ == "__main__":
    main()
