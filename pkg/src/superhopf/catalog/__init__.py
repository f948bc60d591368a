"""The bundled catalog of superalgebras, superbialgebras and Hopf superalgebras.

Documents live in ``catalog/data`` (one JSON file per entry plus
``index.json``); set ``SUPERHOPF_CATALOG_DIR`` to load another directory.
Loading validates every document, checks the axioms of every bialgebra
entry, the stored antipodes of the Hopf entries, and every op/cop
cross-reference.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from ..antipode import verify_properties
from ..axioms import check_all
from ..constructions import VariantKind, variant
from ..structures import SuperBialgebraData, ValidationError, load_file

__all__ = [
    "ALIASES",
    "Catalog",
    "CatalogEntry",
    "CatalogError",
    "ENV_VAR",
    "TIERS",
    "UnknownIdError",
    "counts",
    "get",
    "load",
]

ENV_VAR = "SUPERHOPF_CATALOG_DIR"
DATA_DIR = Path(__file__).with_name("data")
INDEX = "index.json"

ALGEBRA, SUPERALGEBRA, SUPERBIALGEBRA, HOPF = "Algebra", "Superalgebra", "Superbialgebra", "Hopf"
TIERS = (ALGEBRA, SUPERALGEBRA, SUPERBIALGEBRA, HOPF)

ALIASES = {
    "H1": "A_{3|2}^2",
    "H2": "A_{11|2}^1",
    "H3": "A_{12|2}^1",
    "H4": "A_{3|2}^1",
    "H5": "A_{1|1}^2",
    "M2Graded": "A_{10|1}",
}


class CatalogError(ValueError):
    pass


class UnknownIdError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    data: SuperBialgebraData
    tier: str
    provenance: str
    source: dict | None = None          # {"kind": "Op" | "Cop" | "OpCop", "of": id}
    errata: tuple = ()
    generators: dict | None = field(default=None, compare=False)

    @property
    def id(self) -> str:
        return self.data.id

    @property
    def dim(self) -> int:
        return self.data.space.dim

    @property
    def family(self) -> str:
        return self.id.split("^", 1)[0]

    @property
    def is_bialgebra(self) -> bool:
        return self.tier in (SUPERBIALGEBRA, HOPF)


class Catalog:
    def __init__(self, entries: list[CatalogEntry]):
        self.entries = {e.id: e for e in entries}
        if len(self.entries) != len(entries):
            dup = [i for i, n in Counter(e.id for e in entries).items() if n > 1]
            raise CatalogError(f"duplicate ids: {dup}")

    def __len__(self):
        return len(self.entries)

    def __contains__(self, ident):
        return self.resolve(ident) is not None

    def resolve(self, ident: str) -> str | None:
        ident = ALIASES.get(ident, ident)
        if ident in self.entries:
            return ident
        if ident.startswith("A_"):
            alt = "A3_" + ident[2:]
            if alt in self.entries:
                return alt
        return None

    def get(self, ident: str) -> CatalogEntry:
        key = self.resolve(ident)
        if key is None:
            raise UnknownIdError(ident)
        return self.entries[key]

    def select(self, tier=None, dim=None, family=None) -> list[CatalogEntry]:
        tiers = (tier,) if isinstance(tier, str) else tier
        out = []
        for e in self.entries.values():
            if tiers and e.tier not in tiers:
                continue
            if dim is not None and e.dim != dim:
                continue
            if family is not None and e.family != family:
                continue
            out.append(e)
        return out

    def bialgebras(self, dim=None) -> list[CatalogEntry]:
        return self.select(tier=(SUPERBIALGEBRA, HOPF), dim=dim)

    def counts(self, dim: int = 4) -> dict:
        """Superalgebra id -> (superbialgebras, Hopf superalgebras) in that dimension."""
        rows = {e.id: [0, 0] for e in self.select(tier=SUPERALGEBRA, dim=dim)}
        for e in self.bialgebras(dim):
            row = rows.setdefault(e.family, [0, 0])
            row[0] += 1
            row[1] += e.tier == HOPF
        return {k: tuple(v) for k, v in rows.items()}

    # -- validation ----------------------------------------------------------------
    def validate(self) -> list[str]:
        problems = []
        for e in self.entries.values():
            if e.tier not in TIERS:
                problems.append(f"{e.id}: unknown tier {e.tier}")
                continue
            if e.is_bialgebra:
                if not e.data.is_bialgebra_record:
                    problems.append(f"{e.id}: bialgebra tier without coproduct")
                    continue
                bad = [str(r.axiom) for r in check_all(e.data, informational=False) if not r.holds]
                if bad:
                    problems.append(f"{e.id}: fails {', '.join(bad)}")
            elif e.data.is_bialgebra_record:
                problems.append(f"{e.id}: algebra tier with a coproduct")
            if e.tier == HOPF:
                if e.data.antipode is None:
                    problems.append(f"{e.id}: Hopf entry without antipode")
                elif not verify_properties(e.data, e.data.antipode).holds:
                    problems.append(f"{e.id}: stored antipode fails its properties")
            elif e.data.antipode is not None:
                problems.append(f"{e.id}: antipode on a non-Hopf entry")
            if e.source:
                of = self.entries.get(e.source["of"])
                if of is None:
                    problems.append(f"{e.id}: cross-reference to missing {e.source['of']}")
                elif not variant(of.data, VariantKind(e.source["kind"])).same_structure(e.data):
                    problems.append(f"{e.id}: is not {e.source['kind']} of {of.id}")
        return problems


def catalog_dir() -> Path:
    return Path(os.environ.get(ENV_VAR) or DATA_DIR)


def load(path=None, validate: bool = True) -> Catalog:
    path = Path(path) if path is not None else catalog_dir()
    try:
        index = json.loads((path / INDEX).read_text())
    except (OSError, ValueError) as exc:
        raise CatalogError(f"cannot read catalog index in {path}: {exc}") from None
    entries = []
    problems = []
    for row in index:
        try:
            data = load_file(path / row["file"])
        except ValidationError as exc:
            problems.extend(exc.problems)
            continue
        if data.id != row["id"]:
            problems.append(f"{row['file']}: id {data.id} does not match index {row['id']}")
        entries.append(CatalogEntry(data=data, tier=row["tier"], provenance=row["provenance"],
                                    source=row.get("source"), errata=tuple(row.get("errata", ())),
                                    generators=row.get("generators")))
    cat = Catalog(entries)
    if validate:
        problems.extend(cat.validate())
    if problems:
        raise CatalogError("; ".join(problems))
    return cat


@lru_cache(maxsize=None)
def _default(path: str) -> Catalog:
    return load(Path(path))


def default() -> Catalog:
    return _default(str(catalog_dir()))


def get(ident: str) -> CatalogEntry:
    return default().get(ident)


def counts(dim: int = 4) -> dict:
    return default().counts(dim)
