"""Text and JSON formats for designs and factorizations.

Text design format::

    v 9
    0 1 2
    0 3 6
    ...

One block per line, ascending points, blocks in lexicographic order, LF
endings. Labels are only kept in JSON. Factorization text puts one factor
per line: a tag (``H``, ``F5,1``, ``G4,2``, ``R3``) followed by its pairs as
``x-y``.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .design import Coloring, Factor, Factorization, FactorTag, TripleSystem, canonicalize
from .errors import InvalidInput

FORMAT_VERSION = 1


@dataclass(frozen=True)
class DesignDocument:
    system: TripleSystem
    independent_set: frozenset[int] | None = None
    coloring: Coloring | None = None
    trace: dict[str, Any] | None = None


def design_to_txt(ts: TripleSystem) -> str:
    ts = canonicalize(ts)
    lines = [f"v {ts.v}"]
    lines.extend(f"{p} {q} {r}" for p, q, r in ts.blocks)
    return "\n".join(lines) + "\n"


def design_from_txt(text: str) -> TripleSystem:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("v "):
        raise InvalidInput("design text must start with a 'v <order>' line")
    try:
        v = int(lines[0].split()[1])
        blocks = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise InvalidInput(f"malformed design text: {exc}") from None
    return TripleSystem.from_blocks(v, blocks)


def document_to_json(doc: DesignDocument) -> str:
    ts = canonicalize(doc.system)
    out: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "v": ts.v,
        "blocks": [list(b) for b in ts.blocks],
    }
    if ts.labels:
        out["labels"] = {str(k): v for k, v in ts.labels.items()}
    if doc.independent_set is not None:
        out["independent_set"] = sorted(doc.independent_set)
    if doc.coloring is not None:
        out["coloring"] = list(doc.coloring.assignment)
    if doc.trace is not None:
        out["trace"] = doc.trace
    return json.dumps(out, sort_keys=True, indent=1) + "\n"


def document_from_json(text: str) -> DesignDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON: {exc}") from None
    if not isinstance(raw, dict) or "v" not in raw or "blocks" not in raw:
        raise InvalidInput("JSON design needs 'v' and 'blocks'")
    if raw.get("format_version", FORMAT_VERSION) != FORMAT_VERSION:
        raise InvalidInput(f"unsupported format version {raw['format_version']}")
    labels = {int(k): v for k, v in raw["labels"].items()} if "labels" in raw else None
    ts = TripleSystem.from_blocks(int(raw["v"]), raw["blocks"], labels)
    indep = frozenset(raw["independent_set"]) if "independent_set" in raw else None
    coloring = Coloring(tuple(raw["coloring"])) if "coloring" in raw else None
    return DesignDocument(ts, indep, coloring, raw.get("trace"))


def factor_to_txt(f: Factor) -> str:
    tag = str(f.tag) if f.tag else "?"
    return tag + " " + " ".join(f"{x}-{y}" for x, y in f.pairs)


def factors_to_txt(factors: list[Factor] | Factorization) -> str:
    return "".join(factor_to_txt(f) + "\n" for f in factors)


def factors_from_txt(text: str) -> list[Factor]:
    out = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        tag, *pairs = ln.split()
        parsed = [tuple(int(x) for x in p.split("-")) for p in pairs]
        m = 2 * len(parsed)
        out.append(Factor(m, parsed, FactorTag.parse(tag, m)))
    return out


def factors_to_json(factors: list[Factor] | Factorization) -> str:
    factors = list(factors)
    out = {
        "format_version": FORMAT_VERSION,
        "m": factors[0].m if factors else 0,
        "factors": [{"tag": str(f.tag), "pairs": [list(p) for p in f.pairs]} for f in factors],
    }
    return json.dumps(out, sort_keys=True, indent=1) + "\n"


def factors_from_json(text: str) -> list[Factor]:
    raw = json.loads(text)
    m = raw["m"]
    return [Factor(m, [tuple(p) for p in f["pairs"]], FactorTag.parse(f["tag"], m)) for f in raw["factors"]]


def atomic_write(path: str | os.PathLike, text: str) -> None:
    """Write via a temp file in the same directory, then rename over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_document(path: str | os.PathLike) -> DesignDocument:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return document_from_json(text)
    return DesignDocument(design_from_txt(text))
