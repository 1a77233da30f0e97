"""Directory-backed corpus of audited graphs.

One JSON file per isomorphism class, named by the 16-hex-digit graph
fingerprint, holding the graph in text format, a provenance string, and
the cached invariants.  An append-only ``ledger.log`` records additions
and verification outcomes.  No database, diff-friendly, idempotent adds.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from . import coloring as col
from . import ore
from . import packing
from .graph_core import Graph, d4_components, graph_from_text, graph_to_text
from .potential import p_ky, potential, short_key
from .report import Report

DEFAULT_DIR = "corpus"
ENV_VAR = "ORELAB_CORPUS"


def resolve_dir(explicit: str | None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(DEFAULT_DIR)


def compute_invariants(G: Graph) -> dict:
    t, _ = packing.t_number(G)
    mic_value, _ = packing.mic(G)
    d4 = d4_components(G)
    return {
        "n": G.n,
        "m": G.m,
        "p_ky": p_ky(G),
        "t": t,
        "p_num": potential(G).num,
        "critical5": col.is_5_critical(G),
        "ore5": ore.is_5_ore(G) is not None,
        "mic": mic_value,
        "s": d4.singles,
        "m_pairs": d4.pairs,
    }


@dataclass(frozen=True)
class Entry:
    key: str
    graph: Graph
    provenance: str
    invariants: dict


class Corpus:
    def __init__(self, root: Path):
        self.root = Path(root)

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def exists(self) -> bool:
        return self.root.is_dir()

    def keys(self) -> list[str]:
        if not self.exists():
            return []
        return sorted(p.stem for p in self.root.glob("*.json"))

    def __contains__(self, key: str) -> bool:
        return self._path(key).is_file()

    def log(self, message: str):
        self.root.mkdir(parents=True, exist_ok=True)
        with open(self.root / "ledger.log", "a", encoding="utf-8") as fh:
            fh.write(message + "\n")

    def add(self, G: Graph, provenance: str) -> tuple[str, bool]:
        """Persist a graph; returns (key, freshly_added)."""
        key = short_key(G)
        path = self._path(key)
        if path.is_file():
            return key, False
        self.root.mkdir(parents=True, exist_ok=True)
        entry = {
            "key": key,
            "graph": graph_to_text(G),
            "provenance": provenance,
            "invariants": compute_invariants(G),
        }
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(entry, fh, indent=1, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
        inv = entry["invariants"]
        self.log(f"add {key} n={inv['n']} m={inv['m']} {provenance}")
        return key, True

    def load(self, key: str) -> Entry:
        path = self._path(key)
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except FileNotFoundError:
            raise KeyError(f"no corpus entry {key} under {self.root}") from None
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: corrupt entry: {exc}") from None
        G = graph_from_text(raw["graph"])
        return Entry(raw["key"], G, raw.get("provenance", "?"), raw["invariants"])

    def entries(self) -> list[Entry]:
        return [self.load(k) for k in self.keys()]

    def verify_entry(self, key: str) -> Report:
        """Recompute the cached invariants and compare (staleness check)."""
        entry = self.load(key)
        rep = Report()
        fresh_key = short_key(entry.graph)
        rep.add(
            "corpus-key",
            key,
            fresh_key == key,
            note=f"recomputed={fresh_key}" if fresh_key != key else "",
        )
        fresh = compute_invariants(entry.graph)
        stale = sorted(
            name for name, value in fresh.items() if entry.invariants.get(name) != value
        )
        rep.add(
            "corpus-invariants",
            key,
            not stale,
            note=("stale=" + ",".join(stale)) if stale else f"fields={len(fresh)}",
        )
        return rep
