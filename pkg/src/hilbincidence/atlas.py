"""Incidence-candidate digraph over all staircases with a given Hilbert function."""

from __future__ import annotations

import hashlib
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .arrows import default_box, find_system, necessary_condition
from .families import bundled_family_names, family_staircases, load_family, verify_witness
from .staircase import Box, Grading, Staircase, enumerate_staircases, normalize_hilbert, parse_staircase
from .yameogo import dominates, profile

log = logging.getLogger(__name__)


def worked_example_data() -> dict:
    ref = resources.files("hilbincidence") / "data" / "worked_example.json"
    return json.loads(ref.read_text())


def known_names(g: Grading, H) -> dict[tuple, str]:
    """Names of the staircases of the worked example, keyed by canonical key."""
    data = worked_example_data()
    if Grading.from_json(data["grading"]) != g or tuple(data["hilbert"]) != normalize_hilbert(H):
        return {}
    return {parse_staircase(gens).key(): name for name, gens in data["names"].items()}


@dataclass
class AtlasEdge:
    source: int
    target: int
    yameogo: bool
    cond1: bool
    cond2: bool
    witnessed: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.cond1 and self.cond2


@dataclass
class AtlasGraph:
    grading: Grading
    hilbert: tuple[int, ...]
    nodes: list[Staircase]
    edges: list[AtlasEdge] = field(default_factory=list)
    aliases: dict[int, str] = field(default_factory=dict)

    def label(self, i: int) -> str:
        return self.nodes[i].label()

    def to_json(self) -> dict:
        return {
            "grading": self.grading.to_json(),
            "hilbert": list(self.hilbert),
            "nodes": [
                {
                    "id": f"n{i}",
                    "label": E.label(),
                    "generators": E.to_json()["generators"],
                    "alias": self.aliases.get(i),
                    "profile": profile(self.grading, E).to_json(),
                }
                for i, E in enumerate(self.nodes)
            ],
            "edges": [
                {
                    "source": f"n{e.source}",
                    "target": f"n{e.target}",
                    "yameogo": e.yameogo,
                    "cond1": e.cond1,
                    "cond2": e.cond2,
                    "witnessed": e.witnessed,
                }
                for e in self.edges
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AtlasGraph":
        nodes = [Staircase.from_json({"generators": n["generators"]}) for n in data["nodes"]]
        ids = {n["id"]: i for i, n in enumerate(data["nodes"])}
        edges = [
            AtlasEdge(ids[e["source"]], ids[e["target"]], e["yameogo"], e["cond1"], e["cond2"], e["witnessed"])
            for e in data["edges"]
        ]
        aliases = {i: n["alias"] for i, n in enumerate(data["nodes"]) if n.get("alias")}
        return cls(Grading.from_json(data["grading"]), tuple(data["hilbert"]), nodes, edges, aliases)

    def to_dot(self) -> str:
        lines = ["digraph atlas {", "  rankdir=TB;", "  node [shape=box, fontname=monospace];"]
        for i, E in enumerate(self.nodes):
            text = E.label()
            if i in self.aliases:
                text = f"{self.aliases[i]}: {text}"
            lines.append(f'  n{i} [label="{text}"];')
        for e in self.edges:
            attrs = ["style=solid" if e.holds else "style=dashed"]
            if e.witnessed:
                attrs.append(f'tooltip="witness family {e.witnessed}"')
            lines.append(f"  n{e.source} -> n{e.target} [{', '.join(attrs)}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _pair_check(args):
    g, E, F, box = args
    report = necessary_condition(g, E, F, box)
    return report.cond1, report.cond2


def build_atlas(g: Grading, H, box: Optional[Box] = None, jobs: int = 1) -> AtlasGraph:
    H = normalize_hilbert(H)
    nodes = enumerate_staircases(g, H)
    pairs = [
        (i, j)
        for i, E in enumerate(nodes)
        for j, F in enumerate(nodes)
        if i != j and dominates(g, E, F)
    ]
    work = [(g, nodes[i], nodes[j], box or default_box(nodes[i])) for i, j in pairs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_pair_check, work))
    else:
        results = [_pair_check(w) for w in work]
    edges = [AtlasEdge(i, j, True, c1, c2) for (i, j), (c1, c2) in zip(pairs, results)]
    # an arrow system forces dominance, so pairs left out must fail the direct condition
    candidates = set(pairs)
    for i, E in enumerate(nodes):
        for j, F in enumerate(nodes):
            if i != j and (i, j) not in candidates and find_system(g, E, F) is not None:
                raise AssertionError(f"arrow system without dominance: {E.label()} -> {F.label()}")
    atlas = AtlasGraph(g, H, nodes, edges)
    names = known_names(g, H)
    atlas.aliases = {i: names[E.key()] for i, E in enumerate(nodes) if E.key() in names}
    attach_witnesses(atlas)
    return atlas


def attach_witnesses(atlas: AtlasGraph) -> None:
    """Mark edges certified by a bundled family."""
    index = {E.key(): i for i, E in enumerate(atlas.nodes)}
    by_pair = {(e.source, e.target): e for e in atlas.edges}
    for name in bundled_family_names():
        fam = load_family(name)
        if fam.grading != atlas.grading:
            continue
        try:
            E, F = family_staircases(fam)
        except ValueError:
            continue
        edge = by_pair.get((index.get(E.key()), index.get(F.key())))
        if edge is None:
            continue
        if verify_witness(fam, E, F).passed:
            edge.witnessed = name


def _cache_key(g: Grading, H, box: Optional[Box]) -> str:
    key = f"atlas_a{g.a}_b{g.b}_h{'-'.join(map(str, H)) or 'empty'}"
    if box is not None:
        key += f"_box{box.M}x{box.N}"
    return key


def _checksum(payload: dict) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def cached_atlas(
    g: Grading, H, cache_dir: Optional[Path], box: Optional[Box] = None, jobs: int = 1
) -> AtlasGraph:
    """Build the atlas, reading and writing a checksummed cache file."""
    H = normalize_hilbert(H)
    if cache_dir is None:
        return build_atlas(g, H, box, jobs)
    cache_dir = Path(cache_dir)
    key = _cache_key(g, H, box)
    path = cache_dir / f"{key}.json"
    if path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("key") == key and data.get("checksum") == _checksum(data["atlas"]):
                return AtlasGraph.from_json(data["atlas"])
            log.warning("atlas cache %s failed verification; recomputing", path)
        except (ValueError, KeyError, TypeError):
            log.warning("atlas cache %s is unreadable; recomputing", path)
    atlas = build_atlas(g, H, box, jobs)
    payload = atlas.to_json()
    cache_dir.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"key": key, "checksum": _checksum(payload), "atlas": payload}, sort_keys=True))
    return atlas
