"""Figure documents and their JSON, DOT and ASCII serializations."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .burnside import BurnsideSpace, build_burnside, fiber
from .groups import PermGroup, all_subgroups, conjugacy_classes_of_subgroups, is_subconjugate
from .spectrum import SpecSpace, chromatic_image

SCHEMA_VERSION = 1

PALETTE = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d",
    "#666666", "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6", "#ff7f00", "#6a3d9a",
]


def hasse_pairs(leq: np.ndarray) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)`` of a reflexive transitive relation (``i`` immediately below ``j``)."""
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    cover = strict & ~through
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(cover))]


def transitive_closure(n: int, pairs: list[tuple[int, int]]) -> np.ndarray:
    rel = np.eye(n, dtype=bool)
    for i, j in pairs:
        rel[i, j] = True
    for k in range(n):
        rel |= rel[:, [k]] & rel[[k], :]
    return rel


def relation_pairs(leq: np.ndarray) -> list[tuple[int, int]]:
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(strict))]


@dataclass
class FigureDocument:
    """Serializable picture of a spectrum, optionally with gluing and chromatic data.

    ``specialization`` holds every strict pair ``[i, j]`` with point ``i`` in the
    closure of point ``j``; ``hasse`` is its transitive reduction.
    """

    kind: str
    group: dict[str, Any]
    local: int | None
    points: list[dict[str, Any]]
    specialization: list[list[int]]
    hasse: list[list[int]]
    gluing: list[list[int]] | None = None
    quotient: dict[str, Any] | None = None
    chromatic: list[dict[str, Any]] | None = None
    admissible_count: int | None = None
    admissible: list[list[str]] | None = None
    subgroups: list[dict[str, Any]] | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "group": self.group,
            "local": self.local,
            "points": self.points,
            "specialization": self.specialization,
            "hasse": self.hasse,
        }
        for key in ("gluing", "quotient", "chromatic", "admissible_count", "admissible", "subgroups"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FigureDocument:
        data = dict(data)
        if data.pop("schema", None) != SCHEMA_VERSION:
            raise ValueError("unsupported document schema")
        known = {f for f in cls.__dataclass_fields__ if f != "extra"}
        kwargs = {k: data.pop(k) for k in list(data) if k in known}
        return cls(extra=data, **kwargs)

    @classmethod
    def from_json(cls, text: str) -> FigureDocument:
        return cls.from_dict(json.loads(text))

    def point_label(self, i: int) -> str:
        p = self.points[i]
        return f"P({p['class']},{p['slot']})"


def _group_info(G: PermGroup) -> dict[str, Any]:
    return {
        "name": G.name,
        "order": G.order,
        "classes": [
            {"label": c.label, "order": c.order, "class_size": c.class_size}
            for c in conjugacy_classes_of_subgroups(G)
        ],
    }


def spectrum_document(space: SpecSpace, kind: str = "spectrum") -> FigureDocument:
    return FigureDocument(
        kind=kind,
        group=_group_info(space.group),
        local=space.local,
        points=[{"class": P.subgroup_class.label, "slot": str(P.slot)} for P in space.points],
        specialization=[list(p) for p in relation_pairs(space.leq)],
        hasse=[list(p) for p in hasse_pairs(space.leq)],
    )


def burnside_document(space: SpecSpace, bs: BurnsideSpace | None = None, kind: str = "burnside") -> FigureDocument:
    bs = bs or build_burnside(space)
    doc = spectrum_document(space, kind)
    doc.gluing = [[space.index(P) for P in fiber(bs, b)] for b in bs.points]
    doc.quotient = {
        "points": [str(b) for b in bs.points],
        "specialization": [list(p) for p in relation_pairs(bs.leq)],
        "hasse": [list(p) for p in hasse_pairs(bs.leq)],
    }
    return doc


def compare_document(space: SpecSpace, shg: bool = False) -> FigureDocument:
    doc = burnside_document(space, kind="compare-shg" if shg else "compare")
    if shg:
        doc.chromatic = []
        for P in space.points:
            c = chromatic_image(space, P)
            doc.chromatic.append({
                "class": c.subgroup_class.label,
                "prime": str(c.prime),
                "height": "inf" if math.isinf(c.height) else int(c.height),
            })
    return doc


def subgroups_document(G: PermGroup) -> FigureDocument:
    classes = conjugacy_classes_of_subgroups(G)
    n = len(classes)
    leq = np.array([[is_subconjugate(K, H) for H in classes] for K in classes], dtype=bool)
    return FigureDocument(
        kind="subgroups",
        group=_group_info(G),
        local=None,
        points=[],
        specialization=[list(p) for p in relation_pairs(leq)],
        hasse=[list(p) for p in hasse_pairs(leq)],
        subgroups=[
            {"label": c.label, "order": c.order, "class_size": c.class_size,
             "normalizer_order": G.order // c.class_size,
             "normal": c.class_size == 1,
             "representative": list(c.representative.members)}
            for c in classes
        ],
        extra={"subgroup_count": len(all_subgroups(G)), "class_count": n},
    )


# ---------------------------------------------------------------------------
# DOT


def to_dot(doc: FigureDocument, color: bool = True) -> str:
    """Graphviz digraph with an edge Q -> P whenever Q is an immediate specialization of P."""
    labels = [c["label"] for c in doc.group["classes"]]
    colors = {lab: PALETTE[i % len(PALETTE)] for i, lab in enumerate(labels)}
    name = doc.group["name"] or "G"
    lines = [f'digraph "{doc.kind} {name}" {{', "  rankdir=BT;", "  node [shape=ellipse];"]
    if doc.kind == "subgroups":
        for i, lab in enumerate(labels):
            attrs = f'label="{lab}"'
            if color:
                attrs += f', style=filled, fillcolor="{colors[lab]}"'
            lines.append(f"  c{i} [{attrs}];")
        lines += [f"  c{i} -> c{j};" for i, j in doc.hasse]
        lines.append("}")
        return "\n".join(lines) + "\n"
    quotient = doc.quotient if doc.kind in ("compare", "compare-shg") else None
    if quotient:
        lines.append('  subgraph cluster_source { label="source";')
    for i, p in enumerate(doc.points):
        attrs = f'label="{doc.point_label(i)}"'
        if color:
            attrs += f', style=filled, fillcolor="{colors[p["class"]]}"'
        if doc.chromatic:
            c = doc.chromatic[i]
            attrs += f', xlabel="h={c["height"]}"'
        lines.append(f"  n{i} [{attrs}];")
    if quotient:
        lines.append("  }")
    lines += [f"  n{i} -> n{j};" for i, j in doc.hasse]
    if doc.gluing is not None and doc.kind == "burnside":
        for k, members in enumerate(doc.gluing):
            if len(members) > 1:
                lines.append(f'  subgraph cluster_glue{k} {{ label="{doc.quotient["points"][k]}"; style=dashed; '
                             + " ".join(f"n{i};" for i in members) + " }")
    if quotient:
        lines.append('  subgraph cluster_quotient { label="Spec(A(G))";')
        for k, token in enumerate(quotient["points"]):
            lines.append(f'    b{k} [label="{token}", shape=box];')
        lines.append("  }")
        lines += [f"  b{a} -> b{b};" for a, b in quotient["hasse"]]
        for k, members in enumerate(doc.gluing or []):
            lines += [f"  n{i} -> b{k} [style=dashed, arrowhead=open, constraint=false];" for i in members]
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# ASCII


def _grid(doc: FigureDocument) -> tuple[list[str], list[str], dict[tuple[str, str], int]]:
    classes = [c["label"] for c in doc.group["classes"]]
    slots: list[str] = []
    for p in doc.points:
        if p["slot"] not in slots:
            slots.append(p["slot"])
    cell = {(p["class"], p["slot"]): i for i, p in enumerate(doc.points)}
    return classes, slots, cell


def to_ascii(doc: FigureDocument) -> str:
    """Rows by slot (0 on top), one column per conjugacy class, then the covering relations."""
    name = doc.group["name"] or "G"
    if doc.kind == "subgroups":
        out = [f"{name} (order {doc.group['order']}): {doc.extra['subgroup_count']} subgroups, "
               f"{doc.extra['class_count']} conjugacy classes"]
        for s in doc.subgroups or []:
            out.append(f"  {s['label']:<10} order {s['order']:<4} class size {s['class_size']:<3}"
                       f"{' normal' if s['normal'] else ''}")
        out.append("lattice (K -- H means K is subconjugate to H, covering pairs):")
        labels = [s["label"] for s in doc.subgroups or []]
        out += [f"  {labels[i]} -- {labels[j]}" for i, j in doc.hasse]
        return "\n".join(out) + "\n"
    classes, slots, cell = _grid(doc)
    width = max(6, max(len(c) for c in classes) + 2)
    where = f"{doc.local}-local " if doc.local else ""
    out = [f"{name} (order {doc.group['order']}): {where}spectrum, {len(doc.points)} points"]
    out.append("      " + "".join(c.ljust(width) for c in classes))
    for s in slots:
        row = []
        for c in classes:
            i = cell.get((c, s))
            mark = "o" if i is not None else " "
            if doc.chromatic and i is not None:
                h = doc.chromatic[i]["height"]
                mark = "o" + ("^inf" if h == "inf" else f"^{h}")
            row.append(mark.ljust(width))
        out.append(f"  {s:<4}" + "".join(row).rstrip())
    if doc.gluing is not None and doc.quotient is not None:
        out.append("")
        out.append("      --rho-->  Spec(A(G))" + (f" localized at {doc.local}" if doc.local else ""))
        for s in slots:
            groups = [g for g in doc.gluing if doc.points[g[0]]["slot"] == s]
            shown = []
            for g in groups:
                labels = [doc.points[i]["class"] for i in g]
                shown.append(labels[0] if len(labels) == 1 else "{" + ",".join(labels) + "}")
            out.append(f"  {s:<4}" + "  ".join(shown))
        closed = [doc.quotient["points"][k] for k in _closed(doc.quotient)]
        out.append(f"  closed points: {len(closed)}")
    if doc.admissible_count is not None:
        out.append(f"admissible subsets: {doc.admissible_count}")
        for members in doc.admissible or []:
            out.append("  {" + ", ".join(members) + "}")
    out.append("specialization (Q -> P: Q lies in the closure of P, covering pairs):")
    for i, j in doc.hasse:
        out.append(f"  {doc.point_label(i)} -> {doc.point_label(j)}")
    return "\n".join(out) + "\n"


def _closed(quotient: dict[str, Any]) -> list[int]:
    below = {j for _, j in quotient["specialization"]}
    return [k for k in range(len(quotient["points"])) if k not in below]
