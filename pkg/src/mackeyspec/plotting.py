"""Matplotlib renderings of figure documents, written straight to image files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .render import PALETTE, FigureDocument, _grid  # noqa: E402


ROW_GAP = 3.0


def _level(order: int) -> int:
    """Number of prime factors of ``order`` with multiplicity."""
    k, d = 0, 2
    while order > 1:
        while order % d == 0:
            order //= d
            k += 1
        d += 1
    return k


def _positions(doc: FigureDocument) -> dict[int, tuple[float, float]]:
    # larger subgroups sit higher inside each slot band so covering edges are visible
    classes, slots, cell = _grid(doc)
    orders = {c["label"]: c["order"] for c in doc.group["classes"]}
    top = max((_level(o) for o in orders.values()), default=0) or 1
    pos = {}
    for (c, s), i in cell.items():
        pos[i] = (classes.index(c), -ROW_GAP * slots.index(s) + 0.8 * _level(orders[c]) / top)
    return pos


def _draw_space(ax, doc: FigureDocument, pos, color: bool) -> None:
    labels = [c["label"] for c in doc.group["classes"]]
    for i, j in doc.hasse:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=0.9, zorder=1)
    for i, (x, y) in pos.items():
        cls = doc.points[i]["class"]
        fc = PALETTE[labels.index(cls) % len(PALETTE)] if color else "white"
        ax.scatter([x], [y], s=90, c=[fc], edgecolors="black", linewidths=0.8, zorder=2)
    _, slots, _ = _grid(doc)
    ax.set_yticks([-ROW_GAP * k for k in range(len(slots))], [f"({s})" for s in slots])
    ax.set_xticks(range(len(labels)), labels, rotation=45, ha="right", fontsize=8)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)


def plot_document(doc: FigureDocument, path: str | Path, color: bool = True) -> Path:
    """Render ``doc`` to ``path`` (format from the suffix) and return the path."""
    path = Path(path)
    name = doc.group["name"] or "G"
    where = f", localized at {doc.local}" if doc.local else ""
    if doc.kind == "subgroups":
        fig, ax = plt.subplots(figsize=(6, 4))
        subs = doc.subgroups or []
        orders = sorted({s["order"] for s in subs})
        by_order: dict[int, list[int]] = {}
        for k, s in enumerate(subs):
            by_order.setdefault(s["order"], []).append(k)
        pos = {}
        for o, ks in by_order.items():
            for r, k in enumerate(ks):
                pos[k] = (r - (len(ks) - 1) / 2, orders.index(o))
        for i, j in doc.hasse:
            ax.plot(*zip(pos[i], pos[j]), color="0.5", lw=0.9, zorder=1)
        for k, (x, y) in pos.items():
            ax.text(x, y, subs[k]["label"], ha="center", va="center", zorder=2,
                    bbox=dict(boxstyle="round", fc=PALETTE[k % len(PALETTE)] if color else "white", alpha=0.8))
        ax.set_axis_off()
        ax.set_title(f"Conjugacy classes of subgroups of {name}")
        ax.margins(0.2)
    elif doc.quotient is not None:
        fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4), sharey=True)
        pos = _positions(doc)
        _draw_space(left, doc, pos, color)
        left.set_title(f"Spec(D(HZ_{name})^c){where}", fontsize=10)
        if doc.chromatic:
            for i, (x, y) in pos.items():
                h = doc.chromatic[i]["height"]
                left.annotate("∞" if h == "inf" else str(h), (x, y), xytext=(5, 5),
                              textcoords="offset points", fontsize=7)
        # glued points sit at the mean position of their fibre
        qpos = {}
        for k, members in enumerate(doc.gluing or []):
            xs = [pos[i][0] for i in members]
            ys = [pos[i][1] for i in members]
            qpos[k] = (sum(xs) / len(xs), min(ys))
        for a, b in doc.quotient["hasse"]:
            right.plot(*zip(qpos[a], qpos[b]), color="0.55", lw=0.9, zorder=1)
        labels = [c["label"] for c in doc.group["classes"]]
        for k, (x, y) in qpos.items():
            members = doc.gluing[k]
            cls = doc.points[members[0]]["class"]
            fc = PALETTE[labels.index(cls) % len(PALETTE)] if color and len(members) == 1 else "white"
            right.scatter([x], [y], s=90 + 25 * (len(members) - 1), c=[fc], edgecolors="black", zorder=2)
            if len(members) > 1:
                right.annotate(f"×{len(members)}", (x, y), xytext=(6, -10), textcoords="offset points", fontsize=7)
        right.set_xticks(range(len(labels)), labels, rotation=45, ha="right", fontsize=8)
        right.set_title(f"Spec(A({name})){where}", fontsize=10)
        for side in ("top", "right"):
            right.spines[side].set_visible(False)
        fig.text(0.5, 0.93, "ρ  →", ha="center", fontsize=14)
    else:
        fig, ax = plt.subplots(figsize=(6, 4))
        _draw_space(ax, doc, _positions(doc), color)
        ax.set_title(f"Spec(D(HZ_{name})^c){where}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
