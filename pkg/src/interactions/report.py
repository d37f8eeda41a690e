"""Analysis reports and Graphviz rendering of associated graphs."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .consv import compute_consv, format_rational
from .core import Interaction, components
from .relations import is_exchangeable, is_separable


@dataclass
class ComponentCell:
    vertices: list[list[int]]
    values: list[str]


@dataclass
class AnalysisReport:
    states: list[str]
    edge_count: int
    dim: int
    basis: list[list[str]]
    separable: bool
    exchangeable: bool
    components: list[ComponentCell] = field(default_factory=list)
    class_name: Optional[str] = None
    class_index: Optional[int] = None

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "AnalysisReport":
        data = dict(data)
        data["components"] = [ComponentCell(**c) for c in data.get("components", [])]
        return cls(**data)

    def to_text(self) -> str:
        lines = [
            f"states      {len(self.states)}  ({' '.join(self.states)})",
            f"edges       {self.edge_count}",
            f"dim Consv   {self.dim}",
        ]
        for row in self.basis:
            lines.append(f"  xi        {' '.join(row)}")
        lines += [
            f"separable   {str(self.separable).lower()}",
            f"exchangeable {str(self.exchangeable).lower()}",
            f"components  {len(self.components)}",
        ]
        for cell in self.components:
            verts = " ".join(f"({a},{b})" for a, b in cell.vertices)
            lines.append(f"  [{', '.join(cell.values)}] {verts}")
        if self.class_name or self.class_index is not None:
            lines.append(f"class       {self.class_index} {self.class_name or '-'}")
        return "\n".join(lines)


def analyze(inter: Interaction, identify_class: bool = True) -> AnalysisReport:
    basis = compute_consv(inter)
    cells = [
        ComponentCell(
            [list(v) for v in cell],
            [format_rational(x) for x in basis.pair_values(cell[0])],
        )
        for cell in components(inter)
    ]
    report = AnalysisReport(
        states=list(inter.states.labels),
        edge_count=len(inter.undirected_edges()),
        dim=basis.dim,
        basis=basis.rows(),
        separable=is_separable(inter),
        exchangeable=is_exchangeable(inter),
        components=cells,
    )
    if identify_class and 2 <= inter.size <= 5:
        from .classify import classify, identify

        record = identify(inter)
        if record is not None:
            report.class_name = record.name
            report.class_index = list(classify(inter.size - 1).classes).index(record)
    return report


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(inter: Interaction, name: str = "interaction") -> str:
    """Undirected DOT graph; one cluster per component, labelled by conserved values."""
    basis = compute_consv(inter)
    labels = inter.states.labels

    def node(v):
        return _quote(f"({labels[v[0]]},{labels[v[1]]})")

    out = [f"graph {_quote(name)} {{", "  node [shape=plaintext];"]
    for i, cell in enumerate(components(inter)):
        values = ", ".join(format_rational(x) for x in basis.pair_values(cell[0]))
        out.append(f"  subgraph cluster_{i} {{")
        out.append(f"    label={_quote('(' + values + ')')};")
        for v in cell:
            out.append(f"    {node(v)};")
        out.append("  }")
    for s, t in inter.undirected_edges():
        out.append(f"  {node(s)} -- {node(t)};")
    out.append("}")
    return "\n".join(out) + "\n"
