"""Breadth-first balls in a crystal graph and a serializable graph document."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional

from . import lspath, polyhedral
from .algebra import ShapeWeight, root_coords
from .lspath import LSPath
from .polyhedral import TensorElement

Op = Callable[[Hashable, int], Optional[Hashable]]

# fixed tie-break: f1, f2, e1, e2
OP_ORDER = (("f", 1), ("f", 2), ("e", 1), ("e", 2))


@dataclass(frozen=True)
class Model:
    """The four things BFS needs to know about a crystal."""
    lower: Op
    raise_: Op
    eps: Callable[[Hashable, int], int]
    phi: Callable[[Hashable, int], int]
    weight: Callable


PATHS = Model(lspath.lowering, lspath.raising,
              lambda b, i: lspath.eps_phi(b, i)[0],
              lambda b, i: lspath.eps_phi(b, i)[1],
              lspath.weight)

TENSORS = Model(polyhedral.lowering, polyhedral.raising,
                polyhedral.crystal_eps, polyhedral.crystal_phi,
                polyhedral.crystal_wt)


def bfs_ball(start, model: Model, radius: int, kinds: Iterable[str] = ("f", "e")) -> dict:
    """Vertices within ``radius`` steps of ``start``, in BFS discovery order, with distances."""
    kinds = tuple(kinds)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        if dist[b] == radius:
            continue
        for kind, i in OP_ORDER:
            if kind not in kinds:
                continue
            nb = (model.lower if kind == "f" else model.raise_)(b, i)
            if nb is not None and nb not in dist:
                dist[nb] = dist[b] + 1
                queue.append(nb)
    return dist


def path_ball(shape: ShapeWeight, radius: int, kinds=("f", "e")) -> list[LSPath]:
    return list(bfs_ball(lspath.straight_line(shape), PATHS, radius, kinds))


def tensor_ball(shape: ShapeWeight, radius: int, kinds=("f", "e")) -> list[TensorElement]:
    z = polyhedral.zero_element(shape.cartan, shape.weight)
    return list(bfs_ball(z, TENSORS, radius, kinds))


@dataclass
class GraphDocument:
    config: dict
    vertices: list[dict] = field(default_factory=list)
    edges: list[tuple[str, str, int]] = field(default_factory=list)

    def to_json(self) -> str:
        body = {"config": self.config, "vertices": self.vertices,
                "edges": [list(e) for e in self.edges]}
        return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        body = json.loads(text)
        return cls(body["config"], body["vertices"],
                   [(s, t, int(i)) for s, t, i in body["edges"]])

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  node [shape=box];"]
        for v in self.vertices:
            wt = v["weight"]
            lines.append(f'  "{v["id"]}" [label="{v["id"]}\\nwt=({wt[0]},{wt[1]})"];')
        for s, t, i in self.edges:
            lines.append(f'  "{s}" -> "{t}" [label="f{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_tsv(self) -> str:
        rows = ["id\tdist\twt1\twt2\tn1\tn2\teps1\teps2\tphi1\tphi2"]
        for v in self.vertices:
            rows.append("\t".join(map(str, [v["id"], v["dist"], *v["weight"], *v["root"],
                                            *v["eps"], *v["phi"]])))
        return "\n".join(rows) + "\n"


def build_graph(shape: ShapeWeight, radius: int, config: Optional[dict] = None) -> GraphDocument:
    """The LS-path crystal graph on the ball of ``radius`` around pi_lambda."""
    dist = bfs_ball(lspath.straight_line(shape), PATHS, radius)
    doc = GraphDocument(dict(config or {}))
    for b, d in dist.items():
        wt = lspath.weight(b).to_int()
        doc.vertices.append({
            "id": b.encode(),
            "dist": d,
            "weight": [wt.c1, wt.c2],
            "root": list(root_coords(shape, wt)),
            "eps": [lspath.eps_phi(b, i)[0] for i in (1, 2)],
            "phi": [lspath.eps_phi(b, i)[1] for i in (1, 2)],
        })
    for b in dist:
        for i in (1, 2):
            nb = lspath.lowering(b, i)
            if nb is not None and nb in dist:
                doc.edges.append((b.encode(), nb.encode(), i))
    return doc
