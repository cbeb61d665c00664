"""Graphviz DOT output for the window, the graded quiver and the quiver of the seed."""
from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence

import networkx as nx

from errors import ValidationError
from seed import SeedData
from start.graded import GradedQuiver, Relation
from translation.window import AusWindow

WINDOW = "window"
GRADED = "graded"
ATILDE = "atilde"


def _quote(node: Hashable) -> str:
    return f'"{node}"'


class Formatter:
    """Attribute hooks; ``None`` or an empty list means no attributes."""

    def vertex_attributes(self, s) -> Optional[List[str]]:
        return None

    def edge_attributes(self, s, t) -> Optional[List[str]]:
        return None


class WindowFormatter(Formatter):
    def __init__(self, window: AusWindow):
        self.window = window

    def vertex_attributes(self, s):
        if self.window.is_projective(s) and self.window.is_injective(s):
            return ["peripheries=2"]
        if self.window.is_injective(s):
            return ["style=bold"]
        return None


class GradedFormatter(Formatter):
    def __init__(self, graph: nx.DiGraph):
        self.graph = graph

    def edge_attributes(self, s, t):
        if self.graph.edges[s, t]["degree"] == 1:
            return ["style=dashed"]
        return None


class SeedFormatter(Formatter):
    def __init__(self, seed: SeedData):
        self.exchangeable = set(seed.exchangeable)
        self.kplus = seed.kplus

    def vertex_attributes(self, s):
        if s not in self.exchangeable:
            return ["shape=box"]
        return None

    def edge_attributes(self, s, t):
        if self.kplus.get(s) == t:
            return ["style=dashed"]
        return None


def digraph(
    g: nx.DiGraph,
    formatter: Formatter = Formatter(),
    *,
    ranks: Sequence[Sequence[Hashable]] = (),
    comments: Iterable[str] = (),
    rankdir: str = "RL",
) -> str:
    """DOT text for ``g``; every group in ``ranks`` is drawn on one rank."""

    result = ["digraph G {", "    rankdir=%s;" % rankdir]
    for comment in comments:
        result.append("    // %s" % comment)

    for group in ranks:
        result.append("    { rank=same; %s }" % " ".join(_quote(s) + ";" for s in group))

    for s in sorted(g.nodes):
        line = "    %s" % _quote(s)
        a = formatter.vertex_attributes(s)
        if a:
            line += " [%s]" % ",".join(a)
        result.append(line + ";")

        for t in sorted(g.successors(s)):
            line = "        %s -> %s" % (_quote(s), _quote(t))
            a = formatter.edge_attributes(s, t)
            if a:
                line += " [%s]" % ",".join(a)
            result.append(line + ";")

    result.append("}")
    return "\n".join(result) + "\n"


def _columns(vertices: Iterable) -> List[List]:
    by_column: Dict[int, List] = {}
    for v in sorted(vertices):
        by_column.setdefault(v.column, []).append(v)
    return [by_column[c] for c in sorted(by_column)]


def window_dot(window: AusWindow) -> str:
    return digraph(window.graph, WindowFormatter(window), ranks=_columns(window.objects))


def _relation_comment(relation: Relation) -> str:
    terms = " ".join(
        "%+d*[%s]" % (coefficient, ",".join(str(a) for a in path)) for coefficient, path in relation.terms
    )
    return "%s %s -> %s: %s" % (relation.kind, relation.source, relation.target, terms)


def graded_dot(graded: GradedQuiver) -> str:
    graph = graded.graph()
    count = len(graded.arrows0) + len(graded.arrows1)
    comments = ["arrow %d: %s -> %s (degree %d)" % ((i,) + graded.arrow(i)) for i in range(count)]
    comments += [_relation_comment(relation) for relation in graded.relations]
    return digraph(graph, GradedFormatter(graph), ranks=_columns(graded.vertices), comments=comments)


def seed_dot(seed: SeedData) -> str:
    graph = nx.DiGraph()
    graph.add_nodes_from(seed.kplus)
    graph.add_edges_from(seed.atilde)
    return digraph(graph, SeedFormatter(seed), rankdir="LR")


_EMITTERS: Dict[str, Callable[[object], str]] = {
    WINDOW: window_dot,
    GRADED: graded_dot,
    ATILDE: seed_dot,
}


def emit_dot(graph, flavor: str) -> str:
    """Dispatch on ``flavor``: ``window``, ``graded`` or ``atilde``."""

    try:
        emitter = _EMITTERS[flavor]
    except KeyError:
        raise ValidationError(f"Unknown DOT flavor {flavor!r}; expected one of {sorted(_EMITTERS)}") from None
    return emitter(graph)
