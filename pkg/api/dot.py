"""
DOT Export

Graphviz renderings of synchronizers and modified systems, produced as an
iterable of lines. Error-action edges are dashed; ending nodes are
double-circled.
"""

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

from automata.sistate import format_sequence
from estimation.modified import ModifiedPlant
from estimation.synchronizer import Synchronizer, node_cost, node_tau


def _gvquote(text: str) -> str:
    return '"{}"'.format(text.replace("\\", "\\\\").replace('"', r"\"").replace("\n", "\\n"))


@dataclass(frozen=True)
class DotOptions:
    show_estimates: bool = True
    rankdir: str = "LR"


def _format_estimate(values: Iterable[Hashable]) -> str:
    parts = []
    for value in sorted(values):
        parts.append(f"({value[0]},{value[1]})" if isinstance(value, tuple) else str(value))
    return "{" + ", ".join(parts) + "}"


def _node_label(sync: Synchronizer, node: Hashable, options: DotOptions) -> str:
    tau = node_tau(node)
    text = "(" + ", ".join(format_sequence(seq) for seq in tau.seqs) + ")"
    cost = node_cost(node)
    if cost is not None:
        text += f", {cost}"
    if options.show_estimates and sync.has_estimates:
        text += "\n" + _format_estimate(sync.estimate(node))
    return text


def export_dot(sync: Synchronizer, options: DotOptions = DotOptions()) -> Iterator[str]:
    """
    Produce a DOT digraph of ``sync`` line by line

    Use like so::

        with open("sync.dot", "w") as f:
            f.writelines(export_dot(sync))
    """
    ids = {node: f"n{idx}" for idx, node in enumerate(sync.nodes)}
    yield "digraph synchronizer {\n"
    yield f"  rankdir={options.rankdir};\n"
    yield '  node [fontname="Helvetica"];\n'
    for node in sync.nodes:
        shape = "doublecircle" if node_tau(node).is_ending else "box"
        extra = ", penwidth=2" if node == sync.root else ""
        yield f"  {ids[node]} [shape={shape}{extra}, label={_gvquote(_node_label(sync, node, options))}];\n"
    for src, label, dst in sync.edges():
        style = "dashed" if sync.is_error_edge(src, label, dst) else "solid"
        yield f"  {ids[src]} -> {ids[dst]} [style={style}, label={_gvquote(str(label))}];\n"
    yield "}\n"


def export_modified_dot(modified: ModifiedPlant, name: str, options: DotOptions = DotOptions()) -> Iterator[str]:
    """DOT digraph of G_g or G_l; transitions that exist only through error actions are dashed"""
    system = modified.system
    ids = {state: f"q{idx}" for idx, state in enumerate(sorted(system.states))}
    yield f"digraph {name} {{\n"
    yield f"  rankdir={options.rankdir};\n"
    for state in sorted(system.states):
        extra = ", penwidth=2" if state in system.initial else ""
        yield f"  {ids[state]} [shape=circle{extra}, label={_gvquote(f'{state[0]},{state[1]}')}];\n"
    for src, label, dst in system.edges():
        style = "dashed" if modified.is_error_transition(src, label, dst) else "solid"
        text = str(label) if str(label) else "ε"
        yield f"  {ids[src]} -> {ids[dst]} [style={style}, label={_gvquote(text)}];\n"
    yield "}\n"
