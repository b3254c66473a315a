"""Plain-text formats for graphs, lists, policies, decompositions, layerings, tangles and colourings.

Graph files are bit-exact: ``p <n> <m>`` then ``e <u> <v>`` per edge with
``u < v``, edges sorted, newline-terminated ASCII. The other formats are
line-oriented with a one-letter tag per line; blank lines and lines
starting with ``#`` are ignored on input.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .graph_core import Graph, GraphError, Separation
from .list_machinery import BoundedColoringPolicy, Lists
from .structure import Layering, Tangle, TreeDecomposition


class FormatError(ValueError):
    pass


def _lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line.split()))
    return out


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {no}: expected an integer, got {tok!r}") from None


def _ints(toks: Iterable[str], no: int) -> List[int]:
    return [_int(t, no) for t in toks]


# --------------------------------------------------------------------------- graphs

def write_graph(g: Graph) -> str:
    if tuple(g.vertices) != tuple(range(g.n)):
        raise GraphError("graph files need vertices 0..n-1; relabel first")
    out = [f"p {g.n} {g.m}"] + [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(out) + "\n"


def read_graph(text: str) -> Graph:
    rows = _lines(text)
    if not rows or rows[0][1][0] != "p" or len(rows[0][1]) != 3:
        raise FormatError("graph file must start with 'p <n> <m>'")
    no, head = rows[0]
    n, m = _int(head[1], no), _int(head[2], no)
    if n < 0 or m < 0:
        raise FormatError("negative counts in header")
    edges = set()
    for no, toks in rows[1:]:
        if toks[0] != "e" or len(toks) != 3:
            raise FormatError(f"line {no}: expected 'e <u> <v>'")
        u, v = _int(toks[1], no), _int(toks[2], no)
        if u == v:
            raise FormatError(f"line {no}: loop at {u}")
        if not 0 <= u < v < n:
            raise FormatError(f"line {no}: need 0 <= u < v < n, got {u} {v}")
        if (u, v) in edges:
            raise FormatError(f"line {no}: duplicate edge {u} {v}")
        edges.add((u, v))
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------- lists and policies

def write_lists(L: Mapping[int, Iterable[int]]) -> str:
    return "".join(f"v {v} : {' '.join(map(str, sorted(L[v])))}\n" for v in sorted(L))


def read_lists(text: str) -> Lists:
    out: Dict[int, frozenset] = {}
    for no, toks in _lines(text):
        if toks[0] != "v" or len(toks) < 3 or toks[2] != ":":
            raise FormatError(f"line {no}: expected 'v <id> : c1 c2 ...'")
        v = _int(toks[1], no)
        if v in out:
            raise FormatError(f"line {no}: vertex {v} listed twice")
        out[v] = frozenset(_ints(toks[3:], no))
    return out


def write_policy(p: BoundedColoringPolicy) -> str:
    out = [f"eta {p.eta}"]
    if p.default != 1:
        out.append(f"default {p.default}")
    out += [f"g {x}={p.g_table[x]}" for x in sorted(p.g_table)]
    if p.stable_colors:
        out.append("F " + " ".join(map(str, sorted(p.stable_colors))))
    return "\n".join(out) + "\n"


def read_policy(text: str) -> BoundedColoringPolicy:
    eta: Optional[int] = None
    table: Dict[int, int] = {}
    stable: List[int] = []
    default = 1
    for no, toks in _lines(text):
        tag = toks[0]
        if tag == "eta" and len(toks) == 2:
            eta = _int(toks[1], no)
        elif tag == "default" and len(toks) == 2:
            default = _int(toks[1], no)
        elif tag == "g" and len(toks) == 2 and "=" in toks[1]:
            x, y = toks[1].split("=", 1)
            table[_int(x, no)] = _int(y, no)
        elif tag == "F":
            stable += _ints(toks[1:], no)
        else:
            raise FormatError(f"line {no}: unknown policy line")
    if eta is None:
        raise FormatError("policy needs an 'eta' line")
    return BoundedColoringPolicy(eta, table, frozenset(stable), default)


# --------------------------------------------------------------------------- decompositions

def write_td(td: TreeDecomposition) -> str:
    out = [f"td {len(td.bags)}"]
    out += [f"b {x} : {' '.join(map(str, sorted(td.bags[x])))}".rstrip() for x in td.nodes]
    out += [f"t {a} {b}" for a, b in sorted(td.tree_edges)]
    return "\n".join(out) + "\n"


def read_td(text: str) -> TreeDecomposition:
    rows = _lines(text)
    if not rows or rows[0][1][0] != "td":
        raise FormatError("decomposition file must start with 'td <nodes>'")
    count = _int(rows[0][1][1], rows[0][0])
    bags: Dict[int, List[int]] = {}
    edges = []
    for no, toks in rows[1:]:
        if toks[0] == "b" and len(toks) >= 3 and toks[2] == ":":
            x = _int(toks[1], no)
            if x in bags:
                raise FormatError(f"line {no}: node {x} given twice")
            bags[x] = _ints(toks[3:], no)
        elif toks[0] == "t" and len(toks) == 3:
            edges.append((_int(toks[1], no), _int(toks[2], no)))
        else:
            raise FormatError(f"line {no}: unknown decomposition line")
    if len(bags) != count:
        raise FormatError(f"header announces {count} nodes, found {len(bags)}")
    for a, b in edges:
        if a not in bags or b not in bags:
            raise FormatError(f"tree edge {a} {b} names an unknown node")
    return TreeDecomposition.build(bags, edges)


def write_layering(lay: Layering) -> str:
    out = [f"l {i} : {' '.join(map(str, sorted(layer)))}".rstrip() for i, layer in enumerate(lay.layers, 1)]
    out.append(f"z : {' '.join(map(str, sorted(lay.excluded)))}".rstrip())
    return "\n".join(out) + "\n"


def read_layering(text: str) -> Layering:
    layers: Dict[int, List[int]] = {}
    excluded: List[int] = []
    for no, toks in _lines(text):
        if toks[0] == "l" and len(toks) >= 3 and toks[2] == ":":
            layers[_int(toks[1], no)] = _ints(toks[3:], no)
        elif toks[0] == "z" and len(toks) >= 2 and toks[1] == ":":
            excluded += _ints(toks[2:], no)
        else:
            raise FormatError(f"line {no}: unknown layering line")
    if sorted(layers) != list(range(1, len(layers) + 1)):
        raise FormatError("layers must be numbered 1..k")
    return Layering.build([layers[i] for i in range(1, len(layers) + 1)], excluded)


# --------------------------------------------------------------------------- tangles

def _vset(tok: str, no: int) -> frozenset:
    return frozenset() if tok == "-" else frozenset(_ints(tok.split(","), no))


def _eset(tok: str, no: int) -> frozenset:
    if tok == "-":
        return frozenset()
    out = set()
    for part in tok.split(","):
        a, sep, b = part.partition("-")
        if not sep:
            raise FormatError(f"line {no}: edge {part!r} is not 'u-v'")
        u, v = _int(a, no), _int(b, no)
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def _fmt_v(vs) -> str:
    return ",".join(map(str, sorted(vs))) or "-"


def _fmt_e(es) -> str:
    return ",".join(f"{u}-{v}" for u, v in sorted(es)) or "-"


def write_separation(s: Separation) -> str:
    return f"s va={_fmt_v(s.va)} vb={_fmt_v(s.vb)} ea={_fmt_e(s.a_edges)} eb={_fmt_e(s.b_edges)}"


def read_separation(toks: List[str], no: int) -> Separation:
    fields = {}
    for t in toks[1:]:
        k, eq, v = t.partition("=")
        if not eq or k not in ("va", "vb", "ea", "eb"):
            raise FormatError(f"line {no}: bad separation field {t!r}")
        fields[k] = v
    if set(fields) != {"va", "vb", "ea", "eb"}:
        raise FormatError(f"line {no}: separation needs va, vb, ea and eb")
    return Separation(_vset(fields["va"], no), _vset(fields["vb"], no),
                      _eset(fields["ea"], no), _eset(fields["eb"], no))


def write_tangle(t: Tangle) -> str:
    seps = sorted(t.separations, key=lambda s: (sorted(s.va), sorted(s.vb), sorted(s.a_edges)))
    return "\n".join([f"t {t.order}"] + [write_separation(s) for s in seps]) + "\n"


def read_tangle(text: str) -> Tangle:
    rows = _lines(text)
    if not rows or rows[0][1][0] != "t" or len(rows[0][1]) != 2:
        raise FormatError("tangle file must start with 't <theta>'")
    theta = _int(rows[0][1][1], rows[0][0])
    seps = []
    for no, toks in rows[1:]:
        if toks[0] != "s":
            raise FormatError(f"line {no}: expected a separation line")
        seps.append(read_separation(toks, no))
    return Tangle(frozenset(seps), theta)


# --------------------------------------------------------------------------- colourings and witnesses

def write_coloring(c: Mapping[int, int]) -> str:
    return "".join(f"v {v} {c[v]}\n" for v in sorted(c))


def read_coloring(text: str) -> Dict[int, int]:
    out = {}
    for no, toks in _lines(text):
        if toks[0] != "v" or len(toks) != 3:
            raise FormatError(f"line {no}: expected 'v <id> <color>'")
        out[_int(toks[1], no)] = _int(toks[2], no)
    return out


def write_minor_model(model, two_coloring: Optional[Mapping[int, int]] = None) -> str:
    """Branch sets as ``h <x> : verts``, edge images as ``i <x>-<y> <u>-<v>``, colours as ``c <v> <0|1>``."""
    out = [f"h {x} : {' '.join(map(str, sorted(model.branch_sets[x])))}" for x in sorted(model.branch_sets)]
    out += [f"i {p}-{q} {u}-{v}" for (p, q), (u, v) in sorted(model.edge_images.items())]
    if two_coloring is not None:
        out += [f"c {v} {two_coloring[v]}" for v in sorted(two_coloring)]
    return "\n".join(out) + "\n"


def read_order(tok: str) -> Tuple[int, ...]:
    """Comma-separated vertex list, as used for cyclic orders and vertex sets on the command line."""
    if tok in ("", "-"):
        return ()
    try:
        return tuple(int(x) for x in tok.split(","))
    except ValueError:
        raise FormatError(f"bad vertex list {tok!r}") from None
