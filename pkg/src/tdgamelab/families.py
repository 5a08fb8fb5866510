"""Deterministic generators for the graph families used by the solvers.

Every family has a fixed canonical vertex numbering (hub first, then
branch-major order) so tests and policies can reference vertices stably,
plus a canonical text form used by the CLI, e.g. ``path:7``,
``cyclepower:7,2``, ``gk:2``, ``substar:4,3``, ``join:path4+path4``,
``corona:complete3``, ``union:path4+cycle3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, VertexSet, bits, build_graph, distance

SIMPLE_KINDS = ("path", "cycle", "complete", "star", "gk", "fk", "bk", "jk")
TWO_PARAM_KINDS = ("cyclepower", "substar")
COMPOSITE_KINDS = ("join", "corona", "union")
ALL_KINDS = SIMPLE_KINDS + TWO_PARAM_KINDS + COMPOSITE_KINDS


class FamilySpecError(ValueError):
    """Raised for unknown kinds, bad parameters, or malformed spec text."""


@dataclass(frozen=True)
class FamilySpec:
    """Parsed description of one family instance.

    ``n``/``k``/``t`` are used as each kind requires; ``parts`` holds the
    nested specs of ``join``, ``corona`` and ``union``.
    """

    kind: str
    n: int | None = None
    k: int | None = None
    t: int | None = None
    parts: tuple["FamilySpec", ...] = field(default=())

    def text(self) -> str:
        """Canonical text form (inverse of parse_family_spec)."""
        if self.kind in ("path", "cycle", "complete"):
            return f"{self.kind}:{self.n}"
        if self.kind in ("star", "gk", "fk", "bk", "jk"):
            return f"{self.kind}:{self.k}"
        if self.kind == "cyclepower":
            return f"cyclepower:{self.n},{self.k}"
        if self.kind == "substar":
            return f"substar:{self.k},{self.t}"
        inner = "+".join(_compact(p) for p in self.parts)
        return f"{self.kind}:{inner}"


def _compact(spec: FamilySpec) -> str:
    if spec.kind not in SIMPLE_KINDS:
        raise FamilySpecError(
            f"only simple one-parameter kinds may nest inside composites, not {spec.kind!r}"
        )
    value = spec.n if spec.kind in ("path", "cycle", "complete") else spec.k
    return f"{spec.kind}{value}"


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FamilySpecError(f"expected an integer {what}, got {token!r}") from None


def _simple_spec(kind: str, value: int) -> FamilySpec:
    if kind in ("path", "cycle", "complete"):
        return FamilySpec(kind, n=value)
    return FamilySpec(kind, k=value)


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the canonical text form of a family spec."""
    text = text.strip().lower()
    kind, sep, payload = text.partition(":")
    if not sep or not payload:
        raise FamilySpecError(f"malformed family spec {text!r} (expected kind:params)")
    if kind in COMPOSITE_KINDS:
        parts = tuple(_parse_nested(tok) for tok in payload.split("+"))
        spec = FamilySpec(kind, parts=parts)
    elif kind in SIMPLE_KINDS:
        spec = _simple_spec(kind, _parse_int(payload, "parameter"))
    elif kind == "cyclepower":
        n, k = _split_two(payload, kind)
        spec = FamilySpec(kind, n=n, k=k)
    elif kind == "substar":
        k, t = _split_two(payload, kind)
        spec = FamilySpec(kind, k=k, t=t)
    else:
        raise FamilySpecError(f"unknown family kind {kind!r}")
    validate_spec(spec)
    return spec


def _split_two(payload: str, kind: str) -> tuple[int, int]:
    pieces = payload.split(",")
    if len(pieces) != 2:
        raise FamilySpecError(f"{kind} takes exactly two comma-separated parameters")
    return _parse_int(pieces[0], "parameter"), _parse_int(pieces[1], "parameter")


def _parse_nested(token: str) -> FamilySpec:
    token = token.strip()
    if ":" in token:
        kind, _, payload = token.partition(":")
    else:
        kind = token.rstrip("0123456789")
        payload = token[len(kind):]
    if kind not in SIMPLE_KINDS:
        raise FamilySpecError(f"nested spec {token!r} must be a simple kind like path4")
    if not payload:
        raise FamilySpecError(f"nested spec {token!r} is missing its parameter")
    spec = _simple_spec(kind, _parse_int(payload, "parameter"))
    validate_spec(spec)
    return spec


_PARAM_RULES = {
    "path": ("n", 2),
    "cycle": ("n", 3),
    "complete": ("n", 1),
    "star": ("k", 1),
    "gk": ("k", 1),
    "fk": ("k", 5),
    "bk": ("k", 1),
    "jk": ("k", 1),
}


def validate_spec(spec: FamilySpec) -> None:
    if spec.kind in _PARAM_RULES:
        attr, low = _PARAM_RULES[spec.kind]
        value = getattr(spec, attr)
        if value is None or value < low:
            raise FamilySpecError(f"{spec.kind} requires {attr} >= {low}, got {value}")
    elif spec.kind == "cyclepower":
        if spec.n is None or spec.n < 3:
            raise FamilySpecError(f"cyclepower requires base n >= 3, got {spec.n}")
        if spec.k is None or spec.k < 1:
            raise FamilySpecError(f"cyclepower requires k >= 1, got {spec.k}")
    elif spec.kind == "substar":
        if spec.k is None or spec.k < 3:
            raise FamilySpecError(f"substar requires k >= 3, got {spec.k}")
        if spec.t is None or spec.t < 1:
            raise FamilySpecError(f"substar requires t >= 1, got {spec.t}")
    elif spec.kind == "join":
        if len(spec.parts) != 2:
            raise FamilySpecError("join takes exactly two nested specs")
    elif spec.kind == "corona":
        if len(spec.parts) != 1:
            raise FamilySpecError("corona takes exactly one nested spec")
    elif spec.kind == "union":
        if len(spec.parts) < 2:
            raise FamilySpecError("union takes at least two nested specs")
    else:
        raise FamilySpecError(f"unknown family kind {spec.kind!r}")


def family(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``."""
    validate_spec(spec)
    builders = {
        "path": lambda: path_graph(spec.n),
        "cycle": lambda: cycle_graph(spec.n),
        "complete": lambda: complete_graph(spec.n),
        "star": lambda: star_graph(spec.k),
        "cyclepower": lambda: graph_power(cycle_graph(spec.n), spec.k),
        "gk": lambda: gk_graph(spec.k),
        "fk": lambda: fk_graph(spec.k),
        "bk": lambda: bk_graph(spec.k),
        "jk": lambda: jk_graph(spec.k),
        "substar": lambda: subdivided_star(spec.k, spec.t),
        "join": lambda: graph_join(family(spec.parts[0]), family(spec.parts[1])),
        "corona": lambda: corona(family(spec.parts[0])),
        "union": lambda: disjoint_union([family(p) for p in spec.parts]),
    }
    G = builders[spec.kind]()
    return Graph(G.n, G.nbr, label=spec.text(), vertex_labels=G.vertex_labels)


def path_graph(n: int) -> Graph:
    return build_graph(
        n,
        [(i, i + 1) for i in range(n - 1)],
        label=f"path:{n}",
        vertex_labels=[f"v{i + 1}" for i in range(n)],
    )


def cycle_graph(n: int) -> Graph:
    return build_graph(
        n,
        [(i, (i + 1) % n) for i in range(n)],
        label=f"cycle:{n}",
        vertex_labels=[f"v{i + 1}" for i in range(n)],
    )


def complete_graph(n: int) -> Graph:
    return build_graph(
        n,
        [(i, j) for i in range(n) for j in range(i + 1, n)],
        label=f"complete:{n}",
        vertex_labels=[f"v{i + 1}" for i in range(n)],
    )


def star_graph(k: int) -> Graph:
    """Star K_{1,k}: hub 0, leaves 1..k."""
    return build_graph(
        k + 1,
        [(0, i) for i in range(1, k + 1)],
        label=f"star:{k}",
        vertex_labels=["v"] + [f"u{i}" for i in range(1, k + 1)],
    )


def graph_power(G: Graph, k: int) -> Graph:
    """k-th power: same vertices, adjacency whenever distance in G is <= k."""
    if k < 1:
        raise ValueError("power exponent must be >= 1")
    if k == 1:
        return G
    edges = [
        (u, v)
        for u in range(G.n)
        for v in range(u + 1, G.n)
        if distance(G, u, v) <= k
    ]
    return build_graph(G.n, edges, label=G.label, vertex_labels=G.vertex_labels)


def graph_join(G: Graph, H: Graph) -> Graph:
    """Disjoint union of G and H plus all edges between the two sides."""
    edges = G.edges() + [(u + G.n, v + G.n) for u, v in H.edges()]
    edges += [(u, v + G.n) for u in range(G.n) for v in range(H.n)]
    labels = [G.vertex_name(v) for v in range(G.n)] + [
        f"{H.vertex_name(v)}'" for v in range(H.n)
    ]
    return build_graph(G.n + H.n, edges, vertex_labels=labels)


def corona(G: Graph) -> Graph:
    """Attach one new pendant leaf to every vertex of G."""
    edges = G.edges() + [(v, G.n + v) for v in range(G.n)]
    labels = [G.vertex_name(v) for v in range(G.n)] + [
        f"leaf{v + 1}" for v in range(G.n)
    ]
    return build_graph(2 * G.n, edges, vertex_labels=labels)


def disjoint_union(graphs: list[Graph]) -> Graph:
    edges = []
    labels = []
    offset = 0
    for i, G in enumerate(graphs):
        edges += [(u + offset, v + offset) for u, v in G.edges()]
        labels += [f"c{i + 1}.{G.vertex_name(v)}" for v in range(G.n)]
        offset += G.n
    return build_graph(offset, edges, vertex_labels=labels)


def gk_graph(k: int) -> Graph:
    """Chain of k copies of the join of two 4-paths.

    Block i occupies vertices 8i..8i+7: offsets 0..3 are the first path
    u,v,w,x and offsets 4..7 the second.  Within a block the two paths are
    fully joined (16 cross edges).  For k >= 2 the blocks are linked in a
    ring by the edges between offset 6 of block i and offset 2 of block
    i+1 (indices mod k); the k = 1 instance is a single unlinked block.
    """
    edges = []
    labels = []
    for i in range(k):
        base = 8 * i
        for side in (0, 4):
            edges += [(base + side + j, base + side + j + 1) for j in range(3)]
        edges += [(base + a, base + 4 + b) for a in range(4) for b in range(4)]
        for side, names in ((0, "uvwx"), (4, "uvwx")):
            col = 1 if side == 0 else 2
            labels += [f"{c}_{i + 1},{col}" for c in names]
    if k >= 2:
        edges += [(8 * i + 6, 8 * ((i + 1) % k) + 2) for i in range(k)]
    return build_graph(8 * k, edges, label=f"gk:{k}", vertex_labels=labels)


def fk_graph(k: int) -> Graph:
    """Two k-cliques u_1..u_k and v_1..v_k joined by the matching u_i v_i, i < k.

    Vertices 0..k-1 are the u-clique, k..2k-1 the v-clique; the last pair
    u_k v_k is left unmatched.
    """
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, k + j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, k + i) for i in range(k - 1)]
    labels = [f"u{i + 1}" for i in range(k)] + [f"v{i + 1}" for i in range(k)]
    return build_graph(2 * k, edges, label=f"fk:{k}", vertex_labels=labels)


def bk_graph(k: int) -> Graph:
    """k triangles sharing one hub v, plus a pendant vertex u on v.

    Vertex 0 is the hub v (degree 2k+1), vertex 1 the leaf u, and triangle
    i occupies vertices 2+2i and 3+2i.
    """
    edges = [(0, 1)]
    labels = ["v", "u"]
    for i in range(k):
        a, b = 2 + 2 * i, 3 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
        labels += [f"w{i + 1},1", f"w{i + 1},2"]
    return build_graph(2 * k + 2, edges, label=f"bk:{k}", vertex_labels=labels)


def jk_graph(k: int) -> Graph:
    """k four-cycles sharing one hub v, plus a pendant vertex u on v.

    Vertex 0 is the hub v, vertex 1 the leaf u; cycle i occupies vertices
    2+3i, 3+3i, 4+3i with 3+3i the vertex antipodal to the hub.
    """
    edges = [(0, 1)]
    labels = ["v", "u"]
    for i in range(k):
        a, m, b = 2 + 3 * i, 3 + 3 * i, 4 + 3 * i
        edges += [(0, a), (a, m), (m, b), (b, 0)]
        labels += [f"a{i + 1}", f"v{i + 1}", f"b{i + 1}"]
    return build_graph(3 * k + 2, edges, label=f"jk:{k}", vertex_labels=labels)


def subdivided_star(k: int, t: int) -> Graph:
    """Star K_{1,k} with every edge subdivided t times.

    Vertex 0 is the center; branch i occupies 1 + i(t+1) .. 1 + i(t+1) + t
    walking outward, so the last vertex of each branch is a leaf.
    """
    edges = []
    labels = ["v"]
    for i in range(k):
        base = 1 + i * (t + 1)
        edges.append((0, base))
        edges += [(base + j, base + j + 1) for j in range(t)]
        labels += [f"p{i + 1},{j + 1}" for j in range(t + 1)]
    return build_graph(k * (t + 1) + 1, edges, label=f"substar:{k},{t}", vertex_labels=labels)


def support_vertices(G: Graph) -> VertexSet:
    """Vertices with at least one degree-1 neighbor."""
    mask = 0
    for v in range(G.n):
        if any(G.degree(u) == 1 for u in bits(G.nbr[v])):
            mask |= 1 << v
    return VertexSet(G.n, mask)


def leaves(G: Graph) -> VertexSet:
    return VertexSet.of(G.n, (v for v in range(G.n) if G.degree(v) == 1))
