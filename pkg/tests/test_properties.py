from __future__ import annotations

from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from app.services.constructions.bipartite import bipartite_expected_colors, bipartite_regular_labeling
from app.services.constructions.cycle import cycle_labeling
from app.services.constructions.lexicographic import lex_labeling, lex_vertex_sum
from app.services.graph import families
from app.services.graph.analysis import bipartition, chromatic_number, euler_tour, replay_tour
from app.services.graph.graph import Graph
from app.services.graph.products import cartesian_product
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.lemmas import complement, two_coloring_certificate
from app.services.labeling.matrix import LabelingMatrix, from_matrix, to_matrix
from app.services.labeling.verifier import verify
from app.services.magic_service import magic_square, shifted_block
from app.services.solver.exact import chi_la_exact
from app.services.solver.oracle import naive_chi_la


@st.composite
def graphs(draw, max_vertices: int = 7, max_edges: int | None = None):
    """Random simple graph relabeled so that no vertex is isolated."""
    p = draw(st.integers(2, max_vertices))
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    chosen = draw(
        st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=max_edges or len(pairs))
    )
    used = sorted({x for pair in chosen for x in pair})
    index = {v: i for i, v in enumerate(used)}
    return Graph.from_edges(len(used), [(index[u], index[v]) for u, v in chosen])


@st.composite
def labeled_graphs(draw, max_vertices: int = 7):
    g = draw(graphs(max_vertices))
    labels = draw(st.permutations(range(1, g.q + 1)))
    return EdgeLabeling.from_labels(g, labels)


def _sums(g: Graph, labels) -> list[int]:
    sums = [0] * g.p
    for (u, v), label in zip(g.edges, labels):
        sums[u] += label
        sums[v] += label
    return sums


@settings(max_examples=200, deadline=None)
@given(labeled_graphs())
def test_sum_identity_and_verifier_agree_with_definition(f):
    g = f.graph
    report = verify(g, f)
    sums = _sums(g, f.labels)

    assert sum(report.vertex_sums) == g.q * (g.q + 1)
    assert report.vertex_sums == sums
    assert report.is_proper == all(sums[u] != sums[v] for u, v in g.edges)
    assert report.color_count == len(set(sums))
    if report.is_proper:
        assert report.color_count >= chromatic_number(g)


@settings(max_examples=150)
@given(labeled_graphs())
def test_complement_is_an_involution(f):
    g = f.graph
    twice = complement(g, complement(g, f))

    assert twice == f
    if g.is_regular:
        assert verify(g, complement(g, f)).is_proper == verify(g, f).is_proper


@settings(max_examples=150)
@given(labeled_graphs(max_vertices=8))
def test_matrix_text_round_trip(f):
    matrix = to_matrix(f.graph, f)
    text = matrix.to_text()

    assert LabelingMatrix.from_text(text).to_text() == text
    h, back = from_matrix(LabelingMatrix.from_text(text))
    assert back.labels == f.labels
    assert matrix.row_sums() == list(f.vertex_sums)


_REGULAR = [
    families.cycle(5),
    families.cycle(6),
    families.complete(4),
    families.complete(5),
    families.mobius_ladder(6),
    families.g_mn(2, 2),
]


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_complement_keeps_colors_on_regular_graphs(data):
    g = data.draw(st.sampled_from(_REGULAR))
    f = EdgeLabeling.from_labels(g, data.draw(st.permutations(range(1, g.q + 1))))
    before, after = verify(g, f), verify(g, complement(g, f))

    assert after.color_count == before.color_count
    assert after.is_proper == before.is_proper
    assert after.colors == sorted(g.regular_degree * (g.q + 1) - c for c in before.colors)


@settings(max_examples=100, deadline=None)
@given(labeled_graphs(max_vertices=5), st.sampled_from([3, 4]))
def test_lex_vertex_sum_law(f, n):
    g = f.graph
    h = lex_labeling(g, f, n)

    assert h.is_bijection
    for u in range(g.p):
        expected = lex_vertex_sum(f.vertex_sum(u), g.degree(u), n)
        assert all(h.vertex_sum(u * n + j) == expected for j in range(n))


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 400))
def test_cycles_always_get_three_colors(n):
    report = verify(families.cycle(n), cycle_labeling(n))

    assert report.is_local_antimagic
    assert report.color_count == 3


_EULERIAN = [
    families.cycle(7),
    families.g_mn(2, 3),
    families.g_mn(3, 2),
    families.complete(5),
    cartesian_product(families.cycle(4), families.cycle(6)),
]


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_euler_tours_from_any_start_edge(data):
    g = data.draw(st.sampled_from(_EULERIAN))
    edge = data.draw(st.integers(0, g.q - 1))
    flip = data.draw(st.booleans())
    start = g.edges[edge][1] if flip else g.edges[edge][0]

    tour = euler_tour(g, start_edge=edge, start_vertex=start)

    assert replay_tour(g, tour)
    assert tour.edge_indices[0] == edge
    assert tour.start == start


_BIPARTITE_REGULAR = [
    families.cycle(10),
    families.g_mn(2, 3),
    families.g_mn(3, 3),
    cartesian_product(families.cycle(4), families.cycle(4)),
]


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_bipartite_tour_labeling_from_any_start_edge(data):
    g = data.draw(st.sampled_from(_BIPARTITE_REGULAR))
    edge = data.draw(st.integers(0, g.q - 1))
    f = bipartite_regular_labeling(g, start_edge=edge)
    report = verify(g, f)

    assert f.label(edge) == g.q
    assert report.is_local_antimagic
    assert report.colors == bipartite_expected_colors(g.q, g.regular_degree // 2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=6, max_edges=6))
def test_search_matches_oracle(g):
    exact, oracle = chi_la_exact(g), naive_chi_la(g)

    assert exact.status == oracle.status
    assert exact.chi_la == oracle.chi_la
    assert exact.witness == oracle.witness
    assert exact.chi_la is None or exact.chi_la >= chromatic_number(g)
    if exact.chi_la == 2:
        certificate = two_coloring_certificate(g, exact.witness)
        assert certificate is not None
        assert certificate.x * len(certificate.X) == g.q * (g.q + 1) // 2


@settings(max_examples=80, deadline=None)
@given(graphs(max_vertices=6))
def test_chromatic_number_matches_brute_force(g):
    def colorable(k: int) -> bool:
        return any(
            all(c[u] != c[v] for u, v in g.edges) for c in product(range(k), repeat=g.p)
        )

    chi = chromatic_number(g)
    assert colorable(chi)
    assert not colorable(chi - 1)
    assert (chi <= 2) == (bipartition(g) is not None)


@settings(max_examples=30)
@given(st.integers(3, 12), st.integers(1, 6))
def test_shifted_blocks_keep_magic_lines(n, q):
    omega = magic_square(n)
    k = omega.constant
    for i in range(1, q + 1):
        block = shifted_block(omega, i, q)
        assert (block.sum(axis=0) == k + (i - 1) * n**3).all()
        assert (block.sum(axis=1) == k + (i - 1) * n**3).all()
        assert block.min() == (i - 1) * n * n + 1
        assert block.max() == i * n * n
