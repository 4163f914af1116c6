import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qforge.exactla import RatMatrix
from qforge.family import (
    E6_TILDE_EDGES,
    cycle_edges,
    d_tilde_edges,
    euclidean_family,
    orientations,
)
from qforge.quiver import (
    Quiver,
    QuiverClass,
    QuiverError,
    SubquiverWitness,
    classify,
    euler_form,
    extend_vector,
    find_euclidean_subquiver,
    induced_subquiver,
    is_acyclic,
    is_connected,
    isotropic_root,
    kronecker,
    symmetrized_matrix,
    unit_vector,
)

from oracles import connected_multigraphs, graph_table_class

THETA2 = kronecker(2)
THETA3 = kronecker(3)
A4 = Quiver(4, ((0, 1), (1, 2), (2, 3)))
D4_TILDE_IN = Quiver(5, ((0, 4), (1, 4), (2, 4), (3, 4)))


def test_acyclicity():
    assert is_acyclic(Quiver(1, ()))
    assert not is_acyclic(Quiver(2, ((0, 1), (1, 0))))
    assert is_acyclic(THETA2)
    assert not is_acyclic(Quiver(1, ((0, 0),)))


def test_connectivity():
    assert is_connected(THETA2)
    assert not is_connected(Quiver(2, ()))
    assert is_connected(Quiver(4, ((0, 1), (2, 1), (2, 3), (0, 3))))


def test_euler_form_examples():
    assert euler_form(THETA2, (1, 0), (0, 1)) == -2
    assert euler_form(THETA2, (1, 1), (1, 1)) == 0
    for v in D4_TILDE_IN.vertices:
        e = unit_vector(D4_TILDE_IN, v)
        assert euler_form(D4_TILDE_IN, e, e) == 1
    with pytest.raises(QuiverError):
        euler_form(THETA2, (1, 0, 0), (1, 0))


def test_symmetrized_matrix_examples():
    assert symmetrized_matrix(THETA2) == RatMatrix.from_rows([[2, -2], [-2, 2]])
    assert symmetrized_matrix(Quiver(2, ((0, 1),))) == RatMatrix.from_rows([[2, -1], [-1, 2]])
    assert symmetrized_matrix(Quiver(2, ())) == RatMatrix.from_rows([[2, 0], [0, 2]])


def test_classify_examples():
    assert classify(A4) is QuiverClass.FINITE
    assert classify(THETA2) is QuiverClass.TAME_EUCLIDEAN
    # S = [[2,-3],[-3,2]] has determinant -5
    assert classify(THETA3) is QuiverClass.INFINITE_NON_EUCLIDEAN
    with pytest.raises(QuiverError):
        classify(Quiver(2, ()))
    with pytest.raises(QuiverError):
        classify(Quiver(2, ((0, 1), (1, 0))))


def test_isotropic_root_examples():
    assert isotropic_root(THETA2) == (1, 1)
    assert isotropic_root(D4_TILDE_IN) == (1, 1, 1, 1, 2)
    with pytest.raises(QuiverError):
        isotropic_root(A4)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cycle_delta_is_all_ones(n):
    for Q in orientations(n, cycle_edges(n)):
        assert isotropic_root(Q) == (1,) * n


def test_e6_tilde_delta():
    Q = Quiver(7, tuple(E6_TILDE_EDGES))
    assert isotropic_root(Q) == (3, 2, 1, 2, 1, 2, 1)


def test_d5_tilde_delta():
    Q = Quiver(6, tuple(d_tilde_edges(5)))
    assert isotropic_root(Q) == (1, 1, 2, 2, 1, 1)


def test_find_euclidean_identity_witness():
    w = find_euclidean_subquiver(THETA2)
    assert w == SubquiverWitness.full(THETA2)


def test_find_euclidean_theta3_drops_arrow_zero():
    w = find_euclidean_subquiver(THETA3)
    assert w.kept_vertices == (0, 1)
    assert w.kept_arrows == (1, 2)
    assert induced_subquiver(THETA3, w) == THETA2


def test_find_euclidean_e6_with_pendant():
    # E6~ plus a pendant vertex 7 hanging off the end of an arm
    Q = Quiver(8, tuple(E6_TILDE_EDGES) + ((6, 7),))
    assert classify(Q) is QuiverClass.INFINITE_NON_EUCLIDEAN
    w = find_euclidean_subquiver(Q)
    assert w.kept_vertices == tuple(range(7))
    assert w.kept_arrows == tuple(range(6))
    assert classify(induced_subquiver(Q, w)) is QuiverClass.TAME_EUCLIDEAN


def test_find_euclidean_rejects_finite():
    with pytest.raises(QuiverError):
        find_euclidean_subquiver(A4)


def test_induced_subquiver_and_extend_vector():
    assert induced_subquiver(THETA3, SubquiverWitness.full(THETA3)) == THETA3
    single = SubquiverWitness((1,), ())
    assert induced_subquiver(THETA3, single) == Quiver(1, ())
    assert extend_vector(SubquiverWitness((0, 2), ()), (4, 5), 3) == (4, 0, 5)
    with pytest.raises(QuiverError):
        induced_subquiver(THETA3, SubquiverWitness((0,), (0,)))


def test_quiver_json_round_trip():
    obj = THETA3.to_json()
    assert obj == {"vertices": 2, "arrows": [{"tail": 0, "head": 1}] * 3}
    assert Quiver.from_json(obj) == THETA3
    with pytest.raises(QuiverError):
        Quiver.from_json({"vertices": 2, "arrows": [{"tail": 0, "head": 5}]})


def _edges_to_quiver(n, edges):
    return Quiver(n, tuple((min(e), max(e)) for e in edges))


def test_classify_agrees_with_graph_table_on_six_vertices():
    # connected multigraphs on exactly 6 vertices with at most 6 edges
    bad = []
    for n, edges in connected_multigraphs(6, 6):
        if n != 6:
            continue
        if str(classify(_edges_to_quiver(n, edges))) != graph_table_class(n, edges):
            bad.append(edges)
    assert bad == []


def test_graph_table_oracle_on_known_diagrams():
    assert graph_table_class(5, [(0, 4), (1, 4), (2, 4), (3, 4)]) == "TameEuclidean"
    assert graph_table_class(7, E6_TILDE_EDGES) == "TameEuclidean"
    assert graph_table_class(6, d_tilde_edges(5)) == "TameEuclidean"
    # E8 = T(2,3,5) and E8~ = T(2,3,6)
    e8 = [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)]
    assert graph_table_class(8, e8) == "Finite"
    assert graph_table_class(9, e8 + [(7, 8)]) == "TameEuclidean"
    assert graph_table_class(10, e8 + [(7, 8), (8, 9)]) == "InfiniteNonEuclidean"
    assert classify(Quiver(8, tuple(e8))) is QuiverClass.FINITE
    e8_tilde = Quiver(9, tuple(e8) + ((7, 8),))
    assert isotropic_root(e8_tilde) == (6, 3, 4, 2, 5, 4, 3, 2, 1)


@pytest.mark.parametrize("name,Q", euclidean_family())
def test_delta_invariants_on_family(name, Q):
    delta = isotropic_root(Q)
    assert euler_form(Q, delta, delta) == 0
    for x in Q.vertices:
        e = unit_vector(Q, x)
        assert euler_form(Q, delta, e) + euler_form(Q, e, delta) == 0


def test_greedy_output_is_euclidean_on_random_wild():
    import random

    from qforge.family import random_wild_quiver

    rng = random.Random(3)
    for _ in range(20):
        Q = random_wild_quiver(rng.randint(3, 7), rng, extra=rng.randint(1, 3))
        w = find_euclidean_subquiver(Q)
        w.validate(Q)
        assert classify(induced_subquiver(Q, w)) is QuiverClass.TAME_EUCLIDEAN


quivers = st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]), max_size=6)))


@settings(max_examples=200, deadline=None)
@given(quivers, st.data())
def test_euler_bilinear_and_symmetrization(qdata, data):
    n, arrows = qdata
    Q = Quiver(n, tuple(arrows))
    vec = st.lists(st.integers(-4, 4), min_size=n, max_size=n)
    a, a2, b = data.draw(vec), data.draw(vec), data.draw(vec)
    s = [x + y for x, y in zip(a, a2)]
    assert euler_form(Q, s, b) == euler_form(Q, a, b) + euler_form(Q, a2, b)
    assert euler_form(Q, b, s) == euler_form(Q, b, a) + euler_form(Q, b, a2)
    S = symmetrized_matrix(Q)
    assert 2 * euler_form(Q, a, a) == sum(a[i] * S[i, j] * a[j] for i in range(n) for j in range(n))
    assert S == S.transpose()
