import pytest

from walksnf import (
    Graph,
    IntegerMatrix,
    NotEquitableError,
    Partition,
    adjacency_matrix,
    characteristic_matrix,
    discrete_partition,
    divisor_matrix_b1,
    divisor_matrix_b2,
    is_equitable,
    path_graph,
    quotient_matrix,
    rank_bound_holds,
    symmetric_partition,
    walk_matrix,
)


def test_path_graph_edges():
    assert path_graph(3).edges == {(1, 2), (2, 3)}
    assert path_graph(1).edges == frozenset()
    with pytest.raises(ValueError):
        path_graph(0)


def test_graph_rejects_loops_and_repeats():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])


@pytest.mark.parametrize("n, expected", [
    (2, [[0, 1], [1, 0]]),
    (3, [[0, 1, 0], [1, 0, 1], [0, 1, 0]]),
    (1, [[0]]),
])
def test_adjacency_examples(n, expected):
    assert adjacency_matrix(path_graph(n)) == IntegerMatrix(expected)


@pytest.mark.parametrize("n", range(2, 25))
def test_path_adjacency_shape(n):
    a = adjacency_matrix(path_graph(n))
    assert a == a.T
    assert all(a[i, i] == 0 for i in range(n))
    assert set(a.entries) <= {0, 1}
    sums = [sum(a.row(i)) for i in range(n)]
    assert sums[0] == sums[-1] == 1
    assert all(s == 2 for s in sums[1:-1])


def test_divisor_matrices():
    assert divisor_matrix_b1(2) == IntegerMatrix([[0, 1], [1, 1]])
    assert divisor_matrix_b1(1) == IntegerMatrix([[1]])
    assert divisor_matrix_b1(5).row(4) == (0, 0, 0, 1, 1)
    assert divisor_matrix_b2(2) == IntegerMatrix([[0, 1], [2, 0]])
    assert divisor_matrix_b2(1) == IntegerMatrix([[0]])
    assert divisor_matrix_b2(5).row(4) == (0, 0, 0, 2, 0)
    for make in (divisor_matrix_b1, divisor_matrix_b2):
        with pytest.raises(ValueError):
            make(0)


def test_degenerate_quotients_match_definition():
    # r = 1 forms come from the one-cell quotient of A_2 and A_1
    assert quotient_matrix(path_graph(2), symmetric_partition(2)) == divisor_matrix_b1(1)
    assert quotient_matrix(path_graph(1), symmetric_partition(1)) == divisor_matrix_b2(1)


def test_symmetric_partition_examples():
    assert symmetric_partition(10).as_lists() == [[1, 10], [2, 9], [3, 8], [4, 7], [5, 6]]
    assert symmetric_partition(3).as_lists() == [[1, 3], [2]]
    assert symmetric_partition(1).as_lists() == [[1]]
    with pytest.raises(ValueError):
        symmetric_partition(0)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        Partition([[1], [3]])
    with pytest.raises(ValueError):
        Partition([[1], []])


def test_is_equitable_examples():
    assert is_equitable(path_graph(10), symmetric_partition(10))
    assert not is_equitable(path_graph(4), Partition([[1, 2], [3, 4]]))
    assert is_equitable(path_graph(6), discrete_partition(6))
    with pytest.raises(ValueError):
        is_equitable(path_graph(4), symmetric_partition(5))


def test_characteristic_matrix_examples():
    assert characteristic_matrix(symmetric_partition(3)) == IntegerMatrix([[1, 0], [0, 1], [1, 0]])
    assert characteristic_matrix(symmetric_partition(2)) == IntegerMatrix([[1], [1]])
    assert characteristic_matrix(symmetric_partition(4)) == \
        IntegerMatrix([[1, 0], [0, 1], [0, 1], [1, 0]])


@pytest.mark.parametrize("n", range(1, 41))
def test_characteristic_matrix_properties(n):
    p = symmetric_partition(n)
    c = characteristic_matrix(p)
    r = len(p)
    assert c @ IntegerMatrix.column([1] * r) == IntegerMatrix.column([1] * n)
    gram = c.T @ c
    assert gram == IntegerMatrix([[len(p.cells[i]) if i == j else 0 for j in range(r)]
                                  for i in range(r)])


def test_quotient_examples():
    assert quotient_matrix(path_graph(10), symmetric_partition(10)) == divisor_matrix_b1(5)
    assert quotient_matrix(path_graph(9), symmetric_partition(9)) == divisor_matrix_b2(5)
    assert quotient_matrix(path_graph(1), symmetric_partition(1)) == IntegerMatrix([[0]])
    with pytest.raises(NotEquitableError):
        quotient_matrix(path_graph(4), Partition([[1, 2], [3, 4]]))


@pytest.mark.parametrize("n", range(1, 41))
def test_intertwining(n):
    g = path_graph(n)
    p = symmetric_partition(n)
    assert is_equitable(g, p)
    a = adjacency_matrix(g)
    c = characteristic_matrix(p)
    b = quotient_matrix(g, p)
    assert a @ c == c @ b
    r = (n + 1) // 2
    expected = divisor_matrix_b1(r) if n % 2 == 0 else divisor_matrix_b2(r)
    assert b == expected
    assert a @ c == c @ expected


def test_quotient_of_non_path_graph():
    # star K_{1,3}: center vs leaves is equitable
    star = Graph(4, [(1, 2), (1, 3), (1, 4)])
    p = Partition([[1], [2, 3, 4]])
    b = quotient_matrix(star, p)
    assert b == IntegerMatrix([[0, 3], [1, 0]])
    a = adjacency_matrix(star)
    c = characteristic_matrix(p)
    assert a @ c == c @ b
    assert rank_bound_holds(star, p)


def test_rank_bound_examples():
    assert rank_bound_holds(path_graph(10), symmetric_partition(10))
    assert rank_bound_holds(path_graph(3), symmetric_partition(3))
    assert rank_bound_holds(path_graph(4), discrete_partition(4))
    with pytest.raises(NotEquitableError):
        rank_bound_holds(path_graph(4), Partition([[1, 2], [3, 4]]))


def test_walk_matrix_of_quotient_is_compressed():
    # A^k C = C B^k, so walk columns of A_n are C times walk columns of B
    for n in (7, 8):
        g = path_graph(n)
        p = symmetric_partition(n)
        c = characteristic_matrix(p)
        wb = walk_matrix(quotient_matrix(g, p))
        wa = walk_matrix(adjacency_matrix(g))
        r = len(p)
        assert (c @ wb) == wa.submatrix(range(n), range(r))
