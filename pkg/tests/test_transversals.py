from hypothesis import given, settings, strategies as st

from tropbasis._bits import subset_key
from tropbasis.oracle import Hypergraph, oracle_minimal_transversals
from tropbasis.transversals import minimal_transversals, minimize_edges


def test_minimize_edges():
    assert minimize_edges([0b11, 0b111, 0b11, 0b100]) == [0b100, 0b11]


def test_no_edges_gives_empty_transversal():
    assert minimal_transversals([]) == ([0], False)


def test_cap_flags_truncation():
    edges = [0b11, 0b1100, 0b110000]
    full, trunc = minimal_transversals(edges)
    assert len(full) == 8 and not trunc
    part, trunc = minimal_transversals(edges, cap=3)
    assert len(part) == 3 and trunc
    exact, trunc = minimal_transversals(edges, cap=8)
    assert len(exact) == 8 and not trunc


@settings(max_examples=300, deadline=None)
@given(v=st.integers(1, 10), data=st.data())
def test_matches_oracle(v, data):
    edges = data.draw(st.lists(st.integers(1, (1 << v) - 1), max_size=8))
    got, trunc = minimal_transversals(edges)
    assert not trunc
    assert len(got) == len(set(got))
    assert sorted(got, key=subset_key) == oracle_minimal_transversals(Hypergraph(v, edges))
