import pytest
from hypothesis import given
from hypothesis import strategies as st

from qspecdim.errors import ParameterError, ResourceError
from qspecdim.oracle import character_multiplicities
from qspecdim.rootdata import build_root_system
from qspecdim.weights import classical_dim, dominant_conjugate, enumerate_dominant, weight_system, weyl_orbit

from conftest import small_root_systems


def test_a1_fundamental():
    rs = build_root_system("A", 1)
    ws = weight_system(rs, rs.fundamental_weights[0])
    assert dict(ws.mults) == {(1,): 1, (-1,): 1}


def test_a2_adjoint_zero_weight_has_multiplicity_two():
    rs = build_root_system("A", 2)
    ws = weight_system(rs, rs.theta)
    assert ws.dim == 8
    assert ws.mult((0, 0)) == 2


@pytest.mark.parametrize(
    "key,index,dim",
    [(("E6", None), 0, 27), (("E7", None), 5, 56), (("B", 3), 2, 8), (("D", 5), 4, 16), (("C", 3), 0, 6)],
)
def test_known_fundamental_dimensions(key, index, dim):
    rs = build_root_system(*key)
    ws = weight_system(rs, rs.fundamental_weights[index])
    assert ws.dim == dim == classical_dim(rs, rs.fundamental_weights[index])


@pytest.mark.parametrize("key,dim", [(("E6", None), 78), (("E7", None), 133), (("B", 4), 36), (("C", 4), 36)])
def test_adjoint_dimension_and_zero_weight(key, dim):
    rs = build_root_system(*key)
    ws = weight_system(rs, rs.theta)
    assert ws.dim == dim
    assert ws.mult((0,) * rs.rank) == rs.rank


@given(small_root_systems(), st.data())
def test_total_multiplicity_is_weyl_dimension(rs, data):
    labels = data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank))
    lam = rs.from_labels(labels)
    assert weight_system(rs, lam).dim == classical_dim(rs, lam)


@given(small_root_systems(), st.data())
def test_freudenthal_matches_character_oracle(rs, data):
    labels = data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank))
    lam = rs.from_labels(labels)
    assert dict(weight_system(rs, lam).mults) == character_multiplicities(rs, lam)


@given(small_root_systems(), st.data())
def test_multiplicities_are_weyl_invariant(rs, data):
    labels = data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank))
    ws = weight_system(rs, rs.from_labels(labels))
    for lab, m in ws.mults.items():
        assert ws.mult(dominant_conjugate(rs, lab)) == m


@given(small_root_systems(), st.data())
def test_orbit_contains_exactly_one_dominant_weight(rs, data):
    labels = tuple(data.draw(st.lists(st.integers(0, 3), min_size=rs.rank, max_size=rs.rank)))
    orbit = weyl_orbit(rs, labels)
    assert [w for w in orbit if min(w) >= 0] == [labels]


def test_enumerate_dominant_count():
    rs = build_root_system("B", 2)
    assert len(list(enumerate_dominant(rs, 3))) == 16


def test_dimension_cap():
    rs = build_root_system("A", 3)
    with pytest.raises(ResourceError):
        weight_system(rs, rs.from_labels([5, 5, 5]), dim_cap=1000)


def test_non_dominant_rejected():
    rs = build_root_system("A", 2)
    with pytest.raises(ParameterError):
        weight_system(rs, rs.from_labels([1, -1]))


def test_json_lists_labels_and_multiplicities():
    rs = build_root_system("A", 2)
    doc = weight_system(rs, rs.from_labels([1, 1])).to_json()
    assert doc["dim"] == 8
    assert sum(w["mult"] for w in doc["weights"]) == 8
    assert all(isinstance(c, str) for w in doc["weights"] for c in w["coords"])
