import pytest

from torusfan import fixtures as fx
from torusfan.multifan import chamber_counts_2d, validate
from torusfan.quasitoric import (
    NOT_REALIZABLE,
    TORIC,
    CharacteristicPair,
    face_subgroup,
    fixed_point_count,
    to_multifan,
    toricity_report,
    validate_dj,
)

SQUARE = CharacteristicPair.build({1: (1, 0), 2: (0, 1), 3: (-1, 0), 4: (0, -1)}, fx.cycle(4).facets)
SQUARE_DET2 = CharacteristicPair.build({1: (1, 0), 2: (1, 2), 3: (-1, 0), 4: (0, -1)}, fx.cycle(4).facets)
TRIANGLE = CharacteristicPair.from_multifan(fx.projective_plane())
HIRZEBRUCH = CharacteristicPair.from_multifan(fx.hirzebruch(2))
WRAP = CharacteristicPair.from_multifan(fx.double_wrap())


def test_validate_dj():
    assert validate_dj(SQUARE)
    assert not validate_dj(SQUARE_DET2)
    assert validate_dj(TRIANGLE)


def test_pair_invariants_enforced():
    with pytest.raises(ValueError, match="homology"):
        CharacteristicPair.build({1: (1, 0), 2: (0, 1), 3: (-1, 0)}, [{1, 2}, {2, 3}])
    with pytest.raises(ValueError, match="connected"):
        CharacteristicPair.build({k: (1, 0) for k in range(1, 7)}, fx.two_triangles().facets)
    with pytest.raises(ValueError, match="primitive"):
        CharacteristicPair.build({1: (2, 0), 2: (0, 1), 3: (-1, -1)}, fx.cycle(3).facets)


def test_to_multifan():
    f = to_multifan(SQUARE)
    assert f == fx.hirzebruch(0)
    assert to_multifan(TRIANGLE) == fx.projective_plane()
    assert to_multifan(HIRZEBRUCH) == fx.hirzebruch(2)
    with pytest.raises(ValueError):
        to_multifan(SQUARE_DET2)


def test_face_subgroups_and_fixed_points():
    assert face_subgroup(SQUARE, {1, 2}).generators == ((1, 0), (0, 1))
    assert face_subgroup(SQUARE, set()).generators == ()
    assert fixed_point_count(SQUARE) == 4
    with pytest.raises(ValueError):
        face_subgroup(SQUARE, {1, 3})


def test_toricity_reports():
    r = toricity_report(SQUARE)
    assert r.verdict == TORIC and r.report.todd == 1
    assert toricity_report(TRIANGLE).verdict == TORIC
    r = toricity_report(WRAP)
    assert r.verdict == NOT_REALIZABLE and r.report.todd == 2


@pytest.mark.parametrize("name", sorted(fx.toric_corpus()))
def test_toric_fixtures_give_toric_pairs(name):
    p = CharacteristicPair.from_multifan(fx.toric_corpus()[name])
    assert validate_dj(p)
    assert validate(to_multifan(p)) == []
    r = toricity_report(p, 16)
    assert r.verdict == TORIC and r.report.todd == 1
    assert fixed_point_count(p) == len(p.dual_complex.facets)
    if p.dim == 2:
        chambers = chamber_counts_2d(to_multifan(p))
        assert sum(c.count for c in chambers) == fixed_point_count(p)
