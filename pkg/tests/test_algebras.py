"""Preset data: matrix entries, monomial tables, deformed Cartan verification."""

import pytest

from wqalg import build_preset, verify_cartan
from wqalg.algebras import symmetrized_cartan
from wqalg.exactfield import RationalFunction, sym_minus, sym_plus
from wqalg.genexpr import YMonomial


def rf(num, den=None):
    return RationalFunction(num, den) if den is not None else RationalFunction(num)


def test_g2_m12_entry(g2):
    assert g2.M.rows[0][1] == rf(sym_minus(3) * sym_plus(2), sym_plus(6))
    assert g2.M.rows[0][1] == g2.M.rows[1][0]


def test_e6_m33_entry(e6):
    assert e6.M.rows[2][2] == rf(sym_minus(3) * sym_plus(1) * sym_plus(2), sym_plus(6))


def test_d5_fork_entry(d5):
    # entry (n, n-1) for n = 5
    assert d5.M.rows[4][3] == rf(sym_minus(3), sym_plus(1) * sym_plus(4))


def test_e6_mtilde_entry_3_6(e6):
    assert e6.expected_mtilde.rows[2][5] == rf(-sym_minus(1))


def test_g2_lambda5(g2):
    assert g2.lambdas[4] == YMonomial.from_factors([(1, -6, -1), (1, -8, -1), (2, -5, 1)])


def test_dn_lambda_boundaries(d4, d5):
    for preset in (d4, d5):
        n = preset.n
        assert preset.lambdas[0] == YMonomial.from_factors([(1, 0, 1)])
        assert preset.lambdas[2 * n - 1] == YMonomial.from_factors([(1, -2 * n + 2, -1)])


def test_fundamental_dims(g2, e6, d4, d5):
    assert g2.fundamental_dim == len(g2.lambdas) == 7
    assert e6.fundamental_dim == len(e6.lambdas) == 27
    assert d4.fundamental_dim == len(d4.lambdas) == 8
    assert d5.fundamental_dim == len(d5.lambdas) == 10


def test_lambdas_pairwise_distinct(g2, e6, d4, d5):
    for preset in (g2, e6, d4, d5):
        assert len(set(preset.lambdas)) == preset.fundamental_dim


def test_d_matrix_structure(g2, e6, d5):
    # diagonal entries are t^d - t^-d with d = 1 except the long g2 node
    for preset, ds in [(g2, [1, 3]), (e6, [1] * 6), (d5, [1] * 5)]:
        for i, d in enumerate(ds):
            assert preset.D.rows[i][i] == rf(sym_minus(d))
            for j in range(preset.rank):
                if j != i:
                    assert preset.D.rows[i][j].is_zero


def test_build_preset_rejects_bad_input():
    with pytest.raises(ValueError):
        build_preset("dn", 3)
    with pytest.raises(ValueError):
        build_preset("dn")
    with pytest.raises(ValueError):
        build_preset("e6", 6)
    with pytest.raises(ValueError):
        build_preset("f4")


def test_verify_cartan_g2_and_limit(g2):
    out = verify_cartan(g2)
    assert out.passed, out.failure
    assert symmetrized_cartan(g2) == [[2, -3], [-3, 6]]


def test_verify_cartan_e6(e6):
    assert verify_cartan(e6).passed


@pytest.mark.parametrize("n", range(4, 11))
def test_verify_cartan_dn_and_limit(n):
    preset = build_preset("dn", n)
    out = verify_cartan(preset)
    assert out.passed, out.failure
    expected = symmetrized_cartan(preset)
    assert all(expected[i][i] == 2 for i in range(n))
    assert expected[n - 3][n - 2] == expected[n - 3][n - 1] == -1
    assert expected[n - 2][n - 1] == 0


def test_verify_cartan_reports_first_mismatch(g2):
    import dataclasses
    from wqalg.rflinalg import FieldMatrix
    wrong = [list(r) for r in g2.expected_mtilde.rows]
    wrong[0][1] = RationalFunction(sym_minus(1))
    corrupted = dataclasses.replace(g2, expected_mtilde=FieldMatrix(wrong))
    out = verify_cartan(corrupted)
    assert not out.passed
    assert "(1,2)" in out.failure


def test_matrix_oddness_and_symmetry(g2, e6, d4, d5):
    for preset in (g2, e6, d4, d5):
        assert preset.M == preset.M.transpose()
        assert preset.expected_mtilde == preset.expected_mtilde.transpose()
        for mat in (preset.M, preset.D, preset.expected_mtilde):
            for row in mat.rows:
                for entry in row:
                    assert entry.invert_var() == -entry
