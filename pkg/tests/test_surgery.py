from fractions import Fraction

import pytest

from contactsurg.closedforms import (
    tb1_negative_matrix,
    tb1_positive_matrix,
    tb2_negative_matrix,
    tb2_positive_matrix,
    tbk_negative_matrix,
    tbk_positive_matrix,
    tbk_two_matrix,
)
from contactsurg.cosmetic import rot_range
from contactsurg.surgery import (
    ContactZeroError,
    KnotMetadata,
    LegendrianData,
    convert,
    enumerate_rotations,
    linking_matrix,
    smooth_recovery,
    unknot_rot_range,
)


def matrix_of(tb, rot, smooth):
    pres = convert(LegendrianData(tb, rot), Fraction(smooth) - tb)[0]
    return [list(r) for r in linking_matrix(pres).Q]


class TestLegendrianData:
    def test_parity_enforced(self):
        LegendrianData(-2, 1)
        with pytest.raises(ValueError):
            LegendrianData(-2, 0)

    def test_tau_bound(self):
        LegendrianData(-1, 0, KnotMetadata(tau=0))
        with pytest.raises(ValueError):
            LegendrianData(-1, 2, KnotMetadata(tau=0))


class TestConvert:
    def test_contact_zero_rejected(self):
        with pytest.raises(ContactZeroError):
            convert(LegendrianData(-1, 0), 0)

    def test_half_surgery_is_two_pushoffs(self):
        # smooth -1/2 on tb = -1 is contact 1/2: two (+1) push-offs
        pres = convert(LegendrianData(-1, 0), Fraction(1, 2))
        assert len(pres) == 1
        comps = pres[0].components
        assert [c.sign for c in comps] == [1, 1]
        assert [c.role for c in comps] == ["pushoff", "pushoff"]

    def test_single_negative_surgery(self):
        # smooth -1 on tb = -2 is contact (+1): one push-off
        pres = convert(LegendrianData(-2, 1), 1)
        assert len(pres) == 1
        assert [c.framing for c in pres[0].components] == [-1]
        assert pres[0].l == 1

    def test_positive_one_over_n_pushoff_pair(self):
        # smooth +1/n on tb = -1: push-off pair, second with n stabilizations
        for n in range(1, 7):
            pres_list = convert(LegendrianData(-1, 0), Fraction(n + 1, n))
            assert len(pres_list) == n + 1  # one per stabilization outcome
            for pres in pres_list:
                comps = pres.components
                assert len(comps) == 2
                assert comps[0].sign == 1 and comps[1].sign == -1
                assert comps[1].stabilizations == n
                assert comps[1].framing == -2 - n

    def test_stabilization_rotations(self):
        pres_list = convert(LegendrianData(-1, 0), Fraction(3, 2))
        rots = sorted(p.components[1].rot for p in pres_list)
        assert rots == [-2, 0, 2]

    def test_chain_tb_values(self):
        # smooth -1/n on tb = -2: framings -1, -5, then a -2 chain
        pres = convert(LegendrianData(-2, 1), Fraction(-1, 4) + 2)[0]
        assert [c.framing for c in pres.components] == [-1, -5, -2, -2]
        assert [c.tb for c in pres.components] == [-2, -4, -1, -1]


class TestLinkingMatrix:
    def test_displayed_matrices(self):
        assert matrix_of(-1, 0, Fraction(-1, 2)) == [[0, -1], [-1, 0]]
        assert matrix_of(-2, 1, 1) == [[-1, -2, 0], [-2, -4, -1], [0, -1, -2]]
        assert matrix_of(-3, 0, 2) == [
            [-2, -3, 0, 0, 0],
            [-3, -5, -1, 0, 0],
            [0, -1, -2, -1, 0],
            [0, 0, -1, -2, -1],
            [0, 0, 0, -1, -2],
        ]

    def test_families_match_the_direct_constructors(self):
        for n in range(2, 8):
            assert matrix_of(-1, 0, Fraction(-1, n)) == tb1_negative_matrix(n)
            assert matrix_of(-1, 0, Fraction(1, n)) == tb1_positive_matrix(n)
        for n in range(1, 8):
            assert matrix_of(-2, 1, Fraction(-1, n)) == tb2_negative_matrix(n)
            assert matrix_of(-2, 1, Fraction(1, n)) == tb2_positive_matrix(n)
        for k in range(3, 9):
            rot = (k - 1) % 2
            for n in range(1, 6):
                assert matrix_of(-k, rot, Fraction(-1, n)) == tbk_negative_matrix(k, n)
                assert matrix_of(-k, rot, Fraction(1, n)) == tbk_positive_matrix(k, n)
            assert matrix_of(-k, rot, -2) == tbk_two_matrix(k, -1)
            assert matrix_of(-k, rot, 2) == tbk_two_matrix(k, 1)

    def test_pushoff_linking_is_base_tb(self):
        pres = convert(LegendrianData(-1, 0), Fraction(2, 5))[0]  # three pushoffs
        q = linking_matrix(pres).Q
        assert q[0][1] == q[0][2] == q[1][2] == -1


class TestSmoothRecovery:
    def test_recovery_sweep(self):
        count = 0
        for tb in range(-6, 0):
            for rot in rot_range(tb):
                L = LegendrianData(tb, rot)
                for num in range(-6, 7):
                    for den in range(1, 5):
                        cc = Fraction(num, den)
                        if cc == 0:
                            continue
                        for pres in convert(L, cc):
                            assert smooth_recovery(pres) == tb + cc
                            count += 1
        assert count > 1000


class TestRotations:
    def test_unknot_rot_range(self):
        assert unknot_rot_range(-1) == [0]
        assert unknot_rot_range(-3) == [2, 0, -2]
        with pytest.raises(ValueError):
            unknot_rot_range(0)

    def test_half_surgery_single_vector(self):
        pres = convert(LegendrianData(-1, 0), Fraction(1, 2))[0]
        assert enumerate_rotations(pres) == [(0, 0)]

    def test_tb2_positive_vectors(self):
        # vectors (i, i +- 1, s): the middle entry 2i occurs only with
        # matching sign, automatically
        for pres in convert(LegendrianData(-2, 1), Fraction(5, 2)):  # smooth 1/2
            for vec in enumerate_rotations(pres):
                assert vec[0] == 1
                assert vec[1] in (0, 2)
                assert vec[2] in (1, -1)

    def test_vector_count_is_product_of_chain_choices(self):
        pres_list = convert(LegendrianData(-3, 0), Fraction(1, 3) + 3)
        for pres in pres_list:
            expected = 1
            for c in pres.components:
                if c.rot is None:
                    expected *= -c.tb
            assert len(enumerate_rotations(pres)) == expected

    def test_chain_rotation_bounds(self):
        for pres in convert(LegendrianData(-4, 1), Fraction(1, 5) + 4):
            for vec in enumerate_rotations(pres):
                for c, r in zip(pres.components, vec):
                    if c.role == "chain":
                        assert abs(r) <= -c.tb - 1
                        assert (r - c.tb - 1) % 2 == 0
