import random
from fractions import Fraction

import pytest

from oracles import random_blowup_fan, random_divisor
from troptoric.divisor import canonical_divisor, principal_divisor, ray_divisor, zero_divisor
from troptoric.fan import Cone, Fan, blow_up, hirzebruch, product_p1_p1, projective_plane
from troptoric.intersect import (
    euler_characteristic,
    intersection_matrix,
    pairing,
    ray_intersection,
    rr_check,
    self_intersection,
)


def test_ray_intersection_examples():
    p2 = projective_plane()
    assert ray_intersection(p2, (1, 0), (0, 1)) == 1
    assert ray_intersection(hirzebruch(1), (1, 0), (-1, 1)) == 0
    assert ray_intersection(product_p1_p1(), (1, 0), (-1, 0)) == 0


def test_ray_intersection_errors():
    p2 = projective_plane()
    with pytest.raises(ValueError):
        ray_intersection(p2, (1, 0), (1, 0))
    with pytest.raises(ValueError):
        ray_intersection(Fan((Cone(((1, 0), (0, 1))),)), (1, 0), (0, 1))


def test_self_intersection_examples():
    p2 = projective_plane()
    assert self_intersection(p2, (1, 0)) == 1
    assert self_intersection(hirzebruch(2), (0, 1)) == -2
    b = blow_up(p2, Cone(((1, 0), (0, 1))))
    assert self_intersection(b, (1, 1)) == -1


def test_hirzebruch_self_intersection_pattern():
    for a in range(4):
        f = hirzebruch(a)
        assert [self_intersection(f, r) for r in f.rays] == [0, -a, 0, a]


def test_intersection_matrix_entries():
    m = intersection_matrix(projective_plane())
    assert m.entries == ((1, 1, 1), (1, 1, 1), (1, 1, 1))
    rng = random.Random(71)
    for f in (hirzebruch(2), random_blowup_fan(rng)):
        im = intersection_matrix(f)
        for i, r1 in enumerate(f.rays):
            for j, r2 in enumerate(f.rays):
                assert im.entries[i][j] == im.entries[j][i]
                if i != j:
                    assert im.entries[i][j] in (0, 1)


def test_pairing_examples():
    p2 = projective_plane()
    h = ray_divisor(p2, (-1, -1))
    assert pairing(p2, h, h) == 1
    pp = product_p1_p1()
    f1, f2 = ray_divisor(pp, (1, 0)), ray_divisor(pp, (0, 1))
    assert pairing(pp, f1, f2) == 1
    assert pairing(pp, f1, f1) == 0
    rng = random.Random(73)
    d = random_divisor(rng, p2)
    assert pairing(p2, d, zero_divisor(p2)) == 0


def test_pairing_symmetric_bilinear_invariant():
    rng = random.Random(79)
    for f in (projective_plane(), product_p1_p1(), hirzebruch(3), random_blowup_fan(rng)):
        for _ in range(60):
            d1, d2, d3 = (random_divisor(rng, f) for _ in range(3))
            assert pairing(f, d1, d2) == pairing(f, d2, d1)
            assert pairing(f, d1 + d3, d2) == pairing(f, d1, d2) + pairing(f, d3, d2)
            m = (rng.randint(-3, 3), rng.randint(-3, 3))
            shifted = d1 + principal_divisor(m, f)
            assert pairing(f, shifted, d2) == pairing(f, d1, d2)


def test_row_sums_give_anticanonical_degree():
    p2 = projective_plane()
    im = intersection_matrix(p2)
    for row in im.entries:
        assert sum(row) == 3
    rng = random.Random(83)
    for f in (hirzebruch(1), random_blowup_fan(rng)):
        im = intersection_matrix(f)
        k = canonical_divisor(f)
        for i, ray in enumerate(f.rays):
            assert sum(im.entries[i]) == pairing(f, ray_divisor(f, ray), -1 * k)


def test_parity_of_pairing_term():
    rng = random.Random(89)
    for f in (projective_plane(), hirzebruch(2), random_blowup_fan(rng)):
        k = canonical_divisor(f)
        for _ in range(60):
            d = random_divisor(rng, f)
            assert pairing(f, d, d - k) % 2 == 0


def test_euler_characteristic():
    assert euler_characteristic(projective_plane()) == 1
    assert euler_characteristic(hirzebruch(3)) == 1
    b = blow_up(projective_plane(), Cone(((1, 0), (0, 1))))
    assert euler_characteristic(b) == 1
    with pytest.raises(ValueError):
        euler_characteristic(Fan((Cone(((1, 0), (0, 1))),)))


def test_rr_check_examples():
    p2 = projective_plane()
    h = ray_divisor(p2, (-1, -1))
    r = rr_check(p2, h)
    assert (int(r.h0_D), int(r.h0_K_minus_D)) == (3, 0)
    assert r.rhs == 3 and r.defect == 0 and r.holds
    r0 = rr_check(p2, zero_divisor(p2))
    assert (int(r0.h0_D), int(r0.h0_K_minus_D)) == (1, 0)
    assert r0.defect == 0 and r0.holds
    rk = rr_check(p2, canonical_divisor(p2))
    assert (int(rk.h0_D), int(rk.h0_K_minus_D)) == (0, 1)
    assert rk.defect == 0 and rk.holds


def test_rr_defect_is_exact_rational():
    r = rr_check(projective_plane(), ray_divisor(projective_plane(), (1, 0)))
    assert isinstance(r.defect, Fraction)
    assert r.to_dict()["holds"] is True


def test_rr_requires_complete_smooth():
    with pytest.raises(ValueError):
        rr_check(Fan((Cone(((1, 0), (0, 1))),)), None)
    nonsmooth = Fan(
        (
            Cone(((1, 0), (1, 2))),
            Cone(((1, 2), (-1, 0))),
            Cone(((-1, 0), (0, -1))),
            Cone(((0, -1), (1, 0))),
        )
    )
    with pytest.raises(ValueError):
        rr_check(nonsmooth, zero_divisor(nonsmooth))
