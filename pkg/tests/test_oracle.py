import pytest

from congrlat.congruence import LinearCongruence
from congrlat.errors import CapacityError, UsageError
from congrlat.oracle import brute_force, brute_force_system
from congrlat.system import CongruenceSystem


def test_example_3_by_hand():
    report = brute_force(LinearCongruence((2, 3), 2, 5))
    expected = {(1, 0), (2, 1), (3, 2), (4, 3), (0, 4)}
    for x, y in expected:
        assert (2 * x + 3 * y - 2) % 5 == 0
    assert report.set.as_set() == expected
    assert report.search_space == 25


def test_empty():
    assert len(brute_force(LinearCongruence((2,), 3, 4)).set) == 0


def test_example_1_count():
    report = brute_force(LinearCongruence((2, 7, -6), -3, 4))
    assert len(report.set) == 16
    assert report.search_space == 64
    assert report.elapsed >= 0


def test_negative_modulus():
    assert brute_force(LinearCongruence((1,), 2, -3)).set.vectors == ((2,),)


def test_zero_modulus_rejected():
    with pytest.raises(UsageError):
        brute_force(LinearCongruence((1,), 2, 0))


def test_safety_bound():
    with pytest.raises(CapacityError) as info:
        brute_force(LinearCongruence((1, 1, 1), 0, 10), bound=999)
    assert info.value.count == 1000


def test_system_worked_example():
    sys_ = CongruenceSystem(
        ("x", "y", "z"),
        (LinearCongruence((1, 1, 1), 0, 2), LinearCongruence((0, -1, 1), 1, 3)),
    )
    report = brute_force_system(sys_)
    assert len(report.set) == 36
    assert report.search_space == 216
    assert report.set.modulus == 6


def test_system_inconsistent():
    sys_ = CongruenceSystem(("x",), (LinearCongruence((1,), 0, 2), LinearCongruence((1,), 1, 2)))
    assert len(brute_force_system(sys_).set) == 0


def test_system_crt():
    sys_ = CongruenceSystem(("x",), (LinearCongruence((1,), 2, 3), LinearCongruence((1,), 3, 5)))
    report = brute_force_system(sys_)
    assert report.set.vectors == ((8,),)
    assert report.set.modulus == 15


def test_deterministic():
    c = LinearCongruence((3, 5), 1, 7)
    assert brute_force(c).set == brute_force(c).set
