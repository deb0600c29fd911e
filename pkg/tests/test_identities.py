from identity_checks import (check_balanced_4f3_transformation,
                             check_wellpoised_5f4, check_wellpoised_7f6_reduction)


def test_wellpoised_5f4_summation():
    assert check_wellpoised_5f4(60) == 60


def test_balanced_4f3_transformation():
    assert check_balanced_4f3_transformation(60) == 60


def test_wellpoised_7f6_reduction():
    assert check_wellpoised_7f6_reduction(60) == 60
