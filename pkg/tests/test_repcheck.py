"""Hook-length degrees, valuations, the prime-to-p criterion, witnesses."""

import pytest

from conftest import all_partitions_upto
from pwelter import board, repcheck
from pwelter.board import Partition
from pwelter.errors import CapExceeded
from pwelter.padic import ordp


class TestDegreeExact:
    def test_single_row_is_trivial(self):
        for n in range(8):
            assert repcheck.degree_exact(Partition([n] if n else [])) == 1

    def test_examples(self):
        assert repcheck.degree_exact(Partition([3, 3])) == 5
        assert repcheck.degree_exact(Partition([2, 1])) == 2

    def test_cap(self):
        with pytest.raises(CapExceeded):
            repcheck.degree_exact(Partition([50]), cap=40)

    def test_degrees_square_sum(self):
        # Sum of squared degrees over all diagrams of n is n!.
        from math import factorial

        for n in range(9):
            total = sum(repcheck.degree_exact(lam) ** 2 for lam in board.partitions_of(n))
            assert total == factorial(n)


class TestDegreeValuation:
    def test_examples(self):
        assert repcheck.degree_valuation(Partition([3, 3]), 2) == 0
        assert repcheck.degree_valuation(Partition([2, 2]), 2) == 1
        assert repcheck.degree_valuation(Partition([2, 1]), 3) == 0

    def test_requires_prime(self):
        with pytest.raises(ValueError):
            repcheck.degree_valuation(Partition([2, 1]), 4)
        with pytest.raises(ValueError):
            repcheck.degree_valuation(Partition([2, 1]), 1)

    def test_matches_exact_degree(self):
        for lam in all_partitions_upto(10):
            degree = repcheck.degree_exact(lam)
            for p in (2, 3, 5):
                expected = 0 if degree == 0 else ordp(degree, p)
                assert repcheck.degree_valuation(lam, p) == expected

    def test_degree_info(self):
        info = repcheck.degree_info(Partition([3, 3]), 2)
        assert info.degree == 5 and info.valuation == 0
        big = repcheck.degree_info(Partition([30, 20]), 2, cap=10)
        assert big.degree is None and big.valuation >= 0


class TestMacdonald:
    def test_examples(self):
        assert repcheck.macdonald_prime_to_p(Partition([3, 3]), 2)
        assert not repcheck.macdonald_prime_to_p(Partition([2, 2]), 2)
        assert repcheck.macdonald_prime_to_p(Partition([2, 1]), 3)

    def test_requires_prime(self):
        with pytest.raises(ValueError):
            repcheck.macdonald_prime_to_p(Partition([2, 1]), 6)

    def test_equivalence_small(self):
        for lam in all_partitions_upto(10):
            for p in (2, 3, 5):
                assert repcheck.macdonald_prime_to_p(lam, p) == (
                    repcheck.degree_valuation(lam, p) == 0
                )


class TestWitness:
    def test_examples(self):
        assert repcheck.corollary_witness(Partition([3, 3]), 2) == Partition([3, 3])
        assert repcheck.corollary_witness(Partition([2, 1]), 2) == Partition([1])
        assert repcheck.corollary_witness(Partition([2, 2]), 2) == Partition([])

    def test_witness_properties(self):
        from pwelter import grundy

        for lam in all_partitions_upto(8):
            for p in (2, 3):
                mu = repcheck.corollary_witness(lam, p)
                X = board.position_of(lam, max(len(lam), 1) if lam else 0)
                assert mu.size == grundy.sg_tower(X, p).value
                assert repcheck.degree_valuation(mu, p) == 0
                assert len(mu) <= len(lam) or not lam
                assert all(mu.parts[i] <= lam.parts[i] for i in range(len(mu)))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            repcheck.corollary_witness(Partition([30]), 2, cap=10)


class TestBranching:
    def test_degree_splits_over_corner_removals(self):
        for lam in all_partitions_upto(8):
            if lam.size == 0:
                continue
            total = sum(
                repcheck.degree_exact(mu) for mu in board.corner_removals(lam)
            )
            assert repcheck.degree_exact(lam) == total


class TestReports:
    def test_verify_macdonald(self):
        assert repcheck.verify_macdonald(10, 2).passed
        assert repcheck.verify_macdonald(8, 3).passed

    def test_verify_corollary(self):
        report = repcheck.verify_corollary(8, 2)
        assert report.passed
        assert report.checked > 0
