import json

import pytest

from soergelcalc.partitions import Partition, box_count, enumerate_box, partition_from_text


class TestPartition:
    def test_trailing_zeros_normalized(self):
        assert Partition((3, 1, 0, 0)) == Partition((3, 1))

    def test_not_decreasing_rejected(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_weight(self):
        assert Partition((3, 3, 1)).weight() == 7
        assert Partition(()).weight() == 0

    def test_padded(self):
        assert Partition((2, 1)).padded(4) == (2, 1, 0, 0)
        with pytest.raises(ValueError):
            Partition((2, 1, 1)).padded(2)


class TestConjugate:
    def test_hand_transpose(self):
        assert Partition((3, 3, 1)).conjugate() == Partition((3, 2, 2))

    def test_empty(self):
        assert Partition(()).conjugate() == Partition(())

    @pytest.mark.parametrize("j", [1, 2, 3, 5])
    def test_column_to_row(self, j):
        assert Partition((1,) * j).conjugate() == Partition((j,))

    def test_involution(self):
        for k in range(1, 5):
            for l in range(1, 5):
                for a in enumerate_box(k, l):
                    assert a.conjugate().conjugate() == a


class TestComplement:
    def test_empty_gives_full_box(self):
        for k, l in [(1, 1), (2, 3), (4, 2)]:
            assert Partition(()).complement(k, l) == Partition((l,) * k)

    def test_hand_example(self):
        assert Partition((3, 1)).complement(2, 3) == Partition((2,))

    def test_outside_box_rejected(self):
        with pytest.raises(ValueError):
            Partition((4,)).complement(2, 3)
        with pytest.raises(ValueError):
            Partition((1, 1, 1)).complement(2, 3)

    def test_involution_and_weight(self):
        for k in range(1, 5):
            for l in range(1, 5):
                for a in enumerate_box(k, l):
                    c = a.complement(k, l)
                    assert c.complement(k, l) == a
                    assert a.weight() + c.weight() == k * l

    def test_conjugate_complement_shape(self):
        # the right-factor index shape: at most l parts, each at most k
        for k in range(1, 5):
            for l in range(1, 5):
                for a in enumerate_box(k, l):
                    t = a.complement(k, l).conjugate()
                    assert t.fits_box(l, k)


class TestEnumerateBox:
    def test_1x1(self):
        assert enumerate_box(1, 1) == [Partition(()), Partition((1,))]

    def test_2x1_order(self):
        assert enumerate_box(2, 1) == [
            Partition(()),
            Partition((1,)),
            Partition((1, 1)),
        ]

    def test_counts(self):
        assert len(enumerate_box(2, 2)) == 6
        for k in range(1, 7):
            for l in range(1, 7):
                assert len(enumerate_box(k, l)) == box_count(k, l)

    def test_order_is_lex_on_padded(self):
        for k, l in [(2, 2), (3, 2)]:
            box = enumerate_box(k, l)
            padded = [a.padded(k) for a in box]
            assert padded == sorted(padded)

    def test_square_box_equals_central_binomial(self):
        from math import comb

        for k in range(1, 5):
            assert len(enumerate_box(k, k)) == comb(2 * k, k)
            assert sum(comb(k, i) ** 2 for i in range(k + 1)) == comb(2 * k, k)

    def test_invalid(self):
        with pytest.raises(ValueError):
            enumerate_box(0, 1)


class TestSerialization:
    def test_text(self):
        assert str(Partition((3, 2, 2))) == "(3,2,2)"
        assert partition_from_text("(3,2,2)") == Partition((3, 2, 2))
        assert partition_from_text("()") == Partition(())

    def test_json(self):
        assert json.loads(Partition((2, 1)).to_json()) == [2, 1]
