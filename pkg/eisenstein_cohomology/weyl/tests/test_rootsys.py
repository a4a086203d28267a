from fractions import Fraction
from itertools import permutations, product

import pytest

from eisenstein_cohomology.weyl.exceptions import ConstraintError, DimensionMismatchError, InvalidRankError
from eisenstein_cohomology.weyl.rootsys import (
    RankContext,
    SignedPermutation,
    Weight,
    act,
    dim_nilradical,
    embed_a,
    in_levi_subsystem,
    inv_length,
    is_kostant,
    is_negative_root,
    is_positive_root,
    levi_simple_roots,
    longest_levi,
    positive_roots,
    restrict_a,
    restrict_a_rational,
    restrict_b,
    rho,
    rho_parabolic,
    simple_root,
)
from eisenstein_cohomology.weyl.scalars import HalfInt

H = Fraction(1, 2)


def w_of(images: dict[int, tuple[int, int]]) -> SignedPermutation:
    return SignedPermutation.from_images(images)


def flip(n: int, i: int) -> SignedPermutation:
    signs = tuple(-1 if index == i else 1 for index in range(1, n + 1))
    return SignedPermutation(tuple(range(1, n + 1)), signs)


class TestRankContext:
    def test_levi_rank(self):
        ctx = RankContext(5, 3)
        assert ctx.l == 2
        assert not ctx.is_siegel
        assert RankContext(3, 3).is_siegel

    @pytest.mark.parametrize("n, k", [(0, 1), (3, 0), (3, 4), (-1, 1)])
    def test_invalid(self, n: int, k: int):
        with pytest.raises(InvalidRankError):
            RankContext(n, k)


class TestSignedPermutation:
    def test_compose_and_inverse(self):
        w = SignedPermutation((2, 3, 1), (1, 1, -1))
        assert w.compose(w.inverse()) == SignedPermutation.identity(3)
        assert w.inverse().compose(w) == SignedPermutation.identity(3)

    def test_compose_acts_right_to_left(self):
        u = flip(2, 1)
        v = SignedPermutation((2, 1), (1, 1))
        beta = Weight.of([3, 5])
        assert act(u.compose(v), beta) == act(u, act(v, beta))

    def test_rejects_bad_data(self):
        with pytest.raises(ConstraintError):
            SignedPermutation((1, 1), (1, 1))
        with pytest.raises(ConstraintError):
            SignedPermutation((1, 2), (1, 0))
        with pytest.raises(DimensionMismatchError):
            SignedPermutation((1, 2), (1,))

    def test_rank_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            SignedPermutation.identity(2).compose(SignedPermutation.identity(3))


class TestRoots:
    def test_rank_one(self):
        assert positive_roots(1) == [Weight.of([1])]

    def test_rank_two(self):
        expected = {Weight.of(v) for v in ([1, -1], [1, 1], [1, 0], [0, 1])}
        roots = positive_roots(2)
        assert len(roots) == 4
        assert set(roots) == expected

    @pytest.mark.parametrize("n", range(1, 7))
    def test_count(self, n: int):
        assert len(set(positive_roots(n))) == n * n

    def test_invalid_rank(self):
        with pytest.raises(InvalidRankError):
            positive_roots(0)

    def test_simple_roots(self):
        assert simple_root(3, 1) == Weight.of([1, -1, 0])
        assert simple_root(3, 3) == Weight.of([0, 0, 1])
        with pytest.raises(InvalidRankError):
            simple_root(3, 4)

    def test_signs(self):
        assert is_positive_root(Weight.of([0, 1, 1]))
        assert is_negative_root(Weight.of([0, -1, 0]))
        assert not is_positive_root(Weight.of([1, 1, 1]))

    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, (H,)),
            (2, (3 * H, H)),
            (3, (5 * H, 3 * H, H)),
        ],
    )
    def test_rho(self, n: int, expected: tuple):
        assert rho(n).coords == expected

    @pytest.mark.parametrize("n", range(1, 6))
    def test_rho_is_half_sum(self, n: int):
        assert sum(positive_roots(n), Weight.zero(n)).scale(HalfInt(1)) == rho(n)


class TestAction:
    def test_identity(self):
        assert act(SignedPermutation.identity(3), Weight.of([1, 2, 3])) == Weight.of([1, 2, 3])

    def test_cycle_with_sign(self):
        w = w_of({3: (-1, 1), 1: (1, 2), 2: (1, 3)})
        assert act(w, rho(3)) == Weight.of([-H, 5 * H, 3 * H])

    def test_global_flip(self):
        w = SignedPermutation((1, 2), (-1, -1))
        assert act(w, Weight.of([4, 7])) == Weight.of([-4, -7])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            act(SignedPermutation.identity(2), Weight.zero(3))


class TestLength:
    def test_identity(self):
        assert inv_length(SignedPermutation.identity(4)) == 0

    def test_flip_first(self):
        assert inv_length(flip(3, 1), 3) == 5

    @pytest.mark.parametrize("n", range(1, 6))
    def test_minus_identity(self, n: int):
        assert inv_length(SignedPermutation(tuple(range(1, n + 1)), (-1,) * n)) == n * n

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_symmetric_under_inverse(self, n: int):
        for perm in permutations(range(1, n + 1)):
            for signs in product((1, -1), repeat=n):
                w = SignedPermutation(perm, signs)
                assert inv_length(w) == inv_length(w.inverse())

    def test_rank_argument_checked(self):
        with pytest.raises(DimensionMismatchError):
            inv_length(SignedPermutation.identity(2), 3)


class TestLevi:
    def test_longest_levi_k1(self):
        assert longest_levi(RankContext(3, 1)) == SignedPermutation((1, 2, 3), (1, -1, -1))

    def test_longest_levi_siegel(self):
        assert longest_levi(RankContext(3, 3)) == SignedPermutation((3, 2, 1), (1, 1, 1))
        assert longest_levi(RankContext(2, 2)) == SignedPermutation((2, 1), (1, 1))

    def test_levi_simple_roots_skip_k(self):
        assert sorted(levi_simple_roots(RankContext(4, 2))) == [1, 3, 4]
        assert sorted(levi_simple_roots(RankContext(3, 3))) == [1, 2]

    def test_in_levi_subsystem(self):
        ctx = RankContext(3, 1)
        assert in_levi_subsystem(Weight.of([0, 1, 1]), ctx)
        assert in_levi_subsystem(Weight.of([0, 0, 1]), ctx)
        assert not in_levi_subsystem(Weight.of([1, 0, 0]), ctx)
        assert not in_levi_subsystem(Weight.of([1, -1, 0]), ctx)

    @pytest.mark.parametrize("ctx", [RankContext(3, 1), RankContext(3, 2), RankContext(4, 2), RankContext(3, 3)])
    def test_identity_is_kostant(self, ctx: RankContext):
        assert is_kostant(SignedPermutation.identity(ctx.n), ctx)

    def test_flips(self):
        ctx = RankContext(3, 1)
        assert is_kostant(flip(3, 1), ctx)
        assert not is_kostant(flip(3, 3), ctx)


class TestRestriction:
    def test_restrict_a(self):
        assert restrict_a(Weight.zero(3), RankContext(3, 1)) == HalfInt(0)
        assert restrict_a(Weight.of([5 * H, -3 * H, -H]), RankContext(3, 1)) == HalfInt(5)
        assert restrict_a(Weight.of([1, 1, 0]), RankContext(3, 2)) == HalfInt.from_int(2)

    def test_restrict_b(self):
        assert restrict_b(Weight.of([-3, 1, 1]), RankContext(3, 1)) == Weight.of([0, 1, 1])
        assert restrict_b(Weight.of([1, 1, 0]), RankContext(3, 2)) == Weight.zero(3)

    def test_restrict_b_gl_block_sums_to_zero(self):
        ctx = RankContext(4, 3)
        b = restrict_b(Weight.of([1, 0, 0, 9]), ctx)
        assert sum(b.coords[:3]) == 0
        assert b.coord(4) == 9
        # denominators divide 2k
        assert b.coord(1) == Fraction(2, 3)

    def test_embed_a(self):
        assert embed_a(HalfInt(3), RankContext(3, 3)) == Weight.of([H, H, H])
        assert embed_a(2, RankContext(4, 2)) == Weight.of([1, 1, 0, 0])

    @pytest.mark.parametrize("ctx", [RankContext(n, k) for n in range(1, 5) for k in range(1, n + 1)], ids=str)
    def test_parts_rebuild_the_weight(self, ctx: RankContext):
        for values in product([-3 * H, -1, 0, H, 2], repeat=ctx.n):
            beta = Weight.of(values)
            b_part = restrict_b(beta, ctx)
            assert embed_a(restrict_a_rational(beta, ctx), ctx) + b_part == beta
            assert b_part.coords[ctx.k :] == beta.coords[ctx.k :]

    @pytest.mark.parametrize("n, k, twice", [(3, 1, 5), (3, 3, 9), (1, 1, 1)])
    def test_rho_parabolic(self, n: int, k: int, twice: int):
        assert rho_parabolic(RankContext(n, k)) == HalfInt(twice)

    def test_rho_parabolic_rank_one_matches_restriction(self):
        ctx = RankContext(1, 1)
        assert rho_parabolic(ctx) == restrict_a(rho(1), ctx)

    @pytest.mark.parametrize("n, k, expected", [(3, 1, 5), (3, 2, 7), (3, 3, 6), (4, 2, 11)])
    def test_dim_nilradical(self, n: int, k: int, expected: int):
        ctx = RankContext(n, k)
        assert dim_nilradical(ctx) == expected
        levi_count = sum(1 for gamma in positive_roots(n) if in_levi_subsystem(gamma, ctx))
        assert dim_nilradical(ctx) == n * n - levi_count

    def test_weight_rank_checked(self):
        with pytest.raises(DimensionMismatchError):
            restrict_a(Weight.zero(2), RankContext(3, 1))
        with pytest.raises(DimensionMismatchError):
            Weight.zero(2) + Weight.zero(3)
