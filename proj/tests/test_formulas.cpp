#include <doctest.h>

#include "cactoid/distance.hpp"
#include "cactoid/errors.hpp"
#include "cactoid/formulas.hpp"
#include "cactoid/fuzz.hpp"
#include "cactoid/linalg.hpp"

using cactoid::Bag;
using cactoid::BigInt;
using cactoid::BlockShape;
using cactoid::BlockWeights;
using cactoid::BranchWeights;
using cactoid::Matrix;
using cactoid::Rational;
using cactoid::WeightedBlock;

namespace {

Rational frac(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

WeightedBlock figure_block() {
    return cactoid::canonicalize_block(
        BlockShape{2, {2, 2}},
        BlockWeights{{2, 1}, {BranchWeights{{-1, -1}, -1}, BranchWeights{{2, 1}, 1}}});
}

WeightedBlock unit_block(std::size_t n, std::vector<std::size_t> m) {
    BlockShape shape{n, std::move(m)};
    BlockWeights weights;
    weights.path.assign(shape.path_len, Rational(1));
    for (std::size_t len : shape.branch_lens) {
        weights.branches.push_back(BranchWeights{std::vector<Rational>(len, Rational(1)), 1});
    }
    return cactoid::canonicalize_block(shape, weights);
}

// triangle with path [1], branch [1], closing c; lambda = (1 + 2c) / (2 + c)
WeightedBlock triangle_with_closing(const Rational& closing) {
    return cactoid::canonicalize_block(BlockShape{1, {1}},
                                       BlockWeights{{1}, {BranchWeights{{1}, closing}}});
}

}  // namespace

TEST_CASE("closed-form determinant") {
    CHECK(cactoid::block_det(unit_block(1, {1})) == Rational(9));
    CHECK(cactoid::block_det(unit_block(1, {1, 1})) == Rational(-36));
    CHECK(cactoid::block_det(figure_block()) == Rational(0));
}

TEST_CASE("closed-form cofactor sum") {
    CHECK(cactoid::block_cof(unit_block(1, {1})) == Rational(9));
    CHECK(cactoid::block_cof(unit_block(1, {1, 1})) == Rational(-27));
    CHECK(cactoid::block_cof(figure_block()) == Rational(0));
    // agrees with the elimination oracle
    CHECK(cactoid::block_cof(figure_block()) ==
          cactoid::cofactor_sum(cactoid::block_distance_matrix(figure_block())));
}

TEST_CASE("lambda") {
    CHECK(cactoid::block_lambda(unit_block(1, {1})) == Rational(1));
    CHECK(cactoid::block_lambda(unit_block(1, {1, 1})) == frac(4, 3));
    CHECK_THROWS_AS(cactoid::block_lambda(figure_block()), cactoid::ZeroCycleWeightError);
}

TEST_CASE("alpha and beta on the unit examples") {
    const Matrix alpha1 = cactoid::block_alpha(unit_block(1, {1}));
    const Matrix beta1 = cactoid::block_beta(unit_block(1, {1}));
    CHECK(alpha1 == Matrix::column({frac(1, 3), frac(1, 3), frac(1, 3)}));
    CHECK(beta1 == alpha1);

    const Matrix alpha2 = cactoid::block_alpha(unit_block(1, {1, 1}));
    const Matrix beta2 = cactoid::block_beta(unit_block(1, {1, 1}));
    CHECK(alpha2 == Matrix::column({0, frac(1, 3), frac(1, 3), frac(1, 3)}));
    CHECK(beta2 == Matrix::column({frac(1, 3), 0, frac(1, 3), frac(1, 3)}));
    CHECK_THROWS_AS(cactoid::block_alpha(figure_block()), cactoid::ZeroCycleWeightError);
}

TEST_CASE("alpha and beta sum to one on random blocks") {
    cactoid::FuzzBounds bounds;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto rng = cactoid::case_rng(31, seed);
        const WeightedBlock block = cactoid::random_block(rng, bounds);
        Rational alpha_total;
        Rational beta_total;
        const Matrix alpha = cactoid::block_alpha(block);
        const Matrix beta = cactoid::block_beta(block);
        for (std::size_t i = 0; i < alpha.rows(); ++i) {
            alpha_total += alpha(i, 0);
            beta_total += beta(i, 0);
        }
        CHECK(alpha_total == Rational(1));
        CHECK(beta_total == Rational(1));
    }
}

TEST_CASE("Laplacian-like matrix of unit dC(1;1,1)") {
    const Matrix lap = cactoid::block_laplacian_like(unit_block(1, {1, 1}));
    const Matrix expected{{frac(1, 3), frac(-1, 3), 0, 0},
                          {frac(1, 3), frac(1, 3), frac(-1, 3), frac(-1, 3)},
                          {frac(-1, 3), 0, frac(1, 3), 0},
                          {frac(-1, 3), 0, 0, frac(1, 3)}};
    CHECK(lap == expected);
}

TEST_CASE("single-cycle blocks need no perturbation") {
    // with r = 1 the matrix is the plain weighted Laplacian; nothing moves
    // to the (u_n, u_0) slot
    const Matrix lap = cactoid::block_laplacian_like(unit_block(2, {2}));
    CHECK(lap(2, 0) == Rational(0));  // u_n row, u_0 column: no edge, no shift
    CHECK(lap(2, 2) == frac(1, 5));
}

TEST_CASE("Laplacian-like row and column sums vanish on random blocks") {
    cactoid::FuzzBounds bounds;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto rng = cactoid::case_rng(37, seed);
        const Matrix lap = cactoid::block_laplacian_like(cactoid::random_block(rng, bounds));
        for (std::size_t i = 0; i < lap.rows(); ++i) {
            Rational row_sum;
            Rational col_sum;
            for (std::size_t j = 0; j < lap.cols(); ++j) {
                row_sum += lap(i, j);
                col_sum += lap(j, i);
            }
            CHECK(row_sum.is_zero());
            CHECK(col_sum.is_zero());
        }
    }
}

TEST_CASE("rank-one inverse on the unit examples") {
    for (auto block : {unit_block(1, {1}), unit_block(1, {1, 1}), unit_block(3, {2, 1, 4})}) {
        const Matrix d = cactoid::block_distance_matrix(block);
        const Matrix inv = cactoid::block_inverse(block);
        CHECK(inv * d == Matrix::identity(d.rows()));
        CHECK(inv == cactoid::inverse(d));
    }
    CHECK_THROWS_AS(cactoid::block_inverse(figure_block()), cactoid::ZeroCycleWeightError);
}

TEST_CASE("lambda zero is singular, not zero-cycle") {
    // closing -1/2 gives cycle weight 3/2 but lambda = 0
    const WeightedBlock block = triangle_with_closing(frac(-1, 2));
    CHECK(block.all_cycles_nonzero());
    CHECK(cactoid::block_lambda(block) == Rational(0));
    CHECK(cactoid::block_det(block) == Rational(0));
    CHECK(cactoid::det(cactoid::block_distance_matrix(block)) == Rational(0));
    try {
        cactoid::block_inverse(block);
        FAIL("expected SingularError");
    } catch (const cactoid::SingularError& e) {
        CHECK(e.rank() == 2);
    }
}

TEST_CASE("one zero cycle with a one-edge branch does NOT collapse the determinant") {
    // sorted totals come out (-2, 0, 3): the minimum cycle is fine, the
    // middle one weighs zero but its branch has a single edge, so exactly
    // one term of the bordered elimination survives. Frozen oracle value:
    // Leibniz expansion of the 5x5 gives -72.
    const WeightedBlock block = cactoid::canonicalize_block(
        BlockShape{1, {1, 1, 1}},
        BlockWeights{{1},
                     {BranchWeights{{1}, 1}, BranchWeights{{-3}, 2}, BranchWeights{{-4}, 1}}});
    CHECK(block.summary().cycle_totals == std::vector<Rational>{-2, 0, 3});
    CHECK_FALSE(block.all_cycles_nonzero());
    const Matrix d = cactoid::block_distance_matrix(block);
    CHECK(cactoid::det(d) == Rational(-72));
    CHECK(cactoid::block_det(block) == Rational(-72));
    // the cofactor sum still vanishes with the zero factor
    CHECK(cactoid::block_cof(block) == Rational(0));
    CHECK(cactoid::cofactor_sum(d) == Rational(0));
    // the rank-one machinery is undefined here regardless of invertibility
    try {
        cactoid::block_lambda(block);
        FAIL("expected ZeroCycleWeightError");
    } catch (const cactoid::ZeroCycleWeightError& e) {
        CHECK(e.cycle() == 1);  // canonical index of the offending cycle
    }
    CHECK_THROWS_AS(cactoid::block_inverse(block), cactoid::ZeroCycleWeightError);
}

TEST_CASE("every other zero-weight configuration does collapse the determinant") {
    // zero cycle with a two-edge branch
    const WeightedBlock long_branch = cactoid::canonicalize_block(
        BlockShape{1, {1, 2}},
        BlockWeights{{1}, {BranchWeights{{-4}, 1}, BranchWeights{{-3, 1}, 1}}});
    CHECK(long_branch.summary().cycle_totals == std::vector<Rational>{-2, 0});
    CHECK(cactoid::det(cactoid::block_distance_matrix(long_branch)) == Rational(0));
    CHECK(cactoid::block_det(long_branch) == Rational(0));

    // two zero cycles, both one-edge branches
    const WeightedBlock two_zeros = cactoid::canonicalize_block(
        BlockShape{1, {1, 1, 1}},
        BlockWeights{{1},
                     {BranchWeights{{-4}, 1}, BranchWeights{{-3}, 2}, BranchWeights{{2}, -3}}});
    CHECK(two_zeros.summary().cycle_totals == std::vector<Rational>{-2, 0, 0});
    CHECK(cactoid::det(cactoid::block_distance_matrix(two_zeros)) == Rational(0));
    CHECK(cactoid::block_det(two_zeros) == Rational(0));

    // the zero cycle is the minimum (it spans the common path block)
    const WeightedBlock zero_minimum = cactoid::canonicalize_block(
        BlockShape{1, {1, 1}},
        BlockWeights{{1}, {BranchWeights{{-3}, 2}, BranchWeights{{1}, 1}}});
    CHECK(zero_minimum.summary().cycle_totals == std::vector<Rational>{0, 3});
    CHECK(cactoid::det(cactoid::block_distance_matrix(zero_minimum)) == Rational(0));
    CHECK(cactoid::block_det(zero_minimum) == Rational(0));
}

TEST_CASE("closed forms match the oracles on random blocks") {
    cactoid::FuzzBounds bounds;
    bounds.include_degenerate = true;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto rng = cactoid::case_rng(41, seed);
        const WeightedBlock block = cactoid::random_block(rng, bounds);
        const Matrix d = cactoid::block_distance_matrix(block);
        CHECK(cactoid::block_det(block) == cactoid::det(d));
        CHECK(cactoid::block_cof(block) == cactoid::cofactor_sum(d));
        if (block.all_cycles_nonzero()) {
            CHECK(cactoid::block_lambda(block) * cactoid::block_cof(block) ==
                  cactoid::block_det(block));
        }
    }
}

TEST_CASE("bags from make_block_bag satisfy both condition suites") {
    cactoid::FuzzBounds bounds;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto rng = cactoid::case_rng(43, seed);
        const Bag bag = cactoid::make_block_bag(cactoid::random_block(rng, bounds));
        CHECK(cactoid::verify_left_lapexp(bag).pass());
        CHECK(cactoid::verify_right_lapexp(bag).pass());
    }
}

TEST_CASE("verification reports name the failing condition and entry") {
    Bag bag = cactoid::make_block_bag(unit_block(1, {1, 1}));

    SUBCASE("perturbed alpha breaks the sum condition") {
        bag.alpha(0, 0) += 1;
        const auto report = cactoid::verify_left_lapexp(bag);
        CHECK_FALSE(report.pass());
        CHECK(report.conditions[0].name == "alpha-sums-to-one");
        CHECK_FALSE(report.conditions[0].pass);
        REQUIRE(report.conditions[0].first_mismatch.has_value());
        CHECK(report.conditions[0].first_mismatch->got == Rational(2));
    }

    SUBCASE("zeroed Laplacian-like breaks LD + I") {
        bag.laplacian_like = Matrix(4, 4);
        const auto report = cactoid::verify_left_lapexp(bag);
        CHECK_FALSE(report.pass());
        bool found = false;
        for (const auto& condition : report.conditions) {
            if (condition.name == "LD-plus-I-is-beta-ones") {
                found = true;
                CHECK_FALSE(condition.pass);
                REQUIRE(condition.first_mismatch.has_value());
            }
        }
        CHECK(found);
    }

    SUBCASE("inconsistent dimensions are rejected") {
        bag.alpha = Matrix(3, 1);
        CHECK_THROWS_AS(cactoid::verify_left_lapexp(bag), cactoid::DimensionError);
    }
}

TEST_CASE("determinant is invariant under the input cycle order") {
    // same multiset of cycles in both input orders; the matrices are
    // symmetric permutations of each other
    const WeightedBlock a = cactoid::canonicalize_block(
        BlockShape{1, {2, 1}},
        BlockWeights{{frac(1, 2)}, {BranchWeights{{1, 2}, 1}, BranchWeights{{3}, -1}}});
    const WeightedBlock b = cactoid::canonicalize_block(
        BlockShape{1, {1, 2}},
        BlockWeights{{frac(1, 2)}, {BranchWeights{{3}, -1}, BranchWeights{{1, 2}, 1}}});
    CHECK(cactoid::det(cactoid::block_distance_matrix(a)) ==
          cactoid::det(cactoid::block_distance_matrix(b)));
    CHECK(cactoid::block_det(a) == cactoid::block_det(b));

    // a tie resolved in both orders
    const WeightedBlock t1 = cactoid::canonicalize_block(
        BlockShape{1, {1, 1}}, BlockWeights{{1}, {BranchWeights{{1}, 1}, BranchWeights{{2}, 0}}});
    const WeightedBlock t2 = cactoid::canonicalize_block(
        BlockShape{1, {1, 1}}, BlockWeights{{1}, {BranchWeights{{2}, 0}, BranchWeights{{1}, 1}}});
    CHECK(cactoid::det(cactoid::block_distance_matrix(t1)) ==
          cactoid::det(cactoid::block_distance_matrix(t2)));
}
