#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slhilb/tangent.hpp"

#include <algorithm>

using namespace slhilb;

namespace {

Mat span_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Mat m(static_cast<Index>(rows.size()), 6);
    Index r = 0;
    for (const auto& row : rows) {
        Index c = 0;
        for (int v : row) m(r, c++) = Rational(v);
        ++r;
    }
    return m;
}

// Unknown order: alpha/beta per pair in pair order, gamma last.
constexpr Index kAlpha1 = 0, kBeta1 = 1, kAlpha2 = 2, kBeta2 = 3;

}  // namespace

TEST_CASE("canonical problem validates and solves to dimension six") {
    auto p = canonical_hom_problem();
    CHECK(p.pairs.size() == 4);
    CHECK(p.relations.size() == 3);

    auto sol = solve_equivariant_hom(p);
    CHECK(sol.dimension == 6);
    CHECK(sol.unknown_names.size() == 9);
    CHECK(sol.basis.rows() == 9);
    CHECK(sol.basis.cols() == 6);

    // The relations couple the first two pairs: alpha1 = beta2 = 0 and
    // beta1 = -alpha2 on the whole solution space.
    for (Index k = 0; k < sol.dimension; ++k) {
        CHECK(is_zero(sol.basis(kAlpha1, k)));
        CHECK(is_zero(sol.basis(kBeta2, k)));
        CHECK(sol.basis(kBeta1, k) == -sol.basis(kAlpha2, k));
    }

    // Block pattern 1 + 2 + 2 + 1.
    REQUIRE(sol.block_dimensions.size() == 4);
    CHECK(sol.block_dimensions.at("x11+x12") == 1);
    CHECK(sol.block_dimensions.at("x13") == 2);
    CHECK(sol.block_dimensions.at("x16") == 2);
    CHECK(sol.block_dimensions.at("z") == 1);
}

TEST_CASE("solution basis spans exactly the expected kernel") {
    auto p = canonical_hom_problem();
    auto sol = solve_equivariant_hom(p);

    // Independent oracle: expanding the first relation by hand gives
    //   alpha1 a^2 + (beta1 + alpha2) ab + beta2 b^2 = 0,
    // the second and third give the same three constraints, so the kernel
    // is { alpha1 = 0, beta2 = 0, beta1 + alpha2 = 0 } of dimension 6.
    Mat expected = Mat::Zero(3, 9);
    expected(0, kAlpha1) = Rational(1);
    expected(1, kBeta2) = Rational(1);
    expected(2, kBeta1) = Rational(1);
    expected(2, kAlpha2) = Rational(1);
    Mat oracle = kernel_basis(expected);
    CHECK(oracle.cols() == 6);
    CHECK(row_space_equal(sol.basis.transpose(), oracle.transpose()));
}

TEST_CASE("assignments kill relations and commute with both derivations") {
    auto p = canonical_hom_problem();
    auto sol = solve_equivariant_hom(p);
    RewriteSystem quad(p.quotient_ring);
    quad.set_quadric_from_generator(p.quadric);

    REQUIRE(sol.assignments.size() == 6);
    for (const auto& asg : sol.assignments) {
        for (const auto& rel : p.relations) {
            SparsePoly value(p.quotient_ring);
            for (const auto& [name, coeff] : rel) value += coeff * asg.images.at(name);
            CHECK(quad.normal_form(value).is_zero());
        }
        for (const auto& [plus, minus] : p.pairs) {
            // phi(E x1) = E phi(x1) and phi(F x2) = F phi(x2).
            CHECK(apply_E(asg.images.at(plus)) == asg.images.at(minus));
            CHECK(apply_F(asg.images.at(minus)) == asg.images.at(plus));
            CHECK(apply_F(asg.images.at(plus)).is_zero());
            CHECK(apply_E(asg.images.at(minus)).is_zero());
        }
        const SparsePoly& z_image = asg.images.at(p.invariant_name);
        CHECK(z_image.degree() <= 0);
        CHECK(apply_E(z_image).is_zero());
        CHECK(apply_F(z_image).is_zero());
    }

    // The images realise every slot: some assignment moves each free block.
    bool z_moves = false, pair3_moves = false;
    for (const auto& asg : sol.assignments) {
        if (!asg.images.at("z").is_zero()) z_moves = true;
        if (!asg.images.at("x13").is_zero()) pair3_moves = true;
    }
    CHECK(z_moves);
    CHECK(pair3_moves);
}

TEST_CASE("relations of the canonical problem are derivation-linked") {
    auto p = canonical_hom_problem();
    // E rel1 = rel2, E rel2 = 2 rel3, E rel3 = 0; F mirrors them.
    auto e1 = detail::relation_apply_E(p, p.relations[0]);
    CHECK(e1 == p.relations[1]);
    auto e2 = detail::relation_apply_E(p, p.relations[1]);
    Relation two_rel3;
    for (const auto& [name, coeff] : p.relations[2]) two_rel3[name] = Rational(2) * coeff;
    CHECK(e2 == two_rel3);
    CHECK(detail::relation_apply_E(p, p.relations[2]).empty());

    auto f3 = detail::relation_apply_F(p, p.relations[2]);
    CHECK(f3 == p.relations[1]);
    auto f2 = detail::relation_apply_F(p, p.relations[1]);
    Relation two_rel1;
    for (const auto& [name, coeff] : p.relations[0]) two_rel1[name] = Rational(2) * coeff;
    CHECK(f2 == two_rel1);
    CHECK(detail::relation_apply_F(p, p.relations[0]).empty());
}

TEST_CASE("fabricated relations are rejected at validation") {
    auto v = [](const RingPtr& r, const char* n) { return SparsePoly::variable(r, n); };

    SUBCASE("weight-inhomogeneous relation") {
        auto p = canonical_hom_problem();
        p.relations.push_back(Relation{{"x13", v(p.quotient_ring, "a")},
                                       {"x23", v(p.quotient_ring, "b")}});
        CHECK_THROWS_AS(validate_hom_problem(p), std::invalid_argument);
        CHECK_THROWS_AS(solve_equivariant_hom(p), std::invalid_argument);
    }

    SUBCASE("weight-homogeneous but not derivation-stable") {
        auto p = canonical_hom_problem();
        p.relations.push_back(Relation{{"x13", v(p.quotient_ring, "a")}});
        CHECK_THROWS_AS(validate_hom_problem(p), std::invalid_argument);
    }

    SUBCASE("unknown generator name") {
        auto p = canonical_hom_problem();
        p.relations.push_back(Relation{{"x99", v(p.quotient_ring, "a")}});
        CHECK_THROWS_AS(validate_hom_problem(p), std::invalid_argument);
    }

    SUBCASE("non-invariant quadric") {
        auto p = canonical_hom_problem();
        p.quadric = v(p.quotient_ring, "a") * v(p.quotient_ring, "d");
        CHECK_THROWS_AS(validate_hom_problem(p), std::invalid_argument);
    }

    SUBCASE("quadric of the wrong weight") {
        auto p = canonical_hom_problem();
        p.quadric = v(p.quotient_ring, "a") * v(p.quotient_ring, "b");
        CHECK_THROWS_AS(validate_hom_problem(p), std::invalid_argument);
    }

    SUBCASE("quotient ring without paired weights") {
        auto p = canonical_hom_problem();
        p.quotient_ring = ring_x26();
        CHECK_THROWS_AS(validate_hom_problem(p), std::invalid_argument);
    }
}

TEST_CASE("problem built from the standard subscheme ideal matches the canonical one") {
    Mat w = span_rows({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
    auto ideal = subscheme_ideal(Mat::Zero(6, 6), w);
    auto p = hom_problem_from_ideal(ideal);

    REQUIRE(p.pairs.size() == 4);
    CHECK(p.pairs[0] == std::make_pair(std::string("x11"), std::string("x21")));
    CHECK(p.pairs[1] == std::make_pair(std::string("x12"), std::string("x22")));
    CHECK(p.pairs[2] == std::make_pair(std::string("x13"), std::string("x23")));
    CHECK(p.pairs[3] == std::make_pair(std::string("x16"), std::string("x26")));
    CHECK(p.quotient_ring->names ==
          std::vector<std::string>{"x14", "x15", "x24", "x25"});
    CHECK(p.quadric.to_string() == "x14*x25 - x15*x24");
    CHECK(p.relations.size() == 3);

    auto sol = solve_equivariant_hom(p);
    CHECK(sol.dimension == 6);
    CHECK(sol.block_dimensions.at("x11+x12") == 1);
    CHECK(sol.block_dimensions.at("x13") == 2);
    CHECK(sol.block_dimensions.at("x16") == 2);
    CHECK(sol.block_dimensions.at("z") == 1);
}

TEST_CASE("tangent dimension is constant along translated subschemes") {
    RationalSampler sampler(50);
    Mat w0 = span_rows({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
    for (int trial = 0; trial < 5; ++trial) {
        auto g = sample_so6(sampler);
        Mat w = w0 * g.g;
        auto ideal = subscheme_ideal(Mat::Zero(6, 6), w);
        auto p = hom_problem_from_ideal(ideal);
        auto sol = solve_equivariant_hom(p);
        CHECK(sol.dimension == 6);

        // Which pairs couple depends on the coordinates, but the blocks are
        // independent subsystems, so their contributions add up to the full
        // dimension, and the invariant generator always moves freely.
        Index total = 0;
        for (const auto& [label, d] : sol.block_dimensions) total += d;
        CHECK(total == 6);
        CHECK(sol.block_dimensions.at(p.invariant_name) == 1);
    }
}

TEST_CASE("another coordinate plane gives the same tangent dimension") {
    Mat w = span_rows({{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}});
    auto ideal = subscheme_ideal(Mat::Zero(6, 6), w);
    auto p = hom_problem_from_ideal(ideal);
    CHECK(p.quotient_ring->names ==
          std::vector<std::string>{"x11", "x12", "x21", "x22"});
    CHECK(p.quadric.to_string() == "x11*x22 - x12*x21");
    auto sol = solve_equivariant_hom(p);
    CHECK(sol.dimension == 6);
}

TEST_CASE("target spaces of the quotient are certified") {
    auto p = canonical_hom_problem();
    auto rep = target_spaces(p, 6);
    CHECK(rep.ok());
    CHECK(rep.v1_multiplicity == 2);
    CHECK(rep.violations.empty());
    // The quotient contains the irreducible of highest weight n exactly
    // once in degree n and nowhere else.
    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d <= 6; ++d) CHECK(rep.table.at(d, n) == (d == n ? n + 1 : 0));
}

TEST_CASE("removing the quadric is flagged by the target space report") {
    auto p = canonical_hom_problem();
    p.quadric = SparsePoly(p.quotient_ring);  // drop the defining equation
    auto rep = target_spaces(p, 4);
    CHECK_FALSE(rep.ok());
    // The free ring has an extra invariant in degree 2 (the would-be
    // quadric), which the report must list.
    bool flagged = false;
    for (const auto& msg : rep.violations)
        if (msg.find("degree 2") != std::string::npos) flagged = true;
    CHECK(flagged);
    CHECK(rep.table.at(0, 2) == 1);
}

TEST_CASE("orbit dimension through the base point is six") {
    CHECK(commutator_rank(A0()) == 6);
    CHECK(commutator_rank(Mat::Zero(6, 6)) == 0);
    CHECK_THROWS_AS(commutator_rank(Mat::Zero(2, 3)), std::invalid_argument);

    // The orbit dimension is invariant under conjugation by the group.
    RationalSampler sampler(51);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = sample_so6(sampler);
        Mat conj = so6_inverse(g.g) * A0() * g.g;
        CHECK(commutator_rank(conj) == 6);
    }
}

TEST_CASE("rank-one parametrisation cross-check agrees") {
    CHECK(rank_one_parametrization_rank() == 6);
}

TEST_CASE("smoothness report certifies equality of all three counts") {
    auto rep = smoothness_report();
    CHECK(rep.tangent_dimension == 6);
    CHECK(rep.orbit_dimension == 6);
    CHECK(rep.parametrization_rank == 6);
    CHECK(rep.smooth);
}
