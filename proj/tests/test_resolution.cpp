#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slhilb/resolution.hpp"

using namespace slhilb;

namespace {

Mat span_rows(std::initializer_list<int> cols) {
    Mat w = Mat::Zero(static_cast<Index>(cols.size()), 6);
    Index r = 0;
    for (int c : cols) w(r++, c - 1) = 1;
    return w;
}

Mat right_translate(const Mat& rows, const Mat& h) { return rows * h; }

}  // namespace

TEST_CASE("isotropy of coordinate planes matches the block form of Q") {
    CHECK(is_isotropic(span_rows({4, 5})));
    CHECK(is_isotropic(span_rows({1, 2})));
    CHECK_FALSE(is_isotropic(span_rows({1, 4})));
    CHECK_THROWS_AS(is_isotropic(Mat::Zero(2, 6)), std::invalid_argument);

    RationalSampler s(30);
    for (int t = 0; t < 20; ++t) {
        Mat h = sample_so6(s).g;
        CHECK(is_isotropic(right_translate(span_rows({4, 5}), h)));
        CHECK(is_isotropic(right_translate(span_rows({1, 2}), h)));
    }
}

TEST_CASE("Q-orthocomplement and dot annihilator are distinct operations") {
    Mat w12 = span_rows({1, 2});
    // <e1,e2>^perp under Q kills coordinates 4,5
    CHECK(row_space_equal(q_orthocomplement(w12), span_rows({1, 2, 3, 6})));
    // the dot annihilator kills coordinates 1,2
    CHECK(row_space_equal(dot_annihilator(w12), span_rows({3, 4, 5, 6})));

    Mat w45 = span_rows({4, 5});
    CHECK(row_space_equal(q_orthocomplement(w45), span_rows({3, 4, 5, 6})));
    CHECK(row_space_equal(dot_annihilator(w45), span_rows({1, 2, 3, 6})));

    // involution: (S^perp)^perp = S for a 2-plane
    CHECK(row_space_equal(q_orthocomplement(q_orthocomplement(w12)), w12));
}

TEST_CASE("incidence of the base point with coordinate planes") {
    CHECK(incidence_check(A0(), span_rows({4, 5})));
    CHECK(incidence_check(Mat::Zero(6, 6), span_rows({4, 5})));
    CHECK(incidence_check(Mat::Zero(6, 6), span_rows({1, 2})));
    CHECK_FALSE(incidence_check(A0(), span_rows({1, 2})));
}

TEST_CASE("kernel recovery over the base point") {
    Mat m1 = fibre_over_A0(Mat::Identity(2, 2));
    Mat shear(2, 2);
    shear << Rational(1), Rational(1), Rational(0), Rational(1);
    Mat m2 = fibre_over_A0(shear);

    Eta1Report rep = eta1_kernel(A0(), {m1, m2});
    CHECK(rep.ok);
    CHECK(rep.kernel_dim == 4);
    CHECK(row_space_equal(rep.kernel, span_rows({3, 4, 5, 6})));
    CHECK(row_space_equal(rep.w, span_rows({4, 5})));
    CHECK(is_isotropic(rep.w));
}

TEST_CASE("kernel recovery for 20 transported elements recovers im A^t exactly") {
    RationalSampler s(31);
    for (int t = 0; t < 20; ++t) {
        Mat h = sample_so6(s).g;
        Mat m1 = fibre_over_A0(sample_sl2(s).g) * h;
        Mat m2 = fibre_over_A0(sample_sl2(s).g) * h;
        Mat a = quotient_map(m1).a;
        REQUIRE(mats_equal(quotient_map(m2).a, a));
        Eta1Report rep = eta1_kernel(a, {m1, m2});
        CHECK(rep.ok);
        CHECK(row_space_equal(rep.w, a));  // row space of A = column space of A^t
    }
}

TEST_CASE("kernel recovery error paths over the zero stratum") {
    // all-zero sample: kernel stays 6-dimensional
    Eta1Report rep0 = eta1_kernel(Mat::Zero(6, 6), {Mat::Zero(2, 6)});
    CHECK_FALSE(rep0.ok);
    CHECK(rep0.kernel_dim == 6);

    // one rank-1 sample: kernel stays 5-dimensional
    RationalSampler s(32);
    Vec u(2), v(6);
    u(0) = 1;
    u(1) = 2;
    v = Vec::Zero(6);
    v(0) = 1;  // isotropic
    Mat r1 = u * v.transpose();
    REQUIRE(in_zero_fibre(r1));
    Eta1Report rep1 = eta1_kernel(Mat::Zero(6, 6), {r1});
    CHECK_FALSE(rep1.ok);
    CHECK(rep1.kernel_dim == 5);

    // two independent rank-1 samples reach dimension 4 but fail the
    // incidence equality with im 0 = 0
    Vec v2 = Vec::Zero(6);
    v2(1) = 1;
    Mat r2 = u * v2.transpose();
    Eta1Report rep2 = eta1_kernel(Mat::Zero(6, 6), {r1, r2});
    CHECK_FALSE(rep2.ok);

    // invalid sample rejected up front
    Mat outside = Mat::Zero(2, 6);
    outside(0, 0) = 1;
    outside(0, 3) = 1;  // not in the zero fibre
    CHECK_THROWS_AS(eta1_kernel(Mat::Zero(6, 6), {outside}), std::invalid_argument);
}

TEST_CASE("bundle fibre over span{e1,e2} is one-dimensional with the expected line") {
    FibreEResult res = fibre_E_solver(span_rows({1, 2}));
    CHECK(res.dimension == 1);
    REQUIRE(res.basis.size() == 1);
    const Mat& b = res.basis.front();
    // the line is spanned by the transpose of the base point: entries
    // (5,1) and (4,2) in 1-based labels, opposite signs
    Mat expected = A0().transpose();
    Mat stacked(2, 36);
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 6; ++j) {
            stacked(0, 6 * i + j) = b(i, j);
            stacked(1, 6 * i + j) = expected(i, j);
        }
    CHECK(rank_of(stacked) == 1);
    CHECK(b(4, 0) == -b(3, 1));
    CHECK(b(4, 0) != Rational(0));
}

TEST_CASE("bundle fibre over span{e4,e5} is spanned by the base point") {
    FibreEResult res = fibre_E_solver(span_rows({4, 5}));
    CHECK(res.dimension == 1);
    const Mat& b = res.basis.front();
    Mat stacked(2, 36);
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 6; ++j) {
            stacked(0, 6 * i + j) = b(i, j);
            stacked(1, 6 * i + j) = A0()(i, j);
        }
    CHECK(rank_of(stacked) == 1);
}

TEST_CASE("bundle fibre is one-dimensional over 20 sampled isotropic planes") {
    RationalSampler s(33);
    for (int t = 0; t < 20; ++t) {
        Mat h = sample_so6(s).g;
        Mat w = right_translate(t % 2 == 0 ? span_rows({4, 5}) : span_rows({1, 2}), h);
        FibreEResult res = fibre_E_solver(w);
        CHECK(res.dimension == 1);
        // solution satisfies all constraints
        const Mat& b = res.basis.front();
        CHECK(is_zero_mat(b.transpose() * Q6() + Q6() * b));
        CHECK(row_space_contained(b, w));
        CHECK(is_zero_mat(q_orthocomplement(w) * b));  // A^t q = 0, i.e. q^t A = 0 per row q
    }
}

TEST_CASE("non-isotropic plane is rejected by the fibre solver") {
    CHECK_THROWS_AS(fibre_E_solver(span_rows({1, 4})), std::invalid_argument);
}

TEST_CASE("subscheme ideal over span{e1,e2} leaves the ad-bc quotient") {
    SubschemeIdeal ideal = subscheme_ideal(Mat::Zero(6, 6), span_rows({1, 2}));
    CHECK(ideal.invariant_part.size() == 15);
    CHECK(ideal.v1_part.size() == 8);
    for (const auto& g : ideal.all()) CHECK(g.homogeneous_weight().has_value());
    CHECK(check_equivariant_ideal(ideal.all()));

    HilbertCertification cert = certify_hilbert_function(ideal, 6);
    CHECK(cert.kept_vars.size() == 4);
    CHECK(cert.residual_rank == 1);
    // kept variables are columns 4 and 5 of both rows
    CHECK(cert.reduced_ring->names == std::vector<std::string>{"x14", "x15", "x24", "x25"});
    CHECK(cert.reduced_quadric.to_string() == "x14*x25 - x15*x24");
    for (int d = 0; d <= 6; ++d)
        for (int n = 0; n <= 6; ++n)
            CHECK(cert.table.at(d, n) == (d == n ? n + 1 : 0));
}

TEST_CASE("subscheme ideal over span{e4,e5} leaves the corner-minor quotient") {
    SubschemeIdeal ideal = subscheme_ideal(Mat::Zero(6, 6), span_rows({4, 5}));
    HilbertCertification cert = certify_hilbert_function(ideal, 6);
    CHECK(cert.kept_vars.size() == 4);
    CHECK(cert.residual_rank == 1);
    CHECK(cert.reduced_ring->names == std::vector<std::string>{"x11", "x12", "x21", "x22"});
    CHECK(cert.reduced_quadric.to_string() == "x11*x22 - x12*x21");
    auto h = hilbert_function(cert.table);
    for (int d = 0; d <= 6; ++d) CHECK(h.at(d).value == d + 1);
}

TEST_CASE("certified Hilbert function is d+1 for 10 transported planes") {
    RationalSampler s(34);
    for (int t = 0; t < 10; ++t) {
        Mat h6 = sample_so6(s).g;
        Mat w = right_translate(t % 2 == 0 ? span_rows({4, 5}) : span_rows({1, 2}), h6);
        SubschemeIdeal ideal = subscheme_ideal(Mat::Zero(6, 6), w);
        HilbertCertification cert = certify_hilbert_function(ideal, 6);
        for (int d = 0; d <= 6; ++d)
            for (int n = 0; n <= 6; ++n)
                CHECK(cert.table.at(d, n) == (d == n ? n + 1 : 0));
    }
}

TEST_CASE("certification failure modes") {
    SubschemeIdeal ideal = subscheme_ideal(Mat::Zero(6, 6), span_rows({1, 2}));

    SUBCASE("an extra variable pair over-constrains the quotient") {
        SubschemeIdeal bigger = ideal;
        bigger.v1_part.push_back(SparsePoly::variable(ideal.ring, "x14"));
        bigger.v1_part.push_back(SparsePoly::variable(ideal.ring, "x24"));
        HilbertCertification cert = certify_hilbert_function(bigger, 4);
        auto h = hilbert_function(cert.table);
        CHECK(h.at(1).value < 2);
    }

    SUBCASE("a single unpaired extra form cannot be certified equivariantly") {
        SubschemeIdeal bigger = ideal;
        bigger.v1_part.push_back(SparsePoly::variable(ideal.ring, "x14"));
        CHECK_THROWS_AS(certify_hilbert_function(bigger, 4), std::invalid_argument);
    }

    SUBCASE("removing the quadrics inflates the Hilbert function") {
        SubschemeIdeal no_quadric = ideal;
        no_quadric.invariant_part.clear();
        HilbertCertification cert = certify_hilbert_function(no_quadric, 4);
        CHECK(cert.residual_rank == 0);
        auto h = hilbert_function(cert.table);
        CHECK(h.at(0).value > 1);
    }

    SUBCASE("a second independent quadric is rejected") {
        SubschemeIdeal extra = ideal;
        extra.invariant_part.push_back(
            SparsePoly::variable(ideal.ring, "x14") * SparsePoly::variable(ideal.ring, "x14"));
        CHECK_THROWS_AS(certify_hilbert_function(extra, 4), std::logic_error);
    }
}

TEST_CASE("subscheme ideal rejects invalid input") {
    CHECK_THROWS_AS(subscheme_ideal(A0(), span_rows({4, 5})), std::invalid_argument);
    CHECK_THROWS_AS(subscheme_ideal(Mat::Zero(6, 6), span_rows({1, 4})), std::invalid_argument);
}
