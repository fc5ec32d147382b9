#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slhilb/matrix.hpp"
#include "slhilb/rational.hpp"

using namespace slhilb;

namespace {

Mat random_mat(RationalSampler& s, Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = s.next();
    return m;
}

// Matrix of known rank: a 0/1 diagonal scrambled by elementary row and
// column operations, which preserve rank exactly.
Mat known_rank_mat(RationalSampler& s, Index rows, Index cols, Index r) {
    Mat m = Mat::Zero(rows, cols);
    for (Index i = 0; i < r; ++i) m(i, i) = Rational(1);
    for (int step = 0; step < 12; ++step) {
        Index i = s.next_int(0, rows - 1), j = s.next_int(0, rows - 1);
        if (i != j) m.row(i) += s.next() * m.row(j);
        Index p = s.next_int(0, cols - 1), q = s.next_int(0, cols - 1);
        if (p != q) m.col(p) += s.next() * m.col(q);
    }
    return m;
}

Rational det_cofactor(const Mat& m) {
    const Index n = m.rows();
    if (n == 1) return m(0, 0);
    Rational acc(0);
    Rational sign(1);
    for (Index j = 0; j < n; ++j) {
        Mat sub(n - 1, n - 1);
        for (Index r = 1; r < n; ++r) {
            Index cc = 0;
            for (Index c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        acc += sign * m(0, j) * det_cofactor(sub);
        sign = -sign;
    }
    return acc;
}

Mat random_skew4(RationalSampler& s) {
    Mat m = Mat::Zero(4, 4);
    for (Index i = 0; i < 4; ++i)
        for (Index j = i + 1; j < 4; ++j) {
            m(i, j) = s.next();
            m(j, i) = -m(i, j);
        }
    return m;
}

}  // namespace

TEST_CASE("rational parse and format") {
    CHECK(to_string(rat(1, 2)) == "1/2");
    CHECK(to_string(rat(-4, 8)) == "-1/2");
    CHECK(to_string(rat(3, -6)) == "-1/2");
    CHECK(to_string(rat(5)) == "5");
    CHECK(parse_rational("2/4") == rat(1, 2));
    CHECK(parse_rational("-7/3") == rat(-7, 3));
    CHECK(parse_rational(to_string(rat(22, 7))) == rat(22, 7));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(rat(1, 0));
}

TEST_CASE("field axioms on randomized triples") {
    RationalSampler s(20240801);
    for (int k = 0; k < 200; ++k) {
        Rational a = s.next(), b = s.next(), c = s.next();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!is_zero(a)) CHECK(a * (Rational(1) / a) == Rational(1));
    }
}

TEST_CASE("rref identity and A0 rank") {
    Mat id = Mat::Identity(2, 2);
    auto r = rref(id);
    CHECK(mats_equal(r.reduced, id));
    CHECK(r.rank() == 2);
    CHECK(r.pivot_columns == std::vector<Index>{0, 1});

    Mat a0 = Mat::Zero(6, 6);
    a0(0, 4) = Rational(1);
    a0(1, 3) = Rational(-1);
    CHECK(rank_of(a0) == 2);
}

TEST_CASE("rref row space is preserved") {
    RationalSampler s(7);
    for (int k = 0; k < 40; ++k) {
        Index rows = s.next_int(1, 5), cols = s.next_int(1, 6);
        Mat m = random_mat(s, rows, cols);
        auto r = rref(m);
        CHECK(row_space_equal(m, r.reduced));
        auto again = rref(r.reduced);
        CHECK(mats_equal(again.reduced, r.reduced));
    }
}

TEST_CASE("rank of scrambled known-rank matrices") {
    RationalSampler s(99);
    for (int k = 0; k < 30; ++k) {
        Index rows = s.next_int(1, 5), cols = s.next_int(1, 6);
        Index r = s.next_int(0, std::min(rows, cols));
        Mat m = known_rank_mat(s, rows, cols, r);
        CHECK(rank_of(m) == r);
    }
}

TEST_CASE("kernel basis") {
    Mat z = Mat::Zero(2, 6);
    CHECK(kernel_basis(z).cols() == 6);

    Mat a0 = Mat::Zero(6, 6);
    a0(0, 4) = Rational(1);
    a0(1, 3) = Rational(-1);
    Mat k = kernel_basis(a0);
    CHECK(k.cols() == 4);
    // span{e1,e2,e3,e6}
    Mat expect = Mat::Zero(4, 6);
    expect(0, 0) = expect(1, 1) = expect(2, 2) = expect(3, 5) = Rational(1);
    CHECK(row_space_equal(Mat(k.transpose()), expect));

    Mat m26 = Mat::Zero(2, 6);
    m26(0, 0) = m26(1, 1) = Rational(1);
    Mat k2 = kernel_basis(m26);
    CHECK(k2.cols() == 4);
    Mat expect2 = Mat::Zero(4, 6);
    expect2(0, 2) = expect2(1, 3) = expect2(2, 4) = expect2(3, 5) = Rational(1);
    CHECK(row_space_equal(Mat(k2.transpose()), expect2));

    RationalSampler s(5);
    for (int t = 0; t < 30; ++t) {
        Mat m = random_mat(s, s.next_int(1, 5), s.next_int(1, 6));
        Mat kb = kernel_basis(m);
        CHECK(rank_of(m) + kb.cols() == m.cols());
        CHECK(is_zero_mat(Mat(m * kb)));
        if (kb.cols() > 0) CHECK(rank_of(kb) == kb.cols());
    }
}

TEST_CASE("minor2 matches the column determinant") {
    Mat m = Mat::Zero(2, 6);
    m(0, 0) = m(1, 1) = Rational(1);  // [I2 | 0]
    CHECK(minor2(m, 1, 2) == Rational(1));
    for (Index ss = 1; ss <= 6; ++ss)
        for (Index t = ss + 1; t <= 6; ++t)
            if (!(ss == 1 && t == 2)) CHECK(minor2(m, ss, t) == Rational(0));
    CHECK_THROWS(minor2(m, 3, 3));
    CHECK_THROWS(minor2(m, 0, 2));
    CHECK_THROWS(minor2(m, 2, 7));

    RationalSampler s(11);
    Mat r = random_mat(s, 2, 6);
    for (Index ss = 1; ss <= 6; ++ss)
        for (Index t = ss + 1; t <= 6; ++t)
            CHECK(minor2(r, ss, t) ==
                  r(0, ss - 1) * r(1, t - 1) - r(0, t - 1) * r(1, ss - 1));
}

TEST_CASE("determinant oracle agreement") {
    RationalSampler s(13);
    for (int k = 0; k < 25; ++k) {
        Index n = s.next_int(1, 4);
        Mat m = random_mat(s, n, n);
        CHECK(determinant_exact(m) == det_cofactor(m));
    }
    for (int k = 0; k < 10; ++k) {
        Mat a = random_mat(s, 3, 3), b = random_mat(s, 3, 3);
        CHECK(determinant_exact(Mat(a * b)) == determinant_exact(a) * determinant_exact(b));
    }
}

TEST_CASE("pfaffian examples and determinant identity") {
    CHECK(pfaffian4(Mat(Mat::Zero(4, 4))) == Rational(0));

    Mat blocks = Mat::Zero(4, 4);
    blocks(0, 1) = Rational(1);
    blocks(1, 0) = Rational(-1);
    blocks(2, 3) = Rational(1);
    blocks(3, 2) = Rational(-1);
    CHECK(pfaffian4(blocks) == Rational(1));

    Mat notskew = Mat::Identity(4, 4);
    CHECK_THROWS(pfaffian4(notskew));

    RationalSampler s(17);
    for (int k = 0; k < 200; ++k) {
        Mat m = random_skew4(s);
        Rational p = pfaffian4(m);
        CHECK(p * p == determinant_exact(m));
    }
}

TEST_CASE("exp_nilpotent") {
    CHECK(mats_equal(exp_nilpotent(Mat(Mat::Zero(3, 3))), Mat(Mat::Identity(3, 3))));

    Mat e12 = Mat::Zero(2, 2);
    e12(0, 1) = Rational(1);
    Mat g = exp_nilpotent(e12);
    Mat expect(2, 2);
    expect << Rational(1), Rational(1), Rational(0), Rational(1);
    CHECK(mats_equal(g, expect));

    CHECK_THROWS(exp_nilpotent(Mat(Mat::Identity(2, 2))));

    RationalSampler s(23);
    for (int k = 0; k < 20; ++k) {
        Index n = s.next_int(2, 6);
        Mat m = Mat::Zero(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) m(i, j) = s.next();
        Mat a = exp_nilpotent(m);
        Mat b = exp_nilpotent(Mat(-m));
        CHECK(mats_equal(Mat(a * b), Mat(Mat::Identity(n, n))));
    }
}
