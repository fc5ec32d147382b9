#pragma once

// Dense exact linear algebra on Eigen matrices. Everything pivots on the
// first nonzero entry; there are no magnitude thresholds anywhere, so all
// ranks and kernels are exact over the scalar field.

#include "slhilb/rational.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace slhilb {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Eigen::Index;

template <typename Scalar>
struct RrefResult {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
    std::vector<Index> pivot_columns;

    Index rank() const { return static_cast<Index>(pivot_columns.size()); }
};

// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    RrefResult<Scalar> out;
    out.reduced = m;
    auto& a = out.reduced;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index piv = -1;
        for (Index r = row; r < a.rows(); ++r) {
            if (a(r, col) != Scalar(0)) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row) a.row(piv).swap(a.row(row));
        a.row(row) /= Scalar(a(row, col));
        for (Index r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            if (a(r, col) != Scalar(0)) {
                Scalar f = a(r, col);
                a.row(r) -= f * a.row(row);
            }
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    return out;
}

template <typename Derived>
Index rank_of(const Eigen::MatrixBase<Derived>& m) {
    return rref(m).rank();
}

// Columns of the result form a basis of { x : m x = 0 }.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
kernel_basis(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using MatT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    auto r = rref(m);
    const Index n = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (Index p : r.pivot_columns) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<Index> free_cols;
    for (Index c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

    MatT basis = MatT::Zero(n, static_cast<Index>(free_cols.size()));
    for (Index k = 0; k < static_cast<Index>(free_cols.size()); ++k) {
        Index f = free_cols[static_cast<size_t>(k)];
        basis(f, k) = Scalar(1);
        for (Index i = 0; i < r.rank(); ++i)
            basis(r.pivot_columns[static_cast<size_t>(i)], k) = -r.reduced(i, f);
    }
    return basis;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> stack_rows(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("stack_rows: column mismatch");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> s(a.rows() + b.rows(), a.cols());
    s.topRows(a.rows()) = a;
    s.bottomRows(b.rows()) = b;
    return s;
}

// Row spaces, with subspaces passed as row-basis matrices throughout.
inline bool row_space_contained(const Mat& sub, const Mat& big) {
    return rank_of(stack_rows<Rational>(sub, big)) == rank_of(big);
}

inline bool row_space_equal(const Mat& a, const Mat& b) {
    Index ra = rank_of(a), rb = rank_of(b);
    return ra == rb && rank_of(stack_rows<Rational>(a, b)) == ra;
}

template <typename Derived>
bool is_zero_mat(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != Scalar(0)) return false;
    return true;
}

inline bool mats_equal(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return is_zero_mat(Mat(a - b));
}

// Determinant by elimination with exact division and sign tracking.
template <typename Derived>
typename Derived::Scalar determinant_exact(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
    const Index n = a.rows();
    Scalar det(1);
    for (Index col = 0; col < n; ++col) {
        Index piv = -1;
        for (Index r = col; r < n; ++r) {
            if (a(r, col) != Scalar(0)) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return Scalar(0);
        if (piv != col) {
            a.row(piv).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Index r = col + 1; r < n; ++r) {
            if (a(r, col) != Scalar(0)) {
                Scalar f = a(r, col) / a(col, col);
                a.row(r) -= f * a.row(col);
            }
        }
    }
    return det;
}

// Column minor of a 2x6 matrix; s and t are the usual 1-based column
// labels and must satisfy 1 <= s < t <= 6.
inline Rational minor2(const Mat& m, Index s, Index t) {
    if (m.rows() != 2 || m.cols() != 6) throw std::invalid_argument("minor2 expects a 2x6 matrix");
    if (s < 1 || t <= s || t > 6) throw std::invalid_argument("minor2 expects 1 <= s < t <= 6");
    return m(0, s - 1) * m(1, t - 1) - m(0, t - 1) * m(1, s - 1);
}

// Pfaffian of a 4x4 skew-symmetric matrix: m01 m23 - m02 m13 + m03 m12.
inline Rational pfaffian4(const Mat& s) {
    if (s.rows() != 4 || s.cols() != 4) throw std::invalid_argument("pfaffian4 expects 4x4");
    if (!is_zero_mat(Mat(s + s.transpose()))) throw std::invalid_argument("pfaffian4 expects skew input");
    return s(0, 1) * s(2, 3) - s(0, 2) * s(1, 3) + s(0, 3) * s(1, 2);
}

// exp of a nilpotent matrix; the series is finite and exact. Throws if the
// argument fails to be nilpotent.
inline Mat exp_nilpotent(const Mat& n) {
    if (n.rows() != n.cols()) throw std::invalid_argument("exp of non-square matrix");
    const Index d = n.rows();
    Mat term = Mat::Identity(d, d);
    Mat sum = term;
    Rational k(1);
    for (Index i = 1; i <= d; ++i) {
        term = Mat(term * n);
        if (is_zero_mat(term)) return sum;
        k *= Rational(static_cast<long>(i));
        sum += term / k;
    }
    throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace slhilb
