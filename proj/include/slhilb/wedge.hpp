#pragma once

// The identification of the second exterior power of Q^4 with Q^6 carrying
// the wedge pairing to the split form Q, the induced map from trace-zero
// 4x4 matrices into so(Q), and the flag correspondence (W <-> (L, H)) that
// realizes isotropic planes as point-hyperplane pairs.

#include "slhilb/matrix.hpp"
#include "slhilb/moment.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace slhilb {

// Ordered basis of the second exterior power: u1 = e1^e2, u2 = e1^e3,
// u3 = e1^e4, u4 = e3^e4, u5 = e4^e2, u6 = e2^e3. The orientation of u5 is
// chosen so the wedge-pairing Gram matrix equals Q exactly.
inline const std::array<std::pair<int, int>, 6>& wedge_basis_pairs() {
    static const std::array<std::pair<int, int>, 6> pairs = {
        {{1, 2}, {1, 3}, {1, 4}, {3, 4}, {4, 2}, {2, 3}}};
    return pairs;
}

// Coordinates of v ^ w in the wedge basis.
inline Vec wedge_to_q6(const Vec& v, const Vec& w) {
    if (v.size() != 4 || w.size() != 4)
        throw std::invalid_argument("wedge_to_q6: expected vectors in Q^4");
    Vec out(6);
    const auto& pairs = wedge_basis_pairs();
    for (Index k = 0; k < 6; ++k) {
        int a = pairs[static_cast<size_t>(k)].first - 1;
        int b = pairs[static_cast<size_t>(k)].second - 1;
        out(k) = v(a) * w(b) - v(b) * w(a);
    }
    return out;
}

namespace detail {
// Sign of the permutation (a,b,c,d) of (1,2,3,4), or 0 on repeats.
inline int perm_sign4(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] == p[j]) return 0;
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}
}  // namespace detail

// Gram matrix of the pairing (alpha, beta) -> coefficient of e1^e2^e3^e4 in
// alpha ^ beta, in the wedge basis. The startup certificate asserts this is
// exactly Q.
inline Mat wedge_gram() {
    const auto& pairs = wedge_basis_pairs();
    Mat g(6, 6);
    for (Index k = 0; k < 6; ++k)
        for (Index l = 0; l < 6; ++l)
            g(k, l) = detail::perm_sign4(pairs[static_cast<size_t>(k)].first,
                                         pairs[static_cast<size_t>(k)].second,
                                         pairs[static_cast<size_t>(l)].first,
                                         pairs[static_cast<size_t>(l)].second);
    return g;
}

inline void assert_wedge_basis_certificate() {
    if (!mats_equal(wedge_gram(), Q6()))
        throw std::logic_error("wedge basis certificate failed: Gram matrix is not Q");
}

// Coordinates of a bivector omega (given in the wedge basis) wedged with v,
// expressed in the basis e2^e3^e4, e1^e3^e4, e1^e2^e4, e1^e2^e3 of the
// third exterior power.
inline Vec wedge3(const Vec& v, const Vec& omega) {
    if (v.size() != 4 || omega.size() != 6)
        throw std::invalid_argument("wedge3: expected v in Q^4 and omega in wedge coordinates");
    Vec out = Vec::Zero(4);
    const auto& pairs = wedge_basis_pairs();
    // v ^ e_a ^ e_b = sum_c v_c e_c^e_a^e_b; express e_c^e_a^e_b as
    // sign * (basis 3-form omitting index m), where {c,a,b,m} = {1,2,3,4}.
    for (Index k = 0; k < 6; ++k) {
        int a = pairs[static_cast<size_t>(k)].first;
        int b = pairs[static_cast<size_t>(k)].second;
        for (int c = 1; c <= 4; ++c) {
            if (c == a || c == b) continue;
            int m = 1 + 2 + 3 + 4 - a - b - c;  // the omitted index
            // basis 3-form number m omits e_m and is ordered increasingly;
            // compute the sign of (c,a,b) against that increasing order
            int order[3];
            int idx = 0;
            for (int x = 1; x <= 4; ++x)
                if (x != m) order[idx++] = x;
            int perm[3] = {c, a, b};
            int sign = 1;
            // bubble perm into increasing order, counting swaps
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 2; ++j)
                    if (perm[j] > perm[j + 1]) {
                        std::swap(perm[j], perm[j + 1]);
                        sign = -sign;
                    }
            (void)order;
            out(m - 1) += sign * v(c - 1) * omega(k);
        }
    }
    return out;
}

// Contraction of the bivector omega by the covector phi:
// iota_phi(x ^ y) = phi(x) y - phi(y) x.
inline Vec contract(const Vec& phi, const Vec& omega) {
    if (phi.size() != 4 || omega.size() != 6)
        throw std::invalid_argument("contract: expected phi in (Q^4)* and omega in wedge coordinates");
    Vec out = Vec::Zero(4);
    const auto& pairs = wedge_basis_pairs();
    for (Index k = 0; k < 6; ++k) {
        int a = pairs[static_cast<size_t>(k)].first - 1;
        int b = pairs[static_cast<size_t>(k)].second - 1;
        out(b) += phi(a) * omega(k);
        out(a) -= phi(b) * omega(k);
    }
    return out;
}

struct FlagTriple {
    Mat line;        // 1x4 row spanning L
    Mat hyperplane;  // 3x4 rows spanning H
};

// Extract a row basis of the row space of m.
inline Mat row_basis(const Mat& m) {
    auto red = rref(m);
    Mat out(static_cast<Index>(red.pivot_columns.size()), m.cols());
    for (Index i = 0; i < out.rows(); ++i) out.row(i) = red.reduced.row(i);
    return out;
}

// L = {v : v ^ omega = 0 for all omega in W} and H = {v : the two wedges
// v ^ omega_i span at most a line}. H is produced as the span of all
// contractions of W and certified against the rank characterization in
// both directions.
inline FlagTriple plane_to_flags(const Mat& w) {
    if (w.rows() != 2 || w.cols() != 6)
        throw std::invalid_argument("plane_to_flags: expected two rows of wedge coordinates");
    if (rank_of(w) != 2) throw std::invalid_argument("plane_to_flags: plane must have dimension 2");
    if (!is_zero_mat(w * Q6() * w.transpose()))
        throw std::invalid_argument("plane_to_flags: plane is not isotropic for the wedge pairing");

    Vec w1 = w.row(0).transpose(), w2 = w.row(1).transpose();
    auto rank_at = [&](const Vec& v) {
        Mat two(2, 4);
        two.row(0) = wedge3(v, w1).transpose();
        two.row(1) = wedge3(v, w2).transpose();
        return rank_of(two);
    };

    // L: kernel of v -> (v ^ omega_1, v ^ omega_2)
    Mat lmap(8, 4);
    for (Index c = 0; c < 4; ++c) {
        Vec ec = Vec::Zero(4);
        ec(c) = 1;
        lmap.block(0, c, 4, 1) = wedge3(ec, w1);
        lmap.block(4, c, 4, 1) = wedge3(ec, w2);
    }
    Mat lker = kernel_basis(lmap).transpose();
    if (lker.rows() != 1)
        throw std::logic_error("plane_to_flags: L has dimension " + std::to_string(lker.rows()) +
                               ", expected 1");

    // H: span of all contractions iota_phi(omega)
    Mat contractions(8, 4);
    for (Index c = 0; c < 4; ++c) {
        Vec phi = Vec::Zero(4);
        phi(c) = 1;
        contractions.row(2 * c) = contract(phi, w1).transpose();
        contractions.row(2 * c + 1) = contract(phi, w2).transpose();
    }
    Mat h = row_basis(contractions);
    if (h.rows() != 3)
        throw std::logic_error("plane_to_flags: H has dimension " + std::to_string(h.rows()) +
                               ", expected 3");
    if (!row_space_contained(lker, h)) throw std::logic_error("plane_to_flags: L is not inside H");

    // certify H against the rank characterization in both directions:
    // basis vectors of H wedge to a space of dimension <= 1, and any vector
    // completing H to Q^4 wedges to dimension 2.
    for (Index r = 0; r < h.rows(); ++r)
        if (rank_at(h.row(r).transpose()) > 1)
            throw std::logic_error("plane_to_flags: contraction span violates the rank condition");
    for (Index c = 0; c < 4; ++c) {
        Vec ec = Vec::Zero(4);
        ec(c) = 1;
        Mat stacked = stack_rows<Rational>(h, ec.transpose());
        if (rank_of(stacked) == 4) {
            if (rank_at(ec) != 2)
                throw std::logic_error(
                    "plane_to_flags: a vector outside H satisfies the rank condition");
        }
    }

    FlagTriple out;
    out.line = lker;
    out.hyperplane = h;
    return out;
}

// W = L ^ H: the span of ell ^ h over basis vectors, asserted
// 2-dimensional and wedge-isotropic.
inline Mat flags_to_plane(const Mat& line, const Mat& hyperplane) {
    if (line.rows() != 1 || line.cols() != 4 || rank_of(line) != 1)
        throw std::invalid_argument("flags_to_plane: L must be a line in Q^4");
    if (hyperplane.rows() != 3 || hyperplane.cols() != 4 || rank_of(hyperplane) != 3)
        throw std::invalid_argument("flags_to_plane: H must be a hyperplane in Q^4");
    if (!row_space_contained(line, hyperplane))
        throw std::invalid_argument("flags_to_plane: L must be contained in H");
    Mat wedges(3, 6);
    for (Index r = 0; r < 3; ++r)
        wedges.row(r) = wedge_to_q6(line.row(0).transpose(), hyperplane.row(r).transpose())
                            .transpose();
    Mat w = row_basis(wedges);
    if (w.rows() != 2) throw std::logic_error("flags_to_plane: plane is not 2-dimensional");
    if (!is_zero_mat(w * Q6() * w.transpose()))
        throw std::logic_error("flags_to_plane: plane is not wedge-isotropic");
    return w;
}

// The derivation action of -b^t on the second exterior power, written in
// the wedge basis. The transpose-dual twist makes the flag chain come out
// as im b inside L inside H inside ker b for rank-one square-zero b. The
// result always lies in so(Q).
inline Mat sl4_to_so6(const Mat& b) {
    if (b.rows() != 4 || b.cols() != 4)
        throw std::invalid_argument("sl4_to_so6: expected a 4x4 matrix");
    Rational tr = b(0, 0) + b(1, 1) + b(2, 2) + b(3, 3);
    if (!is_zero(tr)) throw std::invalid_argument("sl4_to_so6: trace must be zero");
    Mat c = -b.transpose();
    const auto& pairs = wedge_basis_pairs();
    Mat a(6, 6);
    for (Index k = 0; k < 6; ++k) {
        Vec ea = Vec::Zero(4), eb = Vec::Zero(4);
        ea(pairs[static_cast<size_t>(k)].first - 1) = 1;
        eb(pairs[static_cast<size_t>(k)].second - 1) = 1;
        Vec img = wedge_to_q6(c * ea, eb) + wedge_to_q6(ea, c * eb);
        a.col(k) = img;
    }
    if (!is_zero_mat(a.transpose() * Q6() + Q6() * a))
        throw std::logic_error("sl4_to_so6: image is not in so(Q)");
    return a;
}

}  // namespace slhilb
