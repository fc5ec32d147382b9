#pragma once

// The moment map mu(M) = M Q M^t J on 2x6 configuration matrices, the
// quotient map nu(M) = M^t J M Q into so(Q), the nilpotent orbit closure
// with its two strata, fibre parametrizations over the base point and over
// zero, and exact rational samplers for SL2 and SO6.

#include "slhilb/matrix.hpp"
#include "slhilb/poly.hpp"
#include "slhilb/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slhilb {

inline const Mat& J2() {
    static const Mat j = [] {
        Mat m = Mat::Zero(2, 2);
        m(0, 1) = 1;
        m(1, 0) = -1;
        return m;
    }();
    return j;
}

inline const Mat& Q6() {
    static const Mat q = [] {
        Mat m = Mat::Zero(6, 6);
        for (Index i = 0; i < 3; ++i) {
            m(i, i + 3) = 1;
            m(i + 3, i) = 1;
        }
        return m;
    }();
    return q;
}

// Base point of the open orbit: a_{15} = 1, a_{24} = -1.
inline const Mat& A0() {
    static const Mat a = [] {
        Mat m = Mat::Zero(6, 6);
        m(0, 4) = 1;
        m(1, 3) = -1;
        return m;
    }();
    return a;
}

inline Mat moment_map(const Mat& m) {
    if (m.rows() != 2 || m.cols() != 6)
        throw std::invalid_argument("moment_map: expected a 2x6 matrix");
    return m * Q6() * m.transpose() * J2();
}

// Zero-fibre test via the three scalar equations of M Q M^t = 0; J is
// invertible so this is equivalent to moment_map(m) = 0.
inline bool in_zero_fibre(const Mat& m) {
    if (m.rows() != 2 || m.cols() != 6)
        throw std::invalid_argument("in_zero_fibre: expected a 2x6 matrix");
    return is_zero_mat(m * Q6() * m.transpose());
}

enum class Stratum { rank2_orbit, zero, outside };

inline std::string stratum_name(Stratum s) {
    switch (s) {
        case Stratum::rank2_orbit: return "rank-2 orbit";
        case Stratum::zero: return "zero";
        case Stratum::outside: return "outside";
    }
    return "?";
}

struct OrbitElement {
    Mat a;  // 6x6
    Stratum stratum = Stratum::outside;
};

// Signed 2x2 column minor with skew extension: lambda(s,t) = -lambda(t,s).
inline Rational minor2_signed(const Mat& m, int s, int t) {
    if (s == t) return Rational(0);
    return s < t ? minor2(m, s, t) : -minor2(m, t, s);
}

// The quotient map assembled block-wise from column minors:
// A(s,t) = lambda^{s, sigma(t)} where sigma swaps t and t+3.
inline Mat quotient_map_block_formula(const Mat& m) {
    Mat a(6, 6);
    for (int s = 1; s <= 6; ++s)
        for (int t = 1; t <= 6; ++t) {
            int sigma_t = t <= 3 ? t + 3 : t - 3;
            a(s - 1, t - 1) = minor2_signed(m, s, sigma_t);
        }
    return a;
}

struct MembershipCertificate {
    bool member = false;
    Stratum stratum = Stratum::outside;
    std::vector<std::string> failures;
};

// Orbit-closure membership: a in so(Q), a^2 = 0, rank <= 2, and all 15
// Pfaffians of 4x4 principal submatrices of Qa vanish. Each condition is
// tested independently; failures are listed by name.
inline MembershipCertificate orbit_closure_membership(const Mat& a) {
    if (a.rows() != 6 || a.cols() != 6)
        throw std::invalid_argument("orbit_closure_membership: expected a 6x6 matrix");
    MembershipCertificate cert;
    const bool in_so6 = is_zero_mat(a.transpose() * Q6() + Q6() * a);
    if (!in_so6) cert.failures.push_back("a^t Q + Q a != 0 (not in so(Q))");
    if (!is_zero_mat(a * a)) cert.failures.push_back("a^2 != 0");
    Index r = rank_of(a);
    if (r > 2) cert.failures.push_back("rank " + std::to_string(r) + " exceeds 2");
    if (in_so6) {
        Mat s = Q6() * a;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k)
                    for (int l = k + 1; l < 6; ++l) {
                        Mat sub(4, 4);
                        int idx[4] = {i, j, k, l};
                        for (int p = 0; p < 4; ++p)
                            for (int q = 0; q < 4; ++q) sub(p, q) = s(idx[p], idx[q]);
                        if (!is_zero(pfaffian4(sub)))
                            cert.failures.push_back(
                                "Pfaffian of principal rows {" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                                std::to_string(l + 1) + "} of Qa is nonzero");
                    }
    }
    cert.member = cert.failures.empty();
    if (!cert.member)
        cert.stratum = Stratum::outside;
    else
        cert.stratum = (r == 0) ? Stratum::zero : Stratum::rank2_orbit;
    return cert;
}

// nu(M) = M^t J M Q, cross-validated against the block formula built from
// column minors. The stratum tag is 'outside' when M is not in the zero
// fibre of the moment map.
inline OrbitElement quotient_map(const Mat& m) {
    if (m.rows() != 2 || m.cols() != 6)
        throw std::invalid_argument("quotient_map: expected a 2x6 matrix");
    OrbitElement out;
    out.a = m.transpose() * J2() * m * Q6();
    if (!mats_equal(out.a, quotient_map_block_formula(m)))
        throw std::logic_error("quotient_map: block formula disagrees with direct product");
    if (!in_zero_fibre(m)) {
        out.stratum = Stratum::outside;
        return out;
    }
    auto cert = orbit_closure_membership(out.a);
    if (!cert.member)
        throw std::logic_error("quotient_map: zero-fibre image failed orbit-closure membership");
    out.stratum = cert.stratum;
    return out;
}

// The fibre over the base point A0 is the SL2 orbit of [I | 0]: send g to
// [g | 0].
inline Mat fibre_over_A0(const Mat& g) {
    if (g.rows() != 2 || g.cols() != 2)
        throw std::invalid_argument("fibre_over_A0: expected a 2x2 matrix");
    if (determinant_exact(g) != Rational(1))
        throw std::invalid_argument("fibre_over_A0: determinant must be exactly 1");
    Mat m = Mat::Zero(2, 6);
    m.block(0, 0, 2, 2) = g;
    return m;
}

// ---------------------------------------------------------------------------
// Symbolic elimination for the fibre over the base point.
// ---------------------------------------------------------------------------

struct EliminationStep {
    std::string name;   // the identity being derived
    std::string value;  // its residual, "0" on success
};

struct EliminationReport {
    bool ok = false;
    std::string pivot;  // "x11" or "x12"
    std::vector<EliminationStep> steps;
    std::string failure;  // reason when !ok
};

// Reproduces the coordinate elimination on the fibre over the base point in
// the rational-function field with three free coordinates. With pivot x11:
// x22 = (target + x12*x21)/x11, then for each j in {3..6} the equations
// lambda^{1,j} = lambda^{2,j} = 0 force x1j = x2j = 0, after which the
// remaining minors and all three entries of M Q M^t vanish identically.
// target is the required value of lambda^{1,2} (1 for the base point);
// setting it to 0 degenerates the system and trips the division guard.
inline EliminationReport fibre_elimination_check(const std::string& pivot = "x11",
                                                 const Rational& target = Rational(1)) {
    if (pivot != "x11" && pivot != "x12")
        throw std::invalid_argument("fibre_elimination_check: pivot must be x11 or x12");
    auto ring = ring_x26();
    auto fvar = [&](const std::string& n) { return Frac(SparsePoly::variable(ring, n)); };
    Frac zero{SparsePoly::constant(ring, Rational(0))};
    Frac tgt{SparsePoly::constant(ring, target)};

    EliminationReport rep;
    rep.pivot = pivot;

    // Known corner entries, with the dependent one solved from
    // lambda^{1,2} = x11*x22 - x12*x21 = target.
    Frac x11 = fvar("x11"), x12 = fvar("x12"), x21 = fvar("x21"), x22 = fvar("x22");
    if (pivot == "x11") {
        x22 = (tgt + x12 * x21) / x11;
        rep.steps.push_back({"x22 = (" + target.get_str() + " + x12*x21)/x11", "assumed x11 != 0"});
    } else {
        x21 = (x11 * x22 - tgt) / x12;
        rep.steps.push_back({"x21 = (x11*x22 - " + target.get_str() + ")/x12", "assumed x12 != 0"});
    }

    // Entries of the symbolic 2x6 matrix as fractions; columns 3..6 are
    // filled in as the elimination derives them.
    std::vector<std::vector<Frac>> M(2, std::vector<Frac>(6, zero));
    M[0][0] = x11;
    M[0][1] = x12;
    M[1][0] = x21;
    M[1][1] = x22;

    for (int j = 3; j <= 6; ++j) {
        // lambda^{1,j} = x11*x2j - x21*x1j = 0 and
        // lambda^{2,j} = x12*x2j - x22*x1j = 0, linear in (x1j, x2j).
        // Solve the pivot row's equation for x2j, substitute into the other,
        // and read off the coefficient of x1j.
        Frac coeff = zero;
        std::string cj = std::to_string(j);
        if (pivot == "x11") {
            rep.steps.push_back({"x2" + cj + " = (x21/x11) * x1" + cj,
                                 "from lambda^{1," + cj + "} = 0"});
            coeff = x12 * (x21 / x11) - x22;  // lambda^{2,j} becomes coeff * x1j
        } else {
            rep.steps.push_back({"x2" + cj + " = (x22/x12) * x1" + cj,
                                 "from lambda^{2," + cj + "} = 0"});
            coeff = x11 * (x22 / x12) - x21;  // lambda^{1,j} becomes coeff * x1j
        }
        if (coeff == zero) {
            rep.ok = false;
            rep.failure = "division guard: coefficient of x1" + cj +
                          " vanishes, cannot conclude x1" + cj + " = 0";
            return rep;
        }
        rep.steps.push_back({"x1" + cj + " = 0", "0"});
        rep.steps.push_back({"x2" + cj + " = 0", "0"});
        M[0][static_cast<size_t>(j - 1)] = zero;
        M[1][static_cast<size_t>(j - 1)] = zero;
    }

    // With all eight coordinates eliminated, verify every remaining minor
    // matches the target pattern and all three entries of M Q M^t vanish.
    bool all_zero = true;
    auto minor_frac = [&](int s, int t) {
        return M[0][static_cast<size_t>(s - 1)] * M[1][static_cast<size_t>(t - 1)] -
               M[0][static_cast<size_t>(t - 1)] * M[1][static_cast<size_t>(s - 1)];
    };
    for (int s = 1; s <= 6; ++s)
        for (int t = s + 1; t <= 6; ++t) {
            Frac want = (s == 1 && t == 2) ? tgt : zero;
            Frac got = minor_frac(s, t);
            bool match = (got == want);
            rep.steps.push_back({"lambda^{" + std::to_string(s) + "," + std::to_string(t) +
                                     "} - target",
                                 match ? "0" : (got.to_string() + " != expected")});
            all_zero = all_zero && match;
        }
    for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b) {
            Frac entry = zero;
            for (int i = 0; i < 3; ++i)
                entry = entry + M[static_cast<size_t>(a)][static_cast<size_t>(i)] *
                                    M[static_cast<size_t>(b)][static_cast<size_t>(i + 3)] +
                        M[static_cast<size_t>(a)][static_cast<size_t>(i + 3)] *
                            M[static_cast<size_t>(b)][static_cast<size_t>(i)];
            bool match = (entry == zero);
            rep.steps.push_back({"(M Q M^t)_{" + std::to_string(a + 1) + std::to_string(b + 1) + "}",
                                 match ? "0" : entry.to_string()});
            all_zero = all_zero && match;
        }
    rep.ok = all_zero;
    if (!rep.ok) rep.failure = "a residual identity did not reduce to 0";
    return rep;
}

// ---------------------------------------------------------------------------
// The fibre over zero: rank-one matrices u v^t with v isotropic.
// ---------------------------------------------------------------------------

struct ZeroFibreRank {
    bool generic = false;   // u != 0 and v != 0
    Index quadric_rank = 0; // Jacobian rank restricted to the quadric's tangent directions
    Index cone_rank = 0;    // rank over both factors' tangent directions
};

// Exact Jacobian ranks of (u, v) -> u v^t at (u, v) with v^t Q v = 0.
// quadric_rank restricts the differential to the tangent space of the
// isotropy quadric (v-directions annihilated by Qv); cone_rank additionally
// admits the two u-directions and equals the local dimension of the image
// cone at a generic point.
inline ZeroFibreRank zero_fibre_rank_at(const Vec& u, const Vec& v) {
    if (u.size() != 2 || v.size() != 6)
        throw std::invalid_argument("zero_fibre_rank_at: expected u in Q^2, v in Q^6");
    Rational iso = (v.transpose() * Q6() * v)(0, 0);
    if (!is_zero(iso))
        throw std::invalid_argument("zero_fibre_rank_at: v is not isotropic");
    ZeroFibreRank out;
    out.generic = !is_zero_mat(u) && !is_zero_mat(v);

    Mat grad = (Q6() * v).transpose();       // 1x6, kernel = tangent space of quadric at v
    Mat tangent = kernel_basis(grad);        // 6xk columns span the tangent space
    auto flatten = [](const Mat& m) {
        Vec f(12);
        for (Index a = 0; a < 2; ++a)
            for (Index b = 0; b < 6; ++b) f(a * 6 + b) = m(a, b);
        return f;
    };
    Mat quad_cols(12, tangent.cols());
    for (Index k = 0; k < tangent.cols(); ++k) {
        Mat dir = u * tangent.col(k).transpose();
        quad_cols.col(k) = flatten(dir);
    }
    out.quadric_rank = rank_of(quad_cols);

    Mat cone_cols(12, tangent.cols() + 2);
    cone_cols.block(0, 0, 12, tangent.cols()) = quad_cols;
    for (Index a = 0; a < 2; ++a) {
        Mat dir = Mat::Zero(2, 6);
        dir.row(a) = v.transpose();
        cone_cols.col(tangent.cols() + a) = flatten(dir);
    }
    out.cone_rank = rank_of(cone_cols);
    return out;
}

struct ZeroFibreDimensionReport {
    Index quadric_rank = 0;
    Index cone_rank = 0;
    Vec u, v;
    int retries_used = 0;
};

// Computes the Jacobian ranks at the fixed base point u = (1,2), v = e1,
// resampling a random generic point (bounded retries) if the fixed one were
// ever degenerate.
inline ZeroFibreDimensionReport fibre_over_zero_dimension(RationalSampler& sampler,
                                                          int max_retries = 8) {
    Vec u(2), v(6);
    u << Rational(1), Rational(2);
    v = Vec::Zero(6);
    v(0) = 1;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        ZeroFibreRank r = zero_fibre_rank_at(u, v);
        if (r.generic && r.quadric_rank == 5) {
            ZeroFibreDimensionReport rep;
            rep.quadric_rank = r.quadric_rank;
            rep.cone_rank = r.cone_rank;
            rep.u = u;
            rep.v = v;
            rep.retries_used = attempt;
            return rep;
        }
        // resample: u nonzero at random; v isotropic with v3 != 0 pivot
        u(0) = sampler.next();
        u(1) = sampler.next();
        if (is_zero_mat(u)) u(0) = 1;
        v(0) = sampler.next();
        v(1) = sampler.next();
        v(2) = sampler.next_nonzero();
        v(3) = sampler.next();
        v(4) = sampler.next();
        v(5) = -(v(0) * v(3) + v(1) * v(4)) / v(2);
    }
    throw std::runtime_error("fibre_over_zero_dimension: no generic point found");
}

// ---------------------------------------------------------------------------
// Exact group samplers.
// ---------------------------------------------------------------------------

struct GroupSample {
    Mat g;
    std::string word;
};

inline GroupSample sample_sl2(RationalSampler& sampler) {
    Rational a = sampler.next_nonzero();
    Rational b = sampler.next();
    Rational c = sampler.next();
    Rational d = (Rational(1) + b * c) / a;
    GroupSample s;
    s.g = Mat(2, 2);
    s.g << a, b, c, d;
    s.word = "[[" + to_string(a) + "," + to_string(b) + "],[" + to_string(c) + "," +
             to_string(d) + "]]";
    if (determinant_exact(s.g) != Rational(1))
        throw std::logic_error("sample_sl2: determinant is not 1");
    return s;
}

// The twelve elementary square-zero elements of so(Q): for i != j in
// {1,2,3} the root vectors E_{ij} - E_{j+3,i+3}, and for i < j the pairs
// E_{i,j+3} - E_{j,i+3} and E_{i+3,j} - E_{j+3,i}.
inline const std::vector<std::pair<std::string, Mat>>& so6_nilpotent_generators() {
    static const std::vector<std::pair<std::string, Mat>> gens = [] {
        std::vector<std::pair<std::string, Mat>> out;
        auto unit = [](int r, int c) {
            Mat m = Mat::Zero(6, 6);
            m(r - 1, c - 1) = 1;
            return m;
        };
        auto name = [](int a, int b, int c, int d) {
            return "E" + std::to_string(a) + std::to_string(b) + "-E" + std::to_string(c) +
                   std::to_string(d);
        };
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j)
                    out.push_back({name(i, j, j + 3, i + 3), unit(i, j) - unit(j + 3, i + 3)});
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                out.push_back({name(i, j + 3, j, i + 3), unit(i, j + 3) - unit(j, i + 3)});
                out.push_back({name(i + 3, j, j + 3, i), unit(i + 3, j) - unit(j + 3, i)});
            }
        return out;
    }();
    return gens;
}

inline GroupSample sample_so6(RationalSampler& sampler) {
    const auto& gens = so6_nilpotent_generators();
    int factors = static_cast<int>(sampler.next_int(3, 8));
    GroupSample s;
    s.g = Mat::Identity(6, 6);
    for (int k = 0; k < factors; ++k) {
        auto idx = static_cast<size_t>(sampler.next_int(0, static_cast<long>(gens.size()) - 1));
        Rational t = sampler.next_nonzero();
        Mat x = gens[idx].second;
        x *= t;
        s.g = s.g * exp_nilpotent(x);
        if (!s.word.empty()) s.word += " * ";
        s.word += "exp(" + to_string(t) + "*(" + gens[idx].first + "))";
    }
    if (!mats_equal(s.g.transpose() * Q6() * s.g, Q6()))
        throw std::logic_error("sample_so6: g^t Q g != Q");
    return s;
}

// Inverse inside SO(Q): g^{-1} = Q g^t Q.
inline Mat so6_inverse(const Mat& g) { return Q6() * g.transpose() * Q6(); }

}  // namespace slhilb
