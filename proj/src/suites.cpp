// The check registry: every verification the library supports, addressable
// by a stable id, grouped into suites, each with a one-line mathematical
// claim and a computation strategy. Checks are pure functions of the
// configuration; the per-check random stream is derived from the global
// seed and the check id, so reports are reproducible check by check.

#include <slhilb/fixedpoints.hpp>
#include <slhilb/json_io.hpp>
#include <slhilb/moment.hpp>
#include <slhilb/resolution.hpp>
#include <slhilb/sl2rep.hpp>
#include <slhilb/suites.hpp>
#include <slhilb/tangent.hpp>
#include <slhilb/wedge.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slhilb {
namespace {

// ---------------------------------------------------------------------------
// Registry scaffolding.
// ---------------------------------------------------------------------------

using CheckBody = std::function<std::pair<bool, Json>(const SuiteConfig&, std::uint64_t)>;

struct CheckDef {
    std::string id;
    std::string suite;
    std::string claim;     // mathematical statement, or "plumbing"
    std::string strategy;  // how the claim is computed, for `explain`
    CheckBody body;
};

// FNV-1a, hand-rolled so the id -> seed map is identical on every platform.
std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

int clamped_samples(const SuiteConfig& cfg, int lo, int hi) {
    return std::max(lo, std::min(cfg.samples, hi));
}

int clamped_truncation(const SuiteConfig& cfg, int lo, int hi) {
    return std::max(lo, std::min(cfg.truncation, hi));
}

// ---------------------------------------------------------------------------
// Shared sampling helpers.
// ---------------------------------------------------------------------------

Mat base_configuration() {
    Mat m = Mat::Zero(2, 6);
    m(0, 0) = 1;
    m(1, 1) = 1;
    return m;
}

Mat coordinate_plane(int i, int j) {
    Mat w = Mat::Zero(2, 6);
    w(0, i - 1) = 1;
    w(1, j - 1) = 1;
    return w;
}

// A random point of the zero fibre lying over the open stratum: an SL2
// translate of the base configuration moved by an orthogonal change of
// column coordinates.
Mat random_fibre_configuration(RationalSampler& sampler, const Mat& g_so6) {
    return Mat(fibre_over_A0(sample_sl2(sampler).g) * g_so6);
}

// A random isotropic plane: the orbit of the standard one.
Mat random_isotropic_plane(RationalSampler& sampler) {
    return Mat(coordinate_plane(1, 2) * sample_so6(sampler).g);
}

// A random nonzero isotropic vector in Q^6, solved against the pivot v3.
Vec random_isotropic_vector(RationalSampler& sampler) {
    Vec v(6);
    v(0) = sampler.next();
    v(1) = sampler.next();
    v(2) = sampler.next_nonzero();
    v(3) = sampler.next();
    v(4) = sampler.next();
    v(5) = -(v(0) * v(3) + v(1) * v(4)) / v(2);
    return v;
}

Mat random_matrix(RationalSampler& sampler, Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c) m(r, c) = sampler.next();
    return m;
}

Mat random_trace_zero_4x4(RationalSampler& sampler) {
    Mat b = random_matrix(sampler, 4, 4);
    b(3, 3) = -(b(0, 0) + b(1, 1) + b(2, 2));
    return b;
}

// b = u phi^t with phi(u) = 0: rank one, square zero, trace zero.
Mat random_rank1_nilpotent(RationalSampler& sampler, Vec& u_out, Vec& phi_out) {
    Vec u;
    do {
        u = random_matrix(sampler, 4, 1);
    } while (is_zero_mat(u));
    Mat phis = kernel_basis(Mat(u.transpose()));  // 4x3 columns
    Vec phi;
    do {
        Vec c = random_matrix(sampler, 3, 1);
        phi = phis * c;
    } while (is_zero_mat(phi));
    u_out = u;
    phi_out = phi;
    return Mat(u * phi.transpose());
}

// ---------------------------------------------------------------------------
// plumbing
// ---------------------------------------------------------------------------

std::pair<bool, Json> check_plumbing_rref(const SuiteConfig&, std::uint64_t seed) {
    RationalSampler sampler(seed);
    bool ok = true;
    int trials = 8;
    for (int t = 0; t < trials; ++t) {
        Index rows = static_cast<Index>(sampler.next_int(2, 5));
        Index cols = static_cast<Index>(sampler.next_int(2, 6));
        Mat m = random_matrix(sampler, rows, cols);
        auto red = rref(m);
        ok = ok && mats_equal(rref(red.reduced).reduced, red.reduced);
        ok = ok && (rank_of(m) == static_cast<Index>(red.pivot_columns.size()));
        Mat ker = kernel_basis(m);
        ok = ok && is_zero_mat(Mat(m * ker));
        ok = ok && (rank_of(m) + ker.cols() == cols);
    }
    Json w;
    w["trials"] = trials;
    w["properties"] = {"rref idempotent", "rank equals pivot count",
                       "kernel annihilated", "rank plus nullity equals columns"};
    return {ok, w};
}

std::pair<bool, Json> check_plumbing_exact(const SuiteConfig&, std::uint64_t seed) {
    RationalSampler sampler(seed);
    bool ok = true;

    // Telescoping sum that drifts under floating point.
    Rational sum(0);
    for (int k = 1; k <= 50; ++k) sum += Rational(1) / Rational(k * (k + 1));
    ok = ok && (sum == Rational(50) / Rational(51));

    // det = pf^2 on random skew 4x4 matrices.
    int skew_trials = 10;
    for (int t = 0; t < skew_trials; ++t) {
        Mat s = Mat::Zero(4, 4);
        for (Index i = 0; i < 4; ++i)
            for (Index j = i + 1; j < 4; ++j) {
                s(i, j) = sampler.next();
                s(j, i) = -s(i, j);
            }
        Rational pf = pfaffian4(s);
        ok = ok && (determinant_exact(s) == pf * pf);
    }

    // exp(N) exp(-N) = I for strictly upper triangular N.
    int exp_trials = 5;
    for (int t = 0; t < exp_trials; ++t) {
        Mat n = Mat::Zero(4, 4);
        for (Index i = 0; i < 4; ++i)
            for (Index j = i + 1; j < 4; ++j) n(i, j) = sampler.next();
        ok = ok && mats_equal(Mat(exp_nilpotent(n) * exp_nilpotent(Mat(-n))),
                              Mat::Identity(4, 4));
    }

    Json w;
    w["telescoping_sum"] = json_rational(sum);
    w["skew_trials"] = skew_trials;
    w["exp_trials"] = exp_trials;
    return {ok, w};
}

// ---------------------------------------------------------------------------
// moment
// ---------------------------------------------------------------------------

std::pair<bool, Json> check_moment_base_point(const SuiteConfig&, std::uint64_t) {
    OrbitElement el = quotient_map(base_configuration());
    bool ok = mats_equal(el.a, A0());
    ok = ok && (el.a(0, 4) == Rational(1)) && (el.a(1, 3) == Rational(-1));
    Rational off_diagonal_mass(0);
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 6; ++j)
            if (!((i == 0 && j == 4) || (i == 1 && j == 3)))
                off_diagonal_mass += el.a(i, j) * el.a(i, j);
    ok = ok && is_zero(off_diagonal_mass);
    ok = ok && (el.stratum == Stratum::rank2_orbit);
    Json w;
    w["image"] = json_matrix(el.a);
    w["stratum"] = stratum_name(el.stratum);
    return {ok, w};
}

std::pair<bool, Json> check_moment_conjugates(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 500);
    bool ok = orbit_closure_membership(A0()).member;
    std::vector<std::string> failures;
    for (int t = 0; t < count; ++t) {
        Mat g = sample_so6(sampler).g;
        Mat conj = so6_inverse(g) * A0() * g;
        auto cert = orbit_closure_membership(conj);
        if (!cert.member || cert.stratum != Stratum::rank2_orbit) {
            ok = false;
            for (const auto& f : cert.failures)
                failures.push_back("conjugate " + std::to_string(t) + ": " + f);
        }
    }
    Json w;
    w["conjugates"] = count;
    w["failures"] = failures;
    return {ok, w};
}

std::pair<bool, Json> check_moment_negative_controls(const SuiteConfig&, std::uint64_t) {
    bool ok = true;
    Json w;

    // The identity violates the Lie algebra condition, squares to itself
    // and has full rank.
    auto ident = orbit_closure_membership(Mat(Mat::Identity(6, 6)));
    ok = ok && !ident.member && ident.failures.size() == 3;
    w["identity_failures"] = ident.failures;

    // A Lie algebra element of rank 4 whose square is nonzero: it passes
    // the first condition and trips the other three.
    Mat x = Mat::Zero(6, 6);
    x(0, 0) = 1;
    x(1, 1) = 1;
    x(3, 3) = -1;
    x(4, 4) = -1;
    auto cert = orbit_closure_membership(x);
    bool in_algebra = true;
    for (const auto& f : cert.failures)
        if (f.find("so(Q)") != std::string::npos) in_algebra = false;
    ok = ok && !cert.member && in_algebra && cert.failures.size() >= 3;
    w["rank4_failures"] = cert.failures;

    // The closure is a cone: scaling the base matrix stays inside.
    auto scaled = orbit_closure_membership(Mat(Rational(2) * A0()));
    ok = ok && scaled.member && scaled.stratum == Stratum::rank2_orbit;
    w["scaled_base_member"] = scaled.member;

    // A configuration outside the zero fibre is tagged as such.
    Mat m = base_configuration();
    m(0, 3) = 1;  // makes M Q M^t nonzero
    ok = ok && !in_zero_fibre(m);
    ok = ok && (quotient_map(m).stratum == Stratum::outside);
    w["off_fibre_stratum"] = stratum_name(Stratum::outside);

    return {ok, w};
}

std::pair<bool, Json> check_moment_block_formula(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 200);
    bool ok = true;
    for (int t = 0; t < count; ++t) {
        Mat m = random_matrix(sampler, 2, 6);
        Mat direct = m.transpose() * J2() * m * Q6();
        ok = ok && mats_equal(direct, quotient_map_block_formula(m));
    }
    Json w;
    w["trials"] = count;
    return {ok, w};
}

// ---------------------------------------------------------------------------
// fibres
// ---------------------------------------------------------------------------

Json elimination_steps_json(const EliminationReport& rep) {
    Json steps = Json::array();
    for (const auto& s : rep.steps) steps.push_back({{"step", s.name}, {"residual", s.value}});
    return steps;
}

std::pair<bool, Json> check_fibres_elimination(const SuiteConfig&, std::uint64_t) {
    auto rep = fibre_elimination_check("x11");
    bool ok = rep.ok;
    // The four column eliminations must be derived, and every residual
    // identity must be the exact zero.
    int zero_steps = 0;
    int derived_columns = 0;
    for (const auto& s : rep.steps) {
        if (s.value == "0") ++zero_steps;
        if (s.name.size() == 7 && s.name.compare(3, 4, " = 0") == 0) ++derived_columns;
    }
    ok = ok && derived_columns == 8;  // x13..x16 and x23..x26
    ok = ok && zero_steps >= 8 + 15 + 3;
    Json w;
    w["pivot"] = rep.pivot;
    w["derived_vanishing_coordinates"] = derived_columns;
    w["zero_residuals"] = zero_steps;
    w["steps"] = elimination_steps_json(rep);
    return {ok, w};
}

std::pair<bool, Json> check_fibres_elimination_pivot(const SuiteConfig&, std::uint64_t) {
    auto rep = fibre_elimination_check("x12");
    bool ok = rep.ok;
    bool rejected = false;
    try {
        fibre_elimination_check("x13");
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    ok = ok && rejected;
    Json w;
    w["alternate_pivot_ok"] = rep.ok;
    w["invalid_pivot_rejected"] = rejected;
    return {ok, w};
}

std::pair<bool, Json> check_fibres_division_guard(const SuiteConfig&, std::uint64_t) {
    auto rep = fibre_elimination_check("x11", Rational(0));
    bool ok = !rep.ok && rep.failure.find("division guard") != std::string::npos;
    Json w;
    w["failure"] = rep.failure;
    return {ok, w};
}

std::pair<bool, Json> check_fibres_zero_dimension(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    auto rep = fibre_over_zero_dimension(sampler);
    bool ok = rep.quadric_rank == 5 && rep.cone_rank == 6 && rep.retries_used == 0;

    int count = clamped_samples(cfg, 1, 200);
    int random_ok = 0;
    for (int t = 0; t < count; ++t) {
        Vec u(2);
        do {
            u(0) = sampler.next();
            u(1) = sampler.next();
        } while (is_zero_mat(u));
        Vec v = random_isotropic_vector(sampler);
        auto r = zero_fibre_rank_at(u, v);
        if (r.generic && r.quadric_rank == 5 && r.cone_rank == 6) ++random_ok;
    }
    ok = ok && random_ok == count;

    Json w;
    w["fixed_point"] = {{"u", json_vector(rep.u)},
                        {"v", json_vector(rep.v)},
                        {"quadric_rank", rep.quadric_rank},
                        {"cone_rank", rep.cone_rank}};
    w["random_points"] = count;
    w["random_points_ok"] = random_ok;
    return {ok, w};
}

std::pair<bool, Json> check_fibres_sl2_invariance(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 50);
    bool ok = true;
    for (int t = 0; t < count; ++t) {
        Mat g6 = sample_so6(sampler).g;
        Mat m = random_fibre_configuration(sampler, g6);
        Mat h = sample_sl2(sampler).g;
        Mat moved = h * m;
        ok = ok && in_zero_fibre(moved);
        ok = ok && mats_equal(quotient_map(moved).a, quotient_map(m).a);
    }
    Json w;
    w["trials"] = count;
    return {ok, w};
}

// ---------------------------------------------------------------------------
// hilbert-function
// ---------------------------------------------------------------------------

std::pair<bool, Json> check_hilbert_isotypic_diagonal(const SuiteConfig& cfg, std::uint64_t) {
    int N = clamped_truncation(cfg, 2, 10);
    auto ring = ring_abcd();
    SparsePoly det = SparsePoly::variable(ring, "a") * SparsePoly::variable(ring, "d") -
                     SparsePoly::variable(ring, "b") * SparsePoly::variable(ring, "c");
    auto table = isotypic_table(ring, {det}, N);
    bool ok = true;
    for (int d = 0; d <= N; ++d)
        for (int n = 0; n <= N; ++n) {
            long expected = (d == n) ? d + 1 : 0;
            ok = ok && (table.at(d, n) == expected);
        }
    Json w;
    w["table"] = json_isotypic_table(table);
    return {ok, w};
}

std::pair<bool, Json> check_hilbert_h_values(const SuiteConfig& cfg, std::uint64_t) {
    int N = clamped_truncation(cfg, 2, 10);
    auto ring = ring_abcd();
    SparsePoly det = SparsePoly::variable(ring, "a") * SparsePoly::variable(ring, "d") -
                     SparsePoly::variable(ring, "b") * SparsePoly::variable(ring, "c");
    auto table = isotypic_table(ring, {det}, N);
    auto h = hilbert_function(table);
    bool ok = true;
    for (int d = 0; d <= N; ++d) ok = ok && (h.at(d).value == d + 1);
    Json w;
    w["h"] = json_hilbert_function(h);
    return {ok, w};
}

std::pair<bool, Json> check_hilbert_free_ring(const SuiteConfig& cfg, std::uint64_t) {
    int N = clamped_truncation(cfg, 2, 10);
    auto ring = ring_abcd();
    auto table = isotypic_table(ring, {}, N);
    bool ok = true;
    Json degrees = Json::array();
    for (int n = 0; n <= N; ++n) {
        long assembled = 0;
        for (int d = 0; d <= N; ++d) assembled += table.at(d, n) * (d + 1);
        long full = static_cast<long>((n + 1) * (n + 2)) * (n + 3) / 6;  // C(n+3,3)
        ok = ok && (assembled == full);
        degrees.push_back({{"degree", n}, {"assembled", assembled}, {"full", full}});
    }
    Json w;
    w["degrees"] = degrees;
    return {ok, w};
}

std::pair<bool, Json> check_hilbert_equivariance_guard(const SuiteConfig&, std::uint64_t) {
    auto ring = ring_abcd();
    auto var = [&](const std::string& n) { return SparsePoly::variable(ring, n); };
    SparsePoly det = var("a") * var("d") - var("b") * var("c");

    bool ok = check_equivariant_ideal({det});
    ok = ok && check_equivariant_ideal({var("a"), var("b"), var("c"), var("d")});
    ok = ok && !check_equivariant_ideal({var("a")});
    ok = ok && !check_equivariant_ideal({var("a"), var("b")});
    ok = ok && !check_equivariant_ideal({var("a") + var("d")});

    bool throws_on_table = false;
    try {
        isotypic_table(ring, {var("a")}, 4);
    } catch (const std::invalid_argument&) {
        throws_on_table = true;
    }
    ok = ok && throws_on_table;

    Json w;
    w["accepted"] = {"(ad - bc)", "(a, b, c, d)"};
    w["rejected"] = {"(a)", "(a, b)", "(a + d)"};
    w["table_rejects_non_equivariant"] = throws_on_table;
    return {ok, w};
}

// ---------------------------------------------------------------------------
// eta1
// ---------------------------------------------------------------------------

std::pair<bool, Json> check_eta1_kernel_a0(const SuiteConfig&, std::uint64_t seed) {
    RationalSampler sampler(seed);
    std::vector<Mat> samples = {base_configuration(),
                                fibre_over_A0(sample_sl2(sampler).g),
                                fibre_over_A0(sample_sl2(sampler).g)};
    auto rep = eta1_kernel(A0(), samples);
    bool ok = rep.ok && rep.kernel_dim == 4;

    Mat expected_kernel = Mat::Zero(4, 6);
    for (Index i = 0; i < 4; ++i) expected_kernel(i, i + 2) = 1;  // e3..e6
    ok = ok && row_space_equal(rep.kernel, expected_kernel);
    ok = ok && row_space_equal(rep.w, coordinate_plane(4, 5));
    ok = ok && is_isotropic(rep.w);
    ok = ok && row_space_equal(rep.w, A0());  // columns of A0^t = rows of A0

    Json w;
    w["kernel"] = json_matrix(rep.kernel);
    w["plane"] = json_matrix(rep.w);
    w["samples_used"] = rep.samples_used;
    return {ok, w};
}

std::pair<bool, Json> check_eta1_transported(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 100);
    bool ok = true;
    for (int t = 0; t < count; ++t) {
        Mat g = sample_so6(sampler).g;
        std::vector<Mat> samples = {random_fibre_configuration(sampler, g),
                                    random_fibre_configuration(sampler, g),
                                    random_fibre_configuration(sampler, g)};
        Mat a = quotient_map(samples.front()).a;
        auto rep = eta1_kernel(a, samples);
        ok = ok && rep.ok && rep.kernel_dim == 4 && is_isotropic(rep.w);
        // The plane transforms through the induced action on row space.
        Mat expected = coordinate_plane(4, 5) * Q6() * g * Q6();
        ok = ok && row_space_equal(rep.w, expected);
    }
    Json w;
    w["transports"] = count;
    return {ok, w};
}

std::pair<bool, Json> check_eta1_error_paths(const SuiteConfig&, std::uint64_t seed) {
    RationalSampler sampler(seed);
    bool ok = true;
    Json w;

    // A sample lying over a different element is refused.
    bool mismatch_rejected = false;
    try {
        Mat other = fibre_over_A0(sample_sl2(sampler).g) * sample_so6(sampler).g;
        eta1_kernel(A0(), {base_configuration(), other});
    } catch (const std::invalid_argument& e) {
        mismatch_rejected = true;
        w["mismatched_sample"] = e.what();
    }
    ok = ok && mismatch_rejected;

    // A sample outside the zero fibre is refused.
    bool off_fibre_rejected = false;
    try {
        Mat m = base_configuration();
        m(0, 3) = 1;
        eta1_kernel(A0(), {m});
    } catch (const std::invalid_argument& e) {
        off_fibre_rejected = true;
        w["off_fibre_sample"] = e.what();
    }
    ok = ok && off_fibre_rejected;

    // Over the most degenerate element the common kernel stays too big and
    // the report carries the dimension instead of a fabricated plane.
    Mat rank1 = Mat::Zero(2, 6);
    rank1(0, 0) = 1;  // u e1^t with u = e1: in the zero fibre, image zero
    auto rep = eta1_kernel(Mat(Mat::Zero(6, 6)), {rank1});
    ok = ok && !rep.ok && rep.kernel_dim == 5;
    ok = ok && rep.error.find("dimension 5") != std::string::npos;
    w["degenerate_element"] = rep.error;

    return {ok, w};
}

// ---------------------------------------------------------------------------
// fibre-E
// ---------------------------------------------------------------------------

bool fibre_line_certified(const Mat& w0, Json& detail) {
    auto result = fibre_E_solver(w0);
    bool ok = result.dimension == 1 && result.basis.size() == 1;
    if (!ok) {
        detail["dimension"] = result.dimension;
        return false;
    }
    const Mat& b = result.basis.front();
    // Scaling degrees make the identities at t = 1 equivalent to the
    // polynomial identities in t: A(t) = tB, so A(t)^2 = t^2 B^2 and every
    // Pfaffian is quadratic in the entries.
    ok = ok && is_zero_mat(Mat(b * b));
    auto cert = orbit_closure_membership(b);
    ok = ok && cert.member;
    ok = ok && row_space_contained(row_basis(b), row_basis(w0));
    detail["dimension"] = result.dimension;
    detail["generator"] = json_matrix(b);
    return ok;
}

std::pair<bool, Json> check_fibre_e_base(const SuiteConfig&, std::uint64_t) {
    Json w;
    bool ok = fibre_line_certified(coordinate_plane(1, 2), w);
    return {ok, w};
}

std::pair<bool, Json> check_fibre_e_second_plane(const SuiteConfig&, std::uint64_t) {
    auto result = fibre_E_solver(coordinate_plane(4, 5));
    bool ok = result.dimension == 1;
    Json w;
    w["dimension"] = result.dimension;
    if (ok) {
        const Mat& b = result.basis.front();
        Rational lambda = b(0, 4);  // the (1,5) entry of A0 is 1
        ok = !is_zero(lambda) && mats_equal(b, Mat(lambda * A0()));
        w["proportionality_factor"] = json_rational(lambda);
    }
    return {ok, w};
}

std::pair<bool, Json> check_fibre_e_sampled(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 50);
    bool ok = true;
    for (int t = 0; t < count; ++t) {
        Json detail;
        ok = ok && fibre_line_certified(random_isotropic_plane(sampler), detail);
    }
    Json w;
    w["planes"] = count;
    return {ok, w};
}

// ---------------------------------------------------------------------------
// subschemes
// ---------------------------------------------------------------------------

std::pair<bool, Json> check_subscheme_plane(const Mat& plane, const SuiteConfig& cfg,
                                            const std::vector<std::string>& expected_kept,
                                            const std::string& expected_quadric) {
    int N = clamped_truncation(cfg, 2, 8);
    SubschemeIdeal ideal = subscheme_ideal(Mat(Mat::Zero(6, 6)), plane);
    // The constructor has already verified that the three ambient quadratic
    // equations lie in the ideal; rebuild that containment explicitly so
    // the witness records it.
    auto gens = ideal.all();
    auto xv = [&](int row, int col) {
        return SparsePoly::variable(ideal.ring, "x" + std::to_string(row) + std::to_string(col));
    };
    bool contained = true;
    for (int p = 1; p <= 2; ++p)
        for (int q = p; q <= 2; ++q) {
            SparsePoly entry(ideal.ring);
            for (int i = 1; i <= 3; ++i)
                entry += xv(p, i) * xv(q, i + 3) + xv(p, i + 3) * xv(q, i);
            contained = contained && degree_slice_contains(gens, entry);
        }

    auto cert = certify_hilbert_function(ideal, N);
    bool ok = contained;
    ok = ok && ideal.v1_part.size() == 8;
    ok = ok && cert.kept_vars.size() == 4;
    ok = ok && cert.residual_rank == 1;
    auto h = hilbert_function(cert.table);
    for (int d = 0; d <= N; ++d) ok = ok && (h.at(d).value == d + 1);

    Json w;
    w["plane"] = json_matrix(plane);
    w["linear_forms_eliminated"] = ideal.v1_part.size();
    w["ambient_equations_contained"] = contained;
    w["residual_rank"] = cert.residual_rank;
    w["reduced_quadric"] = cert.reduced_quadric.to_string();
    std::vector<std::string> kept;
    for (int v : cert.kept_vars) kept.push_back(ideal.ring->names.at(static_cast<size_t>(v)));
    w["kept_variables"] = kept;
    w["h"] = json_hilbert_function(h);
    if (!expected_kept.empty()) ok = ok && (kept == expected_kept);
    if (!expected_quadric.empty()) ok = ok && (cert.reduced_quadric.to_string() == expected_quadric);
    return {ok, w};
}

std::pair<bool, Json> check_subschemes_base(const SuiteConfig& cfg, std::uint64_t) {
    return check_subscheme_plane(coordinate_plane(4, 5), cfg, {"x11", "x12", "x21", "x22"},
                                 "x11*x22 - x12*x21");
}

std::pair<bool, Json> check_subschemes_standard_plane(const SuiteConfig& cfg, std::uint64_t) {
    return check_subscheme_plane(coordinate_plane(1, 2), cfg, {"x14", "x15", "x24", "x25"},
                                 "x14*x25 - x15*x24");
}

std::pair<bool, Json> check_subschemes_sampled(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 50);
    bool ok = true;
    for (int t = 0; t < count; ++t) {
        SuiteConfig local = cfg;
        local.truncation = std::min(cfg.truncation, 6);
        auto [one_ok, detail] = check_subscheme_plane(random_isotropic_plane(sampler), local, {}, {});
        ok = ok && one_ok;
    }
    Json w;
    w["planes"] = count;
    return {ok, w};
}

std::pair<bool, Json> check_subschemes_failure_modes(const SuiteConfig&, std::uint64_t) {
    bool ok = true;
    Json w;

    bool non_isotropic_rejected = false;
    try {
        subscheme_ideal(Mat(Mat::Zero(6, 6)), coordinate_plane(1, 4));
    } catch (const std::invalid_argument& e) {
        non_isotropic_rejected = true;
        w["non_isotropic_plane"] = e.what();
    }
    ok = ok && non_isotropic_rejected;

    bool nonzero_point_rejected = false;
    try {
        subscheme_ideal(A0(), coordinate_plane(4, 5));
    } catch (const std::invalid_argument& e) {
        nonzero_point_rejected = true;
        w["nonzero_base_point"] = e.what();
    }
    ok = ok && nonzero_point_rejected;

    // Dropping the quadratic generators leaves the free quotient on four
    // variables, which is strictly too big.
    SubschemeIdeal ideal = subscheme_ideal(Mat(Mat::Zero(6, 6)), coordinate_plane(4, 5));
    ideal.invariant_part.clear();
    auto res = hilbert_check(ideal, 4);
    ok = ok && !res.ok && res.reason.find("too big") != std::string::npos;
    w["without_quadrics"] = res.reason;

    return {ok, w};
}

// ---------------------------------------------------------------------------
// tangent
// ---------------------------------------------------------------------------

std::pair<bool, Json> check_tangent_dimension(const SuiteConfig&, std::uint64_t) {
    auto p = canonical_hom_problem();
    auto sol = solve_equivariant_hom(p);
    bool ok = sol.dimension == 6;

    std::map<std::string, Index> expected{{"x11+x12", 1}, {"x13", 2}, {"x16", 2}, {"z", 1}};
    ok = ok && (sol.block_dimensions == expected);

    // Re-check the materialized assignments against every relation.
    int residuals_checked = 0;
    bool residuals_zero = true;
    for (const auto& assignment : sol.assignments)
        for (const auto& rel : p.relations) {
            SparsePoly acc(p.quotient_ring);
            for (const auto& [gen, coeff] : rel) acc += coeff * assignment.images.at(gen);
            RewriteSystem rw(p.quotient_ring);
            rw.set_quadric_from_generator(p.quadric);
            residuals_zero = residuals_zero && rw.normal_form(acc).is_zero();
            ++residuals_checked;
        }
    ok = ok && residuals_zero;

    Json w;
    w["tangent_dimension"] = sol.dimension;
    Json blocks;
    for (const auto& [label, dim] : sol.block_dimensions) blocks[label] = dim;
    w["free_parameter_blocks"] = blocks;
    w["relation_residuals_checked"] = residuals_checked;
    w["all_residuals_zero"] = residuals_zero;
    return {ok, w};
}

std::pair<bool, Json> check_tangent_target_spaces(const SuiteConfig& cfg, std::uint64_t) {
    int N = clamped_truncation(cfg, 2, 8);
    auto p = canonical_hom_problem();
    auto rep = target_spaces(p, N);
    bool ok = rep.ok();
    for (int d = 0; d <= N; ++d)
        for (int n = 0; n <= N; ++n)
            ok = ok && (rep.table.at(d, n) == ((d == n) ? d + 1 : 0));
    Json w;
    w["module_multiplicity_in_degree_1"] = rep.v1_multiplicity;
    w["violations"] = rep.violations;
    w["table"] = json_isotypic_table(rep.table);
    return {ok, w};
}

std::pair<bool, Json> check_tangent_translates(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 12);
    bool ok = true;
    Json translates = Json::array();
    for (int t = 0; t < count; ++t) {
        Mat plane = random_isotropic_plane(sampler);
        auto ideal = subscheme_ideal(Mat(Mat::Zero(6, 6)), plane);
        auto p = hom_problem_from_ideal(ideal);
        auto sol = solve_equivariant_hom(p);
        Index total = 0;
        for (const auto& [label, dim] : sol.block_dimensions) total += dim;
        bool this_ok = sol.dimension == 6 && total == 6 &&
                       sol.block_dimensions.at(p.invariant_name) == 1;
        ok = ok && this_ok;
        translates.push_back({{"plane", json_matrix(plane)}, {"dimension", sol.dimension}});
    }
    Json w;
    w["translates"] = translates;
    return {ok, w};
}

std::pair<bool, Json> check_tangent_smoothness(const SuiteConfig&, std::uint64_t) {
    auto rep = smoothness_report();
    bool ok = rep.smooth && rep.tangent_dimension == 6 && rep.orbit_dimension == 6 &&
              rep.parametrization_rank == 6;
    Json w;
    w["tangent_dimension"] = rep.tangent_dimension;
    w["orbit_dimension"] = rep.orbit_dimension;
    w["parametrization_rank"] = rep.parametrization_rank;
    w["smooth"] = rep.smooth;
    return {ok, w};
}

std::pair<bool, Json> check_tangent_fabricated(const SuiteConfig&, std::uint64_t) {
    bool ok = true;
    Json w;
    auto p = canonical_hom_problem();
    auto var = [&](const std::string& n) { return SparsePoly::variable(p.quotient_ring, n); };
    auto reject = [&](const Relation& extra, const std::string& key, const std::string& needle) {
        p.relations.push_back(extra);
        try {
            validate_hom_problem(p);
            ok = false;
            w[key] = "accepted (unexpected)";
        } catch (const std::invalid_argument& e) {
            w[key] = e.what();
            ok = ok && std::string(e.what()).find(needle) != std::string::npos;
        }
        p.relations.pop_back();
    };

    reject({{"x13", var("a")}, {"x23", var("b")}}, "weight_inhomogeneous", "weight-homogeneous");
    reject({{"x13", var("a")}}, "derivation_unstable", "stable under");
    reject({{"x99", var("a")}}, "unknown_generator", "unknown generator");
    return {ok, w};
}

// ---------------------------------------------------------------------------
// fixed-points
// ---------------------------------------------------------------------------

std::pair<bool, Json> check_fixed_sweep(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 100);
    bool ok = true;
    int isotropic_seen = 0;
    Json rows = Json::array();
    for (int t = 0; t < count; ++t) {
        Mat v = sample_fixed_subspace(sampler);
        auto datum = fixed_ideal_datum(v);
        // quadric_containment itself insists the two predicates agree.
        auto qc = quadric_containment(datum);
        auto hc = hilbert_check(fixed_ideal(datum), 4);
        bool this_ok = (qc.contained == qc.isotropic) && hc.ok;
        ok = ok && this_ok;
        if (qc.isotropic) ++isotropic_seen;
        rows.push_back({{"V", json_matrix(v)},
                        {"contained", qc.contained},
                        {"isotropic", qc.isotropic},
                        {"hilbert_ok", hc.ok}});
    }
    Json w;
    w["samples"] = count;
    w["isotropic_instances"] = isotropic_seen;
    w["rows"] = rows;
    return {ok, w};
}

std::pair<bool, Json> check_fixed_instances(const SuiteConfig&, std::uint64_t seed) {
    RationalSampler sampler(seed);
    bool ok = true;
    Json w;

    // Positive instance: the annihilator is the standard isotropic plane.
    Mat v_pos = Mat::Zero(4, 6);
    int pos_cols[4] = {1, 2, 3, 6};
    for (int r = 0; r < 4; ++r) v_pos(r, pos_cols[r] - 1) = 1;
    auto pos = quadric_containment(fixed_ideal_datum(v_pos));
    ok = ok && pos.contained && pos.isotropic;
    w["positive"] = {{"contained", pos.contained}, {"isotropic", pos.isotropic}};

    // Negative instance: the annihilator pairs to 1 under the form.
    Mat v_neg = Mat::Zero(4, 6);
    int neg_cols[4] = {2, 3, 5, 6};
    for (int r = 0; r < 4; ++r) v_neg(r, neg_cols[r] - 1) = 1;
    auto neg = quadric_containment(fixed_ideal_datum(v_neg));
    ok = ok && !neg.contained && !neg.isotropic;
    w["negative"] = {{"contained", neg.contained}, {"isotropic", neg.isotropic}};

    // Random positive instance built isotropic by construction.
    Mat plane = random_isotropic_plane(sampler);
    Mat v_rand = dot_annihilator(plane);
    auto datum = fixed_ideal_datum(v_rand);
    ok = ok && row_space_equal(datum.w, plane);
    auto rand_qc = quadric_containment(datum);
    ok = ok && rand_qc.contained && rand_qc.isotropic;
    w["random_isotropic"] = {{"contained", rand_qc.contained}, {"isotropic", rand_qc.isotropic}};

    return {ok, w};
}

std::pair<bool, Json> check_fixed_direction(const SuiteConfig&, std::uint64_t) {
    bool ok = true;
    Json w;

    Mat v5 = Mat::Zero(5, 6);
    int cols5[5] = {1, 2, 3, 4, 6};
    for (int r = 0; r < 5; ++r) v5(r, cols5[r] - 1) = 1;
    auto too_small = hilbert_check(homogeneous_ideal_from_forms(v5), 3);
    ok = ok && !too_small.ok && too_small.reason.find("too small") != std::string::npos;
    w["five_dimensional"] = too_small.reason;

    Mat v3 = Mat::Zero(3, 6);
    for (int r = 0; r < 3; ++r) v3(r, r) = 1;
    auto too_big = hilbert_check(homogeneous_ideal_from_forms(v3), 3);
    ok = ok && !too_big.ok && too_big.reason.find("too big") != std::string::npos;
    w["three_dimensional"] = too_big.reason;

    return {ok, w};
}

std::pair<bool, Json> check_fixed_scaling(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 100);
    bool ok = true;
    for (int t = 0; t < count; ++t) {
        Mat m = random_matrix(sampler, 2, 6);
        Rational s = sampler.next_nonzero();
        Mat lhs = quotient_map_block_formula(Mat(s * m));
        Mat rhs = s * s * quotient_map_block_formula(m);
        ok = ok && mats_equal(lhs, rhs);
    }
    Json w;
    w["trials"] = count;
    return {ok, w};
}

std::pair<bool, Json> check_fixed_equivariance(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 6);
    Mat v0 = Mat::Zero(4, 6);
    int cols[4] = {1, 2, 3, 6};
    for (int r = 0; r < 4; ++r) v0(r, cols[r] - 1) = 1;

    bool ok = true;
    for (int trial = 0; trial < count; ++trial) {
        auto g = sample_so6(sampler);
        auto base = fixed_ideal(fixed_ideal_datum(v0));
        auto moved = fixed_ideal(fixed_ideal_datum(Mat(v0 * g.g.transpose())));

        // Pull back the generators of the base ideal along M -> M g.
        std::map<int, SparsePoly> images;
        for (int row = 0; row < 2; ++row)
            for (int i = 0; i < 6; ++i) {
                SparsePoly image(base.ring);
                for (int j = 0; j < 6; ++j)
                    image += g.g(j, i) * SparsePoly::variable(base.ring, row * 6 + j);
                images[row * 6 + i] = image;
            }

        auto coeff_matrix = [&](const std::vector<SparsePoly>& forms) {
            Mat m = Mat::Zero(static_cast<Index>(forms.size()), 12);
            for (Index r = 0; r < m.rows(); ++r)
                for (const auto& [mono, c] : forms[static_cast<size_t>(r)].terms())
                    for (Index vv = 0; vv < 12; ++vv)
                        if (mono[static_cast<size_t>(vv)] == 1) m(r, vv) = c;
            return m;
        };
        std::vector<SparsePoly> pulled;
        for (const auto& f : base.v1_part) pulled.push_back(f.substitute(images));
        ok = ok && row_space_equal(coeff_matrix(pulled), coeff_matrix(moved.v1_part));

        // The pulled-back minors stay inside the span of the minors; the two
        // ideals carry distinct ring objects, so compare coefficient rows
        // over a shared monomial indexing.
        auto monos = monomials_of_degree(12, 2);
        std::map<Mono, Index> col;
        for (const auto& mono : monos) {
            Index next = static_cast<Index>(col.size());
            col.emplace(mono, next);
        }
        auto deg2_rows = [&](const std::vector<SparsePoly>& polys) {
            Mat m = Mat::Zero(static_cast<Index>(polys.size()), static_cast<Index>(col.size()));
            for (Index r = 0; r < m.rows(); ++r)
                for (const auto& [mono, c] : polys[static_cast<size_t>(r)].terms())
                    m(r, col.at(mono)) = c;
            return m;
        };
        std::vector<SparsePoly> pulled_minors;
        for (const auto& m : base.invariant_part) pulled_minors.push_back(m.substitute(images));
        ok = ok && row_space_contained(deg2_rows(pulled_minors), deg2_rows(moved.invariant_part));
    }
    Json w;
    w["trials"] = count;
    return {ok, w};
}

// ---------------------------------------------------------------------------
// wedge
// ---------------------------------------------------------------------------

std::pair<bool, Json> check_wedge_gram(const SuiteConfig&, std::uint64_t) {
    assert_wedge_basis_certificate();
    bool ok = mats_equal(wedge_gram(), Q6());
    Json w;
    w["gram"] = json_matrix(wedge_gram());
    return {ok, w};
}

std::pair<bool, Json> check_wedge_roundtrips(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 200);
    bool ok = true;
    int done = 0;
    while (done < count) {
        Vec l = random_matrix(sampler, 4, 1);
        if (is_zero_mat(l)) continue;
        Mat h(3, 4);
        h.row(0) = l.transpose();
        h.row(1) = random_matrix(sampler, 4, 1).transpose();
        h.row(2) = random_matrix(sampler, 4, 1).transpose();
        if (rank_of(h) != 3) continue;
        Mat w = flags_to_plane(Mat(l.transpose()), h);
        ok = ok && is_zero_mat(Mat(w * Q6() * w.transpose()));
        FlagTriple f = plane_to_flags(w);
        ok = ok && row_space_equal(f.line, Mat(l.transpose()));
        ok = ok && row_space_equal(f.hyperplane, h);
        ++done;
    }
    Json w;
    w["roundtrips"] = done;
    return {ok, w};
}

std::pair<bool, Json> check_wedge_chain(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 100);
    bool ok = true;
    for (int t = 0; t < count; ++t) {
        Vec u, phi;
        Mat b = random_rank1_nilpotent(sampler, u, phi);
        ok = ok && is_zero_mat(Mat(b * b)) && rank_of(b) == 1;

        Mat a = sl4_to_so6(b);
        auto cert = orbit_closure_membership(a);
        ok = ok && cert.member && cert.stratum == Stratum::rank2_orbit;

        Mat w = row_basis(a);
        if (w.rows() != 2) {
            ok = false;
            continue;
        }
        FlagTriple f = plane_to_flags(w);
        ok = ok && row_space_equal(f.line, Mat(u.transpose()));              // L = im b
        ok = ok && row_space_contained(Mat(u.transpose()), f.hyperplane);    // im b in H
        ok = ok && is_zero_mat(Mat(b * f.hyperplane.transpose()));           // H in ker b
        ok = ok && row_space_contained(f.line, f.hyperplane);
        ok = ok && row_space_equal(flags_to_plane(f.line, f.hyperplane), w);
    }
    Json w;
    w["elements"] = count;
    return {ok, w};
}

std::pair<bool, Json> check_wedge_lie_map(const SuiteConfig& cfg, std::uint64_t seed) {
    RationalSampler sampler(seed);
    int count = clamped_samples(cfg, 1, 50);
    bool ok = true;
    for (int t = 0; t < count; ++t) {
        Mat b1 = random_trace_zero_4x4(sampler);
        Mat b2 = random_trace_zero_4x4(sampler);
        Mat lhs = sl4_to_so6(Mat(b1 * b2 - b2 * b1));
        Mat d1 = sl4_to_so6(b1), d2 = sl4_to_so6(b2);
        ok = ok && mats_equal(lhs, Mat(d1 * d2 - d2 * d1));
        ok = ok && mats_equal(sl4_to_so6(Mat(b1 + b2)), Mat(d1 + d2));
    }
    Json w;
    w["pairs"] = count;
    return {ok, w};
}

std::pair<bool, Json> check_wedge_base_image(const SuiteConfig&, std::uint64_t) {
    bool ok = is_zero_mat(sl4_to_so6(Mat(Mat::Zero(4, 4))));

    Mat e14 = Mat::Zero(4, 4);
    e14(0, 3) = 1;
    Mat a = sl4_to_so6(e14);
    ok = ok && mats_equal(a, Mat(-A0().transpose()));
    auto cert = orbit_closure_membership(a);
    ok = ok && cert.member && cert.stratum == Stratum::rank2_orbit;

    bool traced_rejected = false;
    try {
        sl4_to_so6(Mat(Mat::Identity(4, 4)));
    } catch (const std::invalid_argument&) {
        traced_rejected = true;
    }
    ok = ok && traced_rejected;

    Json w;
    w["elementary_image"] = json_matrix(a);
    w["nonzero_trace_rejected"] = traced_rejected;
    return {ok, w};
}

// ---------------------------------------------------------------------------
// The registry.
// ---------------------------------------------------------------------------

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> v;
        auto add = [&](std::string id, std::string suite, std::string claim,
                       std::string strategy, CheckBody body) {
            v.push_back({std::move(id), std::move(suite), std::move(claim),
                         std::move(strategy), std::move(body)});
        };

        add("plumbing.rref", "plumbing", "plumbing",
            "Random rational matrices: row reduction is idempotent, the rank equals the pivot "
            "count, the kernel basis is annihilated, and rank plus nullity equals the column "
            "count.",
            check_plumbing_rref);
        add("plumbing.exact_arithmetic", "plumbing", "plumbing",
            "Exact rational identities that drift under floating point: a 50-term telescoping "
            "sum, det = pf^2 on random skew matrices, and exp(N)exp(-N) = I for nilpotent N.",
            check_plumbing_exact);

        add("moment.base_point", "moment",
            "The quotient map sends the base configuration [I|0] to the base matrix, whose only "
            "nonzero entries are +1 in position (1,5) and -1 in position (2,4).",
            "Evaluate M^t J M Q at the base configuration, compare entry-by-entry in exact "
            "rational arithmetic, and confirm the open-stratum tag.",
            check_moment_base_point);
        add("moment.conjugates", "moment",
            "The base matrix and its orthogonal conjugates satisfy all four membership "
            "conditions of the orbit closure: the Lie algebra identity, square zero, rank at "
            "most 2, and all 15 vanishing Pfaffians.",
            "Sample group elements as products of exponentials of nilpotent generators, "
            "conjugate the base matrix, and run the four membership tests exactly.",
            check_moment_conjugates);
        add("moment.negative_controls", "moment",
            "Matrices violating any membership condition are rejected with the specific failed "
            "conditions named, while scalar multiples of the base matrix stay inside the cone.",
            "Probe the identity matrix, a rank-4 Lie algebra element with nonzero square, a "
            "scaled base matrix, and a configuration outside the zero fibre.",
            check_moment_negative_controls);
        add("moment.block_formula", "moment",
            "The quotient map agrees entry-by-entry with the block formula assembling it from "
            "signed 2x2 column minors.",
            "Compare the direct matrix product against the minor formula on random rational "
            "configurations.",
            check_moment_block_formula);

        add("fibres.elimination", "fibres",
            "Over the base matrix the fibre equations force the last four columns of the "
            "configuration to vanish and make all remaining minor and moment identities hold "
            "identically in the three free coordinates.",
            "Run the symbolic elimination in the rational function field with pivot x11, "
            "checking that each derived identity reduces to the exact zero.",
            check_fibres_elimination);
        add("fibres.elimination_pivot", "fibres",
            "The elimination succeeds equally with the alternate pivot, and unknown pivots are "
            "rejected.",
            "Re-run the symbolic elimination with pivot x12 and probe an invalid pivot name.",
            check_fibres_elimination_pivot);
        add("fibres.division_guard", "fibres",
            "Degenerating the target minor to zero trips the division guard instead of "
            "silently dividing by a vanishing coefficient.",
            "Run the elimination with target value 0 and inspect the reported failure.",
            check_fibres_division_guard);
        add("fibres.zero_dimension", "fibres",
            "At generic points of the rank-one isotropic parametrisation the Jacobian has rank "
            "5 on the quadric directions and rank 6 on the full cone, so the fibre dimension "
            "jumps over the most singular point.",
            "Compute exact Jacobian ranks at the fixed generic point and at random generic "
            "points with isotropic second factor.",
            check_fibres_zero_dimension);
        add("fibres.sl2_invariance", "fibres",
            "Left multiplication by the special linear group preserves the zero fibre and "
            "leaves the quotient map value unchanged.",
            "Sample zero-fibre configurations and group elements, move the configuration, and "
            "compare quotient values exactly.",
            check_fibres_sl2_invariance);

        add("hilbert.isotypic_diagonal", "hilbert-function",
            "In the quotient of the four-variable ring by the determinant quadric, the "
            "irreducible of highest weight n appears exactly n+1 times, concentrated in degree "
            "n.",
            "Count weight-space dimensions of monomials modulo the ideal slice degree by "
            "degree and assemble multiplicities by telescoping.",
            check_hilbert_isotypic_diagonal);
        add("hilbert.h_values", "hilbert-function",
            "The multiplicity function of the quotient ring is h(d) = d+1 throughout the "
            "inspected window.",
            "Sum each row of the isotypic table and compare against d+1.",
            check_hilbert_h_values);
        add("hilbert.free_ring_counts", "hilbert-function",
            "The isotypic multiplicities of the free four-variable ring reassemble the full "
            "graded dimension binom(n+3, 3) in every degree.",
            "Compute the isotypic table with the zero ideal and compare the weighted "
            "multiplicity sums with the closed-form dimension count.",
            check_hilbert_free_ring);
        add("hilbert.equivariance_guard", "hilbert-function",
            "Generator sets that do not span a subrepresentation are rejected by the "
            "infinitesimal test and by the table construction.",
            "Apply both derivations to each generator and test membership in the matching "
            "ideal slice; probe accepting and rejecting instances.",
            check_hilbert_equivariance_guard);

        add("eta1.kernel.A0", "eta1",
            "The common kernel of the configurations lying over the base matrix is spanned by "
            "the last four coordinate vectors, and its orthocomplement under the symmetric "
            "form is the isotropic plane spanned by the fourth and fifth basis vectors, equal "
            "to the row space of the base matrix.",
            "Stack fibre samples, compute the exact common kernel, take the orthocomplement, "
            "and compare all three subspaces as row spaces.",
            check_eta1_kernel_a0);
        add("eta1.transported", "eta1",
            "The kernel recovery commutes with the orthogonal action: fibres transported by a "
            "group element recover the transported plane.",
            "Sample group elements, build fibre samples over the moved base matrix, and compare "
            "the recovered plane with the image of the standard plane under the induced row "
            "action.",
            check_eta1_transported);
        add("eta1.error_paths", "eta1",
            "Samples over the wrong element or outside the zero fibre are refused, and over "
            "the most degenerate element the recovery reports the oversized kernel instead of "
            "fabricating a plane.",
            "Probe the three failure paths and inspect the reported errors.",
            check_eta1_error_paths);

        add("fibre-E.base", "fibre-E",
            "The linear system cutting the bundle fibre over the standard isotropic plane has "
            "solution dimension exactly 1, and the resulting one-parameter family satisfies "
            "the square-zero and all 15 Pfaffian identities identically in the parameter.",
            "Solve the exact linear system, then reduce the polynomial identities in t to "
            "their values at t = 1 by homogeneity of degree 2.",
            check_fibre_e_base);
        add("fibre-E.second_plane", "fibre-E",
            "Over the plane spanned by the fourth and fifth basis vectors the fibre line is "
            "spanned by the base matrix itself.",
            "Solve the system and exhibit the exact proportionality factor.",
            check_fibre_e_second_plane);
        add("fibre-E.sampled", "fibre-E",
            "The fibre dimension is exactly 1 over sampled isotropic planes.",
            "Transport the standard plane by random orthogonal elements and solve the system "
            "over each.",
            check_fibre_e_sampled);

        add("subschemes.base", "subschemes",
            "The ideal attached to the pair (zero matrix, plane spanned by the fourth and "
            "fifth basis vectors) reduces to the single quadric x11*x22 - x12*x21 after "
            "eliminating eight linear forms, contains the three ambient quadratic equations, "
            "and certifies the multiplicity function h(d) = d+1.",
            "Eliminate the linear generators by exact row reduction, reduce the 15 minors to "
            "normal form, verify the residual rank is 1, and certify the isotypic table of "
            "the reduced quotient.",
            check_subschemes_base);
        add("subschemes.standard_plane", "subschemes",
            "Over the plane spanned by the first two basis vectors the same reduction keeps "
            "the variables of columns four and five with quadric x14*x25 - x15*x24.",
            "Same elimination and certification with the complementary coordinate plane.",
            check_subschemes_standard_plane);
        add("subschemes.sampled", "subschemes",
            "Sampled isotropic planes produce ideals with the same certification: eight "
            "linear forms, one residual quadric, multiplicity function h(d) = d+1.",
            "Transport the standard plane by random orthogonal elements and repeat the full "
            "certification for each.",
            check_subschemes_sampled);
        add("subschemes.failure_modes", "subschemes",
            "Non-isotropic planes and nonzero base points are rejected at construction, and "
            "dropping the quadratic generators leaves a strictly larger quotient.",
            "Probe the two constructor guards and re-certify a deliberately truncated ideal.",
            check_subschemes_failure_modes);

        add("tangent.dimension", "tangent",
            "The space of equivariant module homomorphisms from the conormal module to the "
            "quotient ring has dimension exactly 6, with free parameters in blocks of sizes "
            "1, 2, 2, 1.",
            "Set up the unknown images with equivariance already imposed, expand the three "
            "relation constraints to normal form, and compute the exact kernel of the "
            "constraint matrix together with its block decomposition.",
            check_tangent_dimension);
        add("tangent.target_spaces", "tangent",
            "In the quotient ring the trivial representation occurs only in degree 0 and the "
            "two-dimensional representation only in degree 1, with multiplicity 2, so the "
            "unknown images live in a 9-parameter space before the relations.",
            "Compute the isotypic table of the quotient and scan it for stray occurrences.",
            check_tangent_target_spaces);
        add("tangent.translates", "tangent",
            "The tangent dimension is 6 for subschemes attached to transported isotropic "
            "planes, rebuilt from their ideals rather than from the canonical coordinates.",
            "Eliminate each translated ideal, reconstruct the homomorphism problem by exact "
            "division, solve, and compare dimensions and block totals.",
            check_tangent_translates);
        add("tangent.smoothness", "tangent",
            "Tangent dimension, the dimension of the orbit through the base matrix, and the "
            "rank of the rank-one parametrisation all equal 6, certifying smoothness at the "
            "distinguished point.",
            "Combine the homomorphism solver with the exact commutator rank and the "
            "parametrisation Jacobian rank; equality of upper and lower bounds pins the "
            "value.",
            check_tangent_smoothness);
        add("tangent.fabricated_rejection", "tangent",
            "Relations that are weight-inhomogeneous, unstable under the derivations, or "
            "touch unknown generators are rejected at validation.",
            "Append fabricated relations to the canonical problem and confirm each is "
            "refused with a descriptive error.",
            check_tangent_fabricated);

        add("fixed-points.sweep", "fixed-points",
            "For sampled four-dimensional spaces of linear forms, the certified multiplicity "
            "function matches the target, and containment of the ambient quadratic equations "
            "coincides with isotropy of the annihilator plane.",
            "Sample full-rank spaces, build each homogeneous ideal, certify the quotient, and "
            "evaluate both predicates of the criterion independently.",
            check_fixed_sweep);
        add("fixed-points.instances", "fixed-points",
            "Deliberate positive and negative instances realise both outcomes of the "
            "criterion: (contained, isotropic) = (true, true) and (false, false).",
            "Evaluate the paired predicates on coordinate subspaces with isotropic and "
            "non-isotropic annihilators and on a random isotropic instance.",
            check_fixed_instances);
        add("fixed-points.direction", "fixed-points",
            "Five-dimensional spaces of linear forms leave too small a quotient and "
            "three-dimensional spaces too large a one, so the dimension 4 is forced.",
            "Run the certification on deliberately mis-sized spaces and inspect the failure "
            "direction.",
            check_fixed_direction);
        add("fixed-points.scaling", "fixed-points",
            "Scaling a configuration multiplies its quotient-map value by the square of the "
            "scalar, so the fixed-point analysis descends to the cone.",
            "Compare the quotient of a scaled random configuration with the scaled quotient, "
            "exactly.",
            check_fixed_scaling);
        add("fixed-points.equivariance", "fixed-points",
            "The fixed-ideal construction commutes with the orthogonal action on column "
            "space: pulled-back generators span the generators of the moved ideal.",
            "Pull back generators along the substitution induced by a sampled group element "
            "and compare linear slices and minor spans as exact row spaces.",
            check_fixed_equivariance);

        add("wedge.gram", "wedge",
            "The Gram matrix of the wedge pairing in the chosen basis of the second exterior "
            "power equals the symmetric form Q exactly.",
            "Evaluate all pairwise wedges of the six basis bivectors against the volume form.",
            check_wedge_gram);
        add("wedge.roundtrips", "wedge",
            "Converting a flag to its isotropic plane of bivectors and back is the identity.",
            "Sample random full flags, map line-inside-hyperplane to the plane of wedges, "
            "recover the flag, and compare row spaces exactly.",
            check_wedge_roundtrips);
        add("wedge.chain", "wedge",
            "Rank-one square-zero trace-free elements map into the orbit closure, and the "
            "associated flag satisfies the exact chain: image inside line inside hyperplane "
            "inside kernel.",
            "Build rank-one nilpotents u phi^t with phi(u) = 0, push them through the "
            "correspondence, and verify the four containments as exact subspace inclusions.",
            check_wedge_chain);
        add("wedge.lie_map", "wedge",
            "The correspondence into the orthogonal Lie algebra preserves brackets and sums.",
            "Compare images of commutators with commutators of images on sampled trace-free "
            "pairs.",
            check_wedge_lie_map);
        add("wedge.base_image", "wedge",
            "The elementary nilpotent with a single entry in the corner maps to the negative "
            "transpose of the base matrix, landing in the open stratum; nonzero traces are "
            "rejected.",
            "Evaluate the correspondence at the elementary matrix and compare entry-by-entry.",
            check_wedge_base_image);

        std::sort(v.begin(), v.end(),
                  [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
        return v;
    }();
    return defs;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& def : registry())
        if (def.id == id) return def;
    throw std::invalid_argument("unknown check id: " + id);
}

CheckRecord execute(const CheckDef& def, const SuiteConfig& config) {
    CheckRecord rec;
    rec.id = def.id;
    rec.suite = def.suite;
    rec.claim = def.claim;
    std::uint64_t seed = static_cast<std::uint64_t>(config.seed) ^ fnv1a64(def.id);
    auto start = std::chrono::steady_clock::now();
    try {
        auto [pass, witness] = def.body(config, seed);
        rec.pass = pass;
        rec.witness = std::move(witness);
    } catch (const std::exception& e) {
        rec.pass = false;
        rec.witness = Json{{"error", e.what()}};
    }
    auto stop = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return rec;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"plumbing",   "moment",       "fibres", "hilbert-function", "eta1",
            "fibre-E",    "subschemes",   "tangent", "fixed-points",    "wedge",
            "all"};
}

bool is_known_suite(const std::string& name) {
    auto names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& def : registry()) ids.push_back(def.id);
    return ids;
}

SuiteReport run_suite(const SuiteConfig& config) {
    if (!is_known_suite(config.suite))
        throw std::invalid_argument("unknown suite: " + config.suite);
    SuiteReport report;
    report.config = config;
    for (const auto& def : registry()) {
        if (config.suite != "all" && def.suite != config.suite) continue;
        CheckRecord rec = execute(def, config);
        if (rec.pass)
            ++report.passed;
        else
            ++report.failed;
        report.checks.push_back(std::move(rec));
    }
    return report;
}

CheckRecord run_check(const std::string& id, const SuiteConfig& config) {
    return execute(find_check(id), config);
}

std::string explain_check(const std::string& id) {
    const CheckDef& def = find_check(id);
    std::string out;
    out += "check:    " + def.id + "\n";
    out += "suite:    " + def.suite + "\n";
    out += "claim:    " + def.claim + "\n";
    out += "strategy: " + def.strategy + "\n";
    return out;
}

Json report_json(const SuiteReport& report) {
    Json checks = Json::array();
    for (const auto& rec : report.checks)
        checks.push_back({{"id", rec.id},
                          {"suite", rec.suite},
                          {"claim", rec.claim},
                          {"status", rec.pass ? "pass" : "fail"},
                          {"witness", rec.witness},
                          {"wall_ms", rec.wall_ms}});
    return Json{{"schema", 1},
                {"config",
                 {{"suite", report.config.suite},
                  {"seed", report.config.seed},
                  {"truncation", report.config.truncation},
                  {"samples", report.config.samples}}},
                {"checks", checks},
                {"summary",
                 {{"passed", report.passed},
                  {"failed", report.failed},
                  {"total", report.passed + report.failed}}}};
}

}  // namespace slhilb
