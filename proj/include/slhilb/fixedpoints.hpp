#pragma once

// The fixed-point analysis for the scaling action. A homogeneous invariant
// ideal with the right Hilbert function is determined by a four-dimensional
// space V of linear forms on the six columns: the ideal is generated by the
// two copies of V (one per matrix row) together with all fifteen column
// minors. The dot annihilator W of V is the two-dimensional space of rows
// that survive; whether the ambient quadratic equations already lie in the
// ideal is equivalent to W being isotropic for the symmetric form Q, and
// the pair of predicates is computed by independent routes and compared.

#include "slhilb/moment.hpp"
#include "slhilb/resolution.hpp"

#include <string>
#include <vector>

namespace slhilb {

// A four-dimensional subspace of column space, with its derived two
// dimensional dot annihilator.
struct FixedIdealDatum {
    Mat v;  // 4x6, rows a basis of the subspace of linear forms
    Mat w;  // 2x6, rows a basis of { w : V w^t = 0 }
};

inline FixedIdealDatum fixed_ideal_datum(const Mat& v) {
    if (v.rows() != 4 || v.cols() != 6)
        throw std::invalid_argument("fixed_ideal_datum: expected a 4x6 basis matrix");
    if (rank_of(v) != 4)
        throw std::invalid_argument("fixed_ideal_datum: basis matrix does not have rank 4");
    FixedIdealDatum d;
    d.v = v;
    d.w = dot_annihilator(v);
    if (d.w.rows() != 2 || !is_zero_mat(d.w * v.transpose()))
        throw std::logic_error("fixed_ideal_datum: annihilator computation failed");
    return d;
}

// The homogeneous ideal generated by both row-copies of a space of linear
// forms together with all fifteen minors. No dimension or isotropy
// condition is imposed here; fixed_ideal adds the dimension check.
inline SubschemeIdeal homogeneous_ideal_from_forms(const Mat& v) {
    if (v.cols() != 6)
        throw std::invalid_argument("homogeneous_ideal_from_forms: expected six columns");
    SubschemeIdeal ideal;
    ideal.ring = ring_x26();
    ideal.invariant_part = all_minor_polys(ideal.ring);
    for (Index r = 0; r < v.rows(); ++r)
        for (int row = 1; row <= 2; ++row) {
            SparsePoly form(ideal.ring);
            for (Index i = 0; i < 6; ++i)
                form += v(r, i) * SparsePoly::variable(
                                      ideal.ring,
                                      "x" + std::to_string(row) + std::to_string(i + 1));
            ideal.v1_part.push_back(form);
        }
    return ideal;
}

// True iff every generator is homogeneous for the scaling grading.
inline bool homogeneity_audit(const SubschemeIdeal& ideal) {
    for (const auto& g : ideal.all()) {
        if (g.is_zero()) continue;
        bool first = true;
        int degree = 0;
        for (const auto& [m, c] : g.terms()) {
            int d = ideal.ring->mono_cstar(m);
            if (first) {
                degree = d;
                first = false;
            } else if (d != degree) {
                return false;
            }
        }
    }
    return true;
}

// The candidate fixed ideal of a four-dimensional subspace. The generators
// are scaling-homogeneous and span an equivariant ideal by construction;
// both facts are re-checked and a violation is an internal error.
inline SubschemeIdeal fixed_ideal(const FixedIdealDatum& datum) {
    SubschemeIdeal ideal = homogeneous_ideal_from_forms(datum.v);
    if (!homogeneity_audit(ideal))
        throw std::logic_error("fixed_ideal: generators are not scaling-homogeneous");
    if (!check_equivariant_ideal(ideal.all()))
        throw std::logic_error("fixed_ideal: generators do not span an equivariant ideal");
    return ideal;
}

// ---------------------------------------------------------------------------
// Hilbert-function check against the target decomposition.
// ---------------------------------------------------------------------------

struct HilbertCheckResult {
    bool ok = false;
    std::string reason;  // mentions "too small" or "too big" on failure
};

// True iff the quotient by the ideal realises the target decomposition:
// the irreducible of highest weight d appearing exactly d+1 times, all in
// degree d, throughout the inspected window. Failures carry the direction
// of the defect.
inline HilbertCheckResult hilbert_check(const SubschemeIdeal& ideal, int N = 6) {
    auto elim = eliminate_linear_generators(ideal);
    if (elim.kept_vars.size() > 4)
        return {false,
                "too big: " + std::to_string(elim.kept_vars.size()) +
                    " coordinates survive elimination, so the quotient strictly contains "
                    "the target"};

    auto cert = certify_hilbert_function(ideal, N);
    for (int n = 0; n <= N; ++n)
        for (int d = 0; d <= N; ++d) {
            Index expected = d == n ? d + 1 : 0;
            Index got = cert.table.at(d, n);
            if (got == expected) continue;
            std::string where = "the irreducible of highest weight " + std::to_string(d) +
                                " appears " + std::to_string(got) + " times in degree " +
                                std::to_string(n) + " (expected " +
                                std::to_string(expected) + ")";
            if (got < expected) return {false, "too small: " + where};
            return {false, "too big: " + where};
        }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// The containment <-> isotropy criterion.
// ---------------------------------------------------------------------------

struct QuadricContainment {
    bool contained = false;  // ambient quadratic equations lie in the ideal
    bool isotropic = false;  // the dot annihilator is isotropic for Q
};

// Evaluates both predicates by independent routes and insists they agree:
// containment by exact membership of the three ambient equations in the
// degree-2 slice of the ideal, isotropy by evaluating the form on the
// annihilator. Disagreement would falsify the criterion and is an error.
inline QuadricContainment quadric_containment(const FixedIdealDatum& datum) {
    SubschemeIdeal ideal = fixed_ideal(datum);
    auto gens = ideal.all();

    QuadricContainment result;
    result.contained = true;
    auto xv = [&](int row, int col) {
        return SparsePoly::variable(ideal.ring,
                                    "x" + std::to_string(row) + std::to_string(col));
    };
    for (int s = 1; s <= 2 && result.contained; ++s)
        for (int t = s; t <= 2 && result.contained; ++t) {
            SparsePoly entry(ideal.ring);
            for (int i = 1; i <= 3; ++i)
                entry += xv(s, i) * xv(t, i + 3) + xv(s, i + 3) * xv(t, i);
            if (!degree_slice_contains(gens, entry)) result.contained = false;
        }

    result.isotropic = is_zero_mat(datum.w * Q6() * datum.w.transpose());

    if (result.contained != result.isotropic)
        throw std::logic_error(
            "quadric_containment: containment and isotropy disagree, falsifying the "
            "criterion");
    return result;
}

// Random four-dimensional subspaces for the sweep.
inline Mat sample_fixed_subspace(RationalSampler& sampler, int max_retries = 10) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Mat v(4, 6);
        for (Index r = 0; r < 4; ++r)
            for (Index c = 0; c < 6; ++c) v(r, c) = sampler.next();
        if (rank_of(v) == 4) return v;
    }
    throw std::runtime_error("sample_fixed_subspace: no full-rank sample found");
}

}  // namespace slhilb
