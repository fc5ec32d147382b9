#pragma once

// Isotropic 2-planes in Q^6, the incidence condition im A^t subset W, the
// kernel computation recovering W from fibre samples, the one-dimensional
// bundle fibre E, and the explicit subscheme ideals over the zero stratum
// with exact Hilbert-function certification.

#include "slhilb/matrix.hpp"
#include "slhilb/moment.hpp"
#include "slhilb/poly.hpp"
#include "slhilb/sl2rep.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace slhilb {

// Pairing <p, q> = p^t Q q. Rows of the argument span the subspace.
inline bool is_isotropic(const Mat& w) {
    if (w.cols() != 6) throw std::invalid_argument("is_isotropic: expected row vectors in Q^6");
    if (rank_of(w) < 2) throw std::invalid_argument("is_isotropic: expected a rank-2 plane");
    return is_zero_mat(w * Q6() * w.transpose());
}

// Rows spanning S^perp = {p : p^t Q s = 0 for all rows s}: the kernel of
// S Q acting on column vectors, returned as rows.
inline Mat q_orthocomplement(const Mat& s) {
    if (s.cols() != 6) throw std::invalid_argument("q_orthocomplement: expected row vectors in Q^6");
    return kernel_basis(Mat(s * Q6())).transpose();
}

// Rows spanning the dot-pairing annihilator {v : s v = 0} of the row space.
inline Mat dot_annihilator(const Mat& s) {
    return kernel_basis(s).transpose();
}

// im A^t subset row-space(W): every row of A lies in the row space of W.
inline bool incidence_check(const Mat& a, const Mat& w) {
    if (a.rows() != 6 || a.cols() != 6 || w.cols() != 6)
        throw std::invalid_argument("incidence_check: expected 6x6 A and rows W in Q^6");
    return row_space_contained(a, w);
}

// ---------------------------------------------------------------------------
// Recovering the plane W from fibre samples over an open-orbit element.
// ---------------------------------------------------------------------------

struct Eta1Report {
    bool ok = false;
    Index kernel_dim = 0;
    Mat kernel;  // rows span the common null space of the samples
    Mat w;       // rows span the recovered isotropic plane (valid when ok)
    int samples_used = 0;
    std::string error;
};

// Common null space of the fibre samples, then its Q-orthocomplement. For A
// in the open orbit two generic samples already cut the null space down to
// dimension 4; more samples are consumed (up to the bound) if not. The
// recovered plane must be isotropic and must equal im A^t exactly.
inline Eta1Report eta1_kernel(const Mat& a, const std::vector<Mat>& samples,
                              int max_samples = 6) {
    if (samples.empty()) throw std::invalid_argument("eta1_kernel: need at least one sample");
    for (const auto& m : samples) {
        if (!in_zero_fibre(m))
            throw std::invalid_argument("eta1_kernel: sample not in the zero fibre");
        if (!mats_equal(quotient_map(m).a, a))
            throw std::invalid_argument("eta1_kernel: sample does not map to the given element");
    }
    Eta1Report rep;
    int used = 0;
    Mat stacked;
    for (const auto& m : samples) {
        stacked = used == 0 ? m : stack_rows<Rational>(stacked, m);
        ++used;
        rep.kernel_dim = 6 - rank_of(stacked);
        if (rep.kernel_dim <= 4 || used >= max_samples) break;
    }
    rep.samples_used = used;
    rep.kernel = kernel_basis(stacked).transpose();
    if (rep.kernel_dim != 4) {
        rep.error = "common kernel has dimension " + std::to_string(rep.kernel_dim) +
                    ", expected 4 (element outside the open orbit or degenerate samples)";
        return rep;
    }
    rep.w = q_orthocomplement(rep.kernel);
    if (rep.w.rows() != 2 || !is_isotropic(rep.w)) {
        rep.error = "recovered plane is not a rank-2 isotropic plane";
        return rep;
    }
    if (!row_space_equal(rep.w, a)) {
        rep.error = "recovered plane does not equal im A^t";
        return rep;
    }
    rep.ok = true;
    return rep;
}

// ---------------------------------------------------------------------------
// The bundle fibre E over an isotropic plane.
// ---------------------------------------------------------------------------

struct FibreEResult {
    Index dimension = 0;
    std::vector<Mat> basis;  // 6x6 matrices spanning the solution space
};

// Solves {A : A in so(Q), im A^t subset W, W^perp subset ker A^t} exactly
// and certifies that every line t*B in the solution space satisfies A^2 = 0
// and all 15 Pfaffian conditions identically in t.
inline FibreEResult fibre_E_solver(const Mat& w0) {
    if (!is_isotropic(w0)) throw std::invalid_argument("fibre_E_solver: plane is not isotropic");

    // Unknown A as a 36-vector, row-major: A(i,j) = x[6i+j].
    std::vector<std::vector<Rational>> rows;
    auto push_equation = [&](const Mat& coeff) {  // sum coeff(i,j) A(i,j) = 0
        std::vector<Rational> r(36, Rational(0));
        for (Index i = 0; i < 6; ++i)
            for (Index j = 0; j < 6; ++j) r[static_cast<size_t>(6 * i + j)] = coeff(i, j);
        rows.push_back(std::move(r));
    };
    // A^t Q + Q A = 0: entry (p,q) reads A(q', p)... write as sum over A(i,j)
    // with explicit coefficients: (A^t Q)(p,q) = A(sigma(q), p)?? Use a
    // coefficient matrix per (p,q): d/dA(i,j) [ (A^tQ + QA)(p,q) ].
    for (Index p = 0; p < 6; ++p)
        for (Index q = 0; q < 6; ++q) {
            Mat coeff = Mat::Zero(6, 6);
            // (A^t Q)(p,q) = sum_k A(k,p) Q(k,q); (Q A)(p,q) = sum_k Q(p,k) A(k,q)
            for (Index k = 0; k < 6; ++k) {
                coeff(k, p) += Q6()(k, q);
                coeff(k, q) += Q6()(p, k);
            }
            push_equation(coeff);
        }
    // rows of A in row-space(w0): A n = 0 for n spanning the dot-annihilator
    Mat ann = dot_annihilator(w0);  // rows n with w0 n^t = 0
    for (Index r = 0; r < ann.rows(); ++r)
        for (Index i = 0; i < 6; ++i) {
            Mat coeff = Mat::Zero(6, 6);
            for (Index j = 0; j < 6; ++j) coeff(i, j) = ann(r, j);
            push_equation(coeff);
        }
    // W^perp subset ker A^t: A^t q = 0, i.e. q^t A = 0 row-wise
    Mat perp = q_orthocomplement(w0);
    for (Index r = 0; r < perp.rows(); ++r)
        for (Index j = 0; j < 6; ++j) {
            Mat coeff = Mat::Zero(6, 6);
            for (Index i = 0; i < 6; ++i) coeff(i, j) = perp(r, i);
            push_equation(coeff);
        }

    Mat system(static_cast<Index>(rows.size()), 36);
    for (Index i = 0; i < system.rows(); ++i)
        for (Index j = 0; j < 36; ++j)
            system(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Mat kb = kernel_basis(system);
    FibreEResult out;
    out.dimension = kb.cols();
    for (Index c = 0; c < kb.cols(); ++c) {
        Mat b(6, 6);
        for (Index i = 0; i < 6; ++i)
            for (Index j = 0; j < 6; ++j) b(i, j) = kb(6 * i + j, c);
        out.basis.push_back(b);
    }
    if (out.dimension != 1)
        throw std::logic_error("fibre_E_solver: fibre dimension is " +
                               std::to_string(out.dimension) + ", expected 1");

    // Certify A(t) = t*B: A(t)^2 = 0 and all 15 Pfaffians of Q A(t) vanish
    // identically in t, by exact polynomial coefficient comparison.
    auto tring = ring_t();
    SparsePoly t = SparsePoly::variable(tring, 0);
    const Mat& b = out.basis.front();
    std::vector<std::vector<SparsePoly>> at(6, std::vector<SparsePoly>(6, SparsePoly(tring)));
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 6; ++j) at[static_cast<size_t>(i)][static_cast<size_t>(j)] = b(i, j) * t;
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 6; ++j) {
            SparsePoly acc(tring);
            for (Index k = 0; k < 6; ++k)
                acc += at[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                       at[static_cast<size_t>(k)][static_cast<size_t>(j)];
            if (!acc.is_zero())
                throw std::logic_error("fibre_E_solver: A(t)^2 != 0 as a polynomial identity");
        }
    // s = Q A(t)
    std::vector<std::vector<SparsePoly>> s(6, std::vector<SparsePoly>(6, SparsePoly(tring)));
    for (Index i = 0; i < 6; ++i)
        for (Index j = 0; j < 6; ++j) {
            SparsePoly acc(tring);
            for (Index k = 0; k < 6; ++k)
                acc += Q6()(i, k) * at[static_cast<size_t>(k)][static_cast<size_t>(j)];
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    auto sp = [&](int i, int j) { return s[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                for (int l = k + 1; l < 6; ++l) {
                    SparsePoly pf = sp(i, j) * sp(k, l) - sp(i, k) * sp(j, l) +
                                    sp(i, l) * sp(j, k);
                    if (!pf.is_zero())
                        throw std::logic_error(
                            "fibre_E_solver: a Pfaffian is nonzero as a polynomial in t");
                }
    return out;
}

// ---------------------------------------------------------------------------
// Subscheme ideals over the zero stratum.
// ---------------------------------------------------------------------------

// The column minor lambda^{s,t} = x_{1s} x_{2t} - x_{1t} x_{2s} (1-based
// column labels) as a polynomial in the 12 coordinate variables.
inline SparsePoly minor_poly(const RingPtr& ring, int s, int t) {
    if (!(1 <= s && s < t && t <= 6)) throw std::invalid_argument("minor_poly: need 1 <= s < t <= 6");
    auto v = [&](int row, int col) {
        return SparsePoly::variable(ring, "x" + std::to_string(row) + std::to_string(col));
    };
    return v(1, s) * v(2, t) - v(1, t) * v(2, s);
}

inline std::vector<SparsePoly> all_minor_polys(const RingPtr& ring) {
    std::vector<SparsePoly> out;
    for (int s = 1; s <= 6; ++s)
        for (int t = s + 1; t <= 6; ++t) out.push_back(minor_poly(ring, s, t));
    return out;
}

struct SubschemeIdeal {
    RingPtr ring;
    std::vector<SparsePoly> invariant_part;  // the 15 minors
    std::vector<SparsePoly> v1_part;         // paired linear forms from W^perp

    std::vector<SparsePoly> all() const {
        std::vector<SparsePoly> g = invariant_part;
        g.insert(g.end(), v1_part.begin(), v1_part.end());
        return g;
    }
};

// Row space of the degree-d slice of the ideal spanned by the generators.
inline bool degree_slice_contains(const std::vector<SparsePoly>& generators,
                                  const SparsePoly& p) {
    if (p.is_zero()) return true;
    const RingPtr& ring = p.ring();
    int n = *p.homogeneous_degree();
    auto monos = monomials_of_degree(ring->size(), n);
    std::map<Mono, Index> col;
    for (const auto& m : monos) {
        Index next = static_cast<Index>(col.size());
        col.emplace(m, next);
    }
    std::vector<SparsePoly> slice;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        int dg = *g.homogeneous_degree();
        if (dg > n) continue;
        for (const auto& m : monomials_of_degree(ring->size(), n - dg))
            slice.push_back(SparsePoly::monomial(ring, m, Rational(1)) * g);
    }
    Mat rows = Mat::Zero(static_cast<Index>(slice.size()), static_cast<Index>(col.size()));
    for (Index i = 0; i < rows.rows(); ++i)
        for (const auto& [m, c] : slice[static_cast<size_t>(i)].terms())
            rows(i, col.at(m)) = c;
    Mat target = Mat::Zero(1, static_cast<Index>(col.size()));
    for (const auto& [m, c] : p.terms()) target(0, col.at(m)) = c;
    return row_space_contained(target, rows);
}

// The ideal of Z_{0,W}: all 15 column minors (invariant part) plus, for
// each basis vector q of the Q-orthocomplement W^perp, the two linear forms
// sum_i q_i x_{1i} and sum_i q_i x_{2i} (pairs spanning copies of the
// 2-dimensional representation). Verifies that the three entries of
// X Q X^t lie in the degree-2 slice of the ideal, which is exactly the
// isotropy of W.
inline SubschemeIdeal subscheme_ideal(const Mat& a, const Mat& w) {
    if (!is_zero_mat(a))
        throw std::invalid_argument(
            "subscheme_ideal: symbolic ideals are built over the zero stratum only");
    if (!is_isotropic(w)) throw std::invalid_argument("subscheme_ideal: plane is not isotropic");
    SubschemeIdeal ideal;
    ideal.ring = ring_x26();
    ideal.invariant_part = all_minor_polys(ideal.ring);
    Mat perp = q_orthocomplement(w);
    for (Index r = 0; r < perp.rows(); ++r)
        for (int row = 1; row <= 2; ++row) {
            SparsePoly form(ideal.ring);
            for (int i = 1; i <= 6; ++i)
                form += perp(r, i - 1) * SparsePoly::variable(
                                             ideal.ring, "x" + std::to_string(row) + std::to_string(i));
            ideal.v1_part.push_back(form);
        }

    // X Q X^t containment
    auto xv = [&](int row, int col) {
        return SparsePoly::variable(ideal.ring, "x" + std::to_string(row) + std::to_string(col));
    };
    auto gens = ideal.all();
    for (int p = 1; p <= 2; ++p)
        for (int q = p; q <= 2; ++q) {
            SparsePoly entry(ideal.ring);
            for (int i = 1; i <= 3; ++i)
                entry += xv(p, i) * xv(q, i + 3) + xv(p, i + 3) * xv(q, i);
            if (!degree_slice_contains(gens, entry))
                throw std::logic_error(
                    "subscheme_ideal: an entry of X Q X^t is not contained in the ideal");
        }
    return ideal;
}

// ---------------------------------------------------------------------------
// Hilbert-function certification by elimination.
// ---------------------------------------------------------------------------

struct HilbertCertification {
    IsotypicTable table;
    RingPtr reduced_ring;        // ring on the kept variables
    std::vector<int> kept_vars;  // indices into the original 12-variable ring
    SparsePoly reduced_quadric;  // in reduced_ring; the zero polynomial when rank 0
    Index residual_rank = 0;     // rank of the space of reduced quadratic generators
};

// Row reduction of the linear generators, packaged as a rewrite system on
// the pivot variables together with the surviving variable indices.
struct Elimination {
    RewriteSystem rewrite;
    std::vector<int> kept_vars;
};

// Row-reduces the linear generators of the ideal to substitution form and
// checks that the surviving variables pair up across the two weight blocks,
// so the group action descends to the quotient.
inline Elimination eliminate_linear_generators(const SubschemeIdeal& ideal) {
    const RingPtr& ring = ideal.ring;
    const auto nvars = static_cast<Index>(ring->size());

    std::vector<const SparsePoly*> linear;
    for (const auto& g : ideal.v1_part) {
        if (g.is_zero()) continue;
        if (!g.homogeneous_degree() || *g.homogeneous_degree() != 1)
            throw std::invalid_argument(
                "eliminate_linear_generators: non-linear generator in V1 part");
        linear.push_back(&g);
    }
    Mat coeff = Mat::Zero(static_cast<Index>(linear.size()), nvars);
    for (Index r = 0; r < coeff.rows(); ++r)
        for (const auto& [m, c] : linear[static_cast<size_t>(r)]->terms())
            for (Index v = 0; v < nvars; ++v)
                if (m[static_cast<size_t>(v)] == 1) coeff(r, v) = c;
    auto red = rref(coeff);

    Elimination out{RewriteSystem(ring), {}};
    std::set<int> eliminated;
    for (size_t k = 0; k < red.pivot_columns.size(); ++k) {
        Index pc = red.pivot_columns[k];
        SparsePoly tail(ring);
        for (Index v = 0; v < nvars; ++v) {
            if (v == pc) continue;
            Rational c = red.reduced(static_cast<Index>(k), v);
            if (!is_zero(c)) tail -= c * SparsePoly::variable(ring, static_cast<int>(v));
        }
        out.rewrite.add_substitution(static_cast<int>(pc), tail);
        eliminated.insert(static_cast<int>(pc));
    }
    for (int v = 0; v < static_cast<int>(nvars); ++v)
        if (!eliminated.count(v)) out.kept_vars.push_back(v);

    // The torus action must descend: kept variables pair up across blocks.
    const int half = static_cast<int>(nvars) / 2;
    for (int v : out.kept_vars) {
        int partner = v < half ? v + half : v - half;
        if (!std::count(out.kept_vars.begin(), out.kept_vars.end(), partner))
            throw std::invalid_argument(
                "eliminate_linear_generators: elimination does not keep matched variable pairs");
    }
    return out;
}

// Builds the polynomial ring on the surviving variables, inheriting names,
// weights, degrees and the derivation images from the ambient ring.
inline RingPtr kept_variable_ring(const RingPtr& ring, const std::vector<int>& kept) {
    auto sub = std::make_shared<PolyRing>();
    std::map<int, int> new_index;
    for (int v : kept) {
        new_index[v] = static_cast<int>(sub->names.size());
        sub->names.push_back(ring->names[static_cast<size_t>(v)]);
        sub->sl2_weight.push_back(ring->sl2_weight[static_cast<size_t>(v)]);
        sub->cstar_degree.push_back(ring->cstar_degree[static_cast<size_t>(v)]);
    }
    sub->e_image.assign(kept.size(), -1);
    sub->f_image.assign(kept.size(), -1);
    const int half = static_cast<int>(ring->size()) / 2;
    for (int v : kept) {
        int partner = v < half ? v + half : v - half;
        if (!new_index.count(partner))
            throw std::invalid_argument("kept_variable_ring: unmatched variable pair");
        if (v < half)
            sub->e_image[static_cast<size_t>(new_index[v])] = new_index[partner];
        else
            sub->f_image[static_cast<size_t>(new_index[v])] = new_index[partner];
    }
    return sub;
}

// Rewrites a polynomial supported on the kept variables as an element of
// the ring built by kept_variable_ring.
inline SparsePoly restrict_to_kept(const RingPtr& sub, const std::vector<int>& kept,
                                   const SparsePoly& p) {
    std::map<int, int> new_index;
    for (size_t k = 0; k < kept.size(); ++k) new_index[kept[k]] = static_cast<int>(k);
    SparsePoly out(sub);
    for (const auto& [m, c] : p.terms()) {
        Mono nm(sub->size(), 0);
        for (size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) {
                auto it = new_index.find(static_cast<int>(v));
                if (it == new_index.end())
                    throw std::invalid_argument(
                        "restrict_to_kept: polynomial touches an eliminated variable");
                nm[static_cast<size_t>(it->second)] = m[v];
            }
        out += SparsePoly::monomial(sub, nm, c);
    }
    return out;
}

// Eliminates the linear generators by exact row reduction, rewrites every
// invariant generator to normal form, verifies the residue is a single
// quadric (rank <= 1), and returns the isotypic table of the reduced
// quotient ring. Requires the elimination to keep matched variable pairs so
// the torus action descends.
inline HilbertCertification certify_hilbert_function(const SubschemeIdeal& ideal, int N = 6) {
    const RingPtr& ring = ideal.ring;
    auto elim = eliminate_linear_generators(ideal);
    const RewriteSystem& rw = elim.rewrite;

    HilbertCertification cert;
    cert.kept_vars = elim.kept_vars;

    // Reduce the invariant generators and measure the residual rank.
    std::vector<SparsePoly> residues;
    for (const auto& g : ideal.invariant_part) {
        SparsePoly r = rw.normal_form(g);
        if (!r.is_zero()) residues.push_back(r);
    }
    std::map<Mono, Index> col;
    for (const auto& r : residues)
        for (const auto& [m, c] : r.terms())
            if (!col.count(m)) {
                Index next = static_cast<Index>(col.size());
                col.emplace(m, next);
            }
    Mat rows = Mat::Zero(static_cast<Index>(residues.size()), static_cast<Index>(col.size()));
    for (Index i = 0; i < rows.rows(); ++i)
        for (const auto& [m, c] : residues[static_cast<size_t>(i)].terms())
            rows(i, col.at(m)) = c;
    cert.residual_rank = residues.empty() ? 0 : rank_of(rows);
    if (cert.residual_rank > 1)
        throw std::logic_error(
            "certify_hilbert_function: residual ideal is not a single quadric (rank " +
            std::to_string(cert.residual_rank) + ")");

    // Transcribe to the ring on the kept variables.
    cert.reduced_ring = kept_variable_ring(ring, cert.kept_vars);
    cert.reduced_quadric = cert.residual_rank == 1
                               ? restrict_to_kept(cert.reduced_ring, cert.kept_vars,
                                                  residues.front())
                               : SparsePoly(cert.reduced_ring);

    std::vector<SparsePoly> gens;
    if (!cert.reduced_quadric.is_zero()) gens.push_back(cert.reduced_quadric);
    cert.table = isotypic_table(cert.reduced_ring, gens, N);
    return cert;
}

}  // namespace slhilb
