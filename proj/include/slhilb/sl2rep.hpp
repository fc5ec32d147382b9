#pragma once

// Torus weight bookkeeping on graded quotient rings and the isotypic
// multiplicity tables built from it. Multiplicities come from weight-space
// differencing: mult(V_d in degree n) = dim(weight d) - dim(weight d+2).

#include "slhilb/matrix.hpp"
#include "slhilb/poly.hpp"
#include "slhilb/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slhilb {

// Free ring on k pairs (u_i, v_i) spanning a copy of the standard
// two-dimensional representation each.
inline RingPtr ring_v1_pairs(int k) {
    auto r = std::make_shared<PolyRing>();
    for (int i = 1; i <= k; ++i) {
        r->names.push_back("u" + std::to_string(i));
        r->sl2_weight.push_back(1);
        r->cstar_degree.push_back(1);
    }
    for (int i = 1; i <= k; ++i) {
        r->names.push_back("v" + std::to_string(i));
        r->sl2_weight.push_back(-1);
        r->cstar_degree.push_back(1);
    }
    r->e_image.assign(static_cast<size_t>(2 * k), -1);
    r->f_image.assign(static_cast<size_t>(2 * k), -1);
    for (int i = 0; i < k; ++i) {
        r->e_image[static_cast<size_t>(i)] = k + i;
        r->f_image[static_cast<size_t>(k + i)] = i;
    }
    return r;
}

inline void enumerate_monomials(size_t nvars, int deg, Mono& cur, size_t pos,
                                std::vector<Mono>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = deg;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur[pos] = e;
        enumerate_monomials(nvars, deg - e, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

inline std::vector<Mono> monomials_of_degree(size_t nvars, int deg) {
    std::vector<Mono> out;
    if (nvars == 0) {
        if (deg == 0) out.push_back(Mono{});
        return out;
    }
    Mono cur(nvars, 0);
    enumerate_monomials(nvars, deg, cur, 0, out);
    return out;
}

// dim of each (degree <= N, weight) piece of ring/(generators). Exact RREF
// on the degree slice of the ideal, split by weight; generators must be
// homogeneous in both degree and weight for the split to be meaningful.
inline std::map<std::pair<int, int>, Index> weight_dimensions(
    const RingPtr& ring, const std::vector<SparsePoly>& generators, int N) {
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.homogeneous_degree())
            throw std::invalid_argument("weight_dimensions: non-homogeneous generator " +
                                        g.to_string());
        if (!g.homogeneous_weight())
            throw std::invalid_argument("weight_dimensions: generator of mixed weight " +
                                        g.to_string());
    }

    std::map<std::pair<int, int>, Index> dims;
    for (int n = 0; n <= N; ++n) {
        auto monos = monomials_of_degree(ring->size(), n);
        // per-weight column indexing
        std::map<int, std::map<Mono, Index>> col_of;
        for (const auto& m : monos) {
            auto& cols = col_of[ring->mono_weight(m)];
            Index next = static_cast<Index>(cols.size());
            cols.emplace(m, next);
        }
        std::map<int, std::vector<std::vector<Rational>>> rows;
        for (const auto& g : generators) {
            if (g.is_zero()) continue;
            int dg = *g.homogeneous_degree();
            int wg = *g.homogeneous_weight();
            if (dg > n) continue;
            for (const auto& m : monomials_of_degree(ring->size(), n - dg)) {
                int w = wg + ring->mono_weight(m);
                SparsePoly prod = SparsePoly::monomial(ring, m, Rational(1)) * g;
                const auto& cols = col_of.at(w);
                std::vector<Rational> row(cols.size(), Rational(0));
                for (const auto& [mm, cc] : prod.terms()) row[static_cast<size_t>(cols.at(mm))] = cc;
                rows[w].push_back(std::move(row));
            }
        }
        for (const auto& [w, cols] : col_of) {
            Index total = static_cast<Index>(cols.size());
            Index r = 0;
            auto it = rows.find(w);
            if (it != rows.end() && !it->second.empty()) {
                Mat m(static_cast<Index>(it->second.size()), total);
                for (Index i = 0; i < m.rows(); ++i)
                    for (Index j = 0; j < total; ++j)
                        m(i, j) = it->second[static_cast<size_t>(i)][static_cast<size_t>(j)];
                r = rank_of(m);
            }
            dims[{n, w}] = total - r;
        }
    }
    return dims;
}

struct IsotypicTable {
    int N = 0;
    // mult[d][n]: multiplicity of the (d+1)-dimensional irreducible in
    // the degree-n piece
    std::vector<std::vector<long>> mult;

    long at(int d, int n) const {
        if (d < 0 || n < 0 || d > N || n > N) return 0;
        return mult[static_cast<size_t>(d)][static_cast<size_t>(n)];
    }
};

inline IsotypicTable isotypic_table(const RingPtr& ring,
                                    const std::vector<SparsePoly>& generators, int N) {
    auto dims = weight_dimensions(ring, generators, N);
    auto dim_at = [&](int n, int w) -> Index {
        auto it = dims.find({n, w});
        return it == dims.end() ? 0 : it->second;
    };
    IsotypicTable t;
    t.N = N;
    t.mult.assign(static_cast<size_t>(N) + 1, std::vector<long>(static_cast<size_t>(N) + 1, 0));
    for (int n = 0; n <= N; ++n) {
        long total = 0;
        for (const auto& [key, dim] : dims)
            if (key.first == n) total += dim;
        long recovered = 0;
        for (int d = 0; d <= n; ++d) {
            long m = dim_at(n, d) - dim_at(n, d + 2);
            if (m < 0)
                throw std::invalid_argument(
                    "isotypic_table: negative multiplicity at degree " + std::to_string(n) +
                    ", this ideal is not equivariant");
            t.mult[static_cast<size_t>(d)][static_cast<size_t>(n)] = m;
            recovered += m * (d + 1);
        }
        if (recovered != total)
            throw std::invalid_argument(
                "isotypic_table: weight dimensions at degree " + std::to_string(n) +
                " do not assemble into a module, this ideal is not equivariant");
    }
    return t;
}

struct HilbertValue {
    long value = 0;
    // True when the window saw no degree beyond d of matching parity, so
    // contributions from degrees > N could still raise the total.
    bool truncation_limited = false;
};

inline std::map<int, HilbertValue> hilbert_function(const IsotypicTable& t) {
    std::map<int, HilbertValue> h;
    for (int d = 0; d <= t.N; ++d) {
        HilbertValue v;
        for (int n = 0; n <= t.N; ++n) v.value += t.at(d, n);
        v.truncation_limited = d + 2 > t.N;
        h[d] = v;
    }
    return h;
}

// True iff E(g) and F(g) land in the degree-matched slice of the ideal for
// every generator g: the infinitesimal test that the ideal is a
// subrepresentation.
inline bool check_equivariant_ideal(const std::vector<SparsePoly>& generators) {
    if (generators.empty()) return true;
    const RingPtr& ring = generators.front().ring();
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.homogeneous_degree()) return false;
        for (const SparsePoly& img : {apply_E(g), apply_F(g)}) {
            if (img.is_zero()) continue;
            int n = *img.homogeneous_degree();
            // degree-n slice of the ideal as a row space
            auto monos = monomials_of_degree(ring->size(), n);
            std::map<Mono, Index> col;
            for (const auto& m : monos) {
                Index next = static_cast<Index>(col.size());
                col.emplace(m, next);
            }
            std::vector<SparsePoly> slice;
            for (const auto& g2 : generators) {
                if (g2.is_zero()) continue;
                int d2 = *g2.homogeneous_degree();
                if (d2 > n) continue;
                for (const auto& m : monomials_of_degree(ring->size(), n - d2))
                    slice.push_back(SparsePoly::monomial(ring, m, Rational(1)) * g2);
            }
            Mat rows = Mat::Zero(static_cast<Index>(slice.size()), static_cast<Index>(col.size()));
            for (Index i = 0; i < rows.rows(); ++i)
                for (const auto& [m, c] : slice[static_cast<size_t>(i)].terms())
                    rows(i, col.at(m)) = c;
            Mat target = Mat::Zero(1, static_cast<Index>(col.size()));
            for (const auto& [m, c] : img.terms()) target(0, col.at(m)) = c;
            if (!row_space_contained(target, rows)) return false;
        }
    }
    return true;
}

}  // namespace slhilb
