#pragma once

// Sparse multivariate polynomials over the exact rationals, with the extra
// structure this project lives on: every variable carries an sl2 torus
// weight and a scaling degree, and the raising/lowering operators act as
// derivations determined by per-variable images.
//
// The RewriteSystem is deliberately small: linear substitutions plus at
// most one quadric rule. That is all the ideals handled here need after
// their linear generators are eliminated, and it keeps normal forms unique
// without any general Groebner machinery.

#include "slhilb/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace slhilb {

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Graded lexicographic order: total degree first, then earlier variables
// with higher exponent win.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

struct PolyRing {
    std::vector<std::string> names;
    std::vector<int> sl2_weight;
    std::vector<int> cstar_degree;
    // Index of the variable each derivation sends a variable to, or -1
    // for zero. E lowers the torus weight by 2, F raises it.
    std::vector<int> e_image;
    std::vector<int> f_image;

    size_t size() const { return names.size(); }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown variable: " + name);
    }

    int mono_weight(const Mono& m) const {
        int w = 0;
        for (size_t i = 0; i < m.size(); ++i) w += m[i] * sl2_weight[i];
        return w;
    }

    int mono_cstar(const Mono& m) const {
        int d = 0;
        for (size_t i = 0; i < m.size(); ++i) d += m[i] * cstar_degree[i];
        return d;
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

// The 12 coordinates of a 2x6 matrix: x11..x16 with weight +1 (first row),
// x21..x26 with weight -1. E sends x1i to x2i, F sends x2i back.
inline RingPtr ring_x26() {
    auto r = std::make_shared<PolyRing>();
    for (int row = 1; row <= 2; ++row)
        for (int col = 1; col <= 6; ++col) {
            r->names.push_back("x" + std::to_string(row) + std::to_string(col));
            r->sl2_weight.push_back(row == 1 ? 1 : -1);
            r->cstar_degree.push_back(1);
        }
    r->e_image.assign(12, -1);
    r->f_image.assign(12, -1);
    for (int col = 0; col < 6; ++col) {
        r->e_image[static_cast<size_t>(col)] = 6 + col;
        r->f_image[static_cast<size_t>(6 + col)] = col;
    }
    return r;
}

// The coordinate ring of the model quadric: a = x14, b = x15, c = x24,
// d = x25, so E(a) = c, E(b) = d.
inline RingPtr ring_abcd() {
    auto r = std::make_shared<PolyRing>();
    r->names = {"a", "b", "c", "d"};
    r->sl2_weight = {1, 1, -1, -1};
    r->cstar_degree = {1, 1, 1, 1};
    r->e_image = {2, 3, -1, -1};
    r->f_image = {-1, -1, 0, 1};
    return r;
}

// Single-variable ring for polynomial identities in a parameter.
inline RingPtr ring_t() {
    auto r = std::make_shared<PolyRing>();
    r->names = {"t"};
    r->sl2_weight = {0};
    r->cstar_degree = {0};
    r->e_image = {-1};
    r->f_image = {-1};
    return r;
}

class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(RingPtr ring) : ring_(std::move(ring)) {}

    static SparsePoly constant(RingPtr ring, const Rational& c) {
        SparsePoly p(std::move(ring));
        if (!slhilb::is_zero(c)) p.terms_[Mono(p.ring_->size(), 0)] = c;
        return p;
    }

    static SparsePoly variable(RingPtr ring, int index) {
        SparsePoly p(std::move(ring));
        Mono m(p.ring_->size(), 0);
        m.at(static_cast<size_t>(index)) = 1;
        p.terms_[m] = Rational(1);
        return p;
    }

    static SparsePoly variable(const RingPtr& ring, const std::string& name) {
        return variable(ring, ring->index_of(name));
    }

    static SparsePoly monomial(RingPtr ring, const Mono& m, const Rational& c) {
        SparsePoly p(std::move(ring));
        if (m.size() != p.ring_->size()) throw std::invalid_argument("monomial arity mismatch");
        if (!slhilb::is_zero(c)) p.terms_[m] = c;
        return p;
    }

    static SparsePoly linear_form(const RingPtr& ring, const std::vector<Rational>& coeffs) {
        if (coeffs.size() != ring->size()) throw std::invalid_argument("linear form arity mismatch");
        SparsePoly p(ring);
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (!slhilb::is_zero(coeffs[i])) {
                Mono m(ring->size(), 0);
                m[i] = 1;
                p.terms_[m] = coeffs[i];
            }
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::map<Mono, Rational, GrlexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rational coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Largest monomial in grlex order.
    std::pair<Mono, Rational> leading() const {
        if (is_zero()) throw std::logic_error("leading term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }

    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int dm = ring_->mono_cstar(m);
            if (d && *d != dm) return std::nullopt;
            d = dm;
        }
        return is_zero() ? std::optional<int>(0) : d;
    }

    std::optional<int> homogeneous_weight() const {
        std::optional<int> w;
        for (const auto& [m, c] : terms_) {
            int wm = ring_->mono_weight(m);
            if (w && *w != wm) return std::nullopt;
            w = wm;
        }
        return is_zero() ? std::optional<int>(0) : w;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.check_ring(b);
        SparsePoly p(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m(ma.size());
                for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                p.add_term(m, ca * cb);
            }
        return p;
    }

    friend SparsePoly operator*(const Rational& c, SparsePoly p) {
        if (slhilb::is_zero(c)) return SparsePoly(p.ring_);
        for (auto& [m, v] : p.terms_) v *= c;
        return p;
    }

    friend SparsePoly operator-(SparsePoly p) {
        for (auto& [m, v] : p.terms_) v = -v;
        return p;
    }

    bool operator==(const SparsePoly& o) const {
        return ring_.get() == o.ring_.get() && terms_ == o.terms_;
    }

    SparsePoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        SparsePoly acc = constant(ring_, Rational(1));
        for (int i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    // Simultaneous substitution of variables by polynomials (in the same
    // ring). Variables absent from the map stay put.
    SparsePoly substitute(const std::map<int, SparsePoly>& images) const {
        SparsePoly out(ring_);
        for (const auto& [m, c] : terms_) {
            SparsePoly factor = constant(ring_, c);
            Mono untouched(m.size(), 0);
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                auto it = images.find(static_cast<int>(i));
                if (it == images.end())
                    untouched[i] = m[i];
                else
                    factor = factor * it->second.pow(m[i]);
            }
            out += factor * monomial(ring_, untouched, Rational(1));
        }
        return out;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != ring_->size()) throw std::invalid_argument("evaluation arity mismatch");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Derivation determined by variable images (Leibniz rule).
    SparsePoly derivation(const std::vector<SparsePoly>& var_images) const {
        if (var_images.size() != ring_->size())
            throw std::invalid_argument("derivation arity mismatch");
        SparsePoly out(ring_);
        for (const auto& [m, c] : terms_) {
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0 || var_images[i].is_zero()) continue;
                Mono reduced = m;
                reduced[i] -= 1;
                out += (c * Rational(m[i])) *
                       (monomial(ring_, reduced, Rational(1)) * var_images[i]);
            }
        }
        return out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            bool neg = sgn(c) < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            Rational mag = abs(c);
            std::string vars = mono_string(it->first);
            if (vars.empty())
                os << mag.get_str();
            else {
                if (mag != 1) os << mag.get_str() << "*";
                os << vars;
            }
        }
        return os.str();
    }

private:
    void check_ring(const SparsePoly& o) const {
        if (ring_.get() != o.ring_.get())
            throw std::invalid_argument("polynomial ring mismatch");
    }

    void add_term(const Mono& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!slhilb::is_zero(c)) terms_[m] = c;
        } else {
            it->second += c;
            if (slhilb::is_zero(it->second)) terms_.erase(it);
        }
    }

    std::string mono_string(const Mono& m) const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << ring_->names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
        return os.str();
    }

    RingPtr ring_;
    std::map<Mono, Rational, GrlexLess> terms_;
};

inline SparsePoly apply_E(const SparsePoly& p) {
    const auto& r = *p.ring();
    std::vector<SparsePoly> images;
    images.reserve(r.size());
    for (size_t i = 0; i < r.size(); ++i)
        images.push_back(r.e_image[i] < 0 ? SparsePoly(p.ring())
                                          : SparsePoly::variable(p.ring(), r.e_image[i]));
    return p.derivation(images);
}

inline SparsePoly apply_F(const SparsePoly& p) {
    const auto& r = *p.ring();
    std::vector<SparsePoly> images;
    images.reserve(r.size());
    for (size_t i = 0; i < r.size(); ++i)
        images.push_back(r.f_image[i] < 0 ? SparsePoly(p.ring())
                                          : SparsePoly::variable(p.ring(), r.f_image[i]));
    return p.derivation(images);
}

// Weight operator: scales each monomial by its torus weight.
inline SparsePoly apply_H(const SparsePoly& p) {
    SparsePoly out(p.ring());
    for (const auto& [m, c] : p.terms())
        out += SparsePoly::monomial(p.ring(), m, c * Rational(p.ring()->mono_weight(m)));
    return out;
}

// Linear substitutions plus at most one quadric rule, applied to a unique
// normal form. Substitution tails must avoid substituted variables, and
// the quadric replacement must be grlex-smaller than its leading monomial;
// both are checked, and together they force termination.
class RewriteSystem {
public:
    explicit RewriteSystem(RingPtr ring) : ring_(std::move(ring)) {}

    void add_substitution(int var, SparsePoly tail) {
        if (tail.degree() > 1) throw std::invalid_argument("substitution tail must be linear");
        if (tail.ring().get() != ring_.get()) throw std::invalid_argument("ring mismatch");
        subs_[var] = std::move(tail);
        validate();
    }

    void set_quadric(const Mono& lhs, SparsePoly rhs) {
        if (mono_degree(lhs) != 2) throw std::invalid_argument("quadric rule must have degree 2");
        if (rhs.ring().get() != ring_.get()) throw std::invalid_argument("ring mismatch");
        quadric_ = {lhs, std::move(rhs)};
        validate();
    }

    // Reads a quadric generator: its grlex-leading monomial becomes the
    // rule head, the rest moves to the right-hand side.
    void set_quadric_from_generator(const SparsePoly& g) {
        auto [lead, c] = g.leading();
        SparsePoly rhs = SparsePoly::monomial(ring_, lead, c) - g;
        set_quadric(lead, (Rational(1) / c) * rhs);
    }

    const std::map<int, SparsePoly>& substitutions() const { return subs_; }
    const std::optional<std::pair<Mono, SparsePoly>>& quadric() const { return quadric_; }

    bool has_substitution(int var) const { return subs_.count(var) > 0; }

    SparsePoly normal_form(const SparsePoly& p) const {
        SparsePoly cur = apply_substitutions(p);
        if (!quadric_) return cur;
        const auto& [lhs, rhs] = *quadric_;
        for (;;) {
            bool hit = false;
            for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
                if (!divides(lhs, it->first)) continue;
                Mono m2 = it->first;
                for (size_t i = 0; i < m2.size(); ++i) m2[i] -= lhs[i];
                SparsePoly cof = SparsePoly::monomial(ring_, m2, it->second);
                cur -= cof * SparsePoly::monomial(ring_, lhs, Rational(1));
                cur += cof * rhs;
                hit = true;
                break;
            }
            if (!hit) return cur;
        }
    }

    // Division with quotient tracking. Writes
    //   p = sum_i q_i (x_i - tail_i) + q_z (lhs - rhs) + remainder
    // exactly, with the remainder in normal form.
    struct Division {
        std::map<int, SparsePoly> quotients;
        SparsePoly quadric_quotient;
        SparsePoly remainder;
    };

    Division divide(const SparsePoly& p) const {
        Division d;
        d.quadric_quotient = SparsePoly(ring_);
        SparsePoly cur = p;
        for (;;) {
            // substitution steps first, from the leading term down
            int var = -1;
            Mono mono;
            Rational coeff;
            for (auto it = cur.terms().rbegin(); var < 0 && it != cur.terms().rend(); ++it)
                for (const auto& [v, tail] : subs_)
                    if (it->first[static_cast<size_t>(v)] > 0) {
                        var = v;
                        mono = it->first;
                        coeff = it->second;
                        break;
                    }
            if (var >= 0) {
                Mono m2 = mono;
                m2[static_cast<size_t>(var)] -= 1;
                SparsePoly cof = SparsePoly::monomial(ring_, m2, coeff);
                auto itq = d.quotients.find(var);
                if (itq == d.quotients.end())
                    d.quotients.emplace(var, cof);
                else
                    itq->second += cof;
                cur -= cof * SparsePoly::variable(ring_, var);
                cur += cof * subs_.at(var);
                continue;
            }
            if (!quadric_) break;
            const auto& [lhs, rhs] = *quadric_;
            bool found = false;
            for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it)
                if (divides(lhs, it->first)) {
                    mono = it->first;
                    coeff = it->second;
                    found = true;
                    break;
                }
            if (!found) break;
            Mono m2 = mono;
            for (size_t i = 0; i < m2.size(); ++i) m2[i] -= lhs[i];
            SparsePoly cof = SparsePoly::monomial(ring_, m2, coeff);
            d.quadric_quotient += cof;
            cur -= cof * SparsePoly::monomial(ring_, lhs, Rational(1));
            cur += cof * rhs;
        }
        d.remainder = cur;
        return d;
    }

private:
    static bool divides(const Mono& a, const Mono& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    SparsePoly apply_substitutions(const SparsePoly& p) const {
        std::map<int, SparsePoly> images;
        for (const auto& [v, tail] : subs_) images.emplace(v, tail);
        return p.substitute(images);
    }

    void validate() const {
        for (const auto& [v, tail] : subs_) {
            for (const auto& [m, c] : tail.terms())
                for (const auto& [v2, t2] : subs_)
                    if (m[static_cast<size_t>(v2)] > 0)
                        throw std::invalid_argument(
                            "substitution tail contains a substituted variable");
        }
        if (quadric_) {
            const auto& [lhs, rhs] = *quadric_;
            for (size_t i = 0; i < lhs.size(); ++i)
                if (lhs[i] > 0 && subs_.count(static_cast<int>(i)))
                    throw std::invalid_argument("quadric head contains a substituted variable");
            GrlexLess less;
            for (const auto& [m, c] : rhs.terms()) {
                if (!less(m, lhs))
                    throw std::invalid_argument("quadric replacement not below its head");
                for (const auto& [v2, t2] : subs_)
                    if (m[static_cast<size_t>(v2)] > 0)
                        throw std::invalid_argument(
                            "quadric replacement contains a substituted variable");
            }
        }
    }

    RingPtr ring_;
    std::map<int, SparsePoly> subs_;
    std::optional<std::pair<Mono, SparsePoly>> quadric_;
};

// Quotients of polynomials, used for the eliminations that happen inside a
// localization. No gcd reduction: zero tests only need the numerator, and
// the denominators arising here stay tiny.
class Frac {
public:
    Frac() = default;
    explicit Frac(SparsePoly num)
        : num_(std::move(num)), den_(SparsePoly::constant(num_.ring(), Rational(1))) {}
    Frac(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("zero denominator");
        if (num_.is_zero()) den_ = SparsePoly::constant(num_.ring(), Rational(1));
    }

    static Frac zero(const RingPtr& ring) { return Frac(SparsePoly(ring)); }

    const SparsePoly& num() const { return num_; }
    const SparsePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }

    bool operator==(const Frac& o) const {
        return (num_ * o.den_ - o.num_ * den_).is_zero();
    }

    std::string to_string() const {
        std::optional<int> d = den_.homogeneous_degree();
        if (den_.term_count() == 1 && d && *d == 0) {
            Rational c = den_.leading().second;
            return ((Rational(1) / c) * num_).to_string();
        }
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    SparsePoly num_;
    SparsePoly den_;
};

// Evaluates p with some variables sent to rational functions; untouched
// variables stay as (polynomial) fractions over the same ring.
inline Frac evaluate_frac(const SparsePoly& p, const std::map<int, Frac>& images) {
    Frac acc = Frac::zero(p.ring());
    for (const auto& [m, c] : p.terms()) {
        Frac term(SparsePoly::constant(p.ring(), c));
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = images.find(static_cast<int>(i));
            Frac base = it != images.end()
                            ? it->second
                            : Frac(SparsePoly::variable(p.ring(), static_cast<int>(i)));
            for (int k = 0; k < m[i]; ++k) term = term * base;
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace slhilb
