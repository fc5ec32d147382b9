#pragma once

// Exact rational scalar for the whole library. GMP's mpq_class already
// keeps values canonical (reduced, positive denominator) after arithmetic,
// so it is used directly; the helpers below cover construction, parsing
// and the "p/q" interchange format.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace slhilb {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q" and a leading minus sign; rejects q = 0.
inline Rational parse_rational(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("unparsable rational: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Deterministic small rationals for property tests and samplers.
// Numerators in [-bound, bound], denominators in [1, den_bound].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long bound = 3, long den_bound = 3)
        : rng_(seed), num_(-bound, bound), den_(1, den_bound) {}

    Rational next() { return rat(num_(rng_), den_(rng_)); }

    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (!is_zero(r)) return r;
        }
    }

    long next_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> num_;
    std::uniform_int_distribution<long> den_;
};

}  // namespace slhilb

namespace Eigen {

// mpq_class plugged in as an Eigen scalar; exact, so no meaningful epsilon.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen
