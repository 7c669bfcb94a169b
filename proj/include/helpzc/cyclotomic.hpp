#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace helpzc {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);
bool is_integer(const Rational& r);

// Phi_m, coefficients ascending, monic, degree phi(m). Cached.
const std::vector<Integer>& cyclotomic_polynomial(unsigned long m);

// Exact element of Q(zeta_m), stored as a dense coefficient vector of
// length phi(m) in the power basis modulo Phi_m. Immutable value type.
class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_{Rational(0)} {}
    explicit Cyclotomic(Rational r) : m_(1), c_{std::move(r)} {}
    explicit Cyclotomic(long v) : m_(1), c_{Rational(v)} {}

    // zeta_m^k (k taken mod m).
    static Cyclotomic root_of_unity(unsigned long m, long k);
    // Sum of coeff * zeta_m^exponent terms, reduced mod Phi_m.
    static Cyclotomic from_terms(unsigned long m,
                                 const std::vector<std::pair<Rational, long>>& terms);

    unsigned long conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Embedding into Q(zeta_M); requires m | M.
    Cyclotomic embedded(unsigned long M) const;

    // sigma_j : zeta_m -> zeta_m^j. Requires gcd(j, m) = 1.
    Cyclotomic galois(long j) const;
    Cyclotomic conj() const;

    // True iff the value is fixed by every sigma_j with j = 1 mod s.
    bool in_subfield(unsigned long s) const;

    // Absolute trace, sum of all Galois conjugates. Must land in Q.
    Rational trace_to_Q() const;
    // Relative trace from Q(zeta_s) to Q for a value lying in Q(zeta_s).
    Rational trace_subfield(unsigned long s) const;

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    Cyclotomic operator-() const;
    Cyclotomic scaled(const Rational& r) const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;

private:
    Cyclotomic(unsigned long m, std::vector<Rational> reduced)
        : m_(m), c_(std::move(reduced)) {}

    // Reduce an arbitrary-length coefficient vector mod Phi_m.
    static Cyclotomic reduce(unsigned long m, std::vector<Rational> poly);

    unsigned long m_;
    std::vector<Rational> c_;
};

}  // namespace helpzc
