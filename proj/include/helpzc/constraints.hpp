#pragma once

#include <map>
#include <string>
#include <vector>

#include "helpzc/cyclotomic.hpp"
#include "helpzc/tables.hpp"

namespace helpzc {

// Unknowns for a unit of order n: non-identity classes whose element order
// divides n, in table order.
struct VariableSpace {
    unsigned long order = 1;
    std::vector<std::string> classes;
};

VariableSpace variable_space(const GroupData& g, unsigned long n);

struct AugmentationTuple {
    std::map<std::string, long> eps;

    long at(const std::string& cls) const {
        auto it = eps.find(cls);
        return it == eps.end() ? 0 : it->second;
    }
    long sum() const {
        long s = 0;
        for (const auto& [k, v] : eps) s += v;
        return s;
    }
    auto operator<=>(const AugmentationTuple&) const = default;
};

// All partial augmentation concentrated at a single class.
AugmentationTuple trivial_tuple(const std::string& cls);

// Tuples for the proper powers u^d (divisors d of n with 1 < d < n).
// The d = n entry is implicit (identity).
struct PowerDatum {
    unsigned long order = 1;
    std::map<unsigned long, AugmentationTuple> powers;
};

// Power datum of an actual group element of the given class.
PowerDatum genuine_datum(const GroupData& g, const std::string& cls);

struct CharRef {
    unsigned long brauer_prime = 0;  // 0 = ordinary
    const Character* chr = nullptr;
};

// Ordinary irreducibles plus, for each bundled prime p coprime to n, the
// mod-p Brauer irreducibles.
std::vector<CharRef> applicable_characters(const GroupData& g, unsigned long n,
                                           bool use_brauer = true);

// One eigenvalue-multiplicity constraint: evaluated at an integer tuple it
// yields mu(zeta_n^k, u, psi), which must be an integer in [0, psi(1)].
struct ConstraintRow {
    std::string psi;
    unsigned long brauer_prime = 0;
    unsigned long root_exponent = 0;  // k, xi = zeta_n^k
    std::vector<std::pair<std::string, Rational>> coeffs;  // in variable order
    Rational constant;
    Rational bound;  // psi(1)

    Rational eval(const AugmentationTuple& t) const {
        Rational v = constant;
        for (const auto& [cls, a] : coeffs) v += a * Rational(t.at(cls));
        v.canonicalize();
        return v;
    }
};

// Full multiplicity system for order n under the given power datum, rows
// for every applicable character and every k in 0..n-1, duplicates removed.
std::vector<ConstraintRow> build_rows(const GroupData& g, unsigned long n,
                                      const PowerDatum& datum, bool use_brauer = true);

// Single row for one (psi, k) pair, duplicates not removed.
ConstraintRow make_row(const GroupData& g, unsigned long n, const PowerDatum& datum,
                       const CharRef& psi, unsigned long k);

// Exact mu(zeta_n^k, u, psi) at a concrete tuple.
Rational multiplicity(const GroupData& g, unsigned long n, const PowerDatum& datum,
                      const AugmentationTuple& tuple, const CharRef& psi, unsigned long k);

}  // namespace helpzc
