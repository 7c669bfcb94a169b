#include "helpzc/constraints.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "helpzc/numtheory.hpp"

namespace helpzc {

VariableSpace variable_space(const GroupData& g, unsigned long n) {
    if (n < 1 || g.exponent % n != 0)
        throw std::invalid_argument(std::to_string(n) + " does not divide exponent " +
                                    std::to_string(g.exponent));
    VariableSpace vs;
    vs.order = n;
    for (const auto& c : g.classes)
        if (c.element_order > 1 && n % c.element_order == 0) vs.classes.push_back(c.name);
    return vs;
}

AugmentationTuple trivial_tuple(const std::string& cls) {
    AugmentationTuple t;
    t.eps[cls] = 1;
    return t;
}

PowerDatum genuine_datum(const GroupData& g, const std::string& cls) {
    PowerDatum datum;
    datum.order = g.class_by_name(cls).element_order;
    for (unsigned long d : divisors(datum.order))
        if (d > 1 && d < datum.order)
            datum.powers.emplace(d, trivial_tuple(g.power_class(cls, d)));
    return datum;
}

std::vector<CharRef> applicable_characters(const GroupData& g, unsigned long n,
                                           bool use_brauer) {
    std::vector<CharRef> out;
    for (const auto& chr : g.ordinary) out.push_back({0, &chr});
    if (use_brauer)
        for (const auto& bt : g.brauer)
            if (std::gcd(bt.prime, n) == 1)
                for (const auto& chr : bt.characters) out.push_back({bt.prime, &chr});
    return out;
}

namespace {

// (1/n) * Tr_{Q(zeta_n^d)/Q}( psi(x) * zeta_n^{-dk} )
Rational trace_term(const Cyclotomic& value, unsigned long n, unsigned long d,
                    unsigned long k) {
    const Cyclotomic xi = Cyclotomic::root_of_unity(
        n, -static_cast<long>((d * k) % n));
    Rational t = (value * xi).trace_subfield(n / d);
    t /= Rational(static_cast<long>(n));
    t.canonicalize();
    return t;
}

const Cyclotomic& char_value(const CharRef& psi, const std::string& cls) {
    auto it = psi.chr->values.find(cls);
    if (it == psi.chr->values.end())
        throw std::logic_error("character " + psi.chr->name + " has no value at class " + cls +
                               " (p-singular class reached in a p-regular system)");
    return it->second;
}

}  // namespace

ConstraintRow make_row(const GroupData& g, unsigned long n, const PowerDatum& datum,
                       const CharRef& psi, unsigned long k) {
    const VariableSpace vs = variable_space(g, n);
    const std::string identity = g.identity_class().name;

    ConstraintRow row;
    row.psi = psi.chr->name;
    row.brauer_prime = psi.brauer_prime;
    row.root_exponent = k;
    row.bound = Rational(static_cast<long>(psi.chr->degree));

    // All classes appearing here are p-regular for every applicable Brauer
    // prime, since their orders divide n and gcd(p, n) = 1.
    for (const auto& cls : vs.classes)
        row.coeffs.emplace_back(cls, trace_term(char_value(psi, cls), n, 1, k));

    // d = n contributes psi(1); proper powers come from the datum.
    row.constant = trace_term(char_value(psi, identity), n, n, k);
    for (const auto& [d, tuple] : datum.powers) {
        if (d <= 1 || d >= n || n % d != 0)
            throw std::invalid_argument("power datum has an invalid divisor entry");
        for (const auto& [cls, e] : tuple.eps) {
            if (e == 0) continue;
            Rational t = trace_term(char_value(psi, cls), n, d, k);
            row.constant += Rational(e) * t;
        }
    }
    row.constant.canonicalize();
    return row;
}

Rational multiplicity(const GroupData& g, unsigned long n, const PowerDatum& datum,
                      const AugmentationTuple& tuple, const CharRef& psi, unsigned long k) {
    return make_row(g, n, datum, psi, k).eval(tuple);
}

std::vector<ConstraintRow> build_rows(const GroupData& g, unsigned long n,
                                      const PowerDatum& datum, bool use_brauer) {
    const auto chars = applicable_characters(g, n, use_brauer);
    std::vector<ConstraintRow> rows;
    std::set<std::tuple<std::vector<Rational>, Rational, Rational>> seen;
    for (const auto& psi : chars) {
        for (unsigned long k = 0; k < n; ++k) {
            ConstraintRow row = make_row(g, n, datum, psi, k);
            std::vector<Rational> key;
            for (const auto& [cls, a] : row.coeffs) key.push_back(a);
            if (seen.emplace(std::move(key), row.constant, row.bound).second)
                rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace helpzc
