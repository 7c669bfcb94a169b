#include "helpzc/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "helpzc/numtheory.hpp"

namespace helpzc {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("malformed rational: empty string");
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    auto check = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("malformed rational: '" + s + "'");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("malformed rational: '" + s + "'");
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("malformed rational: '" + s + "'");
    };
    check(num);
    check(den);
    Rational r{Integer(num), Integer(den)};
    if (r.get_den() == 0) throw std::invalid_argument("malformed rational: zero denominator");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    return r.get_str();
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

namespace {

// Exact division of integer polynomials, remainder must be zero.
std::vector<Integer> exact_div(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> rem = a;
    const std::size_t db = b.size() - 1;
    if (b.back() != 1) throw std::logic_error("exact_div expects monic divisor");
    std::vector<Integer> q(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        Integer c = rem[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t t = 0; t <= db; ++t) rem[i - db + t] -= c * b[t];
    }
    for (auto& r : rem)
        if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned long m) {
    static std::map<unsigned long, std::vector<Integer>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{e | m, e < m} Phi_e
    std::function<const std::vector<Integer>&(unsigned long)> phi_of =
        [&](unsigned long k) -> const std::vector<Integer>& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<Integer> num(k + 1, 0);
        num[0] = -1;
        num[k] = 1;
        for (unsigned long e : divisors(k))
            if (e < k) num = exact_div(num, phi_of(e));
        return cache.emplace(k, std::move(num)).first->second;
    };
    return phi_of(m);
}

Cyclotomic Cyclotomic::reduce(unsigned long m, std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(m);
    const std::size_t deg = phi.size() - 1;  // = euler_phi(m)
    for (std::size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (std::size_t t = 0; t < deg; ++t) poly[i - deg + t] -= c * Rational(phi[t]);
    }
    poly.resize(deg, Rational(0));
    for (auto& c : poly) c.canonicalize();
    return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned long m, long k) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    long km = k % static_cast<long>(m);
    if (km < 0) km += static_cast<long>(m);
    std::vector<Rational> poly(m, Rational(0));
    poly[static_cast<std::size_t>(km)] = 1;
    return reduce(m, std::move(poly));
}

Cyclotomic Cyclotomic::from_terms(unsigned long m,
                                  const std::vector<std::pair<Rational, long>>& terms) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    std::vector<Rational> poly(m, Rational(0));
    for (const auto& [coeff, exp] : terms) {
        long e = exp % static_cast<long>(m);
        if (e < 0) e += static_cast<long>(m);
        poly[static_cast<std::size_t>(e)] += coeff;
    }
    return reduce(m, std::move(poly));
}

Cyclotomic Cyclotomic::embedded(unsigned long M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw std::logic_error("embedding target is not a multiple of conductor");
    const unsigned long t = M / m_;
    std::vector<Rational> poly(M, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * t] = c_[i];
    return reduce(M, std::move(poly));
}

Cyclotomic Cyclotomic::galois(long j) const {
    long jm = j % static_cast<long>(m_);
    if (jm < 0) jm += static_cast<long>(m_);
    if (std::gcd(static_cast<unsigned long>(jm), m_) != 1 && m_ != 1)
        throw std::invalid_argument("not a Galois automorphism: gcd(j, conductor) != 1");
    std::vector<Rational> poly(m_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        poly[(i * static_cast<unsigned long>(jm)) % m_] += c_[i];
    return reduce(m_, std::move(poly));
}

Cyclotomic Cyclotomic::conj() const {
    return galois(static_cast<long>(m_) - 1);
}

bool Cyclotomic::in_subfield(unsigned long s) const {
    if (s < 1) throw std::invalid_argument("subfield conductor must be positive");
    const unsigned long M = std::lcm(m_, s);
    const Cyclotomic a = embedded(M);
    for (unsigned long j : units_mod(M)) {
        if (s > 1 && j % s != 1) continue;
        if (a.galois(static_cast<long>(j)) != a) return false;
    }
    return true;
}

Rational Cyclotomic::trace_to_Q() const {
    Cyclotomic sum;
    for (unsigned long j : units_mod(m_)) sum += galois(static_cast<long>(j));
    auto r = sum.as_rational();
    if (!r) throw std::logic_error("trace did not reduce to a rational value");
    return *r;
}

Rational Cyclotomic::trace_subfield(unsigned long s) const {
    if (!in_subfield(s)) throw std::invalid_argument("element outside stated subfield");
    const unsigned long M = std::lcm(m_, s);
    Rational scale(euler_phi(s), euler_phi(M));
    scale.canonicalize();
    return embedded(M).trace_to_Q() * scale;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

bool Cyclotomic::is_rational() const {
    return as_rational().has_value();
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> out = c_;
    for (auto& c : out) c = -c;
    return Cyclotomic(m_, std::move(out));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    std::vector<Rational> out = c_;
    for (auto& c : out) {
        c *= r;
        c.canonicalize();
    }
    return Cyclotomic(m_, std::move(out));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned long M = std::lcm(a.m_, b.m_);
    Cyclotomic ea = a.embedded(M), eb = b.embedded(M);
    for (std::size_t i = 0; i < ea.c_.size(); ++i) ea.c_[i] += eb.c_[i];
    return ea;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned long M = std::lcm(a.m_, b.m_);
    Cyclotomic ea = a.embedded(M), eb = b.embedded(M);
    std::vector<Rational> prod(2 * ea.c_.size(), Rational(0));
    for (std::size_t i = 0; i < ea.c_.size(); ++i) {
        if (ea.c_[i] == 0) continue;
        for (std::size_t j = 0; j < eb.c_.size(); ++j) {
            if (eb.c_[j] == 0) continue;
            prod[i + j] += ea.c_[i] * eb.c_[j];
        }
    }
    return Cyclotomic::reduce(M, std::move(prod));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned long M = std::lcm(a.m_, b.m_);
    return a.embedded(M).c_ == b.embedded(M).c_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << format_rational(c_[i]);
        if (i > 0) os << "*z" << m_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace helpzc
