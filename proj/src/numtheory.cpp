#include "helpzc/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace helpzc {

std::map<unsigned long, unsigned> factorize(unsigned long n) {
    std::map<unsigned long, unsigned> out;
    for (unsigned long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (auto& [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out{1};
    for (auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        unsigned long pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<unsigned long> units_mod(unsigned long m) {
    std::vector<unsigned long> out;
    for (unsigned long j = 1; j <= m; ++j)
        if (std::gcd(j, m) == 1) out.push_back(j);
    return out;
}

}  // namespace helpzc
