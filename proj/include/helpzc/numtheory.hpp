#pragma once

#include <map>
#include <vector>

namespace helpzc {

unsigned long euler_phi(unsigned long n);

// Sorted ascending, includes 1 and n.
std::vector<unsigned long> divisors(unsigned long n);

// prime -> exponent
std::map<unsigned long, unsigned> factorize(unsigned long n);

std::vector<unsigned long> prime_divisors(unsigned long n);

// Residues j in [1, m] with gcd(j, m) = 1; for m = 1 this is {1}.
std::vector<unsigned long> units_mod(unsigned long m);

}  // namespace helpzc
