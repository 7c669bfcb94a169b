#pragma once

#include <map>
#include <string>
#include <vector>

#include "helpzc/cyclotomic.hpp"

namespace helpzc {

struct ConjClass {
    std::string name;
    unsigned long element_order = 1;
    unsigned long centralizer_order = 1;
    // prime -> class of x^p; present for every prime dividing the group exponent
    std::map<unsigned long, std::string> powermap;
};

struct Character {
    std::string name;
    unsigned long degree = 1;
    std::map<std::string, Cyclotomic> values;  // by class name
};

struct BrauerTable {
    unsigned long prime = 2;
    std::vector<std::string> regular_classes;  // table order, derived
    std::vector<Character> characters;
};

// Immutable after parse; all queries are pure reads.
class GroupData {
public:
    std::string name;
    unsigned long group_order = 1;
    std::vector<ConjClass> classes;
    std::vector<Character> ordinary;
    std::vector<BrauerTable> brauer;
    unsigned long exponent = 1;  // lcm of element orders

    const ConjClass& class_by_name(const std::string& cls) const;
    const ConjClass& identity_class() const;
    bool has_class(const std::string& cls) const;

    // Class of x^d, composed from the prime powermaps.
    std::string power_class(const std::string& cls, unsigned long d) const;

    // Classes with element order coprime to p; errors if p does not divide
    // the group order.
    std::vector<std::string> p_regular_classes(unsigned long p) const;

    // Second orthogonality per column; empty list iff all columns pass.
    std::vector<std::string> validate_orthogonality() const;
};

// Parse and fully validate a group-data JSON document.
GroupData parse_group_data(const std::string& json_text);
GroupData load_group_data(const std::string& path);

// A character value literal: bare number, "p/q" string, or
// {"m": conductor, "terms": [[coeff, exponent], ...]}.
}  // namespace helpzc
