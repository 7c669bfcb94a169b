#include "helpzc/tables.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "helpzc/numtheory.hpp"

namespace helpzc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("group data: " + msg);
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail("malformed rational: expected integer or \"p/q\" string");
}

Cyclotomic value_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
    if (j.is_object()) {
        if (!j.contains("m") || !j.contains("terms")) fail("cyclotomic literal needs \"m\" and \"terms\"");
        const auto m = j.at("m").get<long long>();
        if (m < 1) fail("cyclotomic literal: conductor must be positive");
        std::vector<std::pair<Rational, long>> terms;
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 2) fail("cyclotomic literal: term must be [coeff, exponent]");
            terms.emplace_back(rational_from_json(t.at(0)), t.at(1).get<long>());
        }
        return Cyclotomic::from_terms(static_cast<unsigned long>(m), terms);
    }
    fail("malformed character value");
}

Character parse_character(const json& j, const GroupData& g,
                          const std::vector<std::string>& required_classes) {
    Character chr;
    chr.name = j.at("name").get<std::string>();
    std::set<std::string> allowed(required_classes.begin(), required_classes.end());
    if (!j.contains("values")) fail("character " + chr.name + " has no values");
    for (const auto& [cls, val] : j.at("values").items()) {
        if (!allowed.count(cls))
            fail("character " + chr.name + ": value at unknown or non-regular class " + cls);
        chr.values.emplace(cls, value_from_json(val));
    }
    for (const auto& cls : required_classes)
        if (!chr.values.count(cls))
            fail("character " + chr.name + ": missing value at class " + cls);

    // Degree comes from the identity column and must be a positive integer.
    const std::string id = g.identity_class().name;
    auto deg = chr.values.at(id).as_rational();
    if (!deg || !is_integer(*deg) || *deg <= 0)
        fail("character " + chr.name + ": degree mismatch at " + id +
             " (value must be a positive integer)");
    chr.degree = deg->get_num().get_ui();

    // Each value lies in Q(zeta_ord(x)).
    for (const auto& [cls, val] : chr.values)
        if (!val.in_subfield(g.class_by_name(cls).element_order))
            fail("character " + chr.name + ": value outside Q(zeta_ord) at class " + cls);
    return chr;
}

}  // namespace

const ConjClass& GroupData::class_by_name(const std::string& cls) const {
    for (const auto& c : classes)
        if (c.name == cls) return c;
    fail("unknown class reference: " + cls);
}

bool GroupData::has_class(const std::string& cls) const {
    for (const auto& c : classes)
        if (c.name == cls) return true;
    return false;
}

const ConjClass& GroupData::identity_class() const {
    for (const auto& c : classes)
        if (c.element_order == 1) return c;
    fail("no identity class present");
}

std::string GroupData::power_class(const std::string& cls, unsigned long d) const {
    const ConjClass& c = class_by_name(cls);
    d %= c.element_order;
    if (d == 0) return identity_class().name;
    std::string cur = cls;
    for (const auto& [p, e] : factorize(d)) {
        for (unsigned i = 0; i < e; ++i) {
            const ConjClass& cc = class_by_name(cur);
            auto it = cc.powermap.find(p);
            if (it != cc.powermap.end()) {
                cur = it->second;
            } else {
                // p coprime to the exponent: fold it down modulo the element order.
                cur = power_class(cur, p % cc.element_order);
            }
        }
    }
    return cur;
}

std::vector<std::string> GroupData::p_regular_classes(unsigned long p) const {
    if (p < 2 || group_order % p != 0)
        throw std::invalid_argument("p_regular_classes: " + std::to_string(p) +
                                    " does not divide the group order");
    std::vector<std::string> out;
    for (const auto& c : classes)
        if (c.element_order % p != 0) out.push_back(c.name);
    return out;
}

std::vector<std::string> GroupData::validate_orthogonality() const {
    std::vector<std::string> violations;
    for (const auto& c : classes) {
        Cyclotomic sum;
        for (const auto& chr : ordinary) {
            const Cyclotomic& v = chr.values.at(c.name);
            sum += v * v.conj();
        }
        auto r = sum.as_rational();
        if (!r || *r != Rational(static_cast<long>(c.centralizer_order))) {
            std::ostringstream os;
            os << "second orthogonality fails at class " << c.name << ": got "
               << (r ? format_rational(*r) : sum.to_string()) << ", expected "
               << c.centralizer_order;
            violations.push_back(os.str());
        }
    }
    return violations;
}

GroupData parse_group_data(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }

    GroupData g;
    try {
        g.name = doc.at("name").get<std::string>();
        g.group_order = doc.at("group_order").get<unsigned long>();
        if (g.group_order < 1) fail("group_order must be positive");

        std::set<std::string> seen;
        for (const auto& jc : doc.at("classes")) {
            ConjClass c;
            c.name = jc.at("name").get<std::string>();
            if (!seen.insert(c.name).second) fail("duplicate class name: " + c.name);
            c.element_order = jc.at("element_order").get<unsigned long>();
            if (c.element_order < 1 || g.group_order % c.element_order != 0)
                fail("element order of " + c.name + " does not divide the group order");
            if (!jc.contains("centralizer_order"))
                fail("class " + c.name + ": centralizer_order is required");
            c.centralizer_order = jc.at("centralizer_order").get<unsigned long>();
            if (jc.contains("powermap"))
                for (const auto& [ps, cls] : jc.at("powermap").items()) {
                    unsigned long p = std::stoul(ps);
                    c.powermap[p] = cls.get<std::string>();
                }
            g.classes.push_back(std::move(c));
        }
        if (g.classes.empty()) fail("no classes");

        g.exponent = 1;
        for (const auto& c : g.classes) g.exponent = std::lcm(g.exponent, c.element_order);

        std::size_t identities = 0;
        for (const auto& c : g.classes)
            if (c.element_order == 1) ++identities;
        if (identities != 1) fail("exactly one identity class required");

        // Powermap sanity: entries exist for every prime dividing the exponent,
        // targets exist and have the right element order.
        for (const auto& c : g.classes) {
            for (unsigned long p : prime_divisors(g.exponent)) {
                auto it = c.powermap.find(p);
                if (it == c.powermap.end())
                    fail("class " + c.name + ": missing powermap entry for prime " +
                         std::to_string(p));
                if (!g.has_class(it->second))
                    fail("class " + c.name + ": unknown class reference " + it->second +
                         " in powermap");
                const unsigned long expect = c.element_order / std::gcd(p, c.element_order);
                if (g.class_by_name(it->second).element_order != expect)
                    fail("class " + c.name + ": powermap target " + it->second +
                         " has wrong element order");
            }
        }

        std::vector<std::string> all_classes;
        for (const auto& c : g.classes) all_classes.push_back(c.name);
        for (const auto& jc : doc.at("ordinary"))
            g.ordinary.push_back(parse_character(jc, g, all_classes));
        if (g.ordinary.size() != g.classes.size())
            fail("number of ordinary characters must equal number of classes");

        if (doc.contains("brauer")) {
            for (const auto& jb : doc.at("brauer")) {
                BrauerTable bt;
                bt.prime = jb.at("prime").get<unsigned long>();
                if (bt.prime < 2 || g.group_order % bt.prime != 0)
                    fail("Brauer table prime " + std::to_string(bt.prime) +
                         " does not divide the group order");
                for (const auto& c : g.classes)
                    if (c.element_order % bt.prime != 0) bt.regular_classes.push_back(c.name);
                for (const auto& jchr : jb.at("characters"))
                    bt.characters.push_back(parse_character(jchr, g, bt.regular_classes));
                g.brauer.push_back(std::move(bt));
            }
        }
    } catch (const json::exception& e) {
        fail(std::string("schema violation: ") + e.what());
    }
    return g;
}

GroupData load_group_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_group_data(ss.str());
}

}  // namespace helpzc
