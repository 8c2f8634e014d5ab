#include "leibcoh/io.hpp"

#include "leibcoh/errors.hpp"
#include "leibcoh/rational.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace leibcoh {

using nlohmann::json;

namespace {

std::size_t get_index(const json& j, const char* field, std::size_t dim) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("bracket entry missing integer field '") + field + "'");
    long long v = j[field].get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        throw ParseError(std::string("index '") + field + "' = " + std::to_string(v) +
                         " out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v) - 1;
}

} // namespace

AlgebraSpec algebra_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("algebra file: top level must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("algebra file: missing integer field 'dim'");
    long long dim_raw = j["dim"].get<long long>();
    if (dim_raw < 1 || dim_raw > 16)
        throw ParseError("algebra file: 'dim' must be in 1..16");
    const std::size_t dim = static_cast<std::size_t>(dim_raw);

    AlgebraSpec a = AlgebraSpec::zero(dim);
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("algebra file: 'name' must be a string");
        a.name = j["name"].get<std::string>();
    }

    if (!j.contains("brackets") || !j["brackets"].is_array())
        throw ParseError("algebra file: missing array field 'brackets'");

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const json& entry : j["brackets"]) {
        if (!entry.is_object()) throw ParseError("algebra file: bracket entry must be an object");
        std::size_t i = get_index(entry, "i", dim);
        std::size_t jj = get_index(entry, "j", dim);
        if (!seen.insert({i, jj}).second)
            throw ParseError("algebra file: duplicate bracket entry (i=" + std::to_string(i + 1) +
                             ", j=" + std::to_string(jj + 1) + ")");
        if (!entry.contains("terms") || !entry["terms"].is_array())
            throw ParseError("algebra file: bracket entry missing array field 'terms'");
        for (const json& term : entry["terms"]) {
            if (!term.is_object()) throw ParseError("algebra file: term must be an object");
            std::size_t k = get_index(term, "k", dim);
            if (!term.contains("c") || !term["c"].is_string())
                throw ParseError("algebra file: term field 'c' must be a rational string "
                                 "like \"1\" or \"-2/3\"");
            a.at(i, jj, k) += parse_rational(term["c"].get<std::string>());
        }
    }
    return a;
}

json algebra_to_json(const AlgebraSpec& a) {
    json out;
    out["dim"] = a.dim;
    if (!a.name.empty()) out["name"] = a.name;
    json brackets = json::array();
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            json terms = json::array();
            for (std::size_t k = 0; k < a.dim; ++k)
                if (!a.at(i, j, k).is_zero())
                    terms.push_back({{"k", k + 1}, {"c", rat_str(a.at(i, j, k))}});
            if (!terms.empty())
                brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"terms", terms}});
        }
    out["brackets"] = brackets;
    return out;
}

AlgebraSpec load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open algebra file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("algebra file '" + path + "': " + e.what());
    }
    return algebra_from_json(j);
}

std::string canonical_serialization(const AlgebraSpec& a) {
    json j = algebra_to_json(a);
    j.erase("name");
    return j.dump();
}

std::string fingerprint_hex(const AlgebraSpec& a) {
    std::string bytes = canonical_serialization(a);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
    return os.str();
}

} // namespace leibcoh
