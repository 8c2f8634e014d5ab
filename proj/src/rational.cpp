#include "leibcoh/rational.hpp"

#include "leibcoh/errors.hpp"

#include <cctype>

namespace leibcoh {

namespace {

// Scan a (possibly signed) run of digits starting at pos. Returns the
// substring and advances pos past it.
std::string scan_integer(const std::string& s, std::size_t& pos, bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < s.size() && s[pos] == '-') ++pos;
    std::size_t digits_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("invalid rational literal: '" + s + "'");
    return s.substr(start, pos - start);
}

} // namespace

Rat parse_rational(const std::string& text) {
    std::size_t pos = 0;
    std::string num = scan_integer(text, pos, true);
    if (pos == text.size()) return Rat(Int(num));
    if (text[pos] != '/') throw ParseError("invalid rational literal: '" + text + "'");
    ++pos;
    std::string den = scan_integer(text, pos, false);
    if (pos != text.size()) throw ParseError("invalid rational literal: '" + text + "'");
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    return Rat(Int(num), d);
}

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

} // namespace leibcoh
