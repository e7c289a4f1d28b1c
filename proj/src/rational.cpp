#include "skewchar/rational.hpp"

#include <cctype>

#include "skewchar/errors.hpp"

namespace skewchar {

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Int parse_int(std::string_view s) {
    if (!valid_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    return Int(strip_plus(s));
}

Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational: '" + std::string(s) + "'");
    Int d(std::string{den});
    if (d == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
    Rat r(Int(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

Rat make_rat(long num, long den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

}  // namespace skewchar
