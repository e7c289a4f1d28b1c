#include "skewchar/charpoly_io.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

#include "skewchar/errors.hpp"

namespace skewchar {

std::string term_to_text(const Monomial& m, const Int& coeff) {
    std::ostringstream os;
    os << (coeff < 0 ? "-" : "+") << to_string(Int(abs(coeff)));
    for (const auto& f : m.factors())
        os << " * d[" << f.sym.index << ";" << to_string(f.sym.shift) << "]^" << f.exp;
    return os.str();
}

std::string to_text(const CharPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : canonical_terms(p)) {
        if (!out.empty()) out += ' ';
        out += term_to_text(m, c);
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        if (!peek(c))
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    }
    std::string_view token(const char* stop) {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && !std::strchr(stop, s[pos]) &&
               !std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos) throw ParseError("empty token at offset " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
};

}  // namespace

CharPoly parse_charpoly_text(std::string_view text, const Signature& sig) {
    CharPoly p(sig);
    Cursor cur{text};
    if (cur.peek('0')) {
        cur.expect('0');
        if (!cur.at_end()) throw ParseError("trailing input after 0");
        return p;
    }
    while (!cur.at_end()) {
        cur.skip_ws();
        char sign = cur.s[cur.pos];
        if (sign != '+' && sign != '-') throw ParseError("term must start with a sign");
        ++cur.pos;
        Int c = parse_int(cur.token("*"));
        if (sign == '-') c = -c;
        std::vector<Factor> fs;
        while (cur.peek('*')) {
            cur.expect('*');
            cur.skip_ws();
            if (cur.pos >= cur.s.size() || cur.s[cur.pos] != 'd') throw ParseError("expected d[");
            ++cur.pos;
            cur.expect('[');
            int i = static_cast<int>(parse_int(cur.token(";")).get_si());
            cur.expect(';');
            Rat shift = parse_rat(cur.token("]"));
            cur.expect(']');
            cur.expect('^');
            int e = static_cast<int>(parse_int(cur.token("*+-")).get_si());
            if (e < 1) throw ParseError("exponent must be positive");
            fs.push_back(Factor{DSymbol{i, shift}, e});
        }
        p.add_term(Monomial::from_factors(std::move(fs), sig), c);
    }
    return p;
}

nlohmann::json term_to_json(const Monomial& m, const Int& coeff) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : m.factors())
        fs.push_back({{"i", f.sym.index}, {"c", to_string(f.sym.shift)}, {"e", f.exp}});
    return {{"coeff", to_string(coeff)}, {"parity", m.parity()}, {"factors", fs}};
}

nlohmann::json to_json(const CharPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : canonical_terms(p)) terms.push_back(term_to_json(m, c));
    return {{"m", p.signature().m}, {"n", p.signature().n}, {"terms", terms}};
}

static Int json_int(const nlohmann::json& v) {
    if (v.is_string()) return parse_int(v.get<std::string>());
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
    throw ParseError("expected an integer");
}

static Rat json_rat(const nlohmann::json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(json_int(v));
    throw ParseError("expected an exact rational string");
}

CharPoly charpoly_from_json(const nlohmann::json& j) {
    try {
        Signature sig{j.at("m").get<int>(), j.at("n").get<int>()};
        CharPoly p(sig);
        for (const auto& t : j.at("terms")) {
            std::vector<Factor> fs;
            for (const auto& f : t.at("factors"))
                fs.push_back(Factor{DSymbol{f.at("i").get<int>(), json_rat(f.at("c"))},
                                    f.at("e").get<int>()});
            Monomial m = Monomial::from_factors(std::move(fs), sig);
            if (t.contains("parity") && t.at("parity").get<int>() != m.parity())
                throw ParseError("stored parity disagrees with the signature");
            p.add_term(m, json_int(t.at("coeff")));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

}  // namespace skewchar
