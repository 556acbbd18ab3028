#include "xp/rational.hpp"

#include <cctype>
#include <sstream>

namespace xp {

std::string rat_to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

namespace {

Rational parse_decimal(const std::string& s) {
    // "-12.375" -> -12375/1000
    auto dot = s.find('.');
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad decimal literal: " + s);
    bool neg = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
        neg = head[0] == '-';
        head = head.substr(1);
    }
    if (head.empty()) head = "0";
    BigInt ip(head);
    BigInt scale = 1;
    BigInt frac = 0;
    if (!tail.empty()) {
        frac = BigInt(tail);
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    }
    Rational r = Rational(ip) + Rational(frac, scale);
    return neg ? -r : r;
}

} // namespace

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        if (a.empty() || b.empty()) throw ParseError("bad rational literal: " + raw);
        Rational den{BigInt(b)};
        if (den == 0) throw ParseError("zero denominator: " + raw);
        return Rational{BigInt(a)} / den;
    }
    if (s.find('.') != std::string::npos) return parse_decimal(s);
    return Rational(BigInt(s));
}

} // namespace xp
