#include "bisect/rational.hpp"

#include <stdexcept>

namespace bisect {

namespace {

std::int64_t parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        auto den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.size() > 12) throw std::invalid_argument("too many decimals in '" + text + "'");
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    std::int64_t w = parse_int(whole);
    std::int64_t num = (neg ? -1 : 1) * (std::abs(w) * scale + f);
    return Rational(num, scale);
}

}  // namespace bisect
