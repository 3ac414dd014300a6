#include "hoc/rational.hpp"

#include <cctype>

namespace hoc {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational rational_parse(std::string_view text) {
    std::string s(text);
    auto bad = [&] { throw std::invalid_argument("rational_parse: malformed rational '" + s + "'"); };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_text(num) || !is_integer_text(den)) bad();
        mpz_class n(num), d(den);
        if (d == 0) throw std::invalid_argument("rational_parse: zero denominator in '" + s + "'");
        Rational q(n, d);
        q.canonicalize();
        return q;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) ip = ip.substr(1);
        if (ip.empty() && fp.empty()) bad();
        for (char c : ip + fp)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad();
        mpz_class n(ip.empty() ? std::string("0") : ip);
        mpz_class scale = 1;
        for (char c : fp) {
            n = n * 10 + (c - '0');
            scale *= 10;
        }
        Rational q(n, scale);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    if (!is_integer_text(s)) bad();
    return Rational(mpz_class(s));
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& q, unsigned long e) {
    Rational r = 1;
    Rational base = q;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace hoc
