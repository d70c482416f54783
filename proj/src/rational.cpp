#include "lll/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lll {

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational ten_power(long e)
{
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(t);
    return Rational(mpz_class(1), t);
}

}  // namespace

Rational parse_rational(const std::string& raw)
{
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw std::invalid_argument("empty rational");

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        std::string digits = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
        if (!all_digits(digits) || !all_digits(den))
            throw std::invalid_argument("bad fraction: " + raw);
        mpz_class n(num[0] == '+' ? num.substr(1) : num, 10), d(den, 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + raw);
        Rational q(n, d);
        q.canonicalize();
        return q;
    }

    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    std::string mantissa = text.substr(pos);
    long exponent = 0;
    auto e = mantissa.find_first_of("eE");
    if (e != std::string::npos) {
        std::string ex = mantissa.substr(e + 1);
        mantissa = mantissa.substr(0, e);
        std::string exd = (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) ? ex.substr(1) : ex;
        if (!all_digits(exd) || exd.size() > 6) throw std::invalid_argument("bad exponent: " + raw);
        exponent = std::stol(ex);
    }
    std::string intpart = mantissa, frac;
    auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
        intpart = mantissa.substr(0, dot);
        frac = mantissa.substr(dot + 1);
    }
    if (intpart.empty() && frac.empty()) throw std::invalid_argument("bad number: " + raw);
    if ((!intpart.empty() && !all_digits(intpart)) || (!frac.empty() && !all_digits(frac)))
        throw std::invalid_argument("bad number: " + raw);
    std::string digits = intpart + frac;
    Rational q(mpz_class(digits.empty() ? "0" : digits, 10));
    q *= ten_power(exponent - static_cast<long>(frac.size()));
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational ratio(long num, long den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational r(1);
    for (unsigned k = 0; k < exponent; ++k) r *= base;
    return r;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational sum(const std::vector<Rational>& v)
{
    Rational s(0);
    for (const auto& x : v) s += x;
    return s;
}

Rational min_entry(const std::vector<Rational>& v)
{
    if (v.empty()) throw std::invalid_argument("min of empty vector");
    Rational m = v[0];
    for (const auto& x : v)
        if (x < m) m = x;
    return m;
}

Rational max_entry(const std::vector<Rational>& v)
{
    if (v.empty()) throw std::invalid_argument("max of empty vector");
    Rational m = v[0];
    for (const auto& x : v)
        if (x > m) m = x;
    return m;
}

}  // namespace lll
