#include "mappell/rational.hpp"

#include <cctype>

namespace mappell {

Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1u;
    }
    return b;
}

Rational pow_rational(const Rational &x, unsigned e)
{
    Rational p = 1;
    for (unsigned i = 0; i < e; ++i) {
        p *= x;
    }
    return p;
}

namespace {

bool valid_integer_token(const std::string &s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string &s)
{
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(s)) {
            throw std::invalid_argument("invalid rational: '" + s + "'");
        }
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
        throw std::invalid_argument("invalid rational: '" + s + "'");
    }
    Integer d(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + s + "'");
    }
    return Rational(Integer(num), d);
}

std::string rational_to_string(const Rational &r)
{
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace mappell
