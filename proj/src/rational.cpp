#include "tannercode/rational.hpp"

#include "tannercode/errors.hpp"

#include <cctype>

namespace tanner {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw UsageError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw UsageError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(BigInt(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw UsageError("bad rational literal '" + text + "'");
        BigInt num(digits);
        BigInt den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw UsageError("bad rational literal '" + text + "'");
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

BigInt floor_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

BigInt ceil_rational(const Rational& r) { return -floor_rational(-r); }

BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || k > n) return 0;
    BigInt kk = k;
    if (n - k < kk) kk = n - k;
    BigInt result = 1;
    for (BigInt j = 1; j <= kk; ++j) {
        result *= n - kk + j;
        result /= j;
    }
    return result;
}

Rational pow_rational(const Rational& base, unsigned long exp) {
    Rational acc = 1, b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

}  // namespace tanner
