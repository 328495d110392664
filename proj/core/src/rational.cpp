#include "maxtoric/rational.hpp"

#include "maxtoric/error.hpp"

#include <cctype>
#include <string>

namespace maxtoric {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    const std::string original(text);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational literal '" + original + "'");
        Integer d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + original + "'");
        result = Rational(Integer(std::string(num), 10), d);
        result.canonicalize();
    } else {
        std::string_view mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = s.substr(0, e);
            auto exp_text = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6)
                throw ParseError("malformed exponent in '" + original + "'");
            exponent = std::stol(std::string(exp_text));
            if (exp_negative) exponent = -exponent;
        }
        std::string digits;
        long fraction_digits = 0;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            auto whole = mantissa.substr(0, dot);
            auto frac = mantissa.substr(dot + 1);
            if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
                (!frac.empty() && !all_digits(frac)))
                throw ParseError("malformed decimal literal '" + original + "'");
            digits = std::string(whole) + std::string(frac);
            fraction_digits = static_cast<long>(frac.size());
        } else {
            if (!all_digits(mantissa))
                throw ParseError("malformed rational literal '" + original + "'");
            digits = std::string(mantissa);
        }
        Integer num(digits, 10);
        long shift = exponent - fraction_digits;
        if (shift >= 0) {
            result = Rational(num * pow10(static_cast<unsigned long>(shift)));
        } else {
            result = Rational(num, pow10(static_cast<unsigned long>(-shift)));
            result.canonicalize();
        }
    }
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& base, std::int64_t exponent) {
    if (exponent == 0) return Rational(1);
    if (base == 0) {
        if (exponent < 0) throw DomainError("negative power of zero");
        return Rational(0);
    }
    const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational r = exponent > 0 ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

}  // namespace maxtoric
