#include "maxtoric/ratpoly/text.hpp"

#include "maxtoric/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace maxtoric::ratpoly {

std::string to_string(const Polynomial& f) {
    return to_string(f, MonomialOrder::lex(f.num_vars()));
}

std::string to_string(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.sorted_terms(ord)) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        const Rational magnitude = abs(c);
        const bool has_var = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
        bool need_star = false;
        if (!has_var || magnitude != 1) {
            out += maxtoric::to_string(magnitude);
            need_star = true;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (need_star) out += '*';
            out += f.vars()[k];
            if (e[k] != 1) out += '^' + std::to_string(e[k]);
            need_star = true;
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::vector<std::string> vars, bool laurent)
        : text_(text), result_(std::move(vars), laurent) {}

    Polynomial run() {
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
            skip_ws();
        }
        term(negative);
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = get();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            skip_ws();
            term(c == '-');
        }
        return std::move(result_);
    }

private:
    void term(bool negative) {
        Rational coef = negative ? -1 : 1;
        ExponentVector exps(result_.num_vars(), 0);
        factor(coef, exps);
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            get();
            skip_ws();
            factor(coef, exps);
        }
        result_.add_term(exps, coef);
    }

    void factor(Rational& coef, ExponentVector& exps) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num(digits(), 10);
            Integer den = 1;
            if (peek() == '/') {
                get();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
                den = Integer(digits(), 10);
                if (den == 0) fail("zero denominator");
            }
            Rational q(num, den);
            q.canonicalize();
            coef *= q;
            return;
        }
        if (!is_ident_start(peek())) fail("expected a number or a variable");
        const std::size_t start = pos_;
        while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        const auto& vars = result_.vars();
        const auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) fail("unknown variable '" + name + "'");
        std::int64_t power = 1;
        if (peek() == '^') {
            get();
            bool neg = false;
            if (peek() == '-') {
                get();
                neg = true;
            }
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            const std::string d = digits();
            if (d.size() > 9) fail("exponent too large");
            power = std::stoll(d);
            if (neg) {
                if (!result_.is_laurent()) fail("negative exponent in an ordinary polynomial");
                power = -power;
            }
        }
        auto& slot = exps[static_cast<std::size_t>(it - vars.begin())];
        const std::int64_t total = slot + power;
        if (total > std::numeric_limits<std::int32_t>::max() ||
            total < std::numeric_limits<std::int32_t>::min())
            fail("exponent too large");
        slot = static_cast<std::int32_t>(total);
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Polynomial result_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::vector<std::string> vars, bool laurent) {
    return Parser(text, std::move(vars), laurent).run();
}

}  // namespace maxtoric::ratpoly
