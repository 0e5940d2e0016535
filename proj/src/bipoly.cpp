#include "plethora/bipoly.hpp"

#include <cctype>
#include <sstream>

#include "plethora/error.hpp"

namespace plethora {

BiPoly::BiPoly(const Rational &c)
{
    add_term({0, 0}, c);
}

BiPoly::BiPoly(const Rational &c, Monomial m)
{
    add_term(m, c);
}

void BiPoly::add_term(Monomial m, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational BiPoly::coeff(Monomial m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool BiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

unsigned BiPoly::degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

unsigned BiPoly::max_u_exponent() const
{
    unsigned r = 0;
    for (const auto &[m, c] : terms_) {
        r = std::max(r, m.a);
    }
    return r;
}

unsigned BiPoly::max_v_exponent() const
{
    unsigned r = 0;
    for (const auto &[m, c] : terms_) {
        r = std::max(r, m.b);
    }
    return r;
}

bool BiPoly::has_integer_coefficients() const
{
    for (const auto &[m, c] : terms_) {
        if (!c.is_integer()) {
            return false;
        }
    }
    return true;
}

BiPoly &BiPoly::operator+=(const BiPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

BiPoly &BiPoly::operator-=(const BiPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

BiPoly operator*(const BiPoly &x, const BiPoly &y)
{
    BiPoly r;
    for (const auto &[mx, cx] : x.terms_) {
        for (const auto &[my, cy] : y.terms_) {
            r.add_term(mx * my, cx * cy);
        }
    }
    return r;
}

BiPoly &BiPoly::operator*=(const BiPoly &o)
{
    *this = *this * o;
    return *this;
}

BiPoly &BiPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

BiPoly BiPoly::operator-() const
{
    BiPoly r = *this;
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

BiPoly BiPoly::pow(unsigned k) const
{
    BiPoly result(1);
    BiPoly base = *this;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

BiPoly BiPoly::substitute_powers(unsigned m) const
{
    require(m >= 1, "substitute_powers requires m >= 1");
    BiPoly r;
    for (const auto &[mono, c] : terms_) {
        r.terms_.emplace(Monomial{mono.a * m, mono.b * m}, c);
    }
    return r;
}

BiPoly BiPoly::swap_uv() const
{
    BiPoly r;
    for (const auto &[m, c] : terms_) {
        r.terms_.emplace(Monomial{m.b, m.a}, c);
    }
    return r;
}

BiPoly BiPoly::negate_variables() const
{
    BiPoly r = *this;
    for (auto &[m, c] : r.terms_) {
        if (m.degree() % 2 == 1) {
            c = -c;
        }
    }
    return r;
}

Rational BiPoly::evaluate(const Rational &u, const Rational &v) const
{
    Rational total;
    for (const auto &[m, c] : terms_) {
        Rational term = c;
        for (unsigned i = 0; i < m.a; ++i) {
            term *= u;
        }
        for (unsigned i = 0; i < m.b; ++i) {
            term *= v;
        }
        total += term;
    }
    return total;
}

namespace {

void append_factor(std::string &out, char var, unsigned exponent)
{
    if (exponent == 0) {
        return;
    }
    if (!out.empty() && out.back() != ' ' && out.back() != '-') {
        out += '*';
    }
    out += var;
    if (exponent > 1) {
        out += '^' + std::to_string(exponent);
    }
}

} // namespace

std::string BiPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                out += '-';
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const bool unit = magnitude == Rational(1);
        if (m.degree() == 0 || !unit) {
            out += magnitude.to_string();
        }
        append_factor(out, 'u', m.a);
        append_factor(out, 'v', m.b);
    }
    return out;
}

namespace {

// Recursive-descent parser for the canonical text form and ordinary
// arithmetic over u and v.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BiPoly parse()
    {
        BiPoly r = expression();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw PreconditionError("malformed polynomial '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expression()
    {
        BiPoly r = term();
        while (true) {
            if (accept('+')) {
                r += term();
            } else if (accept('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }

    BiPoly term()
    {
        BiPoly r = unary();
        while (true) {
            if (accept('*')) {
                r *= unary();
            } else if (accept('/')) {
                const BiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    fail("division by a non-constant or zero");
                }
                r *= Rational(1) / d.constant_term();
            } else {
                return r;
            }
        }
    }

    BiPoly unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        BiPoly base = primary();
        if (accept('^')) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected exponent");
            }
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    BiPoly primary()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly r = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return r;
        }
        if (c == 'u') {
            ++pos_;
            return BiPoly::u();
        }
        if (c == 'v') {
            ++pos_;
            return BiPoly::v();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            return BiPoly(Rational(BigInt(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

BiPoly BiPoly::parse(std::string_view text)
{
    return Parser(text).parse();
}

BiPoly substitute_powers(const BiPoly &f, unsigned m)
{
    return f.substitute_powers(m);
}

} // namespace plethora
