#include <cctype>

#include "a1deg/poly.hpp"

namespace a1deg {

namespace {

// expr   := term (('+' | '-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | atom ('^' nat)?
// atom   := number | ident | '(' expr ')'
// number := digits ('/' digits)?
class Parser {
public:
    Parser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

    Polynomial run() {
        Polynomial p = expr_();
        skip_ws_();
        if (pos_ != s_.size())
            fail_("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    RingPtr ring_;
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail_(const std::string& msg) {
        raise(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip_ws_() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat_(char c) {
        skip_ws_();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek_() {
        skip_ws_();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr_() {
        Polynomial acc = term_();
        while (true) {
            if (eat_('+'))
                acc = acc + term_();
            else if (eat_('-'))
                acc = acc - term_();
            else
                return acc;
        }
    }

    Polynomial term_() {
        Polynomial acc = factor_();
        while (eat_('*')) acc = acc * factor_();
        return acc;
    }

    Polynomial factor_() {
        if (eat_('-')) return -factor_();
        Polynomial base = atom_();
        if (eat_('^')) {
            skip_ws_();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail_("expected a non-negative integer exponent");
            unsigned long e = std::stoul(digits_());
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    std::string digits_() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Polynomial atom_() {
        skip_ws_();
        if (pos_ >= s_.size()) fail_("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr_();
            if (!eat_(')')) fail_("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(digits_(), 10);
            Int den(1);
            if (peek_() == '/') {
                ++pos_;
                skip_ws_();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail_("expected denominator digits");
                den = Int(digits_(), 10);
                if (sgn(den) == 0) fail_("zero denominator");
            }
            if (ring_->field.is_prime_field() &&
                mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(ring_->field.p)))
                fail_("denominator vanishes in " + ring_->field.name());
            return Polynomial::constant(ring_, FieldElement::rational(ring_->field, num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int idx = ring_->var_index(name);
            if (idx < 0) fail_("unknown variable '" + name + "'");
            return Polynomial::variable(ring_, static_cast<size_t>(idx));
        }
        fail_("unexpected character '" + std::string(1, c) + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return Parser(ring, text).run();
}

FieldElement parse_field_element(const FieldContext& ctx, const std::string& text) {
    RingPtr scalars = make_ring(ctx, {});
    return parse_polynomial(scalars, text).constant_term();
}

UniPoly parse_unipoly(const FieldContext& ctx, const std::string& var, const std::string& text) {
    RingPtr ring = make_ring(ctx, {var});
    return parse_polynomial(ring, text).to_unipoly(0);
}

}  // namespace a1deg
