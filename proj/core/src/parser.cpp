#include "jetgeom/parser.hpp"
#include "jetgeom/error.hpp"

#include <cctype>

namespace jetgeom {

namespace {

class Parser {
public:
    Parser(const std::string& text, ChartPtr chart)
        : text_(text), chart_(std::move(chart)) {}

    ScalarExpr run() {
        ScalarExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    ChartPtr chart_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ScalarExpr expr() {
        ScalarExpr e = term();
        for (;;) {
            if (eat('+')) e = e + term();
            else if (eat('-')) e = e - term();
            else return e;
        }
    }

    ScalarExpr term() {
        ScalarExpr e = unary();
        for (;;) {
            if (eat('*')) e = e * unary();
            else if (eat('/')) e = e / unary();
            else return e;
        }
    }

    ScalarExpr unary() {
        bool neg = false;
        for (;;) {
            if (eat('-')) neg = !neg;
            else if (eat('+')) continue;
            else break;
        }
        ScalarExpr e = power();
        return neg ? -e : e;
    }

    ScalarExpr power() {
        ScalarExpr base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
                fail("expected integer exponent");
            long n = 0;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
                n = n * 10 + (text_[pos_++] - '0');
            return base.pow(neg ? -n : n);
        }
        return base;
    }

    ScalarExpr atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit((unsigned char)c)) return number();
        if (c == '(') {
            ++pos_;
            ScalarExpr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isalpha((unsigned char)c) || c == '_') return identifier();
        fail("unexpected character");
    }

    ScalarExpr number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
        mpz_class int_part(text_.substr(start, pos_ - start));
        mpq_class value(int_part);
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t fs = pos_;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
            if (fs == pos_) fail("expected digits after decimal point");
            mpz_class frac(text_.substr(fs, pos_ - fs));
            mpz_class scale = 1;
            for (std::size_t k = fs; k < pos_; ++k) scale *= 10;
            value += mpq_class(frac, scale);
            value.canonicalize();
        }
        return ScalarExpr::constant(chart_, CNum(value));
    }

    ScalarExpr identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "i") return ScalarExpr::constant(chart_, CNum::i());
        if (name == "sin" || name == "cos") {
            if (!eat('(')) fail("expected '(' after " + name);
            skip_ws();
            std::size_t as = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
                ++pos_;
            std::string angle = text_.substr(as, pos_ - as);
            if (angle.empty()) fail("expected angle coordinate");
            if (!eat(')')) fail("expected ')'");
            return name == "sin" ? ScalarExpr::sin_of(chart_, angle)
                                 : ScalarExpr::cos_of(chart_, angle);
        }
        if (chart_->coord_index(name) < 0) {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        return ScalarExpr::coordinate(chart_, name);
    }
};

} // namespace

ScalarExpr parse(const std::string& text, ChartPtr chart) {
    return Parser(text, std::move(chart)).run();
}

} // namespace jetgeom
