#include "liequant/parse.hpp"

#include <cctype>

namespace liequant {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ExprContextPtr& ctx) : text_(text), ctx_(ctx) {}

    Expr run() {
        Expr e = expression();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return e;
    }

private:
    Expr expression() {
        Expr e = term();
        while (true) {
            skip_ws();
            if (accept('+'))
                e += term();
            else if (accept('-'))
                e -= term();
            else
                return e;
        }
    }

    Expr term() {
        Expr e = factor();
        while (true) {
            skip_ws();
            if (accept('*'))
                e *= factor();
            else if (accept('/'))
                e /= factor();
            else
                return e;
        }
    }

    Expr factor() {
        skip_ws();
        bool neg = false;
        while (true) {
            if (accept('-'))
                neg = !neg;
            else if (accept('+'))
                ;
            else
                break;
            skip_ws();
        }
        Expr e = power();
        return neg ? -e : e;
    }

    Expr power() {
        Expr base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            size_t start = pos_;
            long e = integer();
            if (pos_ == start) throw parse_error("expected integer exponent", pos_);
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    Expr atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expression();
            skip_ws();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
            (void)start;
            return Expr::constant(ctx_, GRat(BigRat(BigInt(digits))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            std::string name = identifier();
            if (name == "i") return Expr::imaginary_unit(ctx_);
            auto idx = ctx_->table().find(name);
            if (!idx) throw parse_error("undeclared symbol '" + name + "'", start);
            return Expr::variable(ctx_, *idx);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string identifier() {
        std::string name;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                ++pos_;
            } else if (c == '\'') {
                name += c;
                ++pos_;
            } else {
                break;
            }
        }
        return name;
    }

    long integer() {
        long v = 0;
        bool any = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
            any = true;
        }
        if (!any) throw parse_error("expected integer", pos_);
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& text_;
    ExprContextPtr ctx_;
    size_t pos_ = 0;
};

} // namespace

Expr parse_expr(const std::string& text, const ExprContextPtr& ctx) { return Parser(text, ctx).run(); }

} // namespace liequant
