#include "certify/parse.hpp"

#include <cctype>

namespace certify {

namespace {

class Parser {
public:
    Parser(const std::string& text, Spec ring) : text_(text), ring_(std::move(ring)) {}

    LaurentPoly run() {
        LaurentPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char ch) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    bool eat(char ch) {
        if (!peek(ch))
            return false;
        ++pos_;
        return true;
    }

    LaurentPoly expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        LaurentPoly acc = term();
        if (neg)
            acc = -acc;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        while (eat('*'))
            acc = acc * factor();
        return acc;
    }

    LaurentPoly factor() {
        LaurentPoly b = base();
        skip_ws();
        if (eat('^')) {
            const std::size_t at = pos_;
            const int n = integer();
            if (n < 0 && !b.is_unit_monomial())
                throw ParseError("negative exponent on a non-invertible base", at);
            return b.pow(n);
        }
        return b;
    }

    int integer() {
        skip_ws();
        const std::size_t start = pos_;
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected integer exponent", start);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000)
                throw ParseError("exponent out of range", start);
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    Int digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return Int(s);
    }

    LaurentPoly base() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!eat(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Int num = digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t at = pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected denominator digits", at);
                Int den = digits();
                if (den.is_zero())
                    throw ParseError("zero denominator", at);
                return LaurentPoly::constant(ring_, GR(Rat(num, den)));
            }
            return LaurentPoly::constant(ring_, GR(num));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                id += text_[pos_++];
            if (id == "i")
                return LaurentPoly::constant(ring_, GR::i());
            if (!ring_->has(id))
                throw ParseError("unknown variable '" + id + "'", start);
            return LaurentPoly::variable(ring_, id);
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    }

    const std::string& text_;
    Spec ring_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, const Spec& ring) {
    return Parser(text, ring).run();
}

GR parse_scalar(const std::string& text) {
    static const Spec kEmpty = RingSpec::make({});
    return parse_poly(text, kEmpty).constant_value();
}

}  // namespace certify
