#include "confdunkl/exprparse.hpp"

#include <cctype>

namespace confdunkl {

namespace {

class Parser {
  public:
    Parser(ExprPool& pool, const std::string& src, int nvars)
        : pool_(pool), src_(src), nvars_(nvars) {}

    ExprId run() {
        ExprId e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " +
                                    std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    ExprId expr() {
        ExprId e = term();
        for (;;) {
            if (eat('+'))
                e = pool_.add(e, term());
            else if (eat('-'))
                e = pool_.sub(e, term());
            else
                return e;
        }
    }

    ExprId term() {
        ExprId e = unary();
        for (;;) {
            if (eat('*'))
                e = pool_.mul(e, unary());
            else if (eat('/'))
                e = pool_.div(e, unary());
            else
                return e;
        }
    }

    ExprId unary() {
        if (eat('-')) return pool_.neg(unary());
        return factor();
    }

    ExprId factor() {
        ExprId e = base();
        if (eat('^')) {
            skip_ws();
            bool negexp = eat('-');
            std::string digits = take_digits();
            if (digits.empty()) fail("expected an integer exponent after '^'");
            int k = std::stoi(digits);
            e = pool_.ipow(e, negexp ? -k : k);
        }
        return e;
    }

    std::string take_digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            out += src_[pos_++];
        return out;
    }

    ExprId base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            ExprId e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::string num = take_digits();
            if (pos_ < src_.size() && src_[pos_] == '.') {
                num += src_[pos_++];
                num += take_digits();
            }
            if (num.empty() || num == ".") fail("malformed number");
            return pool_.constant(Exact(rat_from_string(num)));
        }
        if (c == 'e' && src_.compare(pos_, 3, "exp") == 0) {
            pos_ += 3;
            if (!eat('(')) fail("expected '(' after exp");
            ExprId e = expr();
            if (!eat(')')) fail("expected ')'");
            return pool_.expn(e);
        }
        if (c == 'x') {
            ++pos_;
            std::string digits = take_digits();
            if (digits.empty()) fail("expected a variable index after 'x'");
            int idx = std::stoi(digits);
            if (idx < 1 || idx > nvars_)
                fail("variable x" + digits + " outside x1..x" + std::to_string(nvars_));
            return pool_.var(idx - 1);
        }
        fail("expected a number, variable, exp(...) or '('");
    }

    ExprPool& pool_;
    const std::string& src_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprId parse_function(ExprPool& pool, const std::string& src, int nvars) {
    return Parser(pool, src, nvars).run();
}

}  // namespace confdunkl
