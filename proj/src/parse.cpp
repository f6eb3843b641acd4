#include "nambu/parse.hpp"

#include <cctype>

namespace nambu {
namespace {

constexpr std::uint32_t kMaxExponent = 1000;

class Parser {
  public:
    Parser(std::string_view text, const CoordsPtr& coords) : text_(text), coords_(coords) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip_ws();
            const auto at = pos_;
            const std::string e = digits();
            if (e.empty()) fail("expected exponent");
            if (e.size() > 4 || std::stoul(e) > kMaxExponent) throw ParseError(at, "exponent too large");
            b = b.pow(static_cast<std::uint32_t>(std::stoul(e)));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto start = pos_;
            std::string num = digits();
            // the slash belongs to the literal only when a digit follows it
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                const std::string den = digits();
                if (mpz_class(den) == 0) throw ParseError(start, "zero denominator");
                num += "/" + den;
            }
            return Polynomial(coords_, Rational::from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const auto start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto idx = coords_->index_of(name);
            if (!idx) throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
            return Polynomial::variable(coords_, *idx);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) {
                skip_ws();
                fail("expected ')'");
            }
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const CoordsPtr& coords_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const CoordsPtr& coords) { return Parser(text, coords).parse(); }

} // namespace nambu
