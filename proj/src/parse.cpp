#include "liemult/parse.hpp"

#include <cctype>
#include <functional>

#include "liemult/freelie.hpp"

namespace liemult {

namespace {

struct Token {
    enum Kind { Number, Name, Symbol, End } kind = End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " at position " + std::to_string(current_.pos) +
                          " in '" + text_ + "'");
    }

  private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
            ++i_;
        current_.pos = i_;
        if (i_ >= text_.size()) {
            current_ = {Token::End, "", i_};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])))
                ++j;
            current_ = {Token::Number, text_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            current_ = {Token::Name, text_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::string("+-*/^()[],").find(c) != std::string::npos) {
            current_ = {Token::Symbol, std::string(1, c), i_};
            ++i_;
            return;
        }
        throw parse_error("unexpected character '" + std::string(1, c) +
                          "' at position " + std::to_string(i_) + " in '" +
                          text_ + "'");
    }

    std::string text_;
    std::size_t i_ = 0;
    Token current_;
};

// The parser is generic over the target algebra; Alg supplies constants,
// named atoms and the ring operations.
template <class Alg> class ExprParser {
  public:
    using Value = typename Alg::Value;

    ExprParser(const std::string& text, Alg& alg) : lex_(text), alg_(alg) {}

    Value parse() {
        Value v = expr();
        if (lex_.peek().kind != Token::End)
            lex_.fail("trailing input");
        return v;
    }

  private:
    Value expr() {
        Value v = term();
        while (lex_.peek().kind == Token::Symbol &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.take().text;
            Value rhs = term();
            v = op == "+" ? alg_.add(v, rhs) : alg_.sub(v, rhs);
        }
        return v;
    }

    Value term() {
        Value v = factor();
        while (lex_.peek().kind == Token::Symbol && lex_.peek().text == "*") {
            lex_.take();
            v = alg_.mul(v, factor(), lex_);
        }
        return v;
    }

    Value factor() {
        if (lex_.peek().kind == Token::Symbol && lex_.peek().text == "-") {
            lex_.take();
            return alg_.neg(factor());
        }
        Value v = primary();
        if (lex_.peek().kind == Token::Symbol && lex_.peek().text == "^") {
            lex_.take();
            if (lex_.peek().kind != Token::Number)
                lex_.fail("expected an integer exponent");
            unsigned long e = std::stoul(lex_.take().text);
            v = alg_.pow(v, e, lex_);
        }
        return v;
    }

    Value primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Number) {
            mpz_class num(lex_.take().text);
            if (lex_.peek().kind == Token::Symbol && lex_.peek().text == "/") {
                lex_.take();
                if (lex_.peek().kind != Token::Number)
                    lex_.fail("expected a denominator");
                mpz_class den(lex_.take().text);
                if (den == 0)
                    lex_.fail("zero denominator");
                return alg_.constant(num, den, lex_);
            }
            return alg_.constant(num, mpz_class(1), lex_);
        }
        if (t.kind == Token::Name) {
            std::string name = lex_.take().text;
            return alg_.atom(name, lex_);
        }
        if (t.kind == Token::Symbol && t.text == "(") {
            lex_.take();
            Value v = expr();
            expect(")");
            return v;
        }
        if (t.kind == Token::Symbol && t.text == "[") {
            lex_.take();
            Value v = expr();
            expect(",");
            v = alg_.bracket(v, expr());
            while (lex_.peek().kind == Token::Symbol && lex_.peek().text == ",") {
                lex_.take();
                v = alg_.bracket(v, expr());
            }
            expect("]");
            return v;
        }
        lex_.fail("expected a number, name, '(' or '['");
    }

    void expect(const std::string& sym) {
        if (lex_.peek().kind != Token::Symbol || lex_.peek().text != sym)
            lex_.fail("expected '" + sym + "'");
        lex_.take();
    }

    Lexer lex_;
    Alg& alg_;
};

bool is_constant(const NCPoly& p) {
    auto d = p.degree();
    return !d || *d == 0;
}

struct NCPolyAlgebra {
    // tracks constancy so Lie mode can reject products of non-constants
    using Value = NCPoly;
    AlphabetPtr alphabet;
    FieldSpec fs;
    bool lie_mode = false;

    Value constant(const mpz_class& num, const mpz_class& den, Lexer&) {
        return NCPoly::constant(alphabet, Scalar::from_fraction(num, den, fs));
    }
    Value atom(const std::string& name, Lexer& lex) {
        auto idx = alphabet->index_of(name);
        if (!idx)
            lex.fail("unknown generator '" + name + "'");
        return NCPoly::generator(alphabet, fs, *idx);
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value neg(const Value& a) { return -a; }
    Value mul(const Value& a, const Value& b, Lexer& lex) {
        if (lie_mode && !is_constant(a) && !is_constant(b))
            lex.fail("a product of non-constant subexpressions is not a Lie "
                     "element; use brackets");
        return a * b;
    }
    Value pow(const Value& a, unsigned long e, Lexer& lex) {
        if (lie_mode && !is_constant(a) && e != 1)
            lex.fail("powers are not Lie elements; use brackets");
        Value acc = NCPoly::one(alphabet, fs);
        for (unsigned long i = 0; i < e; ++i)
            acc = acc * a;
        return acc;
    }
    Value bracket(const Value& a, const Value& b) { return liemult::bracket(a, b); }
};

struct UQAlgebra {
    using Value = UQElement;
    PresentationPtr pres;

    Value constant(const mpz_class& num, const mpz_class& den, Lexer&) {
        return UQElement::constant(pres,
                                   Scalar::from_fraction(num, den, pres->field()));
    }
    Value atom(const std::string& name, Lexer& lex) {
        auto idx = pres->basis_index(name);
        if (!idx)
            lex.fail("unknown basis element '" + name + "'");
        return UQElement::basis_element(pres, *idx);
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value neg(const Value& a) { return -a; }
    Value mul(const Value& a, const Value& b, Lexer&) { return uq_mul(a, b); }
    Value pow(const Value& a, unsigned long e, Lexer&) {
        Value acc = UQElement::one(pres);
        for (unsigned long i = 0; i < e; ++i)
            acc = uq_mul(acc, a);
        return acc;
    }
    Value bracket(const Value& a, const Value& b) {
        return uq_mul(a, b) - uq_mul(b, a);
    }
};

} // namespace

NCPoly parse_ncpoly(const std::string& text, const AlphabetPtr& alphabet,
                    const FieldSpec& fs) {
    NCPolyAlgebra alg{alphabet, fs, false};
    return ExprParser<NCPolyAlgebra>(text, alg).parse();
}

NCPoly parse_lie_element(const std::string& text, const AlphabetPtr& alphabet,
                         const FieldSpec& fs) {
    NCPolyAlgebra alg{alphabet, fs, true};
    return ExprParser<NCPolyAlgebra>(text, alg).parse();
}

UQElement parse_uq_element(const std::string& text, const PresentationPtr& pres) {
    UQAlgebra alg{pres};
    return ExprParser<UQAlgebra>(text, alg).parse();
}

LinComb parse_lincomb(const std::string& text, const PresentationPtr& pres) {
    UQElement e = parse_uq_element(text, pres);
    LinComb out;
    for (const auto& [m, c] : e.terms()) {
        if (m.indices.size() != 1)
            throw parse_error("'" + text +
                              "' is not a linear combination of basis elements");
        out.emplace(m.indices[0], c);
    }
    return out;
}

} // namespace liemult
