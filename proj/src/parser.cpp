#include "lacalc/parser.hpp"

#include <cctype>
#include <set>

#include "lacalc/errors.hpp"

namespace lacalc {
namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Wedge, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            out.push_back({Tok::Name, std::string(src.substr(start, i - start)), start});
            continue;
        }
        switch (c) {
            case '+': out.push_back({Tok::Plus, "+", start}); break;
            case '-': out.push_back({Tok::Minus, "-", start}); break;
            case '*': out.push_back({Tok::Star, "*", start}); break;
            case '^': out.push_back({Tok::Caret, "^", start}); break;
            case '(': out.push_back({Tok::LParen, "(", start}); break;
            case ')': out.push_back({Tok::RParen, ")", start}); break;
            case '/':
                if (i + 1 < src.size() && src[i + 1] == '\\') {
                    out.push_back({Tok::Wedge, "/\\", start});
                    ++i;
                } else {
                    out.push_back({Tok::Slash, "/", start});
                }
                break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
        ++i;
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

template <class Kind>
class Parser {
public:
    using Value = Graded<Kind>;

    Parser(std::string_view src, const std::vector<std::string>& vars, const std::vector<std::string>& gens)
        : tokens_(tokenize(src)), vars_(vars), gens_(gens) {}

    Value parse() {
        Value v = expr();
        if (peek().kind != Tok::End) throw SyntaxError("expected operator or end of input", peek().pos);
        return v;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    std::size_t rank() const { return gens_.size(); }
    std::size_t nvars() const { return vars_.size(); }

    static bool isScalar(const Value& v) {
        for (const auto& [m, c] : v.terms())
            if (m != 0) return false;
        return true;
    }

    Value expr() {
        Value v = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            Value rhs = term();
            if (minus) v -= rhs;
            else v += rhs;
        }
        return v;
    }

    Value term() {
        Value v = unary();
        for (;;) {
            const Token& op = peek();
            if (op.kind == Tok::Star) {
                next();
                Value rhs = unary();
                if (!isScalar(v) && !isScalar(rhs))
                    throw SyntaxError("'*' between two non-scalar factors; use /\\", op.pos);
                v = wedge(v, rhs);
            } else if (op.kind == Tok::Wedge) {
                next();
                v = wedge(v, unary());
            } else if (op.kind == Tok::Slash) {
                next();
                Value rhs = unary();
                if (!isScalar(rhs)) throw SyntaxError("division by a non-scalar", op.pos);
                const Coeff d = rhs.coefficient(0);
                if (d.isZero()) throw DivisionByZero();
                v *= d.inverse();
            } else {
                return v;
            }
        }
    }

    Value unary() {
        if (peek().kind == Tok::Minus) {
            next();
            return -unary();
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    Value power() {
        Value base = primary();
        while (peek().kind == Tok::Caret) {
            const Token& caret = next();
            const Token& exp = peek();
            if (exp.kind != Tok::Number) throw SyntaxError("expected nonnegative integer exponent", exp.pos);
            next();
            if (!isScalar(base)) throw SyntaxError("'^' needs a scalar base", caret.pos);
            if (exp.text.size() > 6) throw SyntaxError("exponent too large", exp.pos);
            const auto e = static_cast<unsigned>(std::stoul(exp.text));
            base = Value::scalar(rank(), base.coefficient(0).pow(e));
        }
        return base;
    }

    Value primary() {
        const Token& t = next();
        switch (t.kind) {
            case Tok::Number:
                return Value::scalar(rank(), Coeff::constant(nvars(), Rational(Integer(t.text))));
            case Tok::Name: {
                for (std::size_t i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == t.text) return Value::scalar(rank(), Coeff::variable(nvars(), i));
                for (std::size_t i = 0; i < gens_.size(); ++i)
                    if (gens_[i] == t.text) return Value::generator(rank(), nvars(), static_cast<int>(i));
                throw UnknownVariable(t.text, t.pos);
            }
            case Tok::LParen: {
                Value v = expr();
                if (peek().kind != Tok::RParen) throw SyntaxError("expected ')'", peek().pos);
                next();
                return v;
            }
            case Tok::End: throw SyntaxError("unexpected end of input", t.pos);
            default: throw SyntaxError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const std::vector<std::string>& vars_;
    const std::vector<std::string>& gens_;
};

}  // namespace

Coeff parseExpr(std::string_view src, const std::vector<std::string>& vars) {
    static const std::vector<std::string> none;
    return Parser<VectorKind>(src, vars, none).parse().coefficient(0);
}

Multivector parseMultivector(std::string_view src, const std::vector<std::string>& vars,
                             const std::vector<std::string>& frame) {
    return Parser<VectorKind>(src, vars, frame).parse();
}

Form parseForm(std::string_view src, const std::vector<std::string>& vars,
               const std::vector<std::string>& coframe) {
    return Parser<CovectorKind>(src, vars, coframe).parse();
}

void checkNames(const std::vector<std::vector<std::string>>& lists) {
    std::set<std::string> seen;
    for (const auto& list : lists)
        for (const auto& name : list) {
            if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
                throw Error("invalid identifier '" + name + "'");
            for (char c : name)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                    throw Error("invalid identifier '" + name + "'");
            if (!seen.insert(name).second) throw Error("duplicate identifier '" + name + "'");
        }
}

}  // namespace lacalc
