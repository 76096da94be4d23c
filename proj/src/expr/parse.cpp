#include "gsym/expr/errors.hpp"
#include "gsym/expr/io.hpp"

#include <cctype>
#include <optional>

namespace gsym {

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error([&] {
          std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " | " : "") + expected[i];
          return msg + ", found " + found;
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", pos_});
                return out;
            }
            const std::size_t start = pos_;
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                if (pos_ < src_.size() && src_[pos_] == '.') {
                    ++pos_;
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                }
                std::string text(src_.substr(start, pos_ - start));
                if (text == ".") throw SyntaxError(start, {"NUMBER", "IDENT", "("}, "'.'");
                out.push_back({Tok::Number, text, start});
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    ++pos_;
                out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), start});
            } else {
                Tok k;
                switch (c) {
                    case '+': k = Tok::Plus; break;
                    case '-': k = Tok::Minus; break;
                    case '*': k = Tok::Star; break;
                    case '/': k = Tok::Slash; break;
                    case '^': k = Tok::Caret; break;
                    case '(': k = Tok::LParen; break;
                    case ')': k = Tok::RParen; break;
                    case ',': k = Tok::Comma; break;
                    default:
                        throw SyntaxError(start, {"NUMBER", "IDENT", "operator"}, std::string("'") + c + "'");
                }
                ++pos_;
                out.push_back({k, std::string(1, c), start});
            }
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

std::optional<Rational> constant_value(const Expr& e) {
    if (const auto* c = e.const_value()) return *c;
    if (const auto* s = e.as<SumNode>()) {
        Rational acc(0);
        for (const auto& t : s->terms) {
            auto v = constant_value(t);
            if (!v) return std::nullopt;
            acc += *v;
        }
        return acc;
    }
    if (const auto* p = e.as<ProductNode>()) {
        Rational acc(1);
        for (const auto& f : p->factors) {
            auto v = constant_value(f);
            if (!v) return std::nullopt;
            acc *= *v;
        }
        return acc;
    }
    if (const auto* p = e.as<PowerNode>()) {
        auto b = constant_value(p->base);
        if (!b) return std::nullopt;
        return b->exact_pow(p->exponent);
    }
    return std::nullopt;
}

Expr negate(const Expr& e) {
    if (const auto* c = e.const_value()) return Expr::constant(-*c);
    return Expr::product({Expr::constant(Rational(-1)), e});
}

Expr reciprocal(const Expr& e, std::size_t offset) {
    if (const auto* c = e.const_value()) {
        if (c->is_zero()) throw SyntaxError(offset, {"nonzero divisor"}, "'0'");
        return Expr::constant(c->inverse());
    }
    if (const auto* p = e.as<PowerNode>()) return Expr::power(p->base, -p->exponent);
    return Expr::power(e, Rational(-1));
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr parse_all() {
        Expr e = expr();
        if (peek().kind != Tok::End) throw SyntaxError(peek().offset, {"operator", "end of input"}, describe(peek()));
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    void expect(Tok k, const std::string& what) {
        if (peek().kind != k) throw SyntaxError(peek().offset, {what}, describe(peek()));
        ++pos_;
    }

    Expr expr() {
        std::vector<Expr> terms{term()};
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            Expr t = term();
            terms.push_back(minus ? negate(t) : t);
        }
        return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
    }

    Expr term() {
        std::vector<Expr> factors;
        const auto push = [&](Expr f) {
            if (f.const_value() && !factors.empty() && factors.back().const_value())
                factors.back() = Expr::constant(*factors.back().const_value() * *f.const_value());
            else
                factors.push_back(std::move(f));
        };
        push(factor());
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const bool divide = next().kind == Tok::Slash;
            const std::size_t at = peek().offset;
            Expr f = factor();
            push(divide ? reciprocal(f, at) : f);
        }
        return factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
    }

    Expr factor() {
        const bool minus = peek().kind == Tok::Minus;
        if (minus) ++pos_;
        Expr b = base();
        if (peek().kind == Tok::Caret) {
            ++pos_;
            const std::size_t at = peek().offset;
            Expr ex = factor();
            auto r = constant_value(ex);
            if (!r) throw SyntaxError(at, {"rational constant exponent"}, "'" + print(ex) + "'");
            b = Expr::power(b, *r);
        }
        return minus ? negate(b) : b;
    }

    Expr base() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::Number:
                ++pos_;
                return Expr::constant(Rational::from_string(tok.text));
            case Tok::LParen: {
                ++pos_;
                Expr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident:
                ++pos_;
                return identifier(tok);
            default:
                throw SyntaxError(tok.offset, {"NUMBER", "IDENT", "'('", "'-'"}, describe(tok));
        }
    }

    Expr identifier(const Token& tok) {
        if (peek().kind != Tok::LParen) {
            if (auto s = symbol_from_name(tok.text)) return Expr::var(*s);
            if (auto c = named_constant_from_name(tok.text)) return Expr::named(*c);
            if (function_from_name(tok.text) || funcsym_base(tok.text))
                throw SyntaxError(peek().offset, {"'('"}, describe(peek()));
            throw UnknownSymbol(tok.text);
        }
        const std::size_t open = peek().offset;
        ++pos_;
        std::vector<Expr> args{expr()};
        while (peek().kind == Tok::Comma) {
            ++pos_;
            args.push_back(expr());
        }
        expect(Tok::RParen, "')'");

        if (auto f = function_from_name(tok.text)) {
            if (args.size() != 1) throw SyntaxError(open, {"exactly one argument"}, describe(tok));
            return Expr::apply(*f, std::move(args));
        }
        if (auto fs = funcsym_base(tok.text)) {
            std::vector<Symbol> vars;
            for (const auto& a : args) {
                const auto* v = a.as<VarNode>();
                if (!v || (v->symbol != Symbol::x && v->symbol != Symbol::t && v->symbol != Symbol::u))
                    throw SyntaxError(open, {"argument variable x, t or u"}, "'" + print(a) + "'");
                vars.push_back(v->symbol);
            }
            std::vector<int> orders(vars.size(), 0);
            const auto us = tok.text.find('_');
            if (us != std::string::npos) {
                for (char c : tok.text.substr(us + 1)) {
                    bool matched = false;
                    for (std::size_t i = 0; i < vars.size(); ++i) {
                        if (symbol_name(vars[i]) == std::string_view(&c, 1)) {
                            ++orders[i];
                            matched = true;
                        }
                    }
                    if (!matched) throw UnknownSymbol(tok.text);
                }
            }
            return Expr::funcsym(*fs, std::move(vars), std::move(orders));
        }
        if (symbol_from_name(tok.text) || named_constant_from_name(tok.text))
            throw SyntaxError(open, {"operator", "end of input"}, "'('");
        throw UnknownSymbol(tok.text);
    }

    static std::optional<FuncSymbol> funcsym_base(const std::string& name) {
        const auto us = name.find('_');
        return funcsym_from_name(us == std::string::npos ? name : name.substr(0, us));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(Lexer(text).run()).parse_all(); }

}  // namespace gsym
