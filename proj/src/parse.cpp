#include "xp/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>

namespace xp {

namespace {

struct Token {
    enum Kind { Num, Ident, Op, DSym, End } kind;
    std::string text; // literal text for Num/Ident/DSym, single char for Op
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
            out.push_back({Token::Num, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string w = s.substr(i, j - i);
            if (w.size() >= 2 && w[0] == 'd' &&
                (w == "dz" || (w[1] == 'x' && w.size() >= 3 &&
                               std::all_of(w.begin() + 2, w.end(), [](char k) {
                                   return std::isdigit(static_cast<unsigned char>(k));
                               }))))
                out.push_back({Token::DSym, w});
            else
                out.push_back({Token::Ident, w});
            i = j;
            continue;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, c)});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }
    out.push_back({Token::End, ""});
    return out;
}

int var_index(const std::string& name) {
    // z == x1; returns -1 for non-variables
    if (name == "z") return 0;
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char k) {
            return std::isdigit(static_cast<unsigned char>(k));
        })) {
        int k = std::stoi(name.substr(1));
        if (k <= 0) throw ParseError("bad variable name: " + name);
        return k - 1;
    }
    return -1;
}

int scan_nvars(const std::vector<Token>& toks, int min_vars) {
    int n = min_vars;
    for (const auto& t : toks) {
        if (t.kind == Token::Ident) {
            int v = var_index(t.text);
            if (v >= 0) n = std::max(n, v + 1);
        } else if (t.kind == Token::DSym) {
            int v = t.text == "dz" ? 0 : var_index(t.text.substr(1));
            if (v >= 0) n = std::max(n, v + 1);
        }
    }
    return std::max(n, 1);
}

// --- scalar AST nodes -----------------------------------------------------

struct RatLeaf : ScalarExpr {
    RatFunc f;
    explicit RatLeaf(RatFunc g) : f(std::move(g)) {}
    double eval(const std::vector<double>& x) const override {
        std::vector<std::complex<double>> cx(x.begin(), x.end());
        std::complex<double> v = f.eval(cx);
        if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real())))
            throw DensityUndefined("density expression is not real-valued");
        return v.real();
    }
    int nvars() const override { return f.nvars(); }
};

struct BinNode : ScalarExpr {
    char op;
    ScalarExprPtr a, b;
    BinNode(char o, ScalarExprPtr x, ScalarExprPtr y) : op(o), a(std::move(x)), b(std::move(y)) {}
    double eval(const std::vector<double>& x) const override {
        double u = a->eval(x), v = b->eval(x);
        switch (op) {
            case '+': return u + v;
            case '-': return u - v;
            case '*': return u * v;
            case '/':
                if (v == 0.0) throw DensityUndefined("division by zero in density");
                return u / v;
        }
        throw Error("bad scalar op");
    }
    int nvars() const override { return std::max(a->nvars(), b->nvars()); }
};

struct FunNode : ScalarExpr {
    enum Fn { Exp, Sin01, Sqrtp, Neg } fn;
    ScalarExprPtr a;
    FunNode(Fn f, ScalarExprPtr x) : fn(f), a(std::move(x)) {}
    double eval(const std::vector<double>& x) const override {
        double u = a->eval(x);
        switch (fn) {
            case Exp:   return std::exp(u);
            case Sin01: return std::sin(std::clamp(u, 0.0, 1.0));
            case Sqrtp: return std::sqrt(std::max(u, 0.0));
            case Neg:   return -u;
        }
        throw Error("bad scalar function");
    }
    int nvars() const override { return a->nvars(); }
};

struct PowNode : ScalarExpr {
    ScalarExprPtr a;
    int k;
    PowNode(ScalarExprPtr x, int e) : a(std::move(x)), k(e) {}
    double eval(const std::vector<double>& x) const override {
        return std::pow(a->eval(x), k);
    }
    int nvars() const override { return a->nvars(); }
};

// --- parser ----------------------------------------------------------------

// Values are either exact rational functions or opaque scalar nodes.
// Rational-only parses reject scalar nodes at the end.
struct Value {
    std::optional<RatFunc> rat;
    ScalarExprPtr sc; // set iff a non-rational function is involved
};

class Parser {
public:
    Parser(std::vector<Token> toks, int nvars, bool allow_functions)
        : toks_(std::move(toks)), nvars_(nvars), allow_fn_(allow_functions) {}

    Value parse_expression() {
        Value v = parse_term();
        while (peek_op("+") || peek_op("-")) {
            char op = next().text[0];
            Value w = parse_term();
            v = combine(op, v, w);
        }
        return v;
    }

    void expect_end() {
        if (toks_[pos_].kind != Token::End)
            throw ParseError("trailing input near '" + toks_[pos_].text + "'");
    }

    // form := fterm (('+'|'-') fterm)*  where fterm is coeff [*] dsym | coeff
    RatForm parse_form_expr() {
        auto [deg0, deg1] = parse_form_term(false);
        RatForm acc0 = deg0, acc1 = deg1;
        while (peek_op("+") || peek_op("-")) {
            bool minus = next().text == "-";
            auto [t0, t1] = parse_form_term(minus);
            acc0 = acc0 + t0;
            acc1 = acc1 + t1;
        }
        expect_end();
        if (!acc1.is_zero() && !acc0.is_zero())
            throw ParseError("mixed-degree differential form");
        return acc1.is_zero() && acc0.is_zero() ? acc1 : (acc1.is_zero() ? acc0 : acc1);
    }

    int nvars() const { return nvars_; }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    int nvars_;
    bool allow_fn_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool peek_op(const char* s) const {
        return toks_[pos_].kind == Token::Op && toks_[pos_].text == s;
    }
    void expect_op(const char* s) {
        if (!peek_op(s)) throw ParseError(std::string("expected '") + s + "'");
        ++pos_;
    }

    static Value from_rat(RatFunc f) { return Value{std::move(f), nullptr}; }

    ScalarExprPtr as_scalar(const Value& v) {
        if (v.sc) return v.sc;
        return std::make_shared<RatLeaf>(*v.rat);
    }

    Value combine(char op, const Value& a, const Value& b) {
        if (a.rat && b.rat) {
            switch (op) {
                case '+': return from_rat(*a.rat + *b.rat);
                case '-': return from_rat(*a.rat - *b.rat);
                case '*': return from_rat(*a.rat * *b.rat);
                case '/': return from_rat(*a.rat / *b.rat);
            }
        }
        return Value{std::nullopt, std::make_shared<BinNode>(op, as_scalar(a), as_scalar(b))};
    }

    Value parse_term() {
        Value v = parse_factor();
        while (peek_op("*") || peek_op("/")) {
            char op = next().text[0];
            Value w = parse_factor();
            v = combine(op, v, w);
        }
        return v;
    }

    Value parse_factor() {
        if (peek_op("-")) {
            next();
            Value v = parse_factor();
            if (v.rat) return from_rat(-*v.rat);
            return Value{std::nullopt, std::make_shared<FunNode>(FunNode::Neg, v.sc)};
        }
        if (peek_op("+")) { next(); return parse_factor(); }
        Value v = parse_base();
        while (peek_op("^")) {
            next();
            bool neg = false;
            if (peek_op("-")) { next(); neg = true; }
            if (peek().kind != Token::Num || peek().text.find('.') != std::string::npos)
                throw ParseError("exponent must be an integer literal");
            int k = std::stoi(next().text);
            if (neg) k = -k;
            if (v.rat)
                v = from_rat(v.rat->pow(k));
            else {
                if (k < 0) throw ParseError("negative power of a non-rational expression");
                v = Value{std::nullopt, std::make_shared<PowNode>(v.sc, k)};
            }
        }
        return v;
    }

    Value parse_base() {
        const Token& t = peek();
        if (t.kind == Token::Num) {
            Rational q = parse_rational(next().text);
            return from_rat(RatFunc::constant(nvars_, GaussianRational(q)));
        }
        if (t.kind == Token::Op && t.text == "(") {
            next();
            Value v = parse_expression();
            expect_op(")");
            return v;
        }
        if (t.kind == Token::Ident) {
            std::string name = next().text;
            if (name == "i")
                return from_rat(RatFunc::constant(nvars_, GaussianRational::unit_i()));
            int vi = var_index(name);
            if (vi >= 0) {
                if (vi >= nvars_) throw ParseError("variable out of range: " + name);
                return from_rat(RatFunc::variable(nvars_, vi));
            }
            if (allow_fn_ && (name == "exp" || name == "sin01" || name == "sqrtp")) {
                expect_op("(");
                Value arg = parse_expression();
                expect_op(")");
                FunNode::Fn fn = name == "exp"     ? FunNode::Exp
                                 : name == "sin01" ? FunNode::Sin01
                                                   : FunNode::Sqrtp;
                return Value{std::nullopt, std::make_shared<FunNode>(fn, as_scalar(arg))};
            }
            throw ParseError("unknown identifier: " + name);
        }
        throw ParseError("unexpected token '" + t.text + "'");
    }

    // Returns (degree0 part, degree1 part) of one additive term.
    std::pair<RatForm, RatForm> parse_form_term(bool negate) {
        RatForm d0 = RatForm::zero(nvars_, 0);
        RatForm d1 = RatForm::zero(nvars_, 1);
        RatFunc coeff = RatFunc::constant(nvars_, GaussianRational(1));
        bool have_coeff = false;
        if (peek().kind != Token::DSym) {
            Value v = parse_term_no_dsym();
            if (!v.rat) throw ParseError("form coefficients must be rational");
            coeff = *v.rat;
            have_coeff = true;
        }
        if (peek().kind == Token::DSym) {
            std::string d = next().text;
            int vi = d == "dz" ? 0 : var_index(d.substr(1));
            if (vi < 0 || vi >= nvars_) throw ParseError("bad differential symbol: " + d);
            d1.add_term({vi}, negate ? -coeff : coeff);
            return {d0, d1};
        }
        if (!have_coeff) throw ParseError("empty form term");
        d0.add_term({}, negate ? -coeff : coeff);
        return {d0, d1};
    }

    // like parse_term but stops in front of a differential symbol, and
    // consumes an optional '*' before it
    Value parse_term_no_dsym() {
        Value v = parse_factor();
        while (peek_op("*") || peek_op("/")) {
            if (peek_op("*") && toks_[pos_ + 1].kind == Token::DSym) {
                next(); // consume '*', caller sees the dsym
                break;
            }
            char op = next().text[0];
            Value w = parse_factor();
            v = combine(op, v, w);
        }
        return v;
    }
};

} // namespace

RatFunc parse_ratfunc(const std::string& text, int min_vars) {
    auto toks = tokenize(text);
    Parser p(toks, scan_nvars(toks, min_vars), false);
    Value v = p.parse_expression();
    p.expect_end();
    if (!v.rat) throw ParseError("expected a rational expression");
    return *v.rat;
}

RatForm parse_form(const std::string& text, int min_vars) {
    auto toks = tokenize(text);
    Parser p(toks, scan_nvars(toks, min_vars), false);
    return p.parse_form_expr();
}

GaussianRational parse_gaussian(const std::string& s) {
    // tolerate juxtaposed imaginary literals like "2i"
    std::string t;
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] == 'i' && k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1])))
            t += "*i";
        else
            t += s[k];
    }
    RatFunc f = parse_ratfunc(t);
    if (!f.is_polynomial() || !f.as_polynomial().is_constant())
        throw ParseError("expected a constant: " + s);
    return f.as_polynomial().constant_value();
}

std::string gaussian_to_string(const GaussianRational& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string s;
    if (g.re != 0) s = rat_to_string(g.re) + (g.im > 0 ? "+" : "");
    if (g.im == 1) return s + "i";
    if (g.im == -1) return s + "-i";
    return s + rat_to_string(g.im) + "*i";
}

ScalarExprPtr parse_scalar_expr(const std::string& text, int min_vars) {
    auto toks = tokenize(text);
    Parser p(toks, scan_nvars(toks, min_vars), true);
    Value v = p.parse_expression();
    p.expect_end();
    if (v.sc) return v.sc;
    return std::make_shared<RatLeaf>(*v.rat);
}

ScalarExprPtr scalar_from_ratfunc(const RatFunc& f) {
    return std::make_shared<RatLeaf>(f);
}

} // namespace xp
