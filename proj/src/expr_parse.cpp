#include "varcomplex/expr_parse.hpp"

#include <cctype>

#include "varcomplex/calculus.hpp"
#include "varcomplex/scenario.hpp"

namespace varcomplex {

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    Lexer(const std::string& text, int line_base) : s_(text), line_(line_base) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            if (s_[i_] == '\n') {
                ++line_;
                col0_ = i_ + 1;
            }
            ++i_;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = static_cast<int>(i_ - col0_) + 1;
        if (i_ >= s_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_.kind = Token::Number;
            tok_.text = s_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            // jet suffix: name_{a,b}
            if (j + 0 < s_.size() && j >= 1 && s_[j - 1] == '_' && j < s_.size() && s_[j] == '{') {
                // identifier ended with '_', brace follows: include the suffix
                size_t k = j + 1;
                while (k < s_.size() && s_[k] != '}') ++k;
                if (k >= s_.size()) throw ParseError(tok_.line, tok_.col, "unterminated '{'");
                tok_.kind = Token::Ident;
                tok_.text = s_.substr(i_, k + 1 - i_);
                i_ = k + 1;
                return;
            }
            tok_.kind = Token::Ident;
            tok_.text = s_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        tok_.kind = Token::Punct;
        tok_.text = std::string(1, c);
        ++i_;
    }

    std::string s_;
    size_t i_ = 0;
    size_t col0_ = 0;
    int line_;
    Token tok_;
};

/// Uniform value: a scalar-coefficient form or a matrix form, one of which
/// is active depending on the context.
struct Value {
    std::optional<Form> f;
    std::optional<MatrixValue> m;
};

class Parser {
public:
    Parser(const std::string& text, const ExprContext& ctx, int line_base)
        : lex_(text, line_base), ctx_(ctx) {}

    Value parse() {
        Value v = expr();
        expect_end();
        return v;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.col, msg);
    }

    bool at_punct(const std::string& p) {
        return lex_.peek().kind == Token::Punct && lex_.peek().text == p;
    }
    void eat_punct(const std::string& p) {
        if (!at_punct(p)) fail(lex_.peek(), "expected '" + p + "'");
        lex_.next();
    }
    void expect_end() {
        if (lex_.peek().kind != Token::End) fail(lex_.peek(), "unexpected trailing input");
    }

    Value vzero() {
        Value v;
        if (ctx_.matrix)
            v.m = MatrixValue{MatrixForm::zero(ctx_.dim), false};
        else
            v.f = Form::zero(ctx_.dim);
        return v;
    }

    Value vneg(Value a) {
        if (a.f) a.f = -*a.f;
        if (a.m) a.m->m = -a.m->m;
        return a;
    }

    Value vadd(const Token& at, Value a, Value b) {
        if (a.f && b.f) {
            a.f = *a.f + *b.f;
            return a;
        }
        if (a.m && b.m) {
            if (a.m->traced != b.m->traced) fail(at, "cannot add traced and untraced terms");
            a.m->m = a.m->m + b.m->m;
            return a;
        }
        fail(at, "mixing scalar and matrix expressions");
    }

    Value vwedge(const Token& at, Value a, Value b) {
        if (a.f && b.f) {
            a.f = wedge(*a.f, *b.f);
            return a;
        }
        if (a.m && b.m) {
            if (a.m->traced || b.m->traced) fail(at, "cannot wedge traced expressions");
            a.m->m = nc_wedge(a.m->m, b.m->m);
            return a;
        }
        fail(at, "mixing scalar and matrix expressions");
    }

    Value vscale(const Token& at, Value a, Value b) {
        // '*' in the matrix language multiplies by a numeric scalar only.
        if (a.f && b.f) {
            a.f = wedge(*a.f, *b.f);
            return a;
        }
        if (ctx_.matrix) {
            auto num_of = [&](const Value& v) -> std::optional<CRat> {
                if (!v.m) return std::nullopt;
                if (!v.m->m.terms().empty() && v.m->m.terms().size() == 1 &&
                    v.m->m.terms().begin()->first.empty())
                    return v.m->m.terms().begin()->second;
                if (v.m->m.is_zero()) return CRat(0);
                return std::nullopt;
            };
            if (auto ca = num_of(a)) {
                b.m->m = nc_scale(*ca, b.m->m);
                return b;
            }
            if (auto cb = num_of(b)) {
                a.m->m = nc_scale(*cb, a.m->m);
                return a;
            }
            fail(at, "matrix '*' needs a numeric factor; use '^' for the wedge");
        }
        fail(at, "mixing scalar and matrix expressions");
    }

    Value expr() {
        Token at = lex_.peek();
        Value v = term();
        while (lex_.peek().kind == Token::Punct &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            Token op = lex_.next();
            Value rhs = term();
            v = vadd(op, std::move(v), op.text == "+" ? std::move(rhs) : vneg(std::move(rhs)));
        }
        (void)at;
        return v;
    }

    Value term() {
        Value v = wfactor();
        for (;;) {
            if (at_punct("*")) {
                Token op = lex_.next();
                v = vscale(op, std::move(v), wfactor());
            } else if (at_punct("/")) {
                Token op = lex_.next();
                Token d = lex_.next();
                if (d.kind != Token::Number) fail(d, "only numeric denominators are supported");
                Rational r(1, boost::multiprecision::cpp_int(d.text));
                if (v.f)
                    v.f = scale(ScalarExpr::constant(CRat(r)), *v.f);
                else
                    v.m->m = nc_scale(CRat(r), v.m->m);
            } else {
                break;
            }
        }
        return v;
    }

    Value wfactor() {
        Value v = unary();
        while (at_punct("^")) {
            Token op = lex_.next();
            v = vwedge(op, std::move(v), unary());
        }
        return v;
    }

    Value unary() {
        if (at_punct("-")) {
            lex_.next();
            return vneg(unary());
        }
        return atom();
    }

    Form scalar_of(const Token& at, Value v) {
        if (!v.f) fail(at, "expected a scalar expression");
        return *v.f;
    }

    Symbol jet_of(const Token& at, const Value& v) {
        if (!v.f) fail(at, "expected a jet coordinate");
        if (v.f->terms().size() != 1) fail(at, "expected a single jet coordinate");
        const auto& [factors, coeff] = *v.f->terms().begin();
        if (!factors.empty()) fail(at, "expected a jet coordinate, not a form");
        if (coeff.terms().size() != 1) fail(at, "expected a bare jet coordinate");
        const auto& [mono, c] = *coeff.terms().begin();
        if (!(c == CRat(1)) || mono.size() != 1 || mono[0].second != 1 ||
            (mono[0].first.kind != SymKind::Jet && mono[0].first.kind != SymKind::Coord))
            fail(at, "expected a bare jet coordinate");
        return mono[0].first;
    }

    std::vector<Value> call_args(int min_args, int max_args, const Token& at) {
        eat_punct("(");
        std::vector<Value> args;
        if (!at_punct(")")) {
            args.push_back(expr());
            while (at_punct(",")) {
                lex_.next();
                args.push_back(expr());
            }
        }
        eat_punct(")");
        if (static_cast<int>(args.size()) < min_args ||
            (max_args >= 0 && static_cast<int>(args.size()) > max_args))
            fail(at, "wrong number of arguments");
        return args;
    }

    Value atom() {
        Token t = lex_.next();
        if (t.kind == Token::Number) {
            CRat c{Rational(boost::multiprecision::cpp_int(t.text))};
            Value v;
            if (ctx_.matrix) {
                MatrixForm m(ctx_.dim);
                m.add_term(MWord{}, c);
                v.m = MatrixValue{std::move(m), false};
            } else {
                v.f = Form::scalar(ctx_.dim, ScalarExpr::constant(c));
            }
            return v;
        }
        if (t.kind == Token::Punct && t.text == "(") {
            Value v = expr();
            eat_punct(")");
            return v;
        }
        if (t.kind != Token::Ident) fail(t, "expected an expression atom");
        return ident_atom(t);
    }

    Value ident_atom(const Token& t) {
        const std::string& name = t.text;
        // calls
        if (at_punct("(") || (name == "dx" && at_punct("["))) return call_atom(t);

        Value v;
        if (ctx_.matrix) {
            MatrixForm m(ctx_.dim);
            if (name == "Amat") {
                m = MatrixForm::atom(ctx_.dim, MAtom::ConnA);
            } else if (name == "Xi") {
                m = MatrixForm::atom(ctx_.dim, MAtom::Xi);
            } else if (name == "F") {
                m = curvature(ctx_.dim);
            } else if (name == "delA") {
                m = MatrixForm::atom(ctx_.dim, MAtom::VarA);
            } else if (name == "i") {
                m.add_term(MWord{}, CRat::i());
            } else {
                fail(t, "unknown matrix symbol '" + name + "'");
            }
            v.m = MatrixValue{std::move(m), false};
            return v;
        }

        if (name == "i") {
            v.f = Form::scalar(ctx_.dim, ScalarExpr::constant(CRat::i()));
            return v;
        }
        // jet with explicit index: field_{a,b}
        auto brace = name.find("_{");
        if (brace != std::string::npos) {
            std::string field = name.substr(0, brace);
            std::string idx = name.substr(brace + 2, name.size() - brace - 3);
            if (!ctx_.fields || !ctx_.fields->has(field)) fail(t, "unknown field '" + field + "'");
            std::vector<int> dirs;
            std::string cur;
            auto flush = [&]() {
                if (cur.empty()) fail(t, "empty jet index entry");
                auto it = ctx_.coord_dirs.find(cur);
                if (it == ctx_.coord_dirs.end()) fail(t, "unknown coordinate '" + cur + "'");
                dirs.push_back(it->second);
                cur.clear();
            };
            for (char c : idx) {
                if (c == ',') {
                    flush();
                } else if (!std::isspace(static_cast<unsigned char>(c))) {
                    cur += c;
                }
            }
            flush();
            v.f = Form::scalar(ctx_.dim, ScalarExpr::sym(Symbol::jet(field, std::move(dirs))));
            return v;
        }
        if (ctx_.fields && ctx_.fields->has(name)) {
            v.f = Form::scalar(ctx_.dim, ScalarExpr::sym(Symbol::jet(name, {})));
            return v;
        }
        if (ctx_.constants.count(name)) {
            v.f = Form::scalar(ctx_.dim, ScalarExpr::sym(Symbol::constant(name)));
            return v;
        }
        if (ctx_.functions.count(name)) {
            v.f = Form::scalar(ctx_.dim,
                               ScalarExpr::sym(Symbol::func(name, ctx_.functions.at(name))));
            return v;
        }
        if (ctx_.coord_dirs.count(name)) {
            int dir = ctx_.coord_dirs.at(name);
            v.f = Form::scalar(ctx_.dim, ScalarExpr::sym(Symbol::coord(dir, name)));
            return v;
        }
        fail(t, "unknown symbol '" + name + "'");
    }

    Value call_atom(const Token& t) {
        const std::string& name = t.text;
        if (name == "dx") {
            eat_punct("[");
            Token a = lex_.next();
            int dir = -1;
            if (a.kind == Token::Number) {
                dir = std::stoi(a.text);
            } else if (a.kind == Token::Ident && ctx_.coord_dirs.count(a.text)) {
                dir = ctx_.coord_dirs.at(a.text);
            } else {
                fail(a, "expected a coordinate name or index");
            }
            eat_punct("]");
            if (dir < 0 || dir >= ctx_.dim) fail(a, "direction out of range");
            Value v;
            if (ctx_.matrix) fail(t, "dx[] is not a matrix symbol");
            v.f = Form::dx(ctx_.dim, dir);
            return v;
        }

        if (name == "pd") {
            auto args = call_args(2, -1, t);
            Form f = scalar_of(t, args[0]);
            auto b = f.homogeneous_bidegree();
            if (!b || b->total() != 0) fail(t, "pd applies to scalar expressions");
            ScalarExpr e = f.terms().empty() ? ScalarExpr::zero() : f.terms().begin()->second;
            for (size_t i = 1; i < args.size(); ++i) e = partial_wrt_jet(e, jet_of(t, args[i]));
            Value v;
            v.f = Form::scalar(ctx_.dim, e);
            return v;
        }
        if (name == "pow") {
            auto args = call_args(2, 2, t);
            Form f = scalar_of(t, args[0]);
            auto num = args[1].f && args[1].f->terms().size() == 1 &&
                               args[1].f->terms().begin()->first.empty()
                           ? args[1].f->terms().begin()->second.as_number()
                           : std::nullopt;
            if (!num || !num->is_real()) fail(t, "pow needs an integer exponent");
            auto b = f.homogeneous_bidegree();
            if (!b || b->total() != 0) fail(t, "pow applies to scalar expressions");
            ScalarExpr e = f.terms().empty() ? ScalarExpr::zero() : f.terms().begin()->second;
            long k = static_cast<long>(numerator(num->re));
            if (denominator(num->re) != 1 || k < 0) fail(t, "pow needs a nonnegative integer");
            Value v;
            v.f = Form::scalar(ctx_.dim, e.pow(static_cast<int>(k)));
            return v;
        }

        auto args = call_args(1, 1, t);
        Value a = std::move(args[0]);

        if (ctx_.matrix) {
            if (!a.m) fail(t, "expected a matrix expression");
            if (a.m->traced && name != "Tr") fail(t, "operator applied to a traced expression");
            Value v;
            if (name == "d") {
                v.m = MatrixValue{mf_horizontal_diff(a.m->m), false};
            } else if (name == "del") {
                v.m = MatrixValue{mf_vertical_diff(a.m->m), false};
            } else if (name == "D") {
                v.m = MatrixValue{mf_total_diff(a.m->m), false};
            } else if (name == "star") {
                v.m = MatrixValue{mf_star(a.m->m), false};
            } else if (name == "Tr") {
                v.m = MatrixValue{a.m->m, true};
            } else {
                fail(t, "unknown function '" + name + "'");
            }
            return v;
        }

        if (!a.f) fail(t, "expected a scalar-form expression");
        Value v;
        if (name == "d") {
            v.f = horizontal_diff(*a.f);
        } else if (name == "del") {
            v.f = vertical_diff(*a.f);
        } else if (name == "D") {
            v.f = total_diff(*a.f);
        } else if (name == "star") {
            if (!ctx_.hodge) fail(t, "star() needs a hodge mode");
            v.f = star(*a.f, *ctx_.hodge);
        } else if (name == "conj") {
            if (!ctx_.fields) fail(t, "conj() needs declared fields");
            Form out(ctx_.dim);
            for (const auto& [factors, coeff] : a.f->terms()) {
                for (const auto& g : factors)
                    if (g.kind != Generator::Horizontal)
                        fail(t, "conj() applies to scalars and horizontal forms");
                out.add_term(factors, conjugate(coeff, *ctx_.fields));
            }
            v.f = out;
        } else {
            fail(t, "unknown function '" + name + "'");
        }
        return v;
    }

    Lexer lex_;
    const ExprContext& ctx_;
};

} // namespace

Form parse_form_expr(const std::string& text, const ExprContext& ctx, int line_base) {
    Parser p(text, ctx, line_base);
    Value v = p.parse();
    if (!v.f) throw StructuralError("expected a scalar-form expression");
    return *v.f;
}

MatrixValue parse_matrix_expr(const std::string& text, const ExprContext& ctx, int line_base) {
    Parser p(text, ctx, line_base);
    Value v = p.parse();
    if (!v.m) throw StructuralError("expected a matrix expression");
    return *v.m;
}

} // namespace varcomplex
