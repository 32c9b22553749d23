#include "varcomplex/render.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "varcomplex/errors.hpp"

namespace varcomplex {

using nlohmann::json;

std::string NameContext::coord(int dir) const {
    if (dir >= 0 && dir < static_cast<int>(coords.size())) return coords[dir];
    return "x" + std::to_string(dir);
}

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string rat_latex(const Rational& r) {
    Rational num = numerator(r), den = denominator(r);
    if (den == 1) {
        std::ostringstream os;
        os << num;
        return os.str();
    }
    std::ostringstream os;
    bool neg = num < 0;
    os << (neg ? "-" : "") << "\\frac{" << (neg ? -num : num) << "}{" << den << "}";
    return os.str();
}

std::string jet_name(const Symbol& s, const NameContext& ctx, Style style) {
    std::string out = s.name;
    if (!s.index.empty()) {
        out += "_{";
        for (size_t i = 0; i < s.index.size(); ++i) {
            if (i) out += style == Style::Latex ? " " : ",";
            out += ctx.coord(s.index[i]);
        }
        out += "}";
    }
    return out;
}

std::string symbol_str(const Symbol& s, const NameContext& ctx, Style style) {
    switch (s.kind) {
    case SymKind::Coord:
        return s.name.empty() ? ctx.coord(s.dir) : s.name;
    case SymKind::Const:
        if (style == Style::Latex && (s.name == "mu" || s.name == "alpha"))
            return "\\" + s.name;
        return s.name;
    case SymKind::Jet:
        if (style == Style::Latex && (s.name == "phi" || s.name == "phibar")) {
            Symbol t = s;
            t.name = s.name == "phi" ? "\\phi" : "\\bar{\\phi}";
            return jet_name(t, ctx, style);
        }
        return jet_name(s, ctx, style);
    case SymKind::Func: {
        bool plainf = true;
        for (int d : s.derivs)
            if (d != 0) plainf = false;
        if (plainf) return s.name;
        if (style == Style::Latex) {
            std::string out = s.name + "_{";
            bool first = true;
            for (size_t i = 0; i < s.args.size(); ++i)
                for (int k = 0; k < s.derivs[i]; ++k) {
                    if (!first) out += " ";
                    first = false;
                    out += symbol_str(s.args[i], ctx, style);
                }
            return out + "}";
        }
        std::string out = "pd(" + s.name;
        for (size_t i = 0; i < s.args.size(); ++i)
            for (int k = 0; k < s.derivs[i]; ++k) out += "," + symbol_str(s.args[i], ctx, style);
        return out + ")";
    }
    }
    return "?";
}

/// Renders a complex rational as a product prefix: returns the sign and the
/// magnitude text ("" when the magnitude is one and symbols follow).
struct CoeffText {
    bool negative = false;
    std::string body; // may be empty (unit coefficient)
};

CoeffText crat_text(const CRat& c, Style style, bool has_symbols) {
    CoeffText out;
    auto ratline = [&](const Rational& r) {
        return style == Style::Latex ? rat_latex(r) : rat_str(r);
    };
    if (c.im == 0) {
        Rational r = c.re;
        out.negative = r < 0;
        Rational mag = out.negative ? Rational(-r) : r;
        if (!(mag == 1 && has_symbols)) out.body = ratline(mag);
        return out;
    }
    if (c.re == 0) {
        Rational r = c.im;
        out.negative = r < 0;
        Rational mag = out.negative ? Rational(-r) : r;
        std::string iu = style == Style::Latex ? "i" : "i";
        if (mag == 1)
            out.body = iu;
        else
            out.body = ratline(mag) + (style == Style::Latex ? " " : "*") + iu;
        return out;
    }
    std::string sep = style == Style::Latex ? " " : "*";
    std::string re = ratline(c.re);
    std::string im = c.im == 1 ? "i" : (c.im == -1 ? "-i" : ratline(c.im) + sep + "i");
    out.body = "(" + re + (im[0] == '-' ? "" : "+") + im + ")";
    return out;
}

std::string crat_plain(const CRat& c) {
    CoeffText t = crat_text(c, Style::Plain, false);
    return (t.negative ? "-" : "") + (t.body.empty() ? std::string("1") : t.body);
}

struct TermText {
    bool negative = false;
    std::string body;
};

TermText monomial_text(const Monomial& m, const CRat& c, const NameContext& ctx, Style style) {
    TermText out;
    CoeffText ct = crat_text(c, style, !m.empty());
    out.negative = ct.negative;
    std::string sep = style == Style::Latex ? " " : "*";
    std::vector<std::string> parts;
    if (!ct.body.empty()) parts.push_back(ct.body);
    for (const auto& [s, e] : m) {
        std::string base = symbol_str(s, ctx, style);
        if (e == 1)
            parts.push_back(base);
        else
            parts.push_back(base + (style == Style::Latex ? "^{" + std::to_string(e) + "}"
                                                          : "^" + std::to_string(e)));
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out.body += sep;
        out.body += parts[i];
    }
    if (out.body.empty()) out.body = "1";
    return out;
}

std::string join_signed(std::vector<TermText> terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out += "-";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].body;
    }
    return out;
}

std::string generator_str(const Generator& g, const NameContext& ctx, Style style) {
    switch (g.kind) {
    case Generator::Horizontal:
        return style == Style::Latex ? "\\mathrm{d}" + ctx.coord(g.dir) : "d" + ctx.coord(g.dir);
    case Generator::Vertical: {
        Symbol s = g.jet;
        std::string body = symbol_str(s, ctx, style);
        return style == Style::Latex ? "\\delta " + body : "del(" + body + ")";
    }
    case Generator::Star: {
        std::string inner;
        if (g.star.word.empty()) {
            inner = "1";
        } else {
            for (size_t i = 0; i < g.star.word.size(); ++i) {
                if (i) inner += style == Style::Latex ? " \\wedge " : "^";
                inner += style == Style::Latex ? "\\mathrm{d}" + ctx.coord(g.star.word[i])
                                               : "d" + ctx.coord(g.star.word[i]);
            }
        }
        std::string st = style == Style::Latex ? "\\star(" + inner + ")" : "star(" + inner + ")";
        for (int k = 0; k < g.star.d; ++k)
            st = style == Style::Latex ? "\\mathrm{d}" + st : "d(" + st + ")";
        return st;
    }
    }
    return "?";
}

bool scalar_is_single_monomial(const ScalarExpr& e) { return e.terms().size() == 1; }

} // namespace

std::string render_crat(const CRat& c) { return crat_plain(c); }

std::string render_scalar(const ScalarExpr& e, const NameContext& ctx, Style style) {
    if (style == Style::Ast) {
        json j;
        j["kind"] = "scalar";
        // reuse the form writer's encoding through a zero-form
        return form_to_ast(Form::scalar(1, e), ctx);
    }
    std::vector<TermText> parts;
    for (const auto& [m, c] : e.terms()) parts.push_back(monomial_text(m, c, ctx, style));
    return join_signed(std::move(parts));
}

std::string render_form(const Form& f, const NameContext& ctx, Style style) {
    if (style == Style::Ast) return form_to_ast(f, ctx);
    std::vector<TermText> parts;
    for (const auto& [factors, coeff] : f.terms()) {
        std::string fact;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) fact += style == Style::Latex ? " \\wedge " : "^";
            fact += generator_str(factors[i], ctx, style);
        }
        if (factors.empty()) {
            std::string s = render_scalar(coeff, ctx, style);
            TermText t;
            if (!s.empty() && s[0] == '-' && coeff.terms().size() == 1) {
                t.negative = true;
                t.body = s.substr(1);
            } else {
                t.body = coeff.terms().size() > 1 ? "(" + s + ")" : s;
            }
            parts.push_back(std::move(t));
            continue;
        }
        TermText t;
        if (scalar_is_single_monomial(coeff)) {
            const auto& [m, c] = *coeff.terms().begin();
            TermText mt = monomial_text(m, c, ctx, style);
            t.negative = mt.negative;
            if (mt.body == "1")
                t.body = fact;
            else
                t.body = mt.body + (style == Style::Latex ? " \\, " : " ") + fact;
        } else {
            t.body = "(" + render_scalar(coeff, ctx, style) + ")" +
                     (style == Style::Latex ? " \\, " : " ") + fact;
        }
        parts.push_back(std::move(t));
    }
    return join_signed(std::move(parts));
}

namespace {

std::string matom_str(MAtom a, Style style) {
    switch (a) {
    case MAtom::ConnA: return style == Style::Latex ? "A" : "Amat";
    case MAtom::DConnA: return style == Style::Latex ? "\\mathrm{d}A" : "d(Amat)";
    case MAtom::VarA: return style == Style::Latex ? "\\delta A" : "del(Amat)";
    case MAtom::DVarA: return style == Style::Latex ? "\\mathrm{d}\\delta A" : "d(del(Amat))";
    case MAtom::Xi: return style == Style::Latex ? "\\Xi" : "Xi";
    case MAtom::DXi: return style == Style::Latex ? "\\mathrm{d}\\Xi" : "d(Xi)";
    }
    return "?";
}

std::string trace_term_str(const TraceTerm& t, Style style) {
    const std::string wsep = style == Style::Latex ? " \\wedge " : "^";
    // Prefer the inline star(...) rendering when the dressing is contiguous.
    int first = -1, last = -1;
    bool contiguous = true;
    for (size_t i = 0; i < t.mask.size(); ++i) {
        if (!t.mask[i]) continue;
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
    }
    for (int i = first; first >= 0 && i <= last; ++i)
        if (!t.mask[i]) contiguous = false;
    std::string body;
    auto starwrap = [&](const std::string& inner) {
        std::string s = style == Style::Latex ? "\\star(" + inner + ")" : "star(" + inner + ")";
        for (int k = 0; k < t.d; ++k)
            s = style == Style::Latex ? "\\mathrm{d}" + s : "d(" + s + ")";
        return s;
    };
    if (first < 0) {
        for (size_t i = 0; i < t.atoms.size(); ++i) {
            if (i) body += wsep;
            body += matom_str(t.atoms[i], style);
        }
        if (t.atoms.empty()) body = "1";
    } else if (contiguous) {
        bool first_out = true;
        std::string inner;
        for (size_t i = 0; i < t.atoms.size(); ++i) {
            if (static_cast<int>(i) == first) {
                std::string in;
                for (int j = first; j <= last; ++j) {
                    if (j > first) in += wsep;
                    in += matom_str(t.atoms[j], style);
                }
                if (!first_out) body += wsep;
                body += starwrap(in);
                first_out = false;
                i = static_cast<size_t>(last);
                continue;
            }
            if (!first_out) body += wsep;
            body += matom_str(t.atoms[i], style);
            first_out = false;
        }
    } else {
        for (size_t i = 0; i < t.atoms.size(); ++i) {
            if (i) body += wsep;
            std::string a = matom_str(t.atoms[i], style);
            body += t.mask[i] ? (style == Style::Latex ? "\\star\\{" + a + "\\}" : "star{" + a + "}")
                              : a;
        }
        if (t.d > 0) body += style == Style::Latex ? "\\;[d^" + std::to_string(t.d) + "]"
                                                   : " [d^" + std::to_string(t.d) + "]";
    }
    return (style == Style::Latex ? "\\operatorname{Tr}(" : "Tr(") + body + ")";
}

} // namespace

std::string render_trace(const TraceExpr& t, const NameContext& ctx, Style style) {
    if (style == Style::Ast) return trace_to_ast(t, ctx);
    std::vector<TermText> parts;
    for (const auto& [term, c] : t.terms()) {
        CoeffText ct = crat_text(c, style, true);
        TermText tt;
        tt.negative = ct.negative;
        tt.body = (ct.body.empty() ? "" : ct.body + (style == Style::Latex ? " " : "*")) +
                  trace_term_str(term, style);
        parts.push_back(std::move(tt));
    }
    return join_signed(std::move(parts));
}

// ---------------------------------------------------------------------------
// AST (JSON) encoding

namespace {

json crat_json(const CRat& c) {
    return json{{"re", rat_str(c.re)}, {"im", rat_str(c.im)}};
}

Rational rat_from(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
    return Rational(num, den);
}

CRat crat_from(const json& j) { return CRat(rat_from(j.at("re")), rat_from(j.at("im"))); }

json symbol_json(const Symbol& s) {
    json j;
    switch (s.kind) {
    case SymKind::Coord:
        j["kind"] = "coord";
        j["dir"] = s.dir;
        j["name"] = s.name;
        break;
    case SymKind::Const:
        j["kind"] = "const";
        j["name"] = s.name;
        break;
    case SymKind::Jet:
        j["kind"] = "jet";
        j["field"] = s.name;
        j["index"] = s.index;
        break;
    case SymKind::Func: {
        j["kind"] = "func";
        j["name"] = s.name;
        json args = json::array();
        for (const auto& a : s.args) args.push_back(symbol_json(a));
        j["args"] = std::move(args);
        j["derivs"] = s.derivs;
        break;
    }
    }
    return j;
}

Symbol symbol_from(const json& j) {
    std::string kind = j.at("kind");
    if (kind == "coord") return Symbol::coord(j.at("dir"), j.at("name"));
    if (kind == "const") return Symbol::constant(j.at("name"));
    if (kind == "jet") return Symbol::jet(j.at("field"), j.at("index").get<std::vector<int>>());
    if (kind == "func") {
        std::vector<Symbol> args;
        for (const auto& a : j.at("args")) args.push_back(symbol_from(a));
        Symbol s = Symbol::func(j.at("name"), std::move(args));
        s.derivs = j.at("derivs").get<std::vector<int>>();
        return s;
    }
    throw StructuralError("unknown symbol kind in ast");
}

json scalar_json(const ScalarExpr& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.terms()) {
        json powers = json::array();
        for (const auto& [s, ex] : m)
            powers.push_back(json{{"sym", symbol_json(s)}, {"exp", ex}});
        terms.push_back(json{{"coeff", crat_json(c)}, {"powers", std::move(powers)}});
    }
    return json{{"terms", std::move(terms)}};
}

ScalarExpr scalar_from(const json& j) {
    ScalarExpr out;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& p : t.at("powers")) m.emplace_back(symbol_from(p.at("sym")), p.at("exp"));
        std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.add_term(std::move(m), crat_from(t.at("coeff")));
    }
    return out;
}

} // namespace

std::string form_to_ast(const Form& f, const NameContext& ctx) {
    json j;
    j["kind"] = "form";
    j["dim"] = f.dim();
    json terms = json::array();
    for (const auto& [factors, coeff] : f.terms()) {
        json jf = json::array();
        for (const auto& g : factors) {
            switch (g.kind) {
            case Generator::Horizontal:
                jf.push_back(json{{"kind", "dx"}, {"dir", g.dir}, {"name", ctx.coord(g.dir)}});
                break;
            case Generator::Vertical:
                jf.push_back(json{{"kind", "del"}, {"jet", symbol_json(g.jet)}});
                break;
            case Generator::Star:
                jf.push_back(json{{"kind", "star"}, {"word", g.star.word}, {"d", g.star.d}});
                break;
            }
        }
        Bidegree b = f.term_bidegree(factors);
        terms.push_back(json{{"coeff", scalar_json(coeff)},
                             {"factors", std::move(jf)},
                             {"bidegree", json::array({b.p, b.q})}});
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

Form form_from_ast(const std::string& text) {
    json j = json::parse(text);
    if (j.at("kind") != "form") throw StructuralError("ast is not a form");
    Form out(j.at("dim").get<int>());
    for (const auto& t : j.at("terms")) {
        Factors fs;
        for (const auto& g : t.at("factors")) {
            std::string kind = g.at("kind");
            if (kind == "dx") {
                fs.push_back(Generator::dx(g.at("dir")));
            } else if (kind == "del") {
                fs.push_back(Generator::contact(symbol_from(g.at("jet"))));
            } else if (kind == "star") {
                fs.push_back(
                    Generator::atom(StarBody{g.at("word").get<std::vector<int>>(), g.at("d")}));
            } else {
                throw StructuralError("unknown factor kind in ast");
            }
        }
        out.add_term(fs, scalar_from(t.at("coeff")));
    }
    return out;
}

std::string trace_to_ast(const TraceExpr& t, const NameContext&) {
    json j;
    j["kind"] = "trace";
    j["dim"] = t.dim();
    json terms = json::array();
    for (const auto& [term, c] : t.terms()) {
        json atoms = json::array();
        for (MAtom a : term.atoms) atoms.push_back(static_cast<int>(a));
        json mask = json::array();
        for (char m : term.mask) mask.push_back(m != 0);
        Bidegree b = t.term_bidegree(term);
        terms.push_back(json{{"coeff", crat_json(c)},
                             {"atoms", std::move(atoms)},
                             {"starred", std::move(mask)},
                             {"d", term.d},
                             {"bidegree", json::array({b.p, b.q})}});
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

} // namespace varcomplex
