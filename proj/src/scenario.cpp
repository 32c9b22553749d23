#include "varcomplex/scenario.hpp"

#include <fstream>
#include <sstream>

#include "varcomplex/expr_parse.hpp"
#include "varcomplex/render.hpp"

namespace varcomplex {

int Scenario::dim() const {
    return is_matrix() ? matrix().sys.dim : scalar().sys.dim;
}

NameContext Scenario::names() const {
    NameContext ctx;
    ctx.coords = is_matrix() ? matrix().sys.coords : scalar().sys.coords;
    return ctx;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

struct Lines {
    std::vector<std::string> raw;
    size_t i = 0;
    bool done() const { return i >= raw.size(); }
    int lineno() const { return static_cast<int>(i) + 1; }
};

/// Parses one basis monomial like "1" or "dt^dx" (names carry the leading d).
std::vector<int> parse_hmono(const std::string& text, const std::map<std::string, int>& dirs,
                             int lineno) {
    std::vector<int> out;
    if (text == "1") return out;
    std::string cur;
    auto flush = [&]() {
        if (cur.size() < 2 || cur[0] != 'd')
            throw ParseError(lineno, 1, "expected a dX coordinate monomial, got '" + cur + "'");
        std::string name = cur.substr(1);
        auto it = dirs.find(name);
        if (it == dirs.end()) throw ParseError(lineno, 1, "unknown coordinate '" + name + "'");
        out.push_back(it->second);
        cur.clear();
    };
    for (char c : text) {
        if (c == '^') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    Lines L;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) L.raw.push_back(line);
    }

    Scenario sc;
    int dim = 0;
    std::vector<std::string> coords;
    std::map<std::string, int> coord_dirs;
    FieldSet fields;
    std::vector<std::string> constants;
    std::map<std::string, std::vector<Symbol>> functions;
    std::vector<std::string> function_names;
    std::optional<HodgeMode> hodge;
    bool matrix = false;
    std::optional<Form> L_form, theta_form;
    std::optional<MatrixForm> L_m, theta_m;
    std::map<std::string, KillingField> killings;
    std::vector<std::string> matrix_killings;

    auto ctx = [&]() {
        ExprContext c;
        c.dim = dim;
        c.matrix = matrix;
        c.coord_dirs = coord_dirs;
        c.fields = &fields;
        for (const auto& k : constants) c.constants[k] = true;
        c.functions = functions;
        c.hodge = hodge ? &*hodge : nullptr;
        return c;
    };

    auto expr_after_eq = [&](const std::string& line, int lineno) {
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, 1, "expected '='");
        return line.substr(eq + 1);
    };

    while (!L.done()) {
        int lineno = L.lineno();
        std::string line = strip_comment(L.raw[L.i]);
        ++L.i;
        auto words = split_ws(line);
        if (words.empty()) continue;
        const std::string& key = words[0];

        if (key == "scenario") {
            if (words.size() != 2) throw ParseError(lineno, 1, "scenario needs a name");
            sc.name = words[1];
        } else if (key == "dim") {
            if (words.size() != 2) throw ParseError(lineno, 1, "dim needs a number");
            dim = std::stoi(words[1]);
            if (dim <= 0) throw ParseError(lineno, 1, "dimension must be positive");
        } else if (key == "coords") {
            coords.assign(words.begin() + 1, words.end());
            if (static_cast<int>(coords.size()) != dim)
                throw ParseError(lineno, 1, "coords must list exactly dim names");
            coord_dirs.clear();
            for (int d = 0; d < dim; ++d) coord_dirs[coords[d]] = d;
        } else if (key == "field") {
            if (words.size() == 2) {
                fields.declare_real(words[1]);
            } else if (words.size() == 3 && words[2] == "real") {
                fields.declare_real(words[1]);
            } else if (words.size() == 3 && words[2] == "complex") {
                fields.declare_unpaired(words[1]);
            } else if (words.size() == 4 && words[2] == "conjugate") {
                fields.declare_pair(words[1], words[3]);
            } else {
                throw ParseError(lineno, 1, "malformed field declaration");
            }
        } else if (key == "constant") {
            for (size_t k = 1; k < words.size(); ++k) constants.push_back(words[k]);
        } else if (key == "function") {
            // function L(q, q_{t}, t)
            auto rest = line.substr(line.find("function") + 8);
            auto paren = rest.find('(');
            if (paren == std::string::npos) throw ParseError(lineno, 1, "function needs arguments");
            std::string fname = rest.substr(0, paren);
            fname.erase(std::remove_if(fname.begin(), fname.end(), ::isspace), fname.end());
            auto close = rest.rfind(')');
            if (close == std::string::npos) throw ParseError(lineno, 1, "unterminated argument list");
            std::string argtext = rest.substr(paren + 1, close - paren - 1);
            std::vector<Symbol> args;
            std::string cur;
            int depth = 0;
            auto flush = [&]() {
                std::string a = cur;
                cur.clear();
                a.erase(std::remove_if(a.begin(), a.end(), ::isspace), a.end());
                if (a.empty()) throw ParseError(lineno, 1, "empty function argument");
                ExprContext c = ctx();
                Form f = parse_form_expr(a, c, lineno);
                const auto& [factors, coeff] = *f.terms().begin();
                if (!factors.empty() || coeff.terms().size() != 1)
                    throw ParseError(lineno, 1, "function arguments must be jets or coordinates");
                const auto& [mono, cc] = *coeff.terms().begin();
                if (mono.size() != 1 || mono[0].second != 1)
                    throw ParseError(lineno, 1, "function arguments must be jets or coordinates");
                args.push_back(mono[0].first);
            };
            for (char c : argtext) {
                if (c == '{') ++depth;
                if (c == '}') --depth;
                if (c == ',' && depth == 0) {
                    flush();
                } else {
                    cur += c;
                }
            }
            flush();
            functions[fname] = std::move(args);
            function_names.push_back(fname);
        } else if (key == "hodge") {
            if (words.size() >= 2 && words[1] == "abstract") {
                hodge = HodgeMode::abstract_mode(dim);
            } else if (words.size() >= 2 && words[1] == "table") {
                HodgeTable t;
                t.dim = dim;
                while (!L.done()) {
                    int ln2 = L.lineno();
                    std::string row = strip_comment(L.raw[L.i]);
                    ++L.i;
                    auto rw = split_ws(row);
                    if (rw.empty()) continue;
                    if (rw[0] == "end") break;
                    if (rw[0] == "signature") {
                        if (rw.size() >= 2) t.signature = rw[1];
                        continue;
                    }
                    // <mono> -> <sign> <mono>
                    if (rw.size() != 4 || rw[1] != "->")
                        throw ParseError(ln2, 1, "hodge row: '<mono> -> <sign> <mono>'");
                    std::vector<int> from = parse_hmono(rw[0], coord_dirs, ln2);
                    Rational sign;
                    if (rw[2] == "1" || rw[2] == "+1") {
                        sign = 1;
                    } else if (rw[2] == "-1") {
                        sign = -1;
                    } else {
                        throw ParseError(ln2, 1, "hodge row sign must be +1 or -1");
                    }
                    std::vector<int> to = parse_hmono(rw[3], coord_dirs, ln2);
                    t.set(std::move(from), sign, std::move(to));
                }
                t.validate();
                hodge = HodgeMode::table_mode(std::move(t));
            } else {
                throw ParseError(lineno, 1, "hodge needs 'abstract' or 'table'");
            }
        } else if (key == "matrix") {
            matrix = true;
            if (!hodge || hodge->kind != HodgeMode::Abstract)
                throw ParseError(lineno, 1, "matrix scenarios require abstract hodge mode");
        } else if (key == "lagrangian" || key == "theta") {
            std::string etext = expr_after_eq(line, lineno);
            ExprContext c = ctx();
            if (matrix) {
                MatrixValue v = parse_matrix_expr(etext, c, lineno);
                if (!v.traced) throw ParseError(lineno, 1, "matrix densities must be Tr(...)");
                (key == "lagrangian" ? L_m : theta_m) = v.m;
            } else {
                if (!hodge) throw ParseError(lineno, 1, "declare the hodge mode first");
                Form f = parse_form_expr(etext, c, lineno);
                (key == "lagrangian" ? L_form : theta_form) = f;
            }
        } else if (key == "killing") {
            if (words.size() != 2) throw ParseError(lineno, 1, "killing needs a name");
            std::string kname = words[1];
            if (matrix) {
                // Only the canonical gauge field is supported; verify the
                // declared contraction matches it.
                bool checked = false;
                while (!L.done()) {
                    int ln2 = L.lineno();
                    std::string row = strip_comment(L.raw[L.i]);
                    ++L.i;
                    auto rw = split_ws(row);
                    if (rw.empty()) continue;
                    if (rw[0] == "end") break;
                    auto arrow = row.find("->");
                    if (arrow == std::string::npos) throw ParseError(ln2, 1, "expected '->'");
                    std::string lhs = row.substr(0, arrow);
                    std::string rhs = row.substr(arrow + 2);
                    lhs.erase(std::remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());
                    if (lhs != "del(Amat)")
                        throw ParseError(ln2, 1, "matrix killing rows must contract del(Amat)");
                    ExprContext c = ctx();
                    MatrixValue v = parse_matrix_expr(rhs, c, ln2);
                    if (v.traced) throw ParseError(ln2, 1, "contraction values are untraced");
                    GaugeKilling ref(dim);
                    if (!(v.m == ref.characteristic()))
                        throw ParseError(ln2, 1,
                                         "only the gauge Killing field -(d(Xi)+Amat^Xi-Xi^Amat) "
                                         "is supported");
                    checked = true;
                }
                if (!checked) throw ParseError(lineno, 1, "empty killing block");
                matrix_killings.push_back(kname);
            } else {
                KillingField X(kname, dim);
                while (!L.done()) {
                    int ln2 = L.lineno();
                    std::string row = strip_comment(L.raw[L.i]);
                    ++L.i;
                    auto rw = split_ws(row);
                    if (rw.empty()) continue;
                    if (rw[0] == "end") break;
                    auto arrow = row.find("->");
                    if (arrow == std::string::npos) throw ParseError(ln2, 1, "expected '->'");
                    std::string lhs = row.substr(0, arrow);
                    std::string rhs = row.substr(arrow + 2);
                    lhs.erase(std::remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());
                    ExprContext c = ctx();
                    Form value = parse_form_expr(rhs, c, ln2);
                    if (lhs.rfind("dx[", 0) == 0 && lhs.back() == ']') {
                        std::string cn = lhs.substr(3, lhs.size() - 4);
                        int dir;
                        if (coord_dirs.count(cn)) {
                            dir = coord_dirs[cn];
                        } else {
                            dir = std::stoi(cn);
                        }
                        auto num = value.terms().empty()
                                       ? std::optional<ScalarExpr>(ScalarExpr::zero())
                                       : (value.terms().begin()->first.empty()
                                              ? std::optional<ScalarExpr>(
                                                    value.terms().begin()->second)
                                              : std::nullopt);
                        if (!num || value.terms().size() > 1)
                            throw ParseError(ln2, 1, "horizontal contractions must be scalars");
                        X.set_horizontal(dir, *num);
                    } else if (lhs.rfind("del(", 0) == 0 && lhs.back() == ')') {
                        std::string fname = lhs.substr(4, lhs.size() - 5);
                        if (!fields.has(fname))
                            throw ParseError(ln2, 1, "unknown field '" + fname + "'");
                        X.set_vertical(fname, value);
                    } else {
                        throw ParseError(ln2, 1, "killing rows contract dx[...] or del(field)");
                    }
                }
                killings.emplace(kname, std::move(X));
            }
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + key + "'");
        }
    }

    if (sc.name.empty()) throw StructuralError("scenario has no name");
    if (dim == 0) throw StructuralError("scenario has no dimension");
    if (coords.empty()) throw StructuralError("scenario has no coordinates");

    if (matrix) {
        MatrixScenario ms;
        ms.sys.dim = dim;
        ms.sys.coords = coords;
        ms.sys.L = L_m.value_or(MatrixForm::zero(dim));
        ms.sys.theta = theta_m.value_or(MatrixForm::zero(dim));
        auto bl = ms.sys.L.homogeneous_bidegree();
        if (!bl || (!ms.sys.L.is_zero() && *bl != Bidegree{0, dim}))
            throw StructuralError("Lagrangian density must have bidegree (0,n)");
        auto bt = ms.sys.theta.homogeneous_bidegree();
        if (!bt || (!ms.sys.theta.is_zero() && *bt != Bidegree{1, dim - 1}))
            throw StructuralError("variational form must have bidegree (1,n-1)");
        ms.killings = matrix_killings;
        sc.body = std::move(ms);
        return sc;
    }

    ScalarScenario ss;
    ss.sys.dim = dim;
    ss.sys.coords = coords;
    ss.sys.hodge = hodge.value_or(HodgeMode::abstract_mode(dim));
    ss.sys.fields = fields;
    ss.sys.constants = constants;
    ss.sys.L = L_form.value_or(Form::zero(dim));
    ss.sys.theta = theta_form.value_or(Form::zero(dim));
    ss.sys.validate();
    ss.killings = std::move(killings);
    ss.functions = function_names;
    sc.body = std::move(ss);
    return sc;
}

// ---------------------------------------------------------------------------
// Canonical scenario rendering

namespace {

std::string hmono_str(const std::vector<int>& dirs, const NameContext& ctx) {
    if (dirs.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < dirs.size(); ++i) {
        if (i) out += "^";
        out += "d" + ctx.coord(dirs[i]);
    }
    return out;
}

// ---- canonical, re-parseable expression text --------------------------------

std::string parseable_crat(const CRat& c) {
    auto rat = [](const Rational& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    };
    if (c.im == 0) return rat(c.re);
    std::string im = c.im == 1 ? "i" : (c.im == -1 ? "-i" : rat(c.im) + "*i");
    if (c.re == 0) return im;
    return "(" + rat(c.re) + (im[0] == '-' ? "" : "+") + im + ")";
}

std::string parseable_symbol(const Symbol& s, const NameContext& ctx) {
    switch (s.kind) {
    case SymKind::Coord:
        return ctx.coord(s.dir);
    case SymKind::Const:
        return s.name;
    case SymKind::Jet: {
        std::string out = s.name;
        if (!s.index.empty()) {
            out += "_{";
            for (size_t i = 0; i < s.index.size(); ++i) {
                if (i) out += ",";
                out += ctx.coord(s.index[i]);
            }
            out += "}";
        }
        return out;
    }
    case SymKind::Func: {
        bool plain = true;
        for (int d : s.derivs)
            if (d != 0) plain = false;
        if (plain) return s.name;
        std::string out = "pd(" + s.name;
        for (size_t i = 0; i < s.args.size(); ++i)
            for (int k = 0; k < s.derivs[i]; ++k) out += "," + parseable_symbol(s.args[i], ctx);
        return out + ")";
    }
    }
    return "?";
}

std::string parseable_scalar(const ScalarExpr& e, const NameContext& ctx) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        std::string coeff = parseable_crat(c);
        std::string body = coeff;
        for (const auto& [s, exp] : m) {
            std::string sym = parseable_symbol(s, ctx);
            body += "*" + (exp == 1 ? sym : "pow(" + sym + "," + std::to_string(exp) + ")");
        }
        if (first) {
            out = body;
        } else if (body[0] == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
        first = false;
    }
    return out;
}

std::string parseable_form(const Form& f, const NameContext& ctx) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [factors, coeff] : f.terms()) {
        std::string cs = parseable_scalar(coeff, ctx);
        std::string body = coeff.terms().size() > 1 ? "(" + cs + ")" : cs;
        for (const auto& g : factors) {
            body += "*";
            switch (g.kind) {
            case Generator::Horizontal:
                body += "dx[" + ctx.coord(g.dir) + "]";
                break;
            case Generator::Vertical:
                body += "del(" + parseable_symbol(g.jet, ctx) + ")";
                break;
            case Generator::Star: {
                std::string inner = "1";
                if (!g.star.word.empty()) {
                    inner.clear();
                    for (size_t i = 0; i < g.star.word.size(); ++i) {
                        if (i) inner += "^";
                        inner += "dx[" + ctx.coord(g.star.word[i]) + "]";
                    }
                }
                std::string s = "star(" + inner + ")";
                for (int k = 0; k < g.star.d; ++k) s = "d(" + s + ")";
                body += s;
                break;
            }
            }
        }
        if (first) {
            out = body;
        } else if (body[0] == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
        first = false;
    }
    return out;
}

} // namespace

std::string render_scenario(const Scenario& sc) {
    NameContext ctx = sc.names();
    std::ostringstream os;
    os << "scenario " << sc.name << "\n";
    os << "dim " << sc.dim() << "\n";
    os << "coords";
    for (const auto& c : ctx.coords) os << " " << c;
    os << "\n";

    if (sc.is_matrix()) {
        const MatrixScenario& ms = sc.matrix();
        os << "hodge abstract\n";
        os << "matrix\n";
        auto emit = [&](const char* key, const MatrixForm& m) {
            os << key << " = ";
            if (m.is_zero()) {
                os << "0 * Tr(Amat)";
            } else {
                bool first = true;
                for (const auto& [w, c] : m.terms()) {
                    std::string body;
                    for (size_t i = 0; i < w.size(); ++i) {
                        if (i) body += "^";
                        const MUnit& u = w[i];
                        auto astr = [&](MAtom a) {
                            switch (a) {
                            case MAtom::ConnA: return std::string("Amat");
                            case MAtom::DConnA: return std::string("d(Amat)");
                            case MAtom::VarA: return std::string("del(Amat)");
                            case MAtom::DVarA: return std::string("d(del(Amat))");
                            case MAtom::Xi: return std::string("Xi");
                            case MAtom::DXi: return std::string("d(Xi)");
                            }
                            return std::string("?");
                        };
                        if (!u.is_star) {
                            body += astr(u.w[0]);
                        } else {
                            std::string inner;
                            for (size_t k = 0; k < u.w.size(); ++k) {
                                if (k) inner += "^";
                                inner += astr(u.w[k]);
                            }
                            std::string s = "star(" + inner + ")";
                            for (int k = 0; k < u.d; ++k) s = "d(" + s + ")";
                            body += s;
                        }
                    }
                    std::string coeff = render_crat(c);
                    if (!first) os << (coeff[0] == '-' ? " - " : " + ");
                    if (!first && coeff[0] == '-') coeff = coeff.substr(1);
                    first = false;
                    os << coeff << " * Tr(" << body << ")";
                }
            }
            os << "\n";
        };
        emit("lagrangian", ms.sys.L);
        emit("theta", ms.sys.theta);
        for (const auto& k : ms.killings) {
            os << "killing " << k << "\n";
            os << "  del(Amat) -> - d(Xi) - Amat^Xi + Xi^Amat\n";
            os << "end\n";
        }
        return os.str();
    }

    const ScalarScenario& ss = sc.scalar();
    for (const auto& [name, info] : ss.sys.fields.all()) {
        if (info.unpaired_complex) {
            os << "field " << name << " complex\n";
        } else if (info.conj == name) {
            os << "field " << name << " real\n";
        } else if (name < info.conj) {
            os << "field " << name << " conjugate " << info.conj << "\n";
        }
    }
    if (!ss.sys.constants.empty()) {
        os << "constant";
        for (const auto& c : ss.sys.constants) os << " " << c;
        os << "\n";
    }
    // Opaque function declarations are reconstructed from the forms.
    {
        std::map<std::string, std::vector<Symbol>> funcs;
        auto scan = [&](const Form& f) {
            for (const auto& [factors, coeff] : f.terms())
                for (const auto& [m, c] : coeff.terms())
                    for (const auto& [s, e] : m)
                        if (s.kind == SymKind::Func) funcs[s.name] = s.args;
        };
        scan(ss.sys.L);
        scan(ss.sys.theta);
        for (const auto& [fn, args] : funcs) {
            os << "function " << fn << "(";
            for (size_t i = 0; i < args.size(); ++i) {
                if (i) os << ", ";
                if (args[i].kind == SymKind::Coord) {
                    os << ctx.coord(args[i].dir);
                } else {
                    os << args[i].name;
                    if (!args[i].index.empty()) {
                        os << "_{";
                        for (size_t k = 0; k < args[i].index.size(); ++k) {
                            if (k) os << ",";
                            os << ctx.coord(args[i].index[k]);
                        }
                        os << "}";
                    }
                }
            }
            os << ")\n";
        }
    }
    if (ss.sys.hodge.kind == HodgeMode::Abstract) {
        os << "hodge abstract\n";
    } else {
        os << "hodge table\n";
        if (!ss.sys.hodge.table->signature.empty())
            os << "  signature " << ss.sys.hodge.table->signature << "\n";
        for (const auto& [from, to] : ss.sys.hodge.table->table) {
            os << "  " << hmono_str(from, ctx) << " -> " << (to.first < 0 ? "-1" : "+1") << " "
               << hmono_str(to.second, ctx) << "\n";
        }
        os << "end\n";
    }
    os << "lagrangian = " << parseable_form(ss.sys.L, ctx) << "\n";
    os << "theta = " << parseable_form(ss.sys.theta, ctx) << "\n";
    for (const auto& [name, X] : ss.killings) {
        os << "killing " << name << "\n";
        for (const auto& [dir, v] : X.horizontal_table())
            os << "  dx[" << ctx.coord(dir) << "] -> " << parseable_scalar(v, ctx) << "\n";
        for (const auto& [field, v] : X.vertical_table())
            os << "  del(" << field << ") -> " << parseable_form(v, ctx) << "\n";
        os << "end\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Built-in registry

namespace {

std::string kg_lagrangian_lines() {
    return "lagrangian = 1/2 * d(phibar) ^ star(d(phi)) - star(pow(mu,2)/2 * phi*phibar)\n"
           "theta = 1/2 * (del(phi) ^ star(d(phibar)) + del(phibar) ^ star(d(phi)))\n";
}

std::string kg2d_header() {
    return "scenario kg2d\n"
           "dim 2\n"
           "coords t x\n"
           "field phi conjugate phibar\n"
           "constant mu At Ax alpha\n"
           "hodge table\n"
           "  signature minkowski(+,-)\n"
           "  1 -> -1 dt^dx\n"
           "  dt -> -1 dx\n"
           "  dx -> -1 dt\n"
           "  dt^dx -> +1 1\n"
           "end\n" +
           kg_lagrangian_lines();
}

std::string killing_translation() {
    return "killing translation\n"
           "  dx[t] -> At\n"
           "  dx[x] -> Ax\n"
           "  del(phi) -> -(At*phi_{t} + Ax*phi_{x})\n"
           "  del(phibar) -> -(At*phibar_{t} + Ax*phibar_{x})\n"
           "end\n";
}

std::string killing_ttrans() {
    return "killing ttrans\n"
           "  dx[t] -> 1\n"
           "  del(phi) -> -phi_{t}\n"
           "  del(phibar) -> -phibar_{t}\n"
           "end\n";
}

std::string killing_xtrans() {
    return "killing xtrans\n"
           "  dx[x] -> 1\n"
           "  del(phi) -> -phi_{x}\n"
           "  del(phibar) -> -phibar_{x}\n"
           "end\n";
}

std::string killing_u1() {
    return "killing u1\n"
           "  del(phi) -> i*alpha*phi\n"
           "  del(phibar) -> -(i*alpha*phibar)\n"
           "end\n";
}

} // namespace

std::vector<std::string> scenario_names() {
    return {"kg-abstract", "kg2d", "mechanics", "translation2d", "u1", "yangmills"};
}

bool is_builtin_scenario(const std::string& name) {
    for (const auto& n : scenario_names())
        if (n == name) return true;
    return false;
}

std::string builtin_scenario_source(const std::string& name, int dim) {
    if (name == "mechanics") {
        if (dim != 0 && dim != 1) throw StructuralError("mechanics is one-dimensional");
        return "scenario mechanics\n"
               "dim 1\n"
               "coords t\n"
               "field q real\n"
               "function L(q, q_{t}, t)\n"
               "hodge abstract\n"
               "lagrangian = L * dx[t]\n"
               "theta = pd(L, q_{t}) * del(q)\n";
    }
    if (name == "kg2d") {
        if (dim != 0 && dim != 2) throw StructuralError("kg2d is two-dimensional");
        return kg2d_header() + killing_translation() + killing_ttrans() + killing_xtrans() +
               killing_u1();
    }
    if (name == "translation2d") {
        if (dim != 0 && dim != 2) throw StructuralError("translation2d is two-dimensional");
        std::string src = kg2d_header() + killing_translation();
        return "scenario translation2d\n" + src.substr(src.find('\n') + 1);
    }
    if (name == "u1") {
        if (dim != 0 && dim != 2) throw StructuralError("u1 is two-dimensional");
        std::string src = kg2d_header() + killing_u1();
        return "scenario u1\n" + src.substr(src.find('\n') + 1);
    }
    if (name == "kg-abstract") {
        int n = dim == 0 ? 4 : dim;
        if (n < 2) throw StructuralError("kg-abstract needs dimension >= 2");
        std::ostringstream os;
        os << "scenario kg-abstract\n"
           << "dim " << n << "\n"
           << "coords";
        for (int k = 0; k < n; ++k) os << " x" << k;
        os << "\n"
           << "field phi conjugate phibar\n"
           << "constant mu alpha\n"
           << "hodge abstract\n"
           << kg_lagrangian_lines() << killing_u1();
        return os.str();
    }
    if (name == "yangmills") {
        int n = dim == 0 ? 4 : dim;
        if (n < 2) throw StructuralError("yangmills needs dimension >= 2");
        std::ostringstream os;
        os << "scenario yangmills\n"
           << "dim " << n << "\n"
           << "coords";
        for (int k = 0; k < n; ++k) os << " x" << k;
        os << "\n"
           << "hodge abstract\n"
           << "matrix\n"
           << "lagrangian = -1/2 * Tr(F ^ star(F))\n"
           << "theta = -1 * Tr(delA ^ star(F))\n"
           << "killing gauge\n"
           << "  del(Amat) -> -(d(Xi) + Amat^Xi - Xi^Amat)\n"
           << "end\n";
        return os.str();
    }
    throw StructuralError("unknown built-in scenario '" + name + "'");
}

Scenario load_scenario(const std::string& name_or_path, int dim) {
    if (is_builtin_scenario(name_or_path))
        return parse_scenario(builtin_scenario_source(name_or_path, dim));
    std::ifstream in(name_or_path);
    if (!in) throw StructuralError("unknown scenario (not built in, no such file): " + name_or_path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_scenario(os.str());
}

} // namespace varcomplex
