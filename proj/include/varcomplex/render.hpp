#pragma once

#include <string>
#include <vector>

#include "varcomplex/form.hpp"
#include "varcomplex/gauge.hpp"

namespace varcomplex {

enum class Style { Plain, Latex, Ast };

/// Names used by the renderers; coordinate names indexed by direction.
struct NameContext {
    std::vector<std::string> coords;
    std::string coord(int dir) const;
};

std::string render_crat(const CRat& c);
std::string render_scalar(const ScalarExpr& e, const NameContext& ctx, Style style);
std::string render_form(const Form& f, const NameContext& ctx, Style style);
std::string render_trace(const TraceExpr& t, const NameContext& ctx, Style style);

/// Machine-readable nested structure with explicit bidegrees (JSON).
std::string form_to_ast(const Form& f, const NameContext& ctx);
Form form_from_ast(const std::string& text);
std::string trace_to_ast(const TraceExpr& t, const NameContext& ctx);

} // namespace varcomplex
