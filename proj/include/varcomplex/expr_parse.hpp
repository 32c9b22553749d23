#pragma once

#include <map>
#include <optional>
#include <string>

#include "varcomplex/gauge.hpp"
#include "varcomplex/hodge.hpp"

namespace varcomplex {

/// Name resolution context for the infix expression language.
struct ExprContext {
    int dim = 0;
    bool matrix = false;
    std::map<std::string, int> coord_dirs;
    const FieldSet* fields = nullptr;
    std::map<std::string, bool> constants;                       // name -> declared
    std::map<std::string, std::vector<Symbol>> functions;        // opaque function args
    const HodgeMode* hodge = nullptr;                            // for star()
};

/// Parses an infix expression to a Form (scalar scenarios).
/// Operators: ^ wedge, * scalar multiply, / numeric divide, + -; atoms:
/// dx[mu], d(...), del(...), D(...), star(...), pd(f,u,...), conj(...),
/// pow(x,k), jets like phi_{t,x}, constants, i.
Form parse_form_expr(const std::string& text, const ExprContext& ctx, int line_base = 1);

struct MatrixValue {
    MatrixForm m;
    bool traced = false;
};

/// Matrix scenario expressions: atoms Amat, Xi, F, delA plus Tr(...).
MatrixValue parse_matrix_expr(const std::string& text, const ExprContext& ctx, int line_base = 1);

} // namespace varcomplex
