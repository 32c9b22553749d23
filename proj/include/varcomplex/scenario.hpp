#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "varcomplex/gauge.hpp"
#include "varcomplex/render.hpp"
#include "varcomplex/system.hpp"

namespace varcomplex {

struct ParseError : StructuralError {
    int line;
    int column;
    ParseError(int ln, int col, const std::string& msg)
        : StructuralError(std::to_string(ln) + ":" + std::to_string(col) + ": " + msg),
          line(ln),
          column(col) {}
};

struct ScalarScenario {
    LagrangianSystem sys;
    std::map<std::string, KillingField> killings;
    std::vector<std::string> functions; // declared opaque function names
};

struct MatrixScenario {
    MatrixSystem sys;
    std::vector<std::string> killings; // gauge killing names (table is fixed)
};

struct Scenario {
    std::string name;
    std::variant<ScalarScenario, MatrixScenario> body;

    bool is_matrix() const { return std::holds_alternative<MatrixScenario>(body); }
    const ScalarScenario& scalar() const { return std::get<ScalarScenario>(body); }
    const MatrixScenario& matrix() const { return std::get<MatrixScenario>(body); }
    int dim() const;
    NameContext names() const;
};

/// Parses the line-oriented scenario language ('#' comments).
Scenario parse_scenario(const std::string& text);

/// Canonical scenario text; parse(render(parse(t))) == parse(t).
std::string render_scenario(const Scenario& sc);

/// Built-in registry: mechanics, kg2d, kg-abstract, translation2d, u1,
/// yangmills. dim applies to the parametric entries (0 = default).
std::vector<std::string> scenario_names();
bool is_builtin_scenario(const std::string& name);
std::string builtin_scenario_source(const std::string& name, int dim);
Scenario load_scenario(const std::string& name_or_path, int dim);

} // namespace varcomplex
