#pragma once

#include <map>
#include <string>

#include "varcomplex/form.hpp"

namespace varcomplex {

/// Infinitesimal symmetry generator, given by its contraction table:
/// X -| dx^mu per direction (constants only) and X -| du on base fields.
/// Contractions on higher jets are the D_mu prolongation of the base rule.
class KillingField {
public:
    KillingField(std::string name, int dim) : name_(std::move(name)), dim_(dim) {}

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    void set_horizontal(int dir, ScalarExpr value);
    void set_vertical(const std::string& field, Form value);

    ScalarExpr horizontal(int dir) const;
    /// X -| du_I for an arbitrary jet, via prolongation.
    Form vertical(const Symbol& jet) const;

    bool vertical_only() const;

    const std::map<int, ScalarExpr>& horizontal_table() const { return hor_; }
    const std::map<std::string, Form>& vertical_table() const { return vert_; }

private:
    std::string name_;
    int dim_;
    std::map<int, ScalarExpr> hor_;
    std::map<std::string, Form> vert_;
};

} // namespace varcomplex
