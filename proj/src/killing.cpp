#include "varcomplex/killing.hpp"

#include "varcomplex/errors.hpp"

namespace varcomplex {

void KillingField::set_horizontal(int dir, ScalarExpr value) {
    if (dir < 0 || dir >= dim_) throw StructuralError("killing field: direction out of range");
    if (!value.is_constant())
        throw StructuralError("killing field '" + name_ +
                              "': horizontal contractions must be constant");
    if (!value.is_zero()) hor_[dir] = std::move(value);
}

void KillingField::set_vertical(const std::string& field, Form value) {
    if (value.dim() != dim_) throw StructuralError("killing field: ambient mismatch");
    for (const auto& [f, c] : value.terms()) {
        Bidegree b = value.term_bidegree(f);
        if (b.p != 0)
            throw StructuralError("killing field: vertical contraction value must be a (0,q) form");
    }
    vert_.insert_or_assign(field, std::move(value));
}

ScalarExpr KillingField::horizontal(int dir) const {
    auto it = hor_.find(dir);
    return it == hor_.end() ? ScalarExpr::zero() : it->second;
}

namespace {

/// Total derivative applied to every coefficient; dx factors are constant.
Form coefficientwise_total(const Form& a, int dir) {
    Form out(a.dim());
    for (const auto& [f, c] : a.terms()) out.add_term(f, total_derivative(c, dir));
    return out;
}

} // namespace

Form KillingField::vertical(const Symbol& jet) const {
    auto it = vert_.find(jet.name);
    if (it == vert_.end()) return Form::zero(dim_);
    Form value = it->second;
    // Prolongation: the base contraction is the characteristic; jets pick up
    // its total derivatives, one per multi-index entry.
    for (int dir : jet.index) value = coefficientwise_total(value, dir);
    return value;
}

bool KillingField::vertical_only() const {
    for (const auto& [d, v] : hor_)
        if (!v.is_zero()) return false;
    return true;
}

} // namespace varcomplex
