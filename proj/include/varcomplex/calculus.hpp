#pragma once

#include "varcomplex/form.hpp"
#include "varcomplex/killing.hpp"

namespace varcomplex {

/// Vertical differential (delta): raises (p,q) -> (p+1,q).
Form vertical_diff(const Form& a);

/// Horizontal differential (d): raises (p,q) -> (p,q+1), top degree truncates.
Form horizontal_diff(const Form& a);

/// Total differential D = delta + d.
Form total_diff(const Form& a);

/// Interior product with a Killing field; anti-derivation of degree -1.
Form interior(const KillingField& X, const Form& a);

/// Cartan Lie derivatives: total, and the two partial ones.
Form lie_total(const KillingField& X, const Form& a);
Form lie_vertical(const KillingField& X, const Form& a);
Form lie_horizontal(const KillingField& X, const Form& a);

} // namespace varcomplex
