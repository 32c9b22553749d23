#pragma once

#include <array>
#include <string>
#include <vector>

#include "varcomplex/calculus.hpp"
#include "varcomplex/hodge.hpp"

namespace varcomplex {

/// Total Lagrangian data: density L of bidegree (0,n) and variational form
/// theta of bidegree (1,n-1) on the product of field space and spacetime.
struct LagrangianSystem {
    int dim = 0;
    std::vector<std::string> coords; // names, size dim
    HodgeMode hodge;
    FieldSet fields;
    std::vector<std::string> constants;
    Form L{0};
    Form theta{0};

    void validate() const;
    Form total_lagrangian() const { return L + theta; }
};

/// D-closed total form Omega with its (2,n-1) and (1,n) parts.
struct DynamicalSymplectic {
    Form Omega{0};
    Form omega{0};
    Form E{0};
};

struct CheckResult {
    bool ok = false;
    Form residual{0};
};

/// E_L = delta L + d theta, the (1,n) part of D(L + theta).
Form euler_lagrange(const LagrangianSystem& sys);

/// omega = delta theta.
Form symplectic_density(const LagrangianSystem& sys);

/// Omega = D(L + theta) decomposed; errors if anything besides the
/// (2,n-1) and (1,n) parts survives.
DynamicalSymplectic total_symplectic(const LagrangianSystem& sys);

/// L -> L + d lambda, theta -> theta + delta lambda for lambda in (0,n-1).
LagrangianSystem lagrangian_shift(const LagrangianSystem& sys, const Form& lambda);

/// J = X -| (L + theta).
Form momentum_map(const LagrangianSystem& sys, const KillingField& X);

/// Whether Lie_X (L + theta) vanishes; residual reported otherwise.
CheckResult invariance_check(const LagrangianSystem& sys, const KillingField& X);

/// X -| Omega + D J = 0, the defining property of the momentum map.
CheckResult momentum_defining_check(const LagrangianSystem& sys, const KillingField& X);

struct HamiltonReport {
    bool ok = false;
    Form lhs{0};                                  // X -| omega + D H
    Form rhs{0};                                  // -(X -| E)
    std::vector<std::pair<Bidegree, Form>> components; // bigraded parts of lhs
};

/// Hamilton's equations in the covariant form: X -| omega + D H = -(X -| E)
/// with H = J_X; reports the bigraded components of the left-hand side.
HamiltonReport hamilton_identity(const LagrangianSystem& sys, const KillingField& X);

/// Lie_{X_A} J_B = 0 for commuting symmetries.
CheckResult noether_check(const LagrangianSystem& sys, const KillingField& A,
                          const KillingField& B);

/// The four component equations of a Hamiltonian vector field candidate.
std::array<Form, 4> hamiltonian_vf_components(const DynamicalSymplectic& W,
                                              const KillingField& X, const Form& alpha);

/// Substitutes equations of motion into every coefficient.
Form on_shell_reduce(const Form& a, const std::map<Symbol, ScalarExpr>& eqns);

} // namespace varcomplex
