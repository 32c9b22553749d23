#include "varcomplex/system.hpp"

#include "varcomplex/errors.hpp"

namespace varcomplex {

void LagrangianSystem::validate() const {
    if (dim <= 0) throw StructuralError("system dimension must be positive");
    if (static_cast<int>(coords.size()) != dim)
        throw StructuralError("coordinate name count does not match the dimension");
    auto bl = L.homogeneous_bidegree();
    if (!bl || (!L.is_zero() && *bl != Bidegree{0, dim}))
        throw StructuralError("Lagrangian density must have bidegree (0,n)");
    auto bt = theta.homogeneous_bidegree();
    if (!bt || (!theta.is_zero() && *bt != Bidegree{1, dim - 1}))
        throw StructuralError("variational form must have bidegree (1,n-1)");
}

Form euler_lagrange(const LagrangianSystem& sys) {
    return vertical_diff(sys.L) + horizontal_diff(sys.theta);
}

Form symplectic_density(const LagrangianSystem& sys) { return vertical_diff(sys.theta); }

DynamicalSymplectic total_symplectic(const LagrangianSystem& sys) {
    DynamicalSymplectic W{Form::zero(sys.dim), Form::zero(sys.dim), Form::zero(sys.dim)};
    W.Omega = total_diff(sys.total_lagrangian());
    W.omega = W.Omega.project(2, sys.dim - 1);
    W.E = W.Omega.project(1, sys.dim);
    if (!W.Omega.project(0, sys.dim + 1).is_zero())
        throw StructuralError("top-degree truncation violated");
    if (W.Omega != W.omega + W.E)
        throw StructuralError("total symplectic decomposition left a residue");
    return W;
}

LagrangianSystem lagrangian_shift(const LagrangianSystem& sys, const Form& lambda) {
    auto b = lambda.homogeneous_bidegree();
    if (!b || (!lambda.is_zero() && *b != Bidegree{0, sys.dim - 1}))
        throw StructuralError("shift form must have bidegree (0,n-1)");
    LagrangianSystem out = sys;
    out.L = sys.L + horizontal_diff(lambda);
    out.theta = sys.theta + vertical_diff(lambda);
    return out;
}

Form momentum_map(const LagrangianSystem& sys, const KillingField& X) {
    return interior(X, sys.total_lagrangian());
}

CheckResult invariance_check(const LagrangianSystem& sys, const KillingField& X) {
    Form r = lie_total(X, sys.total_lagrangian());
    return CheckResult{r.is_zero(), r};
}

CheckResult momentum_defining_check(const LagrangianSystem& sys, const KillingField& X) {
    DynamicalSymplectic W = total_symplectic(sys);
    Form J = momentum_map(sys, X);
    Form r = interior(X, W.Omega) + total_diff(J);
    return CheckResult{r.is_zero(), r};
}

HamiltonReport hamilton_identity(const LagrangianSystem& sys, const KillingField& X) {
    DynamicalSymplectic W = total_symplectic(sys);
    Form H = momentum_map(sys, X);
    HamiltonReport rep;
    rep.lhs = interior(X, W.omega) + total_diff(H);
    rep.rhs = -interior(X, W.E);
    rep.ok = rep.lhs == rep.rhs;
    for (const Bidegree& b : rep.lhs.bidegrees())
        rep.components.emplace_back(b, rep.lhs.project(b.p, b.q));
    return rep;
}

CheckResult noether_check(const LagrangianSystem& sys, const KillingField& A,
                          const KillingField& B) {
    Form JB = momentum_map(sys, B);
    Form r = lie_total(A, JB);
    return CheckResult{r.is_zero(), r};
}

std::array<Form, 4> hamiltonian_vf_components(const DynamicalSymplectic& W,
                                              const KillingField& X, const Form& alpha) {
    const int n = W.Omega.dim();
    Form iE = interior(X, W.E);
    Form iw = interior(X, W.omega);
    Form a = iE.project(0, n) + horizontal_diff(alpha.project(0, n - 1));
    Form b = iE.project(1, n - 1) + iw.project(1, n - 1) +
             horizontal_diff(alpha.project(1, n - 2)) + vertical_diff(alpha.project(0, n - 1));
    Form c = iw.project(2, n - 2) + horizontal_diff(alpha.project(2, n - 3)) +
             vertical_diff(alpha.project(1, n - 2));
    Form d = vertical_diff(alpha.project(2, n - 3));
    return {a, b, c, d};
}

Form on_shell_reduce(const Form& a, const std::map<Symbol, ScalarExpr>& eqns) {
    return substitute_coefficients(a, eqns);
}

} // namespace varcomplex
