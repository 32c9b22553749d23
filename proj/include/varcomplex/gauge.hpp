#pragma once

#include <map>
#include <vector>

#include "varcomplex/form.hpp"

namespace varcomplex {

/// Matrix-valued (Lie-algebra) atoms of the gauge scenario. Opaque word
/// algebra: no structure constants, no matrix dimension.
enum class MAtom : int {
    ConnA = 0,  // connection 1-form A            (0,1)
    DConnA = 1, // dA                             (0,2)
    VarA = 2,   // delta A                        (1,1)
    DVarA = 3,  // d delta A (= -delta dA)        (1,2)
    Xi = 4,     // Lie-algebra element            (0,0)
    DXi = 5,    // d Xi                           (0,1)
};

Bidegree matom_degree(MAtom a);

/// One factor of a noncommutative word: a bare atom or a star block
/// d^k(star(w)) over an inner atom word.
struct MUnit {
    bool is_star = false;
    std::vector<MAtom> w; // single atom when !is_star
    int d = 0;

    static MUnit atom(MAtom a) { return MUnit{false, {a}, 0}; }
    static MUnit star(std::vector<MAtom> inner, int dcount) {
        return MUnit{true, std::move(inner), dcount};
    }

    Bidegree degree(int dim) const;

    friend bool operator<(const MUnit& a, const MUnit& b) {
        if (a.is_star != b.is_star) return a.is_star < b.is_star;
        if (a.w != b.w) return a.w < b.w;
        return a.d < b.d;
    }
    friend bool operator==(const MUnit& a, const MUnit& b) {
        return a.is_star == b.is_star && a.w == b.w && a.d == b.d;
    }
};

using MWord = std::vector<MUnit>;

/// Sum of noncommutative words with exact complex-rational coefficients.
/// Words are never commuted silently.
class MatrixForm {
public:
    using Terms = std::map<MWord, CRat>;

    explicit MatrixForm(int dim) : n_(dim) {}

    static MatrixForm zero(int dim) { return MatrixForm(dim); }
    static MatrixForm unit(int dim, MUnit u, CRat c = CRat(1));
    static MatrixForm atom(int dim, MAtom a) { return unit(dim, MUnit::atom(a)); }

    int dim() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }

    Bidegree word_bidegree(const MWord& w) const;
    std::optional<Bidegree> homogeneous_bidegree() const;

    void add_term(const MWord& w, const CRat& c);

    friend MatrixForm operator+(const MatrixForm& a, const MatrixForm& b);
    friend MatrixForm operator-(const MatrixForm& a, const MatrixForm& b);
    MatrixForm operator-() const;
    friend bool operator==(const MatrixForm& a, const MatrixForm& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MatrixForm& a, const MatrixForm& b) { return !(a == b); }

private:
    int n_;
    Terms t_;
};

MatrixForm nc_wedge(const MatrixForm& a, const MatrixForm& b);
MatrixForm nc_scale(const CRat& c, const MatrixForm& a);

MatrixForm mf_vertical_diff(const MatrixForm& a);
MatrixForm mf_horizontal_diff(const MatrixForm& a);
MatrixForm mf_total_diff(const MatrixForm& a);

/// Abstract star of a star-free matrix form: wraps each word.
MatrixForm mf_star(const MatrixForm& a);

/// F_A = dA + A ^ A (matrix groups).
MatrixForm curvature(int dim);

/// D_A beta = d beta + A ^ beta + (-1)^{#beta+1} beta ^ A.
MatrixForm covariant_derivative(const MatrixForm& beta);

/// The gauge Killing field: X -| delta A = -(d Xi + A Xi - Xi A), all
/// horizontal contractions zero.
class GaugeKilling {
public:
    explicit GaugeKilling(int dim);
    const MatrixForm& characteristic() const { return q_; }
    MatrixForm contract(const MatrixForm& a) const;

private:
    MatrixForm q_;
    MatrixForm dq_;
};

MatrixForm mf_lie_total(const GaugeKilling& X, const MatrixForm& a);

/// A traced word: cyclic atom sequence with a star dressing given by a
/// position mask (Ad-invariance of the trace enters as graded cyclicity, the
/// star pairing symmetry as a mask swap).
struct TraceTerm {
    std::vector<MAtom> atoms;
    std::vector<char> mask;
    int d = 0;

    friend bool operator<(const TraceTerm& a, const TraceTerm& b) {
        if (a.atoms != b.atoms) return a.atoms < b.atoms;
        if (a.mask != b.mask) return a.mask < b.mask;
        return a.d < b.d;
    }
    friend bool operator==(const TraceTerm& a, const TraceTerm& b) {
        return a.atoms == b.atoms && a.mask == b.mask && a.d == b.d;
    }
};

class TraceExpr {
public:
    using Terms = std::map<TraceTerm, CRat>;

    explicit TraceExpr(int dim) : n_(dim) {}

    int dim() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }
    Bidegree term_bidegree(const TraceTerm& t) const;

    void add_term(TraceTerm t, const CRat& c);

    friend TraceExpr operator+(const TraceExpr& a, const TraceExpr& b);
    friend TraceExpr operator-(const TraceExpr& a, const TraceExpr& b);
    TraceExpr operator-() const;
    friend bool operator==(const TraceExpr& a, const TraceExpr& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }
    friend bool operator!=(const TraceExpr& a, const TraceExpr& b) { return !(a == b); }

private:
    int n_;
    Terms t_;
};

/// Graded cyclic trace with star-pair reorientation; unique
/// representative per orbit, sign conflicts collapse to zero.
TraceExpr trace(const MatrixForm& a);

/// Canonicalize a raw traced word (exposed for the normal-form tests).
TraceExpr trace_term(int dim, const std::vector<MAtom>& atoms, const std::vector<char>& mask,
                     int dcount, const CRat& coeff);

/// Yang-Mills scenario data: L = -1/2 Tr(F ^ *F), theta = -Tr(dA ^ *F),
/// both stored pre-trace.
struct MatrixSystem {
    int dim = 0;
    std::vector<std::string> coords;
    MatrixForm L{0};
    MatrixForm theta{0};
    MatrixForm total() const { return L + theta; }
};

MatrixSystem ym_system(int dim);
TraceExpr ym_euler_lagrange(int dim);
TraceExpr ym_momentum_map(int dim);

} // namespace varcomplex
