#pragma once
#include "jetgeom/complexgeom.hpp"
#include "jetgeom/tensor.hpp"

#include <functional>
#include <optional>

namespace jetgeom {

// First-order multidifferential operator on a chart-trivialized line bundle,
// represented by the pair (Lambda, E) through the fixed sign convention
//
//   D(f_1, ..., f_k) = Lambda(df_1, ..., df_k)
//                    + sum_i (-1)^{i-1} f_i E(df_1, ..., ^df_i, ..., df_k).
//
// With this choice the identity derivation is (0, 1) and the E-leg produced
// by contact_to_jacobi is the Reeb field itself. Degree-1 instances are
// derivations (X, f): g -> X(g) + f g.
struct MultiDerivation {
    ChartPtr chart;
    int degree = 1;
    Multivector lambda;  // degree k
    Multivector e;       // degree k-1

    static MultiDerivation make(Multivector lambda, Multivector e);
    static MultiDerivation zero(ChartPtr ch, int k);
    // The identity derivation: f -> f.
    static MultiDerivation one(ChartPtr ch);
    // Derivation (X, f): g -> X(g) + f g.
    static MultiDerivation derivation(Multivector x, ScalarExpr f);

    Multivector symbol() const { return lambda; }  // for degree 1: the vector part
    ScalarExpr scalar_part() const { return e.to_scalar(); }  // degree 1 only

    ScalarExpr apply(const std::vector<ScalarExpr>& args) const;

    bool is_zero() const { return lambda.is_zero() && e.is_zero(); }
    bool equals(const MultiDerivation& o) const;
    MultiDerivation operator-() const { return {chart, degree, -lambda, -e}; }
    friend MultiDerivation operator+(const MultiDerivation& a, const MultiDerivation& b);
    friend MultiDerivation operator-(const MultiDerivation& a, const MultiDerivation& b);
    friend MultiDerivation operator*(const ScalarExpr& f, const MultiDerivation& a);
    MultiDerivation conj() const { return {chart, degree, lambda.conj(), e.conj()}; }
    std::string str() const;
};

using Evaluator = std::function<ScalarExpr(const std::vector<ScalarExpr>&)>;

// Recover the (Lambda, E) pair of a first-order k-ary multiderivation from
// its values on coordinate test functions; the result is validated by a
// roundtrip against the evaluator (including first-order probes on products)
// and a StructureError is thrown when the evaluator is not a skew first-order
// multiderivation.
MultiDerivation extract_pair(const ChartPtr& ch, int k, const Evaluator& D);

// Schouten-Jacobi bracket [D1, D2] = (-1)^{k1 k2} D1 o D2 - D2 o D1 with the
// composition expanded over unshuffles; degrees (k1+1, k2+1) -> k1+k2+1.
MultiDerivation schouten_jacobi(const MultiDerivation& d1, const MultiDerivation& d2);

// [J, J] = 0 for a bi-derivation J.
bool is_jacobi(const MultiDerivation& j);

// Section of the first jet bundle of the trivialized line bundle,
// identified with a pair (1-form, function); j1(f) = (df, f).
struct JetSection {
    DiffForm alpha;
    ScalarExpr u;

    static JetSection zero(const ChartPtr& ch);
    static JetSection j1(const ScalarExpr& f);
    JetSection operator+(const JetSection& o) const { return {alpha + o.alpha, u + o.u}; }
    JetSection operator-(const JetSection& o) const { return {alpha - o.alpha, u - o.u}; }
    JetSection operator-() const { return {-alpha, -u}; }
    friend JetSection operator*(const ScalarExpr& f, const JetSection& s) {
        return {f * s.alpha, f * s.u};
    }
    bool is_zero() const { return alpha.is_zero() && u.is_zero(); }
    bool equals(const JetSection& o) const { return (*this - o).is_zero(); }
    std::string str() const;
};

// Duality <(alpha, u), (X, f)> = alpha(X) + u f between jets and derivations.
ScalarExpr jet_pairing(const JetSection& th, const MultiDerivation& delta);

// The bi-derivation J evaluated on jets: Phi_J(th1, th2); on prolongations
// Phi_J(j1 u, j1 v) = J(u, v).
ScalarExpr jet_eval(const MultiDerivation& j, const JetSection& t1, const JetSection& t2);

// J#(th): the derivation with <J# th1, th2> = Phi_J(th1, th2).
MultiDerivation j_sharp(const MultiDerivation& j, const JetSection& th);

// Lie derivative of a jet section along a derivation, characterized by
// L_Delta j1(f) = j1(Delta f) and symbol agreement.
JetSection lie_jet(const MultiDerivation& delta, const JetSection& th);

// [th1, th2]_J = L_{J# th1} th2 - L_{J# th2} th1 - j1(Phi_J(th1, th2)).
JetSection jet_bracket(const MultiDerivation& j, const JetSection& t1, const JetSection& t2);

// Endomorphism of the gauge algebroid DL = TM (+) R in block form:
// (X, f) -> (N X + f Y, gamma(X) + g f).
struct EndoDL {
    Tensor11 n;
    Multivector y;   // degree 1
    DiffForm gamma;  // degree 1
    ScalarExpr g;

    static EndoDL make(Tensor11 n, Multivector y, DiffForm gamma, ScalarExpr g);
    static EndoDL identity(const ChartPtr& ch);

    MultiDerivation apply(const MultiDerivation& delta) const;  // degree-1 argument
    // Adjoint action on jets: (alpha, u) -> (N^t alpha + u gamma, alpha(Y) + g u).
    JetSection adjoint(const JetSection& th) const;

    EndoDL operator-() const { return {-n, -y, -gamma, -g}; }
    friend EndoDL operator+(const EndoDL& a, const EndoDL& b);
    friend EndoDL operator-(const EndoDL& a, const EndoDL& b);
    friend EndoDL operator*(const ScalarExpr& f, const EndoDL& a);
    EndoDL compose(const EndoDL& o) const;  // this after o
    bool is_zero() const;
    bool equals(const EndoDL& o) const { return (*this - o).is_zero(); }
    EndoDL conj() const { return {n.conj(), y.conj(), gamma.conj(), g.conj()}; }
};

// Commutator of derivations: [(X, f), (Y, g)] = ([X, Y], X(g) - Y(f)).
MultiDerivation dl_bracket(const MultiDerivation& a, const MultiDerivation& b);

// Nijenhuis torsion of an EndoDL w.r.t. dl_bracket, evaluated on the frame
// {(d_i, 0)} and the identity derivation (0, 1); tensorial, so frame values
// decide vanishing.
Report endo_torsion_vanishes(const EndoDL& phi);

// Validation verdict for a Jacobi-Nijenhuis candidate (J, phi).
struct JNResult {
    Report report;
    // Deformed bi-derivation J_phi = J(phi -, -); absent when the sharp
    // compatibility J# phi^dag = phi J# fails (J_phi is then ill defined).
    std::optional<MultiDerivation> j_phi;
    bool ok() const { return report.ok; }
};

// Checks: J Jacobi; (a) J# phi^dag = phi J# on jet generators; (b) the
// bracket deformation identity phi^dag[r,s]_J = [phi^dag r, s]_J +
// [r, phi^dag s]_J - [r, s]_{J_phi} on a generating set; (c) vanishing
// torsion of phi.
JNResult is_jacobi_nijenhuis(const MultiDerivation& j, const EndoDL& phi);

// True iff J, J' and J + J' are all Jacobi.
bool bi_hamiltonian_check(const MultiDerivation& j1, const MultiDerivation& j2);

// Complex structure on the gauge algebroid induced by an integrable complex
// structure j and a (0,1)-connection form A on the trivialized line bundle:
// blocks (N = j, Y = 0, gamma = A o j - i A, g = i). The report verifies
// square -1, vanishing torsion (this is where connection curvature shows up),
// symbol intertwining with j, and fiberwise multiplication by i.
std::pair<EndoDL, Report> gauge_complex_structure(const ComplexChart& cc, const DiffForm& a01);

// Contact geometry: for a contact form theta on an odd chart, the canonical
// Jacobi bi-derivation (Lambda, E): E is the Reeb field, Lambda inverts
// d(theta) on ker(theta); built from the bracket {f, g} = theta([X_f, X_g])
// of contact Hamiltonian vector fields. Throws on degenerate theta.
MultiDerivation contact_to_jacobi(const DiffForm& theta);

// Solve M x = rhs by fraction-field Gaussian elimination; false if singular.
bool solve_linear(std::vector<std::vector<ScalarExpr>> m, std::vector<ScalarExpr> rhs,
                  std::vector<ScalarExpr>& out);

} // namespace jetgeom
