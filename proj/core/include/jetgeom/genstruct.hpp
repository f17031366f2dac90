#pragma once
#include "jetgeom/jacobi.hpp"
#include "jetgeom/tensor.hpp"

namespace jetgeom {

// ------------------------------------------------------------------ TM + T*M

// Section of the generalized tangent bundle TM (+) T*M.
struct TangentSection {
    Multivector xi;  // degree 1
    DiffForm rho;    // degree 1

    static TangentSection zero(const ChartPtr& ch) {
        return {Multivector::zero(ch, 1), DiffForm::zero(ch, 1)};
    }
    TangentSection operator+(const TangentSection& o) const { return {xi + o.xi, rho + o.rho}; }
    TangentSection operator-(const TangentSection& o) const { return {xi - o.xi, rho - o.rho}; }
    TangentSection operator-() const { return {-xi, -rho}; }
    friend TangentSection operator*(const ScalarExpr& f, const TangentSection& s) {
        return {f * s.xi, f * s.rho};
    }
    bool is_zero() const { return xi.is_zero() && rho.is_zero(); }
    std::string str() const { return "(" + xi.str() + " | " + rho.str() + ")"; }
};

// <<(xi,rho),(zeta,sigma)>> = sigma(xi) + rho(zeta).
ScalarExpr tangent_pairing(const TangentSection& a, const TangentSection& b);

// Dorfman bracket ([xi,zeta], L_xi sigma - L_zeta rho + d(rho(zeta))).
TangentSection dorfman(const TangentSection& a, const TangentSection& b);

// Block endomorphism of TM (+) T*M: (xi,rho) -> (phi xi + pi# rho, omega_b xi - phi* rho).
struct GenBlockTangent {
    Tensor11 phi;
    Multivector pi;   // degree 2
    DiffForm omega;   // degree 2

    static GenBlockTangent make(Tensor11 phi, Multivector pi, DiffForm omega);
    static GenBlockTangent make(Tensor11 phi, Multivector pi);  // omega = 0
    TangentSection apply(const TangentSection& s) const;
};

// Almost complex (J^2 = -1 on the frame), pairing-skew, and Dorfman-integrable
// (vanishing Nijenhuis defect on the coordinate generating set).
Report is_generalized_complex(const GenBlockTangent& J);

// Homogeneity: L_eta pi = -pi, L_eta phi = 0, L_eta omega = omega.
Report is_homogeneous_gc(const GenBlockTangent& J, const Multivector& eta);

// --------------------------------------------------------------- DL + J^1 L

// Section of the omni-Lie algebroid DL (+) J^1 L.
struct OmniSection {
    MultiDerivation delta;  // degree 1
    JetSection theta;

    static OmniSection zero(const ChartPtr& ch) {
        return {MultiDerivation::zero(ch, 1), JetSection::zero(ch)};
    }
    OmniSection operator+(const OmniSection& o) const {
        return {delta + o.delta, theta + o.theta};
    }
    OmniSection operator-(const OmniSection& o) const {
        return {delta - o.delta, theta - o.theta};
    }
    OmniSection operator-() const { return {-delta, -theta}; }
    friend OmniSection operator*(const ScalarExpr& f, const OmniSection& s) {
        return {f * s.delta, f * s.theta};
    }
    bool is_zero() const { return delta.is_zero() && theta.is_zero(); }
    std::string str() const { return "(" + delta.str() + " | " + theta.str() + ")"; }
};

// <<(Delta, rho), (Nabla, sigma)>> = <sigma, Delta> + <rho, Nabla>.
ScalarExpr omni_pairing(const OmniSection& a, const OmniSection& b);

// Dorfman-Jacobi bracket ([Delta, Nabla], L_Delta sigma - L_Nabla rho + j1<rho, Nabla>).
OmniSection dorfman_jacobi(const OmniSection& a, const OmniSection& b);

// Block endomorphism of DL (+) J^1 L: (Delta, theta) -> (phi Delta + J# theta,
// omega_b Delta - phi^dag theta). The skew form on DL is stored as a table on
// the frame {d_i, 1}: omega((X,f),(Y,g)) = omega2(X,Y) + f b(Y) - g b(X).
struct GenBlockContact {
    EndoDL phi;
    MultiDerivation j;  // degree 2
    DiffForm omega2;    // degree 2
    DiffForm b;         // degree 1

    static GenBlockContact make(EndoDL phi, MultiDerivation j, DiffForm omega2, DiffForm b);
    static GenBlockContact make(EndoDL phi, MultiDerivation j);  // omega = 0
    // omega_b as a map DL -> J^1 L.
    JetSection omega_flat(const MultiDerivation& delta) const;
    OmniSection apply(const OmniSection& s) const;
};

// Almost complex, pairing-skew, and Dorfman-Jacobi-integrable on the
// generating set {(d_i, 0), (1, 0), (0, j1 x^i), (0, j1 1)}.
Report is_generalized_contact(const GenBlockContact& I);

} // namespace jetgeom
