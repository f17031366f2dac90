#pragma once
#include "jetgeom/complexgeom.hpp"
#include "jetgeom/genstruct.hpp"
#include "jetgeom/jacobi.hpp"

#include <string>
#include <vector>

namespace jetgeom {

// A bivector together with a homogeneity vector field: L_eta pi = -pi,
// verified on construction. The chart carries designated fiber coordinates
// (one coordinate s for a real cone, a polar pair (rho, psi) for a complex
// one; empty when the whole chart is the cone, as for linear structures).
// For complex cones pi/eta may carry complex coefficients (eta is then the
// holomorphic homogeneity field).
struct HomogeneousPoisson {
    ChartPtr chart;
    std::vector<std::string> fiber;
    Multivector pi;   // degree 2
    Multivector eta;  // degree 1

    static HomogeneousPoisson make(ChartPtr chart, std::vector<std::string> fiber,
                                   Multivector pi, Multivector eta);
    bool poisson() const;  // [pi, pi] = 0
};

// Extend the chart of J = (Lambda, E) by a fiber coordinate s and return the
// homogeneous bivector pi with pi(d(s f), d(s g)) = s J(f, g) for base
// functions f, g (the defining identity is re-verified symbolically on
// coordinate generators) and eta = s d/ds.
HomogeneousPoisson poissonize(const MultiDerivation& j, const std::string& fiber = "s");

struct RestrictionResult {
    MultiDerivation j;  // bi-derivation on the chart without the fiber coordinate
    bool jacobi;        // is_jacobi(j); equals the Poisson property of the input
};

// Inverse of poissonize: J(f, g) = s^{-1} pi_n(d(s f), d(s g)). Requires
// L_{s d/ds} pi_n = -pi_n; throws when the input is not homogeneous or the
// restriction fails to be fiber-independent.
RestrictionResult restrict_homogeneous(const Multivector& pi_n, const std::string& fiber);

// Lift of an endomorphism of the derivation algebra to the cone: the unique
// (1,1)-tensor phi_n with L_{s d/ds} phi_n = 0 and phi_n(lift Delta) =
// lift(phi Delta), where lift(X, f) = X + f s d/ds.
Tensor11 poissonize_endo(const EndoDL& phi, const std::string& fiber = "s");

// Inverse of poissonize_endo; throws when phi_n is not the lift of an
// endomorphism of derivations (non-invariant or fiber-mixing blocks).
EndoDL restrict_endo(const Tensor11& phi_n, const std::string& fiber);

// Deformation of a bi-derivation by an endomorphism:
// J_phi(u, v) = Phi_J(phi^dag j1 u, j1 v).
MultiDerivation deform(const MultiDerivation& j, const EndoDL& phi);

// Complex cone over a complex bi-derivation J = (Lambda, E) of type
// (2,0)/(1,0): the chart is extended by polar fiber coordinates (rho, psi)
// for w = rho e^{i psi}, and Pi = w^{-1} Lambda + d/dw ^ E satisfies the
// defining identity Pi(d(w f), d(w g)) = w J(f, g) on holomorphic base
// functions (re-verified). H = w d/dw is the holomorphic homogeneity field,
// eta = rho d/drho the real one, and jext the complex structure of the cone.
struct ComplexCone {
    ChartPtr chart;          // base + (rho, psi), psi an angle coordinate
    std::string rho, psi;
    ScalarExpr w, winv;      // rho e^{i psi} and its inverse
    Multivector pi;          // Pi, degree 2
    Multivector h;           // H = (rho d/drho - i d/dpsi)/2
    Multivector eta;         // rho d/drho
    Tensor11 jext;           // base j extended by the fiber rotation
};

// The raw cone construction; requires type (2,0)/(1,0) components only.
ComplexCone complex_cone(const MultiDerivation& j, const ComplexChart& cc,
                         const std::string& rho = "rho", const std::string& psi = "psi");

// The cone packaged as a homogeneous Poisson datum with eta = H; additionally
// verifies holomorphy of Pi (pure type for the extended complex structure and
// Cauchy-Riemann equations along the antiholomorphic frame) and throws on
// type or CR failure of J.
HomogeneousPoisson holomorphic_poissonize(const MultiDerivation& j, const ComplexChart& cc,
                                          const std::string& rho = "rho",
                                          const std::string& psi = "psi");

// Restriction of the complex cone along its radial fibration: on the circle
// extension of the base chart (psi an angle coordinate), the bi-derivations
// jhat, jhat_prime obtained from Im Pi and Re Pi, and the endomorphism jhat_dl
// of the derivation algebra obtained from the cone complex structure.
struct CircleBundleStructures {
    ChartPtr chart;  // base + psi
    MultiDerivation jhat;        // from pi = Im Pi
    MultiDerivation jhat_prime;  // from pi' = Re Pi
    EndoDL jhat_dl;              // from jext
};

CircleBundleStructures circle_bundle_structures(const MultiDerivation& j,
                                                const ComplexChart& cc,
                                                const std::string& psi = "psi");

// Three equivalent conditions for a complex bi-derivation J of type
// (2,0)/(1,0):
//   v1: J is holomorphic (CR equations) and Jacobi,
//   v2: (jhat, jhat_dl) is Jacobi-Nijenhuis and jhat_prime = deform(jhat, jhat_dl),
//   v3: the block map (jhat_dl, jhat#; 0, -jhat_dl^dag) is generalized contact
//       and jhat_prime = deform(jhat, jhat_dl).
// When v1 holds, the bracket identities
//   [jhat_dl(1), deform(jhat, jhat_dl)]^SJ = jhat and
//   [jhat_dl(1), jhat]^SJ = -deform(jhat, jhat_dl)
// are verified as aux_ok.
ThreeWay check_holomorphic_jacobi_equivalences(const MultiDerivation& j,
                                               const ComplexChart& cc);

// Linear (Lie-Poisson) homogeneous holomorphic structure on the dual of a
// complex Lie algebra with structure constants c[i][j][k] (coefficient of the
// k-th basis vector in [e_i, e_j]): Pi = 1/2 c^k_{ij} z_k dz_i* ^ dz_j* and
// H the Euler field, on the standard chart (x1, y1, ..., xn, yn).
// Antisymmetry and the Jacobi identity of c are validated (throws otherwise);
// holomorphy and the Poisson property are re-verified.
struct LiePoisson {
    ComplexChart cc;
    HomogeneousPoisson hp;
};
LiePoisson lie_poisson(const std::vector<std::vector<std::vector<mpq_class>>>& c);

// The Darboux-model complex contact structure in dimension 2n+1:
// theta = dt - P_k dz^k with t = r + i s, z^k = x^k + i y^k, P_k = m_k + i q_k.
struct DarbouxExample {
    ComplexChart cc;      // coordinates r, s, x_k, y_k (k=1..n), m_k, q_k
    DiffForm theta;       // dt - P_k dz^k
    MultiDerivation j;    // the contact bi-derivation: E = d/dt,
                          // Lambda = (d/dz_k + P_k d/dt) ^ d/dP_k
    ComplexCone cone;     // the complex cone over j
    DiffForm omega;       // dw ^ theta - w dP_k ^ dz^k on the cone chart
    ChartPtr circle_chart;             // base + psi
    DiffForm theta_r, theta_s;         // dr - m dx + q dy, ds - m dy - q dx
    DiffForm vartheta, vartheta_j;     // cos(psi) theta_r - sin(psi) theta_s, etc.
};
DarbouxExample darboux_example(int n);

} // namespace jetgeom
