#pragma once
#include "jetgeom/complexgeom.hpp"
#include "jetgeom/jacobi.hpp"

#include <utility>
#include <vector>

namespace jetgeom {

// A Lie algebroid presented on an explicit frame e_1 .. e_r over a chart:
// anchor columns rho(e_a) and structure functions [e_a, e_b] = c[a][b][k] e_k.
// The bracket of arbitrary sections (coefficient vectors) is defined by the
// Leibniz extension, so the axioms reduce to frame identities.
struct AlgebroidData {
    ChartPtr chart;
    int rank = 0;
    std::vector<Multivector> anchor;                      // rank columns, degree 1
    std::vector<std::vector<std::vector<ScalarExpr>>> c;  // c[a][b][k], skew in a,b

    static AlgebroidData make(ChartPtr chart, std::vector<Multivector> anchor,
                              std::vector<std::vector<std::vector<ScalarExpr>>> c);

    // Anchor of a section given by frame coefficients.
    Multivector anchor_of(const std::vector<ScalarExpr>& u) const;
    // Leibniz-extended bracket of sections given by frame coefficients.
    std::vector<ScalarExpr> bracket(const std::vector<ScalarExpr>& u,
                                    const std::vector<ScalarExpr>& v) const;
    bool equals(const AlgebroidData& o) const;
};

// Verifies the anchor-morphism property rho[e_a, e_b] = [rho e_a, rho e_b],
// the Jacobi identity on frame triples, and one function-weighted Jacobi
// probe (sufficient by the Leibniz extension).
Report check_axioms(const AlgebroidData& a);

// Frame d_i, identity anchor, zero structure functions.
AlgebroidData tangent_algebroid(const ChartPtr& ch);

// Frame dx^i, anchor pi#, bracket [r, s]_pi = L_{pi# r} s - L_{pi# s} r
// - d pi(r, s). A Lie algebroid iff pi is Poisson.
AlgebroidData cotangent_algebroid(const Multivector& pi);

// Frame {j1(1), (dx^i, 0)} (in this order), anchor = symbol of J#, bracket
// [r, s]_J = L_{J# r} s - L_{J# s} r - j1 Phi_J(r, s). A Lie algebroid iff
// J is Jacobi.
AlgebroidData jet_algebroid(const MultiDerivation& j);

// Deformation by a frame endomorphism phi(e_a) = phi[k][a] e_k: anchor
// rho o phi and bracket [u, v]_phi = [phi u, v] + [u, phi v] - phi [u, v].
// A Lie algebroid whenever the input is one and phi is torsionless.
AlgebroidData deform_algebroid(const AlgebroidData& a,
                               const std::vector<std::vector<ScalarExpr>>& phi);

// Real and imaginary Lie algebroids of the cotangent algebroid of a
// holomorphic Poisson bivector Pi = pi_j + i pi: the real one is built on the
// real covector frame from the anchor 2 Re(Pi#(w - i j* w)) and the Koszul
// bracket of that anchor; the imaginary one deforms it by the fiber complex
// structure (sign fixed so that its anchor is +4 pi#). Both are verified to
// coincide with the cotangent algebroids of 4 pi_j and 4 pi respectively.
// Throws when (Pi, j) fails holomorphic-Poisson validation.
std::pair<AlgebroidData, AlgebroidData> holomorphic_cotangent_real_imaginary(
    const Multivector& pi_c, const ComplexChart& cc);

// Flat connection of a holomorphic Jacobi bi-derivation: for J# theta =
// (X, f), the derivation nabla_theta = (X + conj X, f); its symbol is the
// jet-algebroid anchor 2 Re sigma(J# theta) and it acts as J# theta on
// holomorphic sections. Throws when (J, j) fails holomorphic-Jacobi
// validation.
MultiDerivation jacobi_flat_connection(const MultiDerivation& j, const ComplexChart& cc,
                                       const JetSection& theta);

} // namespace jetgeom
