#pragma once
#include "jetgeom/tensor.hpp"

namespace jetgeom {

// Even-dimensional chart with an integrable complex structure j and a
// declared holomorphic frame: coordinate pairs (x_a, y_a) with z_a = x_a + i y_a.
// Validity (j^2 = -1, N_j = 0, j dx_a = dy_a on the declared pairs) is
// enforced on construction.
class ComplexChart {
public:
    ChartPtr chart;
    Tensor11 j;
    std::vector<std::pair<int, int>> pairs;

    static ComplexChart make(ChartPtr chart, Tensor11 j,
                             std::vector<std::pair<int, int>> pairs);
    // Consecutive coordinate pairs with the block-standard j.
    static ComplexChart standard(ChartPtr chart);
    // The block-standard j for consecutive pairs, as a bare tensor.
    static Tensor11 standard_j(const ChartPtr& chart);

    int ncomplex() const { return (int)pairs.size(); }
    ScalarExpr z(int a) const;        // x_a + i y_a
    DiffForm dz(int a) const;         // dx_a + i dy_a
    Multivector d_dz(int a) const;    // (d/dx_a - i d/dy_a)/2
    // Cauchy-Riemann operator: 2 d/dzbar_a f = df/dx_a + i df/dy_a.
    ScalarExpr cr(const ScalarExpr& f, int a) const;
};

// j^2 = -1 and vanishing Nijenhuis torsion (reports the failures).
Report is_complex_structure(const Tensor11& j);

// Projection of a complexified k-vector onto type (p, q) via the
// eigenprojectors (1 -+ i j)/2 applied slotwise.
Multivector type_project(const Multivector& T, const Tensor11& j, int p, int q);

// Pure type (k,0) plus Cauchy-Riemann equations for every component in the
// declared holomorphic frame.
Report is_holomorphic(const Multivector& T, const ComplexChart& cc);

// Verdicts of a three-condition equivalence theorem, evaluated independently.
struct ThreeWay {
    bool structural_ok = true;  // false: inputs invalid, nothing evaluable
    bool v1 = false, v2 = false, v3 = false;
    bool aux_ok = true;  // side identities implied by v1 (consistency guard)
    std::vector<std::string> notes;

    bool agree() const { return !structural_ok || (v1 == v2 && v2 == v3 && aux_ok); }
    bool all_true() const { return structural_ok && v1 && v2 && v3; }
};

// Holomorphic-Poisson <-> Poisson-Nijenhuis <-> generalized-complex, with
// Pi := pi_j + i pi. Verdicts are computed independently and must agree.
ThreeWay check_hP_equivalences(const Multivector& pi, const Tensor11& j,
                               const std::vector<std::pair<int, int>>& pairs);

// Homogeneous variant: adds the homogeneity vector field eta, with
// H = (eta - i j eta)/2; when condition 1 holds the side identities
// L_{j eta} pi_j = pi and L_{j eta} pi = -pi_j are also verified (aux_ok).
ThreeWay check_homogeneous_equivalences(const Multivector& pi, const Tensor11& j,
                                        const Multivector& eta,
                                        const std::vector<std::pair<int, int>>& pairs);

} // namespace jetgeom
