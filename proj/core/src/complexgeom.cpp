#include "jetgeom/complexgeom.hpp"
#include "jetgeom/error.hpp"
#include "jetgeom/genstruct.hpp"

namespace jetgeom {

Tensor11 ComplexChart::standard_j(const ChartPtr& chart) {
    if (chart->dim() % 2) throw StructureError("complex chart needs even dimension");
    Tensor11 j = Tensor11::zero(chart);
    for (std::size_t a = 0; a + 1 < chart->dim(); a += 2) {
        j.m[a + 1][a] = ScalarExpr::one(chart);
        j.m[a][a + 1] = -ScalarExpr::one(chart);
    }
    return j;
}

ComplexChart ComplexChart::standard(ChartPtr chart) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a + 1 < chart->dim(); a += 2)
        pairs.emplace_back((int)a, (int)a + 1);
    Tensor11 j = standard_j(chart);
    return make(std::move(chart), std::move(j), std::move(pairs));
}

ComplexChart ComplexChart::make(ChartPtr chart, Tensor11 j,
                                std::vector<std::pair<int, int>> pairs) {
    if (chart->dim() % 2 || pairs.size() * 2 != chart->dim())
        throw StructureError("holomorphic frame must pair up all coordinates");
    std::vector<bool> used(chart->dim(), false);
    for (auto [x, y] : pairs) {
        if (x < 0 || y < 0 || x >= (int)chart->dim() || y >= (int)chart->dim() || used[x] || used[y] || x == y)
            throw StructureError("malformed holomorphic frame pairing");
        used[x] = used[y] = true;
        if (chart->is_angle(x) || chart->is_angle(y))
            throw StructureError("angle coordinates cannot enter a holomorphic frame");
    }
    Report rep = is_complex_structure(j);
    if (!rep.ok) throw StructureError("not a complex structure: " + rep.notes.front());
    for (auto [x, y] : pairs) {
        Multivector jx = j.apply(unit_vector(chart, x));
        if (!jx.equals(unit_vector(chart, y)))
            throw StructureError("j does not map d/d" + chart->coords()[x] + " to d/d" +
                                 chart->coords()[y] + "; declared frame is not holomorphic");
    }
    ComplexChart cc;
    cc.chart = std::move(chart);
    cc.j = std::move(j);
    cc.pairs = std::move(pairs);
    return cc;
}

ScalarExpr ComplexChart::z(int a) const {
    return ScalarExpr::coordinate(chart, chart->coords()[pairs[a].first]) +
           ScalarExpr::constant(chart, CNum::i()) *
               ScalarExpr::coordinate(chart, chart->coords()[pairs[a].second]);
}

DiffForm ComplexChart::dz(int a) const {
    DiffForm f(chart, 1);
    f.add({pairs[a].first}, ScalarExpr::one(chart));
    f.add({pairs[a].second}, ScalarExpr::constant(chart, CNum::i()));
    return f;
}

Multivector ComplexChart::d_dz(int a) const {
    Multivector v(chart, 1);
    ScalarExpr half = ScalarExpr::constant(chart, CNum(mpq_class(1, 2)));
    v.add({pairs[a].first}, half);
    v.add({pairs[a].second}, -(half * ScalarExpr::constant(chart, CNum::i())));
    return v;
}

ScalarExpr ComplexChart::cr(const ScalarExpr& f, int a) const {
    return f.diff(pairs[a].first) +
           ScalarExpr::constant(chart, CNum::i()) * f.diff(pairs[a].second);
}

Report is_complex_structure(const Tensor11& j) {
    Report rep;
    if (j.chart->dim() % 2) {
        rep.fail("odd-dimensional chart");
        return rep;
    }
    Tensor11 sq = j.compose(j) + Tensor11::identity(j.chart);
    if (!sq.is_zero()) rep.fail("j^2 != -1");
    auto n = nijenhuis_torsion(j);
    if (!torsion_is_zero(n)) rep.fail("Nijenhuis torsion nonzero: " + torsion_str(n, *j.chart));
    return rep;
}

Multivector type_project(const Multivector& T, const Tensor11& j, int p, int q) {
    require_same_chart(T.chart, j.chart);
    if (p < 0 || q < 0 || p + q != T.degree)
        throw StructureError("invalid type indices for projection");
    ScalarExpr half = ScalarExpr::constant(T.chart, CNum(mpq_class(1, 2)));
    ScalarExpr imag = ScalarExpr::constant(T.chart, CNum::i());
    int k = T.degree;
    Multivector out(T.chart, k);
    for (const auto& [I, c] : T.comps) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            if (__builtin_popcount(mask) != p) continue;
            Multivector w = Multivector::from_scalar(c);
            for (int l = 0; l < k; ++l) {
                Multivector base = unit_vector(T.chart, I[l]);
                Multivector jb = j.apply(base);
                // (1,0): (X - i jX)/2 ; (0,1): (X + i jX)/2
                Multivector proj = (mask >> l) & 1 ? half * (base - imag * jb)
                                                   : half * (base + imag * jb);
                w = wedge(w, proj);
            }
            out = out + w;
        }
    }
    return out;
}

Report is_holomorphic(const Multivector& T, const ComplexChart& cc) {
    Report rep;
    int k = T.degree;
    Multivector proj = type_project(T, cc.j, k, 0);
    if (!T.equals(proj))
        rep.fail("not of pure type (" + std::to_string(k) + ",0); defect " + (T - proj).str());
    // Cauchy-Riemann equations on holomorphic-frame components.
    int n = cc.ncomplex();
    std::vector<int> sel(k, 0);
    // iterate strictly increasing k-tuples over the n complex directions
    std::vector<int> idx;
    for (int a = 0; a < k; ++a) idx.push_back(a);
    if (k > n) return rep;  // no components to check
    for (;;) {
        std::vector<DiffForm> forms;
        for (int a : idx) forms.push_back(cc.dz(a));
        ScalarExpr comp = eval(T, forms);
        for (int b = 0; b < n; ++b) {
            ScalarExpr bad = cc.cr(comp, b);
            if (!bad.is_zero()) {
                std::string where;
                for (int a : idx) where += (where.empty() ? "" : ",") + std::to_string(a + 1);
                rep.fail("Cauchy-Riemann fails for component (" + where + ") in direction " +
                         std::to_string(b + 1) + ": " + bad.str());
            }
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int a = pos + 1; a < k; ++a) idx[a] = idx[a - 1] + 1;
    }
    return rep;
}

namespace {

struct Inputs {
    bool ok = false;
    ComplexChart cc;
    Multivector pij;  // pi_j, well-defined only when ok
};

Inputs validate_inputs(const Multivector& pi, const Tensor11& j,
                       const std::vector<std::pair<int, int>>& pairs, ThreeWay& out) {
    Inputs in;
    if (pi.degree != 2) {
        out.structural_ok = false;
        out.notes.push_back("pi must be a bivector");
        return in;
    }
    try {
        in.cc = ComplexChart::make(pi.chart, j, pairs);
    } catch (const StructureError& e) {
        out.structural_ok = false;
        out.notes.push_back(std::string("invalid complex structure: ") + e.what());
        return in;
    }
    try {
        in.pij = pi_phi(pi, j);
    } catch (const StructureError& e) {
        out.structural_ok = false;
        out.notes.push_back(std::string("pi_j undefined: ") + e.what());
        return in;
    }
    in.ok = true;
    return in;
}

} // namespace

ThreeWay check_hP_equivalences(const Multivector& pi, const Tensor11& j,
                               const std::vector<std::pair<int, int>>& pairs) {
    ThreeWay out;
    Inputs in = validate_inputs(pi, j, pairs, out);
    if (!in.ok) return out;
    ScalarExpr imag = ScalarExpr::constant(pi.chart, CNum::i());

    // (1) Pi = pi_j + i pi holomorphic Poisson
    Multivector Pi = in.pij + imag * pi;
    Report holo = is_holomorphic(Pi, in.cc);
    bool poisson_Pi = schouten_nijenhuis(Pi, Pi).is_zero();
    out.v1 = holo.ok && poisson_Pi;
    if (!holo.ok) out.notes.push_back("(1) " + holo.notes.front());
    if (!poisson_Pi) out.notes.push_back("(1) [Pi,Pi] != 0");

    // (2) (pi, j) Poisson-Nijenhuis
    bool poisson_pi = schouten_nijenhuis(pi, pi).is_zero();
    Report compat = pn_compatible(pi, j);
    out.v2 = poisson_pi && compat.ok;
    if (!poisson_pi) out.notes.push_back("(2) pi is not Poisson");
    if (!compat.ok) out.notes.push_back("(2) " + compat.notes.front());

    // (3) block map (j, pi#; 0, -j*) generalized complex
    Report gc = is_generalized_complex(GenBlockTangent::make(j, pi));
    out.v3 = gc.ok;
    if (!gc.ok) out.notes.push_back("(3) " + gc.notes.front());
    return out;
}

ThreeWay check_homogeneous_equivalences(const Multivector& pi, const Tensor11& j,
                                        const Multivector& eta,
                                        const std::vector<std::pair<int, int>>& pairs) {
    ThreeWay out = check_hP_equivalences(pi, j, pairs);
    if (!out.structural_ok) return out;
    if (eta.degree != 1) {
        out.structural_ok = false;
        out.notes.push_back("eta must be a vector field");
        return out;
    }
    ScalarExpr imag = ScalarExpr::constant(pi.chart, CNum::i());
    ScalarExpr half = ScalarExpr::constant(pi.chart, CNum(mpq_class(1, 2)));
    ComplexChart cc = ComplexChart::make(pi.chart, j, pairs);
    Multivector pij = pi_phi(pi, j);
    Multivector Pi = pij + imag * pi;
    Multivector jeta = j.apply(eta);
    Multivector H = half * (eta - imag * jeta);

    // (1) homogeneous holomorphic Poisson
    bool h_holo = is_holomorphic(H, cc).ok;
    bool h_hom = (schouten_nijenhuis(H, Pi) + Pi).is_zero();
    bool v1h = out.v1 && h_holo && h_hom;
    if (!h_holo) out.notes.push_back("(1) H is not holomorphic");
    if (!h_hom) out.notes.push_back("(1) L_H Pi != -Pi");

    // (2) homogeneous Poisson-Nijenhuis
    bool e_pi = (lie(eta, pi) + pi).is_zero();
    bool e_j = lie(eta, j).is_zero();
    bool v2h = out.v2 && e_pi && e_j;
    if (!e_pi) out.notes.push_back("(2) L_eta pi != -pi");
    if (!e_j) out.notes.push_back("(2) L_eta j != 0");

    // (3) homogeneous generalized complex
    Report hgc = is_homogeneous_gc(GenBlockTangent::make(j, pi), eta);
    bool v3h = out.v3 && hgc.ok;
    if (!hgc.ok) out.notes.push_back("(3) " + hgc.notes.front());

    out.v1 = v1h;
    out.v2 = v2h;
    out.v3 = v3h;

    if (v1h) {
        // side identities implied by homogeneity: L_{j eta} pi_j = pi, L_{j eta} pi = -pi_j
        bool id1 = (lie(jeta, pij) - pi).is_zero();
        bool id2 = (lie(jeta, pi) + pij).is_zero();
        if (!id1 || !id2) {
            out.aux_ok = false;
            out.notes.push_back("side identities L_{j eta} failed (internal inconsistency)");
        }
    }
    return out;
}

} // namespace jetgeom
