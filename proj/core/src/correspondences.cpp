#include "jetgeom/correspondences.hpp"
#include "jetgeom/error.hpp"

namespace jetgeom {

namespace {

// Coordinate test functions spanning first-order behaviour: sin for angles.
ScalarExpr test_fn(const ChartPtr& ch, std::size_t ci) {
    return ch->is_angle(ci) ? ScalarExpr::sin_of(ch, ch->coords()[ci])
                            : ScalarExpr::coordinate(ch, ch->coords()[ci]);
}

// 1, coordinates, and pairwise products: enough to pin down any bilinear
// first-order bi-differential operator.
std::vector<ScalarExpr> bilinear_probes(const ChartPtr& ch) {
    std::vector<ScalarExpr> fs;
    fs.push_back(ScalarExpr::one(ch));
    for (std::size_t a = 0; a < ch->dim(); ++a) fs.push_back(test_fn(ch, a));
    for (std::size_t a = 0; a < ch->dim(); ++a)
        for (std::size_t b = a; b < ch->dim(); ++b)
            fs.push_back(test_fn(ch, a) * test_fn(ch, b));
    return fs;
}

ScalarExpr imag_unit(const ChartPtr& ch) { return ScalarExpr::constant(ch, CNum::i()); }
ScalarExpr half_of(const ChartPtr& ch) {
    return ScalarExpr::constant(ch, CNum(mpq_class(1, 2)));
}

} // namespace

HomogeneousPoisson HomogeneousPoisson::make(ChartPtr chart, std::vector<std::string> fiber,
                                            Multivector pi, Multivector eta) {
    require_same_chart(chart, pi.chart);
    require_same_chart(chart, eta.chart);
    if (pi.degree != 2 || eta.degree != 1)
        throw StructureError("homogeneous Poisson datum needs a bivector and a vector field");
    for (const std::string& f : fiber)
        if (chart->coord_index(f) < 0)
            throw StructureError("fiber coordinate " + f + " absent from the chart");
    if (!(lie(eta, pi) + pi).is_zero())
        throw StructureError("bivector is not homogeneous: L_eta pi != -pi");
    return {std::move(chart), std::move(fiber), std::move(pi), std::move(eta)};
}

bool HomogeneousPoisson::poisson() const { return schouten_nijenhuis(pi, pi).is_zero(); }

HomogeneousPoisson poissonize(const MultiDerivation& j, const std::string& fiber) {
    if (j.degree != 2) throw StructureError("poissonize needs a bi-derivation");
    const ChartPtr& base = j.chart;
    ChartPtr ext = base->extended({fiber});
    int si = ext->coord_index(fiber);
    ScalarExpr s = ScalarExpr::coordinate(ext, fiber);

    Multivector pi = (ScalarExpr::one(ext) / s) * j.lambda.transfer(ext) +
                     wedge(unit_vector(ext, si), j.e.transfer(ext));
    Multivector eta = s * unit_vector(ext, si);

    // Defining identity pi(d(s f), d(s g)) = s J(f, g) on a spanning probe set.
    auto probes = bilinear_probes(base);
    for (std::size_t a = 0; a < probes.size(); ++a)
        for (std::size_t b = a + 1; b < probes.size(); ++b) {
            ScalarExpr lhs = eval(pi, {exterior_derivative_of(s * probes[a].transfer(ext)),
                                       exterior_derivative_of(s * probes[b].transfer(ext))});
            ScalarExpr rhs = s * j.apply({probes[a], probes[b]}).transfer(ext);
            if (!lhs.equals(rhs))
                throw StructureError("cone bivector violates its defining identity");
        }
    return HomogeneousPoisson::make(ext, {fiber}, std::move(pi), std::move(eta));
}

RestrictionResult restrict_homogeneous(const Multivector& pi_n, const std::string& fiber) {
    const ChartPtr& ext = pi_n.chart;
    if (pi_n.degree != 2) throw StructureError("restriction needs a bivector");
    int si = ext->coord_index(fiber);
    if (si < 0) throw StructureError("fiber coordinate " + fiber + " absent from the chart");
    if (ext->is_angle((std::size_t)si))
        throw StructureError("fiber coordinate must not be an angle");
    ScalarExpr s = ScalarExpr::coordinate(ext, fiber);
    Multivector eta = s * unit_vector(ext, si);
    if (!(lie(eta, pi_n) + pi_n).is_zero())
        throw StructureError("bivector is not homogeneous: L_eta pi != -pi");

    ChartPtr base = ext->without(fiber);
    Evaluator d2 = [&](const std::vector<ScalarExpr>& args) {
        ScalarExpr v =
            eval(pi_n, {exterior_derivative_of(s * args[0].transfer(ext)),
                        exterior_derivative_of(s * args[1].transfer(ext))}) /
            s;
        if (!v.independent_of(fiber))
            throw StructureError("restriction depends on the fiber coordinate");
        return v.subst(fiber, CNum(1)).transfer(base);
    };
    MultiDerivation j = extract_pair(base, 2, d2);
    bool jacobi = is_jacobi(j);
    return {std::move(j), jacobi};
}

Tensor11 poissonize_endo(const EndoDL& phi, const std::string& fiber) {
    const ChartPtr& base = phi.n.chart;
    ChartPtr ext = base->extended({fiber});
    std::size_t si = (std::size_t)ext->coord_index(fiber);
    ScalarExpr s = ScalarExpr::coordinate(ext, fiber);

    Tensor11 lift = Tensor11::zero(ext);
    for (std::size_t a = 0; a < base->dim(); ++a)
        for (std::size_t b = 0; b < base->dim(); ++b)
            lift.m[a][b] = phi.n.m[a][b].transfer(ext);
    for (std::size_t a = 0; a < base->dim(); ++a) {
        lift.m[si][a] = s * phi.gamma.get({(int)a}).transfer(ext);
        lift.m[a][si] = phi.y.get({(int)a}).transfer(ext) / s;
    }
    lift.m[si][si] = phi.g.transfer(ext);

    Multivector eta = s * unit_vector(ext, (int)si);
    if (!jetgeom::lie(eta, lift).is_zero())
        throw StructureError("lifted endomorphism is not invariant");
    // lift(X, f) = X + f s d/ds; the tensor must intertwine the lifts.
    auto lift_der = [&](const MultiDerivation& d) {
        return d.symbol().transfer(ext) + d.scalar_part().transfer(ext) * eta;
    };
    for (std::size_t a = 0; a < base->dim(); ++a) {
        MultiDerivation d = MultiDerivation::derivation(unit_vector(base, (int)a),
                                                        ScalarExpr::zero(base));
        if (!(lift.apply(lift_der(d)) - lift_der(phi.apply(d))).is_zero())
            throw StructureError("lifted endomorphism fails the lift identity");
    }
    MultiDerivation one = MultiDerivation::one(base);
    if (!(lift.apply(lift_der(one)) - lift_der(phi.apply(one))).is_zero())
        throw StructureError("lifted endomorphism fails the lift identity");
    return lift;
}

EndoDL restrict_endo(const Tensor11& phi_n, const std::string& fiber) {
    const ChartPtr& ext = phi_n.chart;
    int si = ext->coord_index(fiber);
    if (si < 0) throw StructureError("fiber coordinate " + fiber + " absent from the chart");
    ScalarExpr s = ScalarExpr::coordinate(ext, fiber);
    Multivector eta = s * unit_vector(ext, si);
    if (!jetgeom::lie(eta, phi_n).is_zero())
        throw StructureError("endomorphism is not invariant along the fiber");

    ChartPtr base = ext->without(fiber);
    auto down = [&](const ScalarExpr& v) {
        if (!v.independent_of(fiber))
            throw StructureError("endomorphism does not restrict: fiber-dependent block");
        return v.subst(fiber, CNum(1)).transfer(base);
    };
    // Column of a lifted derivation, split back into (vector, scalar) parts.
    auto split = [&](const Multivector& v, Multivector& x, ScalarExpr& f) {
        x = Multivector::zero(base, 1);
        for (std::size_t k = 0; k < ext->dim(); ++k) {
            if ((int)k == si) continue;
            int bk = base->coord_index(ext->coords()[k]);
            x.add({bk}, down(v.get({(int)k})));
        }
        f = down(v.get({si}) / s);
    };
    Tensor11 n = Tensor11::zero(base);
    DiffForm gamma(base, 1);
    for (std::size_t a = 0; a < ext->dim(); ++a) {
        if ((int)a == si) continue;
        Multivector x(base, 1);
        ScalarExpr f;
        split(phi_n.apply(unit_vector(ext, (int)a)), x, f);
        int ba = base->coord_index(ext->coords()[a]);
        for (std::size_t k = 0; k < base->dim(); ++k) n.m[k][ba] = x.get({(int)k});
        gamma.add({ba}, f);
    }
    Multivector y(base, 1);
    ScalarExpr g;
    split(phi_n.apply(eta), y, g);
    return EndoDL::make(std::move(n), std::move(y), std::move(gamma), std::move(g));
}

MultiDerivation deform(const MultiDerivation& j, const EndoDL& phi) {
    const ChartPtr& ch = j.chart;
    Evaluator d2 = [&](const std::vector<ScalarExpr>& args) {
        return jet_eval(j, phi.adjoint(JetSection::j1(args[0])), JetSection::j1(args[1]));
    };
    return extract_pair(ch, 2, d2);
}

ComplexCone complex_cone(const MultiDerivation& j, const ComplexChart& cc,
                         const std::string& rho, const std::string& psi) {
    require_same_chart(j.chart, cc.chart);
    if (j.degree != 2) throw StructureError("complex cone needs a bi-derivation");
    if (!j.lambda.equals(type_project(j.lambda, cc.j, 2, 0)) ||
        !j.e.equals(type_project(j.e, cc.j, 1, 0)))
        throw StructureError("bi-derivation components are not of type (2,0)/(1,0)");

    const ChartPtr& base = j.chart;
    ChartPtr ext = base->extended({rho}, {psi});
    int ri = ext->coord_index(rho), ai = ext->coord_index(psi);
    ScalarExpr r = ScalarExpr::coordinate(ext, rho);
    ScalarExpr cs = ScalarExpr::cos_of(ext, psi), sn = ScalarExpr::sin_of(ext, psi);
    ScalarExpr i = imag_unit(ext), half = half_of(ext);

    ScalarExpr w = r * (cs + i * sn);
    ScalarExpr winv = (cs - i * sn) / r;
    Multivector dwv = half * (cs - i * sn) *
                      (unit_vector(ext, ri) - (i / r) * unit_vector(ext, ai));
    Multivector pi = winv * j.lambda.transfer(ext) + wedge(dwv, j.e.transfer(ext));
    Multivector h = half * (r * unit_vector(ext, ri) - i * unit_vector(ext, ai));
    Multivector eta = r * unit_vector(ext, ri);

    Tensor11 jext = Tensor11::zero(ext);
    for (std::size_t a = 0; a < base->dim(); ++a)
        for (std::size_t b = 0; b < base->dim(); ++b)
            jext.m[a][b] = cc.j.m[a][b].transfer(ext);
    jext.m[(std::size_t)ai][(std::size_t)ri] = ScalarExpr::one(ext) / r;
    jext.m[(std::size_t)ri][(std::size_t)ai] = -r;

    // Defining identity pi(d(w f), d(w g)) = w J(f, g) on holomorphic probes.
    std::vector<ScalarExpr> fs;
    fs.push_back(ScalarExpr::one(base));
    for (int a = 0; a < cc.ncomplex(); ++a) fs.push_back(cc.z(a));
    for (int a = 0; a < cc.ncomplex(); ++a)
        for (int b = a; b < cc.ncomplex(); ++b) fs.push_back(cc.z(a) * cc.z(b));
    for (std::size_t a = 0; a < fs.size(); ++a)
        for (std::size_t b = a + 1; b < fs.size(); ++b) {
            ScalarExpr lhs = eval(pi, {exterior_derivative_of(w * fs[a].transfer(ext)),
                                       exterior_derivative_of(w * fs[b].transfer(ext))});
            ScalarExpr rhs = w * j.apply({fs[a], fs[b]}).transfer(ext);
            if (!lhs.equals(rhs))
                throw StructureError("complex cone bivector violates its defining identity");
        }

    return {std::move(ext), rho, psi, std::move(w), std::move(winv),
            std::move(pi), std::move(h), std::move(eta), std::move(jext)};
}

HomogeneousPoisson holomorphic_poissonize(const MultiDerivation& j, const ComplexChart& cc,
                                          const std::string& rho, const std::string& psi) {
    Report lam_h = is_holomorphic(j.lambda, cc), e_h = is_holomorphic(j.e, cc);
    if (!lam_h.ok || !e_h.ok)
        throw StructureError("bi-derivation is not holomorphic: " +
                             (lam_h.ok ? e_h.notes.front() : lam_h.notes.front()));
    ComplexCone cone = complex_cone(j, cc, rho, psi);

    // Re-verify holomorphy of the cone bivector: pure (2,0) type for the
    // extended complex structure, and invariance along the antiholomorphic
    // coordinate frame (Cauchy-Riemann equations for the frame components).
    if (!cone.pi.equals(type_project(cone.pi, cone.jext, 2, 0)))
        throw StructureError("cone bivector is not of pure type (2,0)");
    std::vector<Multivector> anti;
    for (int a = 0; a < cc.ncomplex(); ++a)
        anti.push_back(cc.d_dz(a).conj().transfer(cone.chart));
    {
        ScalarExpr i = imag_unit(cone.chart), half = half_of(cone.chart);
        ScalarExpr r = ScalarExpr::coordinate(cone.chart, rho);
        ScalarExpr cs = ScalarExpr::cos_of(cone.chart, psi);
        ScalarExpr sn = ScalarExpr::sin_of(cone.chart, psi);
        int ri = cone.chart->coord_index(rho), ai = cone.chart->coord_index(psi);
        anti.push_back(half * (cs + i * sn) *
                       (unit_vector(cone.chart, ri) + (i / r) * unit_vector(cone.chart, ai)));
    }
    for (const Multivector& v : anti)
        if (!lie(v, cone.pi).is_zero())
            throw StructureError("cone bivector fails the Cauchy-Riemann equations");

    return HomogeneousPoisson::make(cone.chart, {rho, psi}, cone.pi, cone.h);
}

CircleBundleStructures circle_bundle_structures(const MultiDerivation& j,
                                                const ComplexChart& cc,
                                                const std::string& psi) {
    ComplexCone cone = complex_cone(j, cc, "rho", psi);
    ScalarExpr i = imag_unit(cone.chart), half = half_of(cone.chart);
    Multivector pi_im = (-i * half) * (cone.pi - cone.pi.conj());
    Multivector pi_re = half * (cone.pi + cone.pi.conj());

    RestrictionResult rim = restrict_homogeneous(pi_im, cone.rho);
    RestrictionResult rre = restrict_homogeneous(pi_re, cone.rho);
    EndoDL jhat_dl = restrict_endo(cone.jext, cone.rho);
    return {rim.j.chart, std::move(rim.j), std::move(rre.j), std::move(jhat_dl)};
}

ThreeWay check_holomorphic_jacobi_equivalences(const MultiDerivation& j,
                                               const ComplexChart& cc) {
    ThreeWay res;
    CircleBundleStructures cb{nullptr, MultiDerivation::zero(cc.chart, 2),
                              MultiDerivation::zero(cc.chart, 2), EndoDL::identity(cc.chart)};
    try {
        cb = circle_bundle_structures(j, cc);
    } catch (const StructureError& e) {
        res.structural_ok = false;
        res.notes.push_back(std::string("circle bundle construction failed: ") + e.what());
        return res;
    }

    Report lam_h = is_holomorphic(j.lambda, cc), e_h = is_holomorphic(j.e, cc);
    res.v1 = lam_h.ok && e_h.ok && is_jacobi(j);
    if (!res.v1) {
        if (!lam_h.ok) res.notes.push_back("Lambda: " + lam_h.notes.front());
        if (!e_h.ok) res.notes.push_back("E: " + e_h.notes.front());
    }

    MultiDerivation jhat_j = deform(cb.jhat, cb.jhat_dl);
    bool match = jhat_j.equals(cb.jhat_prime);
    if (!match) res.notes.push_back("deformed bi-derivation differs from the real part");

    JNResult jn = is_jacobi_nijenhuis(cb.jhat, cb.jhat_dl);
    res.v2 = jn.ok() && match;
    if (!jn.ok()) res.notes.insert(res.notes.end(), jn.report.notes.begin(),
                                   jn.report.notes.end());

    Report gc = is_generalized_contact(GenBlockContact::make(cb.jhat_dl, cb.jhat));
    res.v3 = gc.ok && match;
    if (!gc.ok) res.notes.insert(res.notes.end(), gc.notes.begin(), gc.notes.end());

    if (res.v1) {
        MultiDerivation jone = cb.jhat_dl.apply(MultiDerivation::one(cb.chart));
        bool b1 = schouten_jacobi(jone, jhat_j).equals(cb.jhat);
        bool b2 = schouten_jacobi(jone, cb.jhat).equals(-jhat_j);
        res.aux_ok = b1 && b2;
        if (!res.aux_ok) res.notes.push_back("bracket identities with jhat_dl(1) failed");
    }
    return res;
}

LiePoisson lie_poisson(const std::vector<std::vector<std::vector<mpq_class>>>& c) {
    std::size_t n = c.size();
    for (const auto& row : c) {
        if (row.size() != n) throw StructureError("structure constants must be n x n x n");
        for (const auto& col : row)
            if (col.size() != n) throw StructureError("structure constants must be n x n x n");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (c[i][j][k] != -c[j][i][k])
                    throw StructureError("structure constants are not antisymmetric");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    mpq_class acc = 0;
                    for (std::size_t m = 0; m < n; ++m)
                        acc += c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] +
                               c[k][i][m] * c[m][j][l];
                    if (acc != 0)
                        throw StructureError("structure constants violate the Jacobi identity");
                }

    std::vector<std::string> coords;
    for (std::size_t k = 1; k <= n; ++k) {
        coords.push_back("x" + std::to_string(k));
        coords.push_back("y" + std::to_string(k));
    }
    ComplexChart cc = ComplexChart::standard(Chart::make(coords));
    const ChartPtr& ch = cc.chart;

    Multivector pi = Multivector::zero(ch, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ScalarExpr coeff = ScalarExpr::zero(ch);
            for (std::size_t k = 0; k < n; ++k)
                coeff += ScalarExpr::constant(ch, CNum(c[i][j][k])) * cc.z((int)k);
            pi = pi + coeff * wedge(cc.d_dz((int)i), cc.d_dz((int)j));
        }
    Multivector h = Multivector::zero(ch, 1);
    for (std::size_t k = 0; k < n; ++k) h = h + cc.z((int)k) * cc.d_dz((int)k);

    Report holo = is_holomorphic(pi, cc);
    if (!holo.ok) throw StructureError("linear bivector failed holomorphy: " + holo.notes.front());
    if (!schouten_nijenhuis(pi, pi).is_zero())
        throw StructureError("linear bivector is not Poisson");
    return {cc, HomogeneousPoisson::make(ch, {}, std::move(pi), std::move(h))};
}

DarbouxExample darboux_example(int n) {
    if (n < 0) throw StructureError("darboux_example needs n >= 0");
    std::vector<std::string> coords = {"r", "s"};
    for (int k = 1; k <= n; ++k) {
        coords.push_back("x" + std::to_string(k));
        coords.push_back("y" + std::to_string(k));
    }
    for (int k = 1; k <= n; ++k) {
        coords.push_back("m" + std::to_string(k));
        coords.push_back("q" + std::to_string(k));
    }
    ComplexChart cc = ComplexChart::standard(Chart::make(coords));
    const ChartPtr& ch = cc.chart;
    // Complex coordinate slots: t = 0, z_k = k, P_k = n + k.

    DiffForm theta = cc.dz(0);
    for (int k = 1; k <= n; ++k) theta = theta - cc.z(n + k) * cc.dz(k);

    Multivector lambda = Multivector::zero(ch, 2);
    for (int k = 1; k <= n; ++k)
        lambda = lambda +
                 wedge(cc.d_dz(k) + cc.z(n + k) * cc.d_dz(0), cc.d_dz(n + k));
    MultiDerivation j = MultiDerivation::make(std::move(lambda), cc.d_dz(0));

    ComplexCone cone = complex_cone(j, cc);
    DiffForm theta_e = theta.transfer(cone.chart);
    DiffForm omega = wedge(exterior_derivative_of(cone.w), theta_e);
    for (int k = 1; k <= n; ++k)
        omega = omega - cone.w * wedge(cc.dz(n + k).transfer(cone.chart),
                                       cc.dz(k).transfer(cone.chart));

    ChartPtr circle = cone.chart->without(cone.rho);
    auto form_on = [&](const std::string& name) {
        return unit_form(circle, circle->coord_index(name));
    };
    auto coord_on = [&](const std::string& name) {
        return ScalarExpr::coordinate(circle, name);
    };
    DiffForm theta_r = form_on("r"), theta_s = form_on("s");
    for (int k = 1; k <= n; ++k) {
        std::string sk = std::to_string(k);
        theta_r = theta_r - coord_on("m" + sk) * form_on("x" + sk) +
                  coord_on("q" + sk) * form_on("y" + sk);
        theta_s = theta_s - coord_on("m" + sk) * form_on("y" + sk) -
                  coord_on("q" + sk) * form_on("x" + sk);
    }
    ScalarExpr cs = ScalarExpr::cos_of(circle, cone.psi);
    ScalarExpr sn = ScalarExpr::sin_of(circle, cone.psi);
    DiffForm vartheta = cs * theta_r - sn * theta_s;
    DiffForm vartheta_j = -sn * theta_r - cs * theta_s;

    return {std::move(cc),      std::move(theta),   std::move(j),
            std::move(cone),    std::move(omega),   std::move(circle),
            std::move(theta_r), std::move(theta_s), std::move(vartheta),
            std::move(vartheta_j)};
}

} // namespace jetgeom
