#include "jetgeom/genstruct.hpp"
#include "jetgeom/error.hpp"

namespace jetgeom {

ScalarExpr tangent_pairing(const TangentSection& a, const TangentSection& b) {
    require_same_chart(a.xi.chart, b.xi.chart);
    return eval(b.rho, {a.xi}) + eval(a.rho, {b.xi});
}

TangentSection dorfman(const TangentSection& a, const TangentSection& b) {
    require_same_chart(a.xi.chart, b.xi.chart);
    Multivector x = schouten_nijenhuis(a.xi, b.xi);
    DiffForm f = lie(a.xi, b.rho) - lie(b.xi, a.rho) +
                 exterior_derivative_of(eval(a.rho, {b.xi}));
    return {std::move(x), std::move(f)};
}

GenBlockTangent GenBlockTangent::make(Tensor11 phi, Multivector pi, DiffForm omega) {
    require_same_chart(phi.chart, pi.chart);
    require_same_chart(phi.chart, omega.chart);
    if (pi.degree != 2 || omega.degree != 2)
        throw StructureError("generalized tangent blocks need a bivector and a 2-form");
    return {std::move(phi), std::move(pi), std::move(omega)};
}

GenBlockTangent GenBlockTangent::make(Tensor11 phi, Multivector pi) {
    DiffForm w = DiffForm::zero(phi.chart, 2);
    return make(std::move(phi), std::move(pi), std::move(w));
}

TangentSection GenBlockTangent::apply(const TangentSection& s) const {
    Multivector top = phi.apply(s.xi) + sharp(pi, s.rho);
    DiffForm bot = interior(s.xi, omega) - phi.pullback(s.rho);
    return {std::move(top), std::move(bot)};
}

static std::vector<TangentSection> tangent_frame(const ChartPtr& ch) {
    std::vector<TangentSection> gens;
    for (std::size_t a = 0; a < ch->dim(); ++a) {
        gens.push_back({unit_vector(ch, (int)a), DiffForm::zero(ch, 1)});
        gens.push_back({Multivector::zero(ch, 1), unit_form(ch, (int)a)});
    }
    return gens;
}

Report is_generalized_complex(const GenBlockTangent& J) {
    Report rep;
    const ChartPtr& ch = J.phi.chart;
    auto gens = tangent_frame(ch);
    for (std::size_t a = 0; a < gens.size(); ++a) {
        TangentSection sq = J.apply(J.apply(gens[a])) + gens[a];
        if (!sq.is_zero()) {
            rep.fail("J^2 != -1 on generator " + std::to_string(a) + ": " + sq.str());
            break;
        }
    }
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            ScalarExpr s = tangent_pairing(J.apply(gens[a]), gens[b]) +
                           tangent_pairing(gens[a], J.apply(gens[b]));
            if (!s.is_zero()) {
                rep.fail("pairing skewness fails on generators (" + std::to_string(a) + "," +
                         std::to_string(b) + "): " + s.str());
                a = gens.size();
                break;
            }
        }
    if (!rep.ok) return rep;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            TangentSection ja = J.apply(gens[a]), jb = J.apply(gens[b]);
            TangentSection defect = dorfman(ja, jb) - dorfman(gens[a], gens[b]) -
                                    J.apply(dorfman(ja, gens[b])) -
                                    J.apply(dorfman(gens[a], jb));
            if (!defect.is_zero()) {
                rep.fail("Dorfman integrability fails on generators (" + std::to_string(a) + "," +
                         std::to_string(b) + "): " + defect.str());
                return rep;
            }
        }
    return rep;
}

Report is_homogeneous_gc(const GenBlockTangent& J, const Multivector& eta) {
    Report rep;
    require_same_chart(J.phi.chart, eta.chart);
    if (eta.degree != 1) throw StructureError("homogeneity field must be a vector field");
    if (!(lie(eta, J.pi) + J.pi).is_zero()) rep.fail("L_eta pi != -pi");
    if (!lie(eta, J.phi).is_zero()) rep.fail("L_eta phi != 0");
    if (!(lie(eta, J.omega) - J.omega).is_zero()) rep.fail("L_eta omega != omega");
    return rep;
}

// ------------------------------------------------------------------ DL side

ScalarExpr omni_pairing(const OmniSection& a, const OmniSection& b) {
    require_same_chart(a.delta.chart, b.delta.chart);
    return jet_pairing(b.theta, a.delta) + jet_pairing(a.theta, b.delta);
}

OmniSection dorfman_jacobi(const OmniSection& a, const OmniSection& b) {
    require_same_chart(a.delta.chart, b.delta.chart);
    MultiDerivation d = dl_bracket(a.delta, b.delta);
    JetSection t = lie_jet(a.delta, b.theta) - lie_jet(b.delta, a.theta) +
                   JetSection::j1(jet_pairing(a.theta, b.delta));
    return {std::move(d), std::move(t)};
}

GenBlockContact GenBlockContact::make(EndoDL phi, MultiDerivation j, DiffForm omega2,
                                      DiffForm b) {
    require_same_chart(phi.n.chart, j.chart);
    require_same_chart(phi.n.chart, omega2.chart);
    require_same_chart(phi.n.chart, b.chart);
    if (j.degree != 2 || omega2.degree != 2 || b.degree != 1)
        throw StructureError("contact blocks need a bi-derivation, a 2-form and a 1-form");
    return {std::move(phi), std::move(j), std::move(omega2), std::move(b)};
}

GenBlockContact GenBlockContact::make(EndoDL phi, MultiDerivation j) {
    const ChartPtr& ch = phi.n.chart;
    return make(std::move(phi), std::move(j), DiffForm::zero(ch, 2), DiffForm::zero(ch, 1));
}

JetSection GenBlockContact::omega_flat(const MultiDerivation& delta) const {
    Multivector x = delta.symbol();
    ScalarExpr f = delta.scalar_part();
    return {interior(x, omega2) + f * b, -eval(b, {x})};
}

OmniSection GenBlockContact::apply(const OmniSection& s) const {
    MultiDerivation top = phi.apply(s.delta) + j_sharp(j, s.theta);
    JetSection bot = omega_flat(s.delta) - phi.adjoint(s.theta);
    return {std::move(top), std::move(bot)};
}

static std::vector<OmniSection> omni_frame(const ChartPtr& ch) {
    std::vector<OmniSection> gens;
    for (std::size_t a = 0; a < ch->dim(); ++a) {
        gens.push_back({MultiDerivation::derivation(unit_vector(ch, (int)a),
                                                    ScalarExpr::zero(ch)),
                        JetSection::zero(ch)});
    }
    gens.push_back({MultiDerivation::one(ch), JetSection::zero(ch)});
    for (std::size_t a = 0; a < ch->dim(); ++a) {
        ScalarExpr c = ch->is_angle(a) ? ScalarExpr::sin_of(ch, ch->coords()[a])
                                       : ScalarExpr::coordinate(ch, ch->coords()[a]);
        gens.push_back({MultiDerivation::zero(ch, 1), JetSection::j1(c)});
    }
    gens.push_back({MultiDerivation::zero(ch, 1), JetSection::j1(ScalarExpr::one(ch))});
    return gens;
}

Report is_generalized_contact(const GenBlockContact& I) {
    Report rep;
    const ChartPtr& ch = I.phi.n.chart;
    auto gens = omni_frame(ch);
    for (std::size_t a = 0; a < gens.size(); ++a) {
        OmniSection sq = I.apply(I.apply(gens[a])) + gens[a];
        if (!sq.is_zero()) {
            rep.fail("I^2 != -1 on generator " + std::to_string(a) + ": " + sq.str());
            break;
        }
    }
    for (std::size_t a = 0; a < gens.size() && rep.ok; ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            ScalarExpr s = omni_pairing(I.apply(gens[a]), gens[b]) +
                           omni_pairing(gens[a], I.apply(gens[b]));
            if (!s.is_zero()) {
                rep.fail("pairing skewness fails on generators (" + std::to_string(a) + "," +
                         std::to_string(b) + "): " + s.str());
                break;
            }
        }
    if (!rep.ok) return rep;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a; b < gens.size(); ++b) {
            OmniSection ia = I.apply(gens[a]), ib = I.apply(gens[b]);
            OmniSection defect = dorfman_jacobi(ia, ib) - dorfman_jacobi(gens[a], gens[b]) -
                                 I.apply(dorfman_jacobi(ia, gens[b])) -
                                 I.apply(dorfman_jacobi(gens[a], ib));
            if (!defect.is_zero()) {
                rep.fail("Dorfman-Jacobi integrability fails on generators (" +
                         std::to_string(a) + "," + std::to_string(b) + "): " + defect.str());
                return rep;
            }
        }
    return rep;
}

} // namespace jetgeom
