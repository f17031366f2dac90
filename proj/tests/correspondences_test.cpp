#include <doctest.h>

#include <jetgeom/correspondences.hpp>
#include <jetgeom/error.hpp>
#include <jetgeom/parser.hpp>

#include "test_util.hpp"

using namespace jetgeom;

namespace {

MultiDerivation random_bider(const ChartPtr& ch, std::mt19937& rng) {
    int dim = (int)ch->dim();
    Multivector lam(ch, 2);
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) lam.add({a, b}, random_poly(ch, rng, 2, false, 2));
    Multivector e(ch, 1);
    for (int a = 0; a < dim; ++a) e.add({a}, random_poly(ch, rng, 2, false, 2));
    return MultiDerivation::make(std::move(lam), std::move(e));
}

MultiDerivation contact_tpq() {
    auto ch = Chart::make({"t", "q", "p"});
    DiffForm theta(ch, 1);
    theta.add({0}, parse("1", ch));
    theta.add({1}, parse("-p", ch));
    return contact_to_jacobi(theta);
}

} // namespace

TEST_CASE("poissonization and its defining identity") {
    auto ch = Chart::make({"x", "y"});
    // zero bracket -> zero bivector
    CHECK(poissonize(MultiDerivation::zero(ch, 2)).pi.is_zero());

    // J = (dx ^ dy, 0): pi = s^{-1} dx ^ dy, checked componentwise, plus the
    // defining identity on f, g in {x, y, xy}
    Multivector lam(ch, 2);
    lam.add({0, 1}, parse("1", ch));
    MultiDerivation j = MultiDerivation::make(lam, Multivector::zero(ch, 1));
    HomogeneousPoisson hp = poissonize(j);
    CHECK(hp.pi.get({0, 1}).equals(parse("1/s", hp.chart)));
    CHECK(hp.pi.get({0, 2}).is_zero());
    CHECK(hp.pi.get({1, 2}).is_zero());
    ScalarExpr s = ScalarExpr::coordinate(hp.chart, "s");
    std::vector<ScalarExpr> fs = {parse("x", hp.chart), parse("y", hp.chart),
                                  parse("x*y", hp.chart)};
    for (const ScalarExpr& f : fs)
        for (const ScalarExpr& g : fs) {
            ScalarExpr lhs = eval(hp.pi, {exterior_derivative_of(s * f),
                                          exterior_derivative_of(s * g)});
            ScalarExpr base = f.diff("x") * g.diff("y") - f.diff("y") * g.diff("x");
            CHECK(lhs.equals(s * base));
        }
    CHECK(hp.poisson());

    // the cone over a contact structure is symplectic: pi ^ pi != 0
    HomogeneousPoisson cone = poissonize(contact_tpq());
    CHECK_FALSE(wedge(cone.pi, cone.pi).is_zero());
}

TEST_CASE("restriction inverts poissonization") {
    std::mt19937 rng(101);
    std::vector<ChartPtr> charts = {Chart::make({"x"}), Chart::make({"x", "y"}),
                                    Chart::make({"x", "y", "z"}),
                                    Chart::make({"x", "psi"}, {"psi"})};
    for (const ChartPtr& ch : charts)
        for (int rep = 0; rep < 2; ++rep) {
            MultiDerivation j = random_bider(ch, rng);
            HomogeneousPoisson hp = poissonize(j);
            RestrictionResult rr = restrict_homogeneous(hp.pi, "s");
            CHECK(rr.j.equals(j));
            // Jacobi <-> Poisson transfer
            CHECK(rr.jacobi == is_jacobi(j));
            CHECK(rr.jacobi == hp.poisson());
        }
    // a structure that is actually Jacobi transfers with flag true
    HomogeneousPoisson hp = poissonize(contact_tpq());
    CHECK(hp.poisson());
    CHECK(restrict_homogeneous(hp.pi, "s").jacobi);
}

TEST_CASE("restriction examples and errors") {
    auto ext = Chart::make({"x", "y", "s"});
    Multivector pin(ext, 2);
    pin.add({0, 1}, parse("1/s", ext));
    RestrictionResult rr = restrict_homogeneous(pin, "s");
    CHECK(rr.jacobi);
    CHECK(rr.j.e.is_zero());
    CHECK(rr.j.lambda.get({0, 1}).is_one());

    // homogeneous but non-Poisson input: bi-derivation still produced, flag false
    auto ext3 = Chart::make({"x", "y", "z", "s"});
    Multivector bad(ext3, 2);
    bad.add({0, 1}, parse("z/s", ext3));
    bad.add({1, 2}, parse("y/s", ext3));
    CHECK_FALSE(schouten_nijenhuis(bad, bad).is_zero());
    RestrictionResult rb = restrict_homogeneous(bad, "s");
    CHECK_FALSE(rb.jacobi);
    CHECK(rb.j.lambda.get({0, 1}).equals(parse("z", rb.j.chart)));

    // non-homogeneous input is rejected
    Multivector nh(ext, 2);
    nh.add({0, 1}, parse("1", ext));
    CHECK_THROWS_AS(restrict_homogeneous(nh, "s"), StructureError);
    CHECK_THROWS_AS(restrict_homogeneous(pin, "w"), StructureError);
}

TEST_CASE("endomorphism lifts and the Nijenhuis transfer") {
    auto ch = Chart::make({"t", "q", "p"});
    // identity lifts to the identity tensor
    Tensor11 lid = poissonize_endo(EndoDL::identity(ch));
    CHECK((lid - Tensor11::identity(lid.chart)).is_zero());

    // a constant-block endomorphism: lift has the expected blocks and the
    // restriction recovers it
    Tensor11 nconst = Tensor11::zero(ch);
    nconst.m[0][1] = parse("1", ch);
    nconst.m[1][0] = parse("-1", ch);
    EndoDL phi = EndoDL::make(nconst, unit_vector(ch, 2), unit_form(ch, 0),
                              parse("3", ch));
    Tensor11 lift = poissonize_endo(phi);
    CHECK(lift.m[3][0].equals(parse("s", lift.chart)));   // gamma column scaled by s
    CHECK(lift.m[2][3].equals(parse("1/s", lift.chart))); // Y column scaled by 1/s
    CHECK(lift.m[3][3].equals(parse("3", lift.chart)));
    CHECK(restrict_endo(lift, "s").equals(phi));

    // Jacobi-Nijenhuis <-> homogeneous Poisson-Nijenhuis, positive instance
    MultiDerivation j = contact_tpq();
    HomogeneousPoisson hp = poissonize(j);
    {
        EndoDL id = EndoDL::identity(ch);
        Tensor11 idl = poissonize_endo(id);
        bool jn = is_jacobi_nijenhuis(j, id).ok();
        bool hpn = hp.poisson() && torsion_is_zero(nijenhuis_torsion(idl)) &&
                   pn_compatible(hp.pi, idl).ok;
        CHECK(jn);
        CHECK(jn == hpn);
    }
    // negative instance: a projector is not Jacobi-Nijenhuis, and its lift
    // fails the homogeneous Poisson-Nijenhuis conditions too
    {
        Tensor11 proj = Tensor11::zero(ch);
        proj.m[0][0] = parse("1", ch);
        EndoDL p = EndoDL::make(proj, Multivector::zero(ch, 1), DiffForm::zero(ch, 1),
                                ScalarExpr::zero(ch));
        Tensor11 pl = poissonize_endo(p);
        bool jn = is_jacobi_nijenhuis(j, p).ok();
        bool hpn = hp.poisson() && torsion_is_zero(nijenhuis_torsion(pl)) &&
                   pn_compatible(hp.pi, pl).ok;
        CHECK_FALSE(jn);
        CHECK(jn == hpn);
    }
}

TEST_CASE("complex cone and holomorphic poissonization") {
    // zero bracket on C
    ComplexChart c1 = ComplexChart::standard(Chart::make({"x1", "y1"}));
    HomogeneousPoisson z = holomorphic_poissonize(MultiDerivation::zero(c1.chart, 2), c1);
    CHECK(z.pi.is_zero());

    // the extended complex structure of the cone is integrable
    ComplexCone cone0 = complex_cone(MultiDerivation::zero(c1.chart, 2), c1);
    CHECK(is_complex_structure(cone0.jext).ok);

    // Darboux n = 1: the cone bivector inverts the symplectic form
    DarbouxExample dx = darboux_example(1);
    HomogeneousPoisson hp = holomorphic_poissonize(dx.j, dx.cc);
    CHECK(hp.poisson());
    const ChartPtr& ext = dx.cone.chart;
    std::vector<DiffForm> coframe;
    for (int a = 0; a < dx.cc.ncomplex(); ++a) coframe.push_back(dx.cc.dz(a).transfer(ext));
    coframe.push_back(exterior_derivative_of(dx.cone.w));
    for (const DiffForm& al : coframe)
        CHECK((interior(sharp(dx.cone.pi, al), dx.omega) + al).is_zero());

    // Cauchy-Riemann failure is rejected
    Multivector ebad = dx.cc.z(0).conj() * dx.cc.d_dz(0);
    MultiDerivation jbad = MultiDerivation::make(Multivector::zero(dx.cc.chart, 2), ebad);
    CHECK_THROWS_AS(holomorphic_poissonize(jbad, dx.cc), StructureError);
    // type failure is rejected even by the raw cone
    Multivector eanti = dx.cc.d_dz(0).conj();
    MultiDerivation jtype = MultiDerivation::make(Multivector::zero(dx.cc.chart, 2), eanti);
    CHECK_THROWS_AS(complex_cone(jtype, dx.cc), StructureError);
}

TEST_CASE("circle bundle reproduces the pair of contact forms") {
    DarbouxExample dx = darboux_example(1);
    CircleBundleStructures cb = circle_bundle_structures(dx.j, dx.cc);
    CHECK(same_chart(cb.chart, dx.circle_chart));

    // The pair of contact forms is recovered up to the constant trivialization
    // factor 4 (one 1/2 per holomorphic frame leg of the cone bivector):
    // 4 jhat is the canonical bracket of vartheta_j, 4 jhat' that of vartheta,
    // so the two contact distributions are reproduced exactly.
    ScalarExpr four = parse("4", cb.chart);
    MultiDerivation from_theta = contact_to_jacobi(dx.vartheta);
    MultiDerivation from_theta_j = contact_to_jacobi(dx.vartheta_j);
    CHECK((four * cb.jhat).equals(from_theta_j));
    CHECK((four * cb.jhat_prime).equals(from_theta));

    // jhat_prime is the deformation of jhat by jhat_dl
    CHECK(deform(cb.jhat, cb.jhat_dl).equals(cb.jhat_prime));

    // bracket identities with the derivation jhat_dl(1)
    MultiDerivation jone = cb.jhat_dl.apply(MultiDerivation::one(cb.chart));
    CHECK(schouten_jacobi(jone, cb.jhat_prime).equals(cb.jhat));
    CHECK(schouten_jacobi(jone, cb.jhat).equals(-cb.jhat_prime));

    // zero bracket: both bi-derivations vanish, jhat_dl is still a complex
    // structure on the derivation algebra
    ComplexChart c1 = ComplexChart::standard(Chart::make({"x1", "y1"}));
    CircleBundleStructures cb0 =
        circle_bundle_structures(MultiDerivation::zero(c1.chart, 2), c1);
    CHECK(cb0.jhat.is_zero());
    CHECK(cb0.jhat_prime.is_zero());
    CHECK(cb0.jhat_dl.compose(cb0.jhat_dl).equals(-EndoDL::identity(cb0.chart)));
    CHECK(endo_torsion_vanishes(cb0.jhat_dl).ok);
}

TEST_CASE("holomorphic Jacobi equivalence theorem") {
    // Darboux n = 0: J = (0, d/dt) on C
    DarbouxExample d0 = darboux_example(0);
    ThreeWay r0 = check_holomorphic_jacobi_equivalences(d0.j, d0.cc);
    CHECK(r0.agree());
    CHECK(r0.all_true());

    // Darboux n = 1
    DarbouxExample d1 = darboux_example(1);
    ThreeWay r1 = check_holomorphic_jacobi_equivalences(d1.j, d1.cc);
    CHECK(r1.agree());
    CHECK(r1.all_true());

    // zero bracket
    ComplexChart c1 = ComplexChart::standard(Chart::make({"x1", "y1"}));
    ThreeWay rz = check_holomorphic_jacobi_equivalences(MultiDerivation::zero(c1.chart, 2), c1);
    CHECK(rz.agree());
    CHECK(rz.all_true());

    // an antiholomorphic coefficient breaks all three conditions coherently
    Multivector ebad = c1.z(0).conj() * c1.d_dz(0);
    MultiDerivation jbad = MultiDerivation::make(Multivector::zero(c1.chart, 2), ebad);
    ThreeWay rb = check_holomorphic_jacobi_equivalences(jbad, c1);
    CHECK(rb.structural_ok);
    CHECK(rb.agree());
    CHECK_FALSE(rb.v1);
}

TEST_CASE("linear structures on duals of complex Lie algebras") {
    using Table = std::vector<std::vector<std::vector<mpq_class>>>;
    auto zero_table = [](std::size_t n) {
        return Table(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));
    };
    auto set = [](Table& c, int i, int j, int k, const mpq_class& v) {
        c[i][j][k] = v;
        c[j][i][k] = -v;
    };

    // abelian
    LiePoisson ab = lie_poisson(zero_table(2));
    CHECK(ab.hp.pi.is_zero());

    // sl(2, C) with basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    Table sl2 = zero_table(3);
    set(sl2, 0, 1, 2, 1);
    set(sl2, 2, 0, 0, 2);
    set(sl2, 2, 1, 1, -2);
    LiePoisson s = lie_poisson(sl2);
    CHECK(is_holomorphic(s.hp.pi, s.cc).ok);
    CHECK(s.hp.poisson());
    CHECK((lie(s.hp.eta, s.hp.pi) + s.hp.pi).is_zero());
    CHECK_FALSE(s.hp.pi.is_zero());

    // Heisenberg: [e1, e2] = e3
    Table heis = zero_table(3);
    set(heis, 0, 1, 2, 1);
    LiePoisson h = lie_poisson(heis);
    CHECK(is_holomorphic(h.hp.pi, h.cc).ok);
    CHECK(h.hp.poisson());

    // invalid tables are rejected
    Table asym = zero_table(2);
    asym[0][1][0] = 1;  // not antisymmetric
    CHECK_THROWS_AS(lie_poisson(asym), StructureError);
    Table nonjac = zero_table(3);
    set(nonjac, 0, 1, 2, 1);
    set(nonjac, 0, 2, 0, 1);
    CHECK_THROWS_AS(lie_poisson(nonjac), StructureError);
}

TEST_CASE("darboux fixtures") {
    // n = 0
    DarbouxExample d0 = darboux_example(0);
    CHECK(d0.theta.equals(d0.cc.dz(0)));
    CHECK(d0.theta_r.equals(unit_form(d0.circle_chart, 0)));
    CHECK(d0.theta_s.equals(unit_form(d0.circle_chart, 1)));

    // n = 1: formulas written out by hand
    DarbouxExample d1 = darboux_example(1);
    const ChartPtr& ch = d1.cc.chart;  // r s x1 y1 m1 q1
    ScalarExpr i = ScalarExpr::constant(ch, CNum::i());
    DiffForm dt = unit_form(ch, 0) + i * unit_form(ch, 1);
    DiffForm dz = unit_form(ch, 2) + i * unit_form(ch, 3);
    ScalarExpr p1 = parse("m1", ch) + i * parse("q1", ch);
    CHECK(d1.theta.equals(dt - p1 * dz));
    CHECK(is_jacobi(d1.j));

    const ChartPtr& cch = d1.circle_chart;  // r s x1 y1 m1 q1 psi
    DiffForm tr = unit_form(cch, 0) - parse("m1", cch) * unit_form(cch, 2) +
                  parse("q1", cch) * unit_form(cch, 3);
    DiffForm ts = unit_form(cch, 1) - parse("m1", cch) * unit_form(cch, 3) -
                  parse("q1", cch) * unit_form(cch, 2);
    CHECK(d1.theta_r.equals(tr));
    CHECK(d1.theta_s.equals(ts));
    ScalarExpr cs = ScalarExpr::cos_of(cch, "psi"), sn = ScalarExpr::sin_of(cch, "psi");
    CHECK(d1.vartheta.equals(cs * tr - sn * ts));
    CHECK(d1.vartheta_j.equals(-sn * tr - cs * ts));

    // the contact extraction on a real chart matches the Darboux pattern
    auto aux = Chart::make({"t", "z1", "P1"});
    DiffForm th(aux, 1);
    th.add({0}, parse("1", aux));
    th.add({1}, parse("-P1", aux));
    MultiDerivation jr = contact_to_jacobi(th);
    Multivector expect = wedge(unit_vector(aux, 1) + parse("P1", aux) * unit_vector(aux, 0),
                               unit_vector(aux, 2));
    CHECK(jr.lambda.equals(expect));
    CHECK(jr.e.equals(unit_vector(aux, 0)));

    // n = 2: the emitted form is contact
    DarbouxExample d2 = darboux_example(2);
    DiffForm dv = d(d2.vartheta);
    CHECK_FALSE(wedge(d2.vartheta, wedge(dv, dv)).is_zero());
}
