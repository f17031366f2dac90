#include "jetgeom/checks.hpp"
#include "jetgeom/correspondences.hpp"
#include "jetgeom/error.hpp"
#include "jetgeom/parser.hpp"

#include <map>

namespace jetgeom {

namespace {

template <typename T>
const T* find_object(const std::vector<StructObject>& objs, int skip = 0) {
    for (const StructObject& o : objs)
        if (const T* v = std::get_if<T>(&o.value)) {
            if (skip-- > 0) continue;
            return v;
        }
    return nullptr;
}

template <typename T>
const T& need_object(const std::vector<StructObject>& objs, const std::string& what) {
    const T* v = find_object<T>(objs);
    if (!v) throw StructureError("input file provides no " + what);
    return *v;
}

std::string first_nonzero(const Multivector& p, const std::string& label) {
    for (const auto& [t, e] : p.comps)
        if (!e.is_zero()) {
            std::string key;
            for (std::size_t k = 0; k < t.size(); ++k)
                key += (k ? "," : "") + std::to_string(t[k]);
            return label + " " + key + " = " + e.str();
        }
    return label + " = 0";
}

Report from_threeway(const ThreeWay& tw) {
    Report r;
    auto verdict = [](bool b) { return b ? std::string("PASS") : std::string("FAIL"); };
    if (!tw.structural_ok) {
        r.fail("inputs fail structural validation");
    } else {
        r.note("condition 1 (holomorphic structure): " + verdict(tw.v1));
        r.note("condition 2 (Nijenhuis-compatible pair): " + verdict(tw.v2));
        r.note("condition 3 (generalized integrability): " + verdict(tw.v3));
        r.note(std::string("verdicts agree: ") + (tw.agree() ? "yes" : "NO"));
        if (!tw.all_true()) r.ok = false;
    }
    for (const auto& n : tw.notes) r.note(n);
    return r;
}

std::vector<std::pair<int, int>> consecutive_pairs(const ChartPtr& ch) {
    if (ch->dim() % 2 != 0)
        throw StructureError("complex checks need an even-dimensional chart");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; 2 * a + 1 < (int)ch->dim(); ++a) pairs.push_back({2 * a, 2 * a + 1});
    return pairs;
}

struct CheckEntry {
    std::string description;
    CheckFn fn;
};

const std::map<std::string, CheckEntry>& registry() {
    static const std::map<std::string, CheckEntry> reg = {
        {"is-poisson",
         {"vanishing Schouten-Nijenhuis square of the first bivector",
          [](const std::vector<StructObject>& objs, unsigned) {
              const Multivector& pi = need_object<Multivector>(objs, "bivector");
              Report r;
              Multivector br = schouten_nijenhuis(pi, pi);
              if (!br.is_zero())
                  r.fail("[pi, pi] != 0: " + first_nonzero(br, "component"));
              return r;
          }}},
        {"is-jacobi",
         {"vanishing Schouten-Jacobi square of the first bi-derivation",
          [](const std::vector<StructObject>& objs, unsigned) {
              const MultiDerivation& j = need_object<MultiDerivation>(objs, "multiderivation");
              Report r;
              MultiDerivation br = schouten_jacobi(j, j);
              if (!br.is_zero()) {
                  if (!br.lambda.is_zero())
                      r.fail("[J, J] != 0: " + first_nonzero(br.lambda, "lambda"));
                  else
                      r.fail("[J, J] != 0: " + first_nonzero(br.e, "e"));
              }
              return r;
          }}},
        {"is-contact",
         {"nondegeneracy of the first 1-form as a contact form",
          [](const std::vector<StructObject>& objs, unsigned) {
              const DiffForm& th = need_object<DiffForm>(objs, "1-form");
              Report r;
              if (th.degree != 1) {
                  r.fail("first form has degree != 1");
                  return r;
              }
              try {
                  contact_to_jacobi(th);
              } catch (const StructureError& e) {
                  r.fail(e.what());
              }
              return r;
          }}},
        {"is-complex-structure",
         {"square -1 and torsion-freeness of the first (1,1)-tensor",
          [](const std::vector<StructObject>& objs, unsigned) {
              return is_complex_structure(need_object<Tensor11>(objs, "tensor11"));
          }}},
        {"algebroid-axioms",
         {"anchor morphism and Jacobi identity of the first algebroid",
          [](const std::vector<StructObject>& objs, unsigned) {
              return check_axioms(need_object<AlgebroidData>(objs, "algebroid"));
          }}},
        {"generalized-complex",
         {"integrability of the first generalized block endomorphism",
          [](const std::vector<StructObject>& objs, unsigned) {
              return is_generalized_complex(need_object<GenBlockTangent>(objs, "genblock"));
          }}},
        {"generalized-contact",
         {"integrability of the block map built from the first endo-dl and bi-derivation",
          [](const std::vector<StructObject>& objs, unsigned) {
              const EndoDL& phi = need_object<EndoDL>(objs, "endo-dl");
              const MultiDerivation& j = need_object<MultiDerivation>(objs, "multiderivation");
              return is_generalized_contact(GenBlockContact::make(phi, j));
          }}},
        {"hP-equivalences",
         {"three-way equivalence for the first bivector (with the first tensor11 as the "
          "complex structure, or the standard one)",
          [](const std::vector<StructObject>& objs, unsigned) {
              const Multivector& pi = need_object<Multivector>(objs, "bivector");
              const Tensor11* j = find_object<Tensor11>(objs);
              Tensor11 jj = j ? *j : ComplexChart::standard_j(pi.chart);
              return from_threeway(check_hP_equivalences(pi, jj, consecutive_pairs(pi.chart)));
          }}},
        {"hJ-equivalences",
         {"three-way equivalence for the first bi-derivation on the standard complex chart",
          [](const std::vector<StructObject>& objs, unsigned) {
              const MultiDerivation& j = need_object<MultiDerivation>(objs, "multiderivation");
              ComplexChart cc = ComplexChart::standard(j.chart);
              return from_threeway(check_holomorphic_jacobi_equivalences(j, cc));
          }}},
        {"homogeneous-holomorphic-poisson",
         {"holomorphy, Poisson property, and Euler homogeneity of the first bivector",
          [](const std::vector<StructObject>& objs, unsigned) {
              const Multivector& pi = need_object<Multivector>(objs, "bivector");
              ComplexChart cc = ComplexChart::standard(pi.chart);
              Report r = is_holomorphic(pi, cc);
              if (!schouten_nijenhuis(pi, pi).is_zero()) r.fail("[pi, pi] != 0");
              Multivector h = Multivector::zero(pi.chart, 1);
              for (int a = 0; a < cc.ncomplex(); ++a) h = h + cc.z(a) * cc.d_dz(a);
              if (!(lie(h, pi) + pi).is_zero())
                  r.fail("not homogeneous: L_H pi != -pi for the Euler field H");
              return r;
          }}},
    };
    return reg;
}

std::vector<std::vector<std::vector<mpq_class>>> zero_table(int n) {
    return std::vector<std::vector<std::vector<mpq_class>>>(
        n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));
}

void set_c(std::vector<std::vector<std::vector<mpq_class>>>& c, int i, int j, int k, long v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
}

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

std::string check_description(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw StructureError("unknown check: " + name);
    return it->second.description;
}

Report run_check(const std::string& name, const std::vector<StructObject>& objects,
                 unsigned seed) {
    auto it = registry().find(name);
    if (it == registry().end()) throw StructureError("unknown check: " + name);
    return it->second.fn(objects, seed);
}

std::vector<std::pair<std::string, std::string>> example_gallery() {
    std::vector<std::pair<std::string, std::string>> files;

    // canonical contact pair on a 3-dimensional chart: theta = dt - p dq
    {
        auto ch = Chart::make({"t", "q", "p"});
        DiffForm theta(ch, 1);
        theta.add({0}, ScalarExpr::one(ch));
        theta.add({1}, -ScalarExpr::coordinate(ch, "p"));
        std::vector<StructObject> objs;
        objs.push_back({"theta", "form", ch, theta});
        objs.push_back({"contact-pair", "multiderivation", ch, contact_to_jacobi(theta)});
        files.push_back({"contact_r3.toml", write_structfile(objs)});
    }

    // a pair that is not Jacobi: (dx ^ dy, dz)
    {
        auto ch = Chart::make({"x", "y", "z"});
        Multivector lam(ch, 2);
        lam.add({0, 1}, ScalarExpr::one(ch));
        MultiDerivation j = MultiDerivation::make(lam, unit_vector(ch, 2));
        files.push_back(
            {"nonjacobi_r3.toml", write_structfile({{"pair", "multiderivation", ch, j}})});
    }

    // zero bivector with the standard complex structure
    {
        auto ch = Chart::make({"x1", "y1", "x2", "y2"});
        std::vector<StructObject> objs;
        objs.push_back({"pi", "bivector", ch, Multivector::zero(ch, 2)});
        objs.push_back({"j", "tensor11", ch, ComplexChart::standard_j(ch)});
        files.push_back({"zero_pi.toml", write_structfile(objs)});
    }

    // the 5-dimensional complex contact model and its circle-bundle forms
    {
        DarbouxExample d1 = darboux_example(1);
        std::vector<StructObject> objs;
        objs.push_back({"theta", "form", d1.cc.chart, d1.theta});
        objs.push_back({"contact-pair", "multiderivation", d1.cc.chart, d1.j});
        objs.push_back({"vartheta", "form", d1.circle_chart, d1.vartheta});
        objs.push_back({"vartheta_j", "form", d1.circle_chart, d1.vartheta_j});
        files.push_back({"darboux_n1.toml", write_structfile(objs)});
    }

    // linear structures on duals of complex Lie algebras
    {
        auto c = zero_table(3);
        set_c(c, 0, 1, 2, 1);   // [e, f] = h
        set_c(c, 2, 0, 0, 2);   // [h, e] = 2e
        set_c(c, 2, 1, 1, -2);  // [h, f] = -2f
        LiePoisson lp = lie_poisson(c);
        files.push_back({"sl2_lie_poisson.toml",
                         write_structfile({{"pi", "bivector", lp.cc.chart, lp.hp.pi}})});
    }
    {
        auto c = zero_table(3);
        set_c(c, 0, 1, 2, 1);  // [e1, e2] = e3
        LiePoisson lp = lie_poisson(c);
        files.push_back({"heisenberg_lie_poisson.toml",
                         write_structfile({{"pi", "bivector", lp.cc.chart, lp.hp.pi}})});
    }
    return files;
}

} // namespace jetgeom
