#pragma once
#include "jetgeom/error.hpp"
#include "jetgeom/expr.hpp"
#include "jetgeom/report.hpp"

#include <map>
#include <utility>

namespace jetgeom {

// Strictly increasing tuple of 0-based coordinate indices.
using IdxTuple = std::vector<int>;

// Sort in place; returns the permutation sign (+1/-1), or 0 on duplicates.
int sort_tuple(IdxTuple& t);

enum class Variance { Contra, Co };

// Graded antisymmetric component table over a chart. Only strictly
// increasing index tuples with nonzero components are stored; degree 0 is a
// scalar (single empty-tuple slot).
template <Variance V>
class Skew {
public:
    ChartPtr chart;
    int degree = 0;
    std::map<IdxTuple, ScalarExpr> comps;

    Skew() = default;
    Skew(ChartPtr ch, int deg) : chart(std::move(ch)), degree(deg) {}

    static Skew zero(ChartPtr ch, int deg) { return Skew(std::move(ch), deg); }
    static Skew from_scalar(const ScalarExpr& f) {
        Skew s(f.chart(), 0);
        s.add({}, f);
        return s;
    }
    ScalarExpr to_scalar() const {
        if (degree != 0) throw StructureError("not a degree-0 table");
        return get({});
    }

    bool is_zero() const {
        for (const auto& [t, e] : comps)
            if (!e.is_zero()) return false;
        return true;
    }
    bool equals(const Skew& o) const {
        if (degree != o.degree || !same_chart(chart, o.chart)) return false;
        Skew d = *this - o;
        return d.is_zero();
    }

    // Accumulate a component at an arbitrarily ordered tuple.
    void add(IdxTuple t, const ScalarExpr& e) {
        if ((int)t.size() != degree) throw StructureError("index tuple arity mismatch");
        if (e.is_zero()) return;
        int sgn = sort_tuple(t);
        if (sgn == 0) return;
        ScalarExpr v = sgn < 0 ? -e : e;
        auto it = comps.find(t);
        if (it == comps.end()) comps.emplace(std::move(t), std::move(v));
        else {
            it->second += v;
            if (it->second.is_zero()) comps.erase(it);
        }
    }
    void set(IdxTuple t, const ScalarExpr& e) {
        int sgn = sort_tuple(t);
        if (sgn == 0) {
            if (!e.is_zero()) throw StructureError("repeated index with nonzero component");
            return;
        }
        comps.erase(t);
        add(std::move(t), sgn < 0 ? -e : e);
    }
    ScalarExpr get(IdxTuple t) const {
        int sgn = sort_tuple(t);
        if (sgn == 0) return ScalarExpr::zero(chart);
        auto it = comps.find(t);
        if (it == comps.end()) return ScalarExpr::zero(chart);
        return sgn < 0 ? -it->second : it->second;
    }

    Skew operator-() const {
        Skew r(chart, degree);
        for (const auto& [t, e] : comps) r.comps.emplace(t, -e);
        return r;
    }
    friend Skew operator+(const Skew& a, const Skew& b) {
        require_same_chart(a.chart, b.chart);
        if (a.degree != b.degree) throw StructureError("degree mismatch");
        Skew r = a;
        for (const auto& [t, e] : b.comps) r.add(t, e);
        return r;
    }
    friend Skew operator-(const Skew& a, const Skew& b) { return a + (-b); }
    friend Skew operator*(const ScalarExpr& f, const Skew& a) {
        Skew r(a.chart, a.degree);
        for (const auto& [t, e] : a.comps) r.add(t, f * e);
        return r;
    }

    Skew conj() const {
        Skew r(chart, degree);
        for (const auto& [t, e] : comps) r.add(t, e.conj());
        return r;
    }

    friend Skew wedge(const Skew& a, const Skew& b) {
        require_same_chart(a.chart, b.chart);
        Skew r(a.chart, a.degree + b.degree);
        if (r.degree > (int)a.chart->dim()) return r;
        for (const auto& [ta, ea] : a.comps)
            for (const auto& [tb, eb] : b.comps) {
                IdxTuple t = ta;
                t.insert(t.end(), tb.begin(), tb.end());
                r.add(std::move(t), ea * eb);
            }
        return r;
    }

    // Rewrite onto another chart (variables mapped by name).
    Skew transfer(ChartPtr target) const {
        Skew r(target, degree);
        for (const auto& [t, e] : comps) {
            for (int ci : t)
                if (target->coord_index(chart->coords()[ci]) < 0)
                    throw StructureError("index coordinate absent from target chart: " +
                                         chart->coords()[ci]);
            IdxTuple mapped;
            for (int ci : t) mapped.push_back(target->coord_index(chart->coords()[ci]));
            r.add(std::move(mapped), e.transfer(target));
        }
        return r;
    }

    std::string str() const;
};

using Multivector = Skew<Variance::Contra>;
using DiffForm = Skew<Variance::Co>;

// Coordinate frame helpers.
Multivector unit_vector(ChartPtr chart, int ci);
DiffForm unit_form(ChartPtr chart, int ci);
DiffForm exterior_derivative_of(const ScalarExpr& f);  // df

// Full contraction: P(alpha_1, ..., alpha_k) with k = P.degree.
ScalarExpr eval(const Multivector& P, const std::vector<DiffForm>& args);
// omega(X_1, ..., X_k).
ScalarExpr eval(const DiffForm& w, const std::vector<Multivector>& args);

// Interior products. (i_X w)(...) = w(X, ...); (i_a P)(...) = P(a, ...).
DiffForm interior(const Multivector& X, const DiffForm& w);
Multivector interior(const DiffForm& a, const Multivector& P);

// sharp(P, a) = P(a, -) for a bivector P and 1-form a.
Multivector sharp(const Multivector& P, const DiffForm& a);

DiffForm d(const DiffForm& w);

// Lie derivative along a vector field (degree-1 multivector).
DiffForm lie(const Multivector& X, const DiffForm& w);
Multivector lie(const Multivector& X, const Multivector& P);
ScalarExpr lie(const Multivector& X, const ScalarExpr& f);

// Schouten-Nijenhuis bracket; degree (p, q) -> p+q-1. Degree-0 arguments act
// as functions ([P, f] is P's derivation action on f).
Multivector schouten_nijenhuis(const Multivector& P, const Multivector& Q);

// (1,1)-tensor phi with phi(d_j) = sum_i m[i][j] d_i.
class Tensor11 {
public:
    ChartPtr chart;
    std::vector<std::vector<ScalarExpr>> m;

    Tensor11() = default;
    static Tensor11 zero(ChartPtr chart);
    static Tensor11 identity(ChartPtr chart);

    Multivector apply(const Multivector& X) const;   // degree 1
    DiffForm pullback(const DiffForm& a) const;      // phi^* on 1-forms
    Tensor11 compose(const Tensor11& o) const;       // this after o
    Tensor11 transpose() const;
    Tensor11 operator-() const;
    friend Tensor11 operator+(const Tensor11& a, const Tensor11& b);
    friend Tensor11 operator-(const Tensor11& a, const Tensor11& b);
    friend Tensor11 operator*(const ScalarExpr& f, const Tensor11& a);
    bool is_zero() const;
    bool equals(const Tensor11& o) const;
    Tensor11 conj() const;
};

// Lie derivative of a (1,1)-tensor: (L_X phi)(Y) = [X, phi Y] - phi[X, Y].
Tensor11 lie(const Multivector& X, const Tensor11& phi);

// Nijenhuis torsion evaluated on the coordinate frame; key (a, b) with a < b
// maps to the vector field N_phi(d_a, d_b).
using VectorValued2Form = std::map<std::pair<int, int>, Multivector>;
VectorValued2Form nijenhuis_torsion(const Tensor11& phi);
bool torsion_is_zero(const VectorValued2Form& n);
std::string torsion_str(const VectorValued2Form& n, const Chart& chart);

// pi_phi(a, b) := pi(phi^* a, b). Requires pi# after phi^* to equal phi
// after pi#; throws StructureError (with the offending entry) otherwise,
// and re-verifies antisymmetry of the result.
Multivector pi_phi(const Multivector& pi, const Tensor11& phi);

// [a, b]_pi = L_{pi#a} b - L_{pi#b} a - d(pi(a, b)).
DiffForm form_bracket_pi(const Multivector& pi, const DiffForm& a, const DiffForm& b);

// The two compatibility conditions of a Poisson-Nijenhuis candidate pair:
// pi# phi^* = phi pi# and the bracket deformation identity on a generating
// set of 1-forms (coordinate differentials plus weighted instances).
Report pn_compatible(const Multivector& pi, const Tensor11& phi);

} // namespace jetgeom
