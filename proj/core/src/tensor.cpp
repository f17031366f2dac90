#include "jetgeom/tensor.hpp"
#include "jetgeom/error.hpp"

namespace jetgeom {

int sort_tuple(IdxTuple& t) {
    int sgn = 1;
    for (std::size_t a = 1; a < t.size(); ++a) {
        int v = t[a];
        std::size_t b = a;
        while (b > 0 && t[b - 1] > v) {
            t[b] = t[b - 1];
            --b;
            sgn = -sgn;
        }
        t[b] = v;
    }
    for (std::size_t a = 1; a < t.size(); ++a)
        if (t[a] == t[a - 1]) return 0;
    return sgn;
}

template <Variance V>
std::string Skew<V>::str() const {
    if (comps.empty()) return "0";
    std::string out;
    for (const auto& [t, e] : comps) {
        if (!out.empty()) out += ";  ";
        out += "[";
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (k) out += ",";
            out += chart->coords()[t[k]];
        }
        out += "]: " + e.str();
    }
    return out;
}
template std::string Skew<Variance::Contra>::str() const;
template std::string Skew<Variance::Co>::str() const;

Multivector unit_vector(ChartPtr chart, int ci) {
    Multivector v(chart, 1);
    v.add({ci}, ScalarExpr::one(chart));
    return v;
}

DiffForm unit_form(ChartPtr chart, int ci) {
    DiffForm v(chart, 1);
    v.add({ci}, ScalarExpr::one(chart));
    return v;
}

DiffForm exterior_derivative_of(const ScalarExpr& f) {
    DiffForm df(f.chart(), 1);
    for (std::size_t a = 0; a < f.chart()->dim(); ++a) df.add({(int)a}, f.diff(a));
    return df;
}

static ScalarExpr det(const ChartPtr& chart, std::vector<std::vector<ScalarExpr>>& m,
                      std::vector<int>& cols, std::size_t row) {
    if (row == m.size()) return ScalarExpr::one(chart);
    ScalarExpr acc = ScalarExpr::zero(chart);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] < 0) continue;
        int col = cols[k];
        if (m[row][col].is_zero()) continue;
        cols[k] = -1;
        ScalarExpr sub = det(chart, m, cols, row + 1);
        cols[k] = col;
        // sign: number of still-active columns before position k
        int before = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (cols[j] >= 0) ++before;
        ScalarExpr term = m[row][col] * sub;
        acc = (before % 2) ? acc - term : acc + term;
    }
    return acc;
}

template <Variance A, Variance B>
static ScalarExpr eval_impl(const Skew<A>& T, const std::vector<Skew<B>>& args) {
    if ((int)args.size() != T.degree) throw StructureError("evaluation arity mismatch");
    for (const auto& a : args) {
        require_same_chart(T.chart, a.chart);
        if (a.degree != 1) throw StructureError("evaluation arguments must have degree 1");
    }
    ScalarExpr acc = ScalarExpr::zero(T.chart);
    std::size_t k = args.size();
    for (const auto& [I, c] : T.comps) {
        std::vector<std::vector<ScalarExpr>> m(k);
        for (std::size_t r = 0; r < k; ++r) {
            m[r].reserve(k);
            for (std::size_t l = 0; l < k; ++l) m[r].push_back(args[r].get({I[l]}));
        }
        std::vector<int> cols(k);
        for (std::size_t l = 0; l < k; ++l) cols[l] = (int)l;
        acc += c * det(T.chart, m, cols, 0);
    }
    return acc;
}

ScalarExpr eval(const Multivector& P, const std::vector<DiffForm>& args) { return eval_impl(P, args); }
ScalarExpr eval(const DiffForm& w, const std::vector<Multivector>& args) { return eval_impl(w, args); }

template <Variance A, Variance B>
static Skew<B> interior_impl(const Skew<A>& X, const Skew<B>& w) {
    require_same_chart(X.chart, w.chart);
    if (X.degree != 1) throw StructureError("interior product needs a degree-1 argument");
    if (w.degree == 0) throw StructureError("interior product into degree 0");
    Skew<B> r(w.chart, w.degree - 1);
    for (const auto& [I, c] : w.comps)
        for (std::size_t l = 0; l < I.size(); ++l) {
            ScalarExpr coeff = X.get({I[l]});
            if (coeff.is_zero()) continue;
            IdxTuple J;
            for (std::size_t k = 0; k < I.size(); ++k)
                if (k != l) J.push_back(I[k]);
            ScalarExpr term = coeff * c;
            r.add(std::move(J), (l % 2) ? -term : term);
        }
    return r;
}

DiffForm interior(const Multivector& X, const DiffForm& w) { return interior_impl(X, w); }
Multivector interior(const DiffForm& a, const Multivector& P) { return interior_impl(a, P); }

Multivector sharp(const Multivector& P, const DiffForm& a) {
    if (P.degree != 2) throw StructureError("sharp expects a bivector");
    return interior(a, P);
}

DiffForm d(const DiffForm& w) {
    DiffForm r(w.chart, w.degree + 1);
    for (const auto& [I, c] : w.comps)
        for (std::size_t a = 0; a < w.chart->dim(); ++a) {
            IdxTuple t;
            t.push_back((int)a);
            t.insert(t.end(), I.begin(), I.end());
            r.add(std::move(t), c.diff(a));
        }
    return r;
}

ScalarExpr lie(const Multivector& X, const ScalarExpr& f) {
    if (X.degree != 1) throw StructureError("Lie derivative needs a vector field");
    ScalarExpr acc = ScalarExpr::zero(X.chart);
    for (const auto& [I, c] : X.comps) acc += c * f.diff(I[0]);
    return acc;
}

DiffForm lie(const Multivector& X, const DiffForm& w) {
    if (w.degree == 0) return DiffForm::from_scalar(lie(X, w.to_scalar()));
    return interior(X, d(w)) + d(interior(X, w));
}

Multivector schouten_nijenhuis(const Multivector& P, const Multivector& Q) {
    require_same_chart(P.chart, Q.chart);
    int p = P.degree, q = Q.degree;
    if (p == 0 && q == 0) return Multivector::zero(P.chart, 0);
    Multivector r(P.chart, p + q - 1);
    for (const auto& [I, f] : P.comps)
        for (const auto& [J, g] : Q.comps) {
            for (int t = 1; t <= p; ++t) {  // P-factor t differentiates g
                ScalarExpr coeff = f * g.diff(I[t - 1]);
                if (coeff.is_zero()) continue;
                IdxTuple idx;
                for (int k = 0; k < p; ++k)
                    if (k != t - 1) idx.push_back(I[k]);
                idx.insert(idx.end(), J.begin(), J.end());
                r.add(std::move(idx), ((p - t) % 2) ? -coeff : coeff);
            }
            for (int s = 1; s <= q; ++s) {  // Q-factor s differentiates f
                ScalarExpr coeff = g * f.diff(J[s - 1]);
                if (coeff.is_zero()) continue;
                IdxTuple idx(I);
                for (int k = 0; k < q; ++k)
                    if (k != s - 1) idx.push_back(J[k]);
                r.add(std::move(idx), ((s - 1) % 2) ? coeff : -coeff);
            }
        }
    return r;
}

Multivector lie(const Multivector& X, const Multivector& P) {
    if (X.degree != 1) throw StructureError("Lie derivative needs a vector field");
    return schouten_nijenhuis(X, P);
}

// ---------------------------------------------------------------- Tensor11

Tensor11 Tensor11::zero(ChartPtr chart) {
    Tensor11 t;
    std::size_t n = chart->dim();
    t.m.assign(n, std::vector<ScalarExpr>(n, ScalarExpr::zero(chart)));
    t.chart = std::move(chart);
    return t;
}

Tensor11 Tensor11::identity(ChartPtr chart) {
    Tensor11 t = zero(chart);
    for (std::size_t k = 0; k < t.m.size(); ++k) t.m[k][k] = ScalarExpr::one(t.chart);
    return t;
}

Multivector Tensor11::apply(const Multivector& X) const {
    require_same_chart(chart, X.chart);
    if (X.degree != 1) throw StructureError("Tensor11 applies to vector fields");
    Multivector r(chart, 1);
    for (const auto& [J, c] : X.comps)
        for (std::size_t i = 0; i < m.size(); ++i) r.add({(int)i}, m[i][J[0]] * c);
    return r;
}

DiffForm Tensor11::pullback(const DiffForm& a) const {
    require_same_chart(chart, a.chart);
    if (a.degree != 1) throw StructureError("pullback acts on 1-forms here");
    DiffForm r(chart, 1);
    for (const auto& [I, c] : a.comps)
        for (std::size_t j = 0; j < m.size(); ++j) r.add({(int)j}, m[I[0]][j] * c);
    return r;
}

Tensor11 Tensor11::compose(const Tensor11& o) const {
    require_same_chart(chart, o.chart);
    Tensor11 r = zero(chart);
    std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr acc = ScalarExpr::zero(chart);
            for (std::size_t k = 0; k < n; ++k) acc += m[i][k] * o.m[k][j];
            r.m[i][j] = acc;
        }
    return r;
}

Tensor11 Tensor11::transpose() const {
    Tensor11 r = zero(chart);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r.m[i][j] = m[j][i];
    return r;
}

Tensor11 Tensor11::operator-() const {
    Tensor11 r = *this;
    for (auto& row : r.m)
        for (auto& e : row) e = -e;
    return r;
}

Tensor11 operator+(const Tensor11& a, const Tensor11& b) {
    require_same_chart(a.chart, b.chart);
    Tensor11 r = a;
    for (std::size_t i = 0; i < r.m.size(); ++i)
        for (std::size_t j = 0; j < r.m.size(); ++j) r.m[i][j] += b.m[i][j];
    return r;
}

Tensor11 operator-(const Tensor11& a, const Tensor11& b) { return a + (-b); }

Tensor11 operator*(const ScalarExpr& f, const Tensor11& a) {
    Tensor11 r = a;
    for (auto& row : r.m)
        for (auto& e : row) e = f * e;
    return r;
}

bool Tensor11::is_zero() const {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool Tensor11::equals(const Tensor11& o) const { return (*this - o).is_zero(); }

Tensor11 Tensor11::conj() const {
    Tensor11 r = *this;
    for (auto& row : r.m)
        for (auto& e : row) e = e.conj();
    return r;
}

Tensor11 lie(const Multivector& X, const Tensor11& phi) {
    Tensor11 r = Tensor11::zero(phi.chart);
    std::size_t n = phi.m.size();
    for (std::size_t j = 0; j < n; ++j) {
        Multivector col(phi.chart, 1);
        for (std::size_t i = 0; i < n; ++i) col.add({(int)i}, phi.m[i][j]);
        Multivector lhs = schouten_nijenhuis(X, col);
        Multivector rhs = phi.apply(schouten_nijenhuis(X, unit_vector(phi.chart, (int)j)));
        Multivector res = lhs - rhs;
        for (std::size_t i = 0; i < n; ++i) r.m[i][j] = res.get({(int)i});
    }
    return r;
}

VectorValued2Form nijenhuis_torsion(const Tensor11& phi) {
    std::size_t n = phi.chart->dim();
    if (phi.m.size() != n) throw StructureError("Tensor11 dimension mismatch");
    VectorValued2Form out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Multivector ea = unit_vector(phi.chart, (int)a);
            Multivector eb = unit_vector(phi.chart, (int)b);
            Multivector pa = phi.apply(ea), pb = phi.apply(eb);
            Multivector t = schouten_nijenhuis(pa, pb) -
                            phi.apply(schouten_nijenhuis(pa, eb)) -
                            phi.apply(schouten_nijenhuis(ea, pb));
            // + phi^2 [ea, eb] vanishes on the coordinate frame
            out.emplace(std::make_pair((int)a, (int)b), std::move(t));
        }
    return out;
}

bool torsion_is_zero(const VectorValued2Form& n) {
    for (const auto& [k, v] : n)
        if (!v.is_zero()) return false;
    return true;
}

std::string torsion_str(const VectorValued2Form& n, const Chart& chart) {
    std::string out;
    for (const auto& [k, v] : n) {
        if (v.is_zero()) continue;
        if (!out.empty()) out += "; ";
        out += "N(" + chart.coords()[k.first] + "," + chart.coords()[k.second] + ") = " + v.str();
    }
    return out.empty() ? "0" : out;
}

static bool sharp_intertwines(const Multivector& pi, const Tensor11& phi, std::string* why) {
    for (std::size_t i = 0; i < pi.chart->dim(); ++i) {
        DiffForm dxi = unit_form(pi.chart, (int)i);
        Multivector lhs = sharp(pi, phi.pullback(dxi));
        Multivector rhs = phi.apply(sharp(pi, dxi));
        if (!lhs.equals(rhs)) {
            if (why)
                *why = "pi# phi* != phi pi# on d" + pi.chart->coords()[i] +
                       ": difference " + (lhs - rhs).str();
            return false;
        }
    }
    return true;
}

Multivector pi_phi(const Multivector& pi, const Tensor11& phi) {
    require_same_chart(pi.chart, phi.chart);
    if (pi.degree != 2) throw StructureError("pi must be a bivector");
    std::string why;
    if (!sharp_intertwines(pi, phi, &why)) throw StructureError(why);
    std::size_t n = pi.chart->dim();
    Multivector r(pi.chart, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            DiffForm dxi = unit_form(pi.chart, (int)i), dxj = unit_form(pi.chart, (int)j);
            ScalarExpr c = eval(pi, {phi.pullback(dxi), dxj});
            ScalarExpr c2 = eval(pi, {phi.pullback(dxj), dxi});
            if (!(c + c2).is_zero())
                throw StructureError("pi(phi-,-) is not antisymmetric at (" +
                                     pi.chart->coords()[i] + "," + pi.chart->coords()[j] + ")");
            r.add({(int)i, (int)j}, c);
        }
    return r;
}

DiffForm form_bracket_pi(const Multivector& pi, const DiffForm& a, const DiffForm& b) {
    require_same_chart(pi.chart, a.chart);
    require_same_chart(pi.chart, b.chart);
    ScalarExpr pab = eval(pi, {a, b});
    return lie(sharp(pi, a), b) - lie(sharp(pi, b), a) - exterior_derivative_of(pab);
}

Report pn_compatible(const Multivector& pi, const Tensor11& phi) {
    Report rep;
    std::string why;
    if (!sharp_intertwines(pi, phi, &why)) {
        rep.fail(why);
        rep.note("bracket condition skipped: pi(phi-,-) undefined");
        return rep;
    }
    Multivector pip = pi_phi(pi, phi);
    // Generating set: coordinate differentials plus one function-weighted form.
    std::vector<DiffForm> gens;
    std::size_t n = pi.chart->dim();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_form(pi.chart, (int)i));
    ScalarExpr weight = ScalarExpr::one(pi.chart);
    for (std::size_t ci = 0; ci < n; ++ci)
        if (!pi.chart->is_angle(ci)) {
            weight = ScalarExpr::coordinate(pi.chart, pi.chart->coords()[ci]);
            break;
        }
    for (std::size_t i = 0; i < n; ++i) gens.push_back(weight * unit_form(pi.chart, (int)i));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            DiffForm lhs = phi.pullback(form_bracket_pi(pi, gens[i], gens[j]));
            DiffForm rhs = form_bracket_pi(pi, phi.pullback(gens[i]), gens[j]) +
                           form_bracket_pi(pi, gens[i], phi.pullback(gens[j])) -
                           form_bracket_pi(pip, gens[i], gens[j]);
            if (!lhs.equals(rhs))
                rep.fail("bracket compatibility fails on generator pair (" + std::to_string(i) +
                         "," + std::to_string(j) + "): difference " + (lhs - rhs).str());
        }
    return rep;
}

} // namespace jetgeom
