#include "jetgeom/expr.hpp"
#include "jetgeom/error.hpp"

#include <algorithm>

namespace jetgeom {

// ---------------------------------------------------------------- Poly

Poly Poly::constant(const CNum& c, std::size_t nvars) {
    Poly p;
    if (!c.is_zero()) p.terms.emplace(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t v, std::size_t nvars) {
    Poly p;
    Monomial m(nvars, 0);
    m[v] = 1;
    p.terms.emplace(std::move(m), CNum(1));
    return p;
}

void Poly::add_term(const Monomial& m, const CNum& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
}

static Poly poly_mul_raw(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m(ma.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const Chart& chart) {
    Poly r = poly_mul_raw(a, b);
    trig_reduce(r, chart);
    return r;
}

// Reduce one monomial modulo sin^2 = 1 - cos^2, accumulating into `out`.
static void reduce_term(Monomial m, CNum c, const Chart& chart, Poly& out) {
    for (std::size_t ci = 0; ci < chart.dim(); ++ci) {
        int s = chart.sin_var(ci);
        if (s < 0 || m[s] < 2) continue;
        Monomial lowered = m;
        lowered[s] -= 2;
        reduce_term(lowered, c, chart, out);
        lowered[chart.cos_var(ci)] += 2;
        reduce_term(lowered, -c, chart, out);
        return;
    }
    out.add_term(m, c);
}

void trig_reduce(Poly& p, const Chart& chart) {
    bool needed = false;
    for (const auto& [m, c] : p.terms) {
        for (std::size_t ci = 0; ci < chart.dim() && !needed; ++ci) {
            int s = chart.sin_var(ci);
            if (s >= 0 && m[s] >= 2) needed = true;
        }
        if (needed) break;
    }
    if (!needed) return;
    Poly out;
    for (const auto& [m, c] : p.terms) reduce_term(m, c, chart, out);
    p = std::move(out);
}

bool poly_divide(const Poly& a, const Poly& b, Poly& quotient) {
    quotient = Poly{};
    if (b.is_zero()) return false;
    Poly rem = a;
    auto lead_b = *b.terms.rbegin();
    while (!rem.is_zero()) {
        auto lead_r = *rem.terms.rbegin();
        Monomial t(lead_r.first.size());
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (lead_r.first[k] < lead_b.first[k]) return false;
            t[k] = lead_r.first[k] - lead_b.first[k];
        }
        CNum q = lead_r.second / lead_b.second;
        quotient.add_term(t, q);
        Poly tmono;
        tmono.terms.emplace(std::move(t), q);
        rem = rem - poly_mul_raw(tmono, b);
    }
    return true;
}

Poly poly_diff(const Poly& p, std::size_t ci, const Chart& chart) {
    Poly r;
    int v = chart.coord_var(ci);
    int s = chart.sin_var(ci), c_ = chart.cos_var(ci);
    for (const auto& [m, c] : p.terms) {
        if (v >= 0 && m[v] > 0) {
            Monomial d = m;
            d[v] -= 1;
            r.add_term(d, c * CNum((long)m[v]));
        }
        if (s >= 0) {
            if (m[s] > 0) {  // d/dpsi sin = cos
                Monomial d = m;
                d[s] -= 1;
                d[c_] += 1;
                r.add_term(d, c * CNum((long)m[s]));
            }
            if (m[c_] > 0) {  // d/dpsi cos = -sin
                Monomial d = m;
                d[c_] -= 1;
                d[s] += 1;
                r.add_term(d, -(c * CNum((long)m[c_])));
            }
        }
    }
    trig_reduce(r, chart);
    return r;
}

Poly poly_conj(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms) r.terms.emplace(m, c.conj());
    return r;
}

std::string poly_str(const Poly& p, const Chart& chart) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const Monomial& m = it->first;
        CNum c = it->second;
        bool neg = false;
        std::string mag;
        if (c.is_real()) {
            neg = c.re < 0;
            mag = (neg ? CNum(mpq_class(-c.re)) : c).str();
        } else if (c.re == 0) {
            neg = c.im < 0;
            CNum a = neg ? -c : c;
            mag = a.str();
        } else {
            mag = c.str();
        }
        std::string ms;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!ms.empty()) ms += "*";
            ms += chart.var_name(v);
            if (m[v] > 1) ms += "^" + std::to_string(m[v]);
        }
        std::string piece;
        if (ms.empty()) piece = mag;
        else if (mag == "1") piece = ms;
        else piece = mag + "*" + ms;
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

// ---------------------------------------------------------------- ScalarExpr

ScalarExpr ScalarExpr::constant(ChartPtr chart, const CNum& c) {
    ScalarExpr e;
    std::size_t n = chart->nvars();
    e.chart_ = std::move(chart);
    e.num_ = Poly::constant(c, n);
    e.den_ = Poly::constant(CNum(1), n);
    return e;
}

ScalarExpr ScalarExpr::coordinate(ChartPtr chart, const std::string& name) {
    int ci = chart->coord_index(name);
    if (ci < 0) throw StructureError("unknown coordinate: " + name);
    if (chart->is_angle(ci))
        throw StructureError("angle coordinate may only appear inside sin/cos: " + name);
    ScalarExpr e;
    std::size_t n = chart->nvars();
    e.num_ = Poly::variable(chart->coord_var(ci), n);
    e.den_ = Poly::constant(CNum(1), n);
    e.chart_ = std::move(chart);
    return e;
}

static ScalarExpr trig_var(ChartPtr chart, const std::string& angle, bool want_sin) {
    int ci = chart->coord_index(angle);
    if (ci < 0) throw StructureError("unknown coordinate: " + angle);
    if (!chart->is_angle(ci))
        throw StructureError("sin/cos require an angle coordinate, got: " + angle);
    std::size_t v = want_sin ? chart->sin_var(ci) : chart->cos_var(ci);
    Poly num = Poly::variable(v, chart->nvars());
    Poly den = Poly::constant(CNum(1), chart->nvars());
    return ScalarExpr::fraction(std::move(chart), std::move(num), std::move(den));
}

ScalarExpr ScalarExpr::sin_of(ChartPtr chart, const std::string& a) { return trig_var(std::move(chart), a, true); }
ScalarExpr ScalarExpr::cos_of(ChartPtr chart, const std::string& a) { return trig_var(std::move(chart), a, false); }

ScalarExpr ScalarExpr::fraction(ChartPtr chart, Poly num, Poly den) {
    ScalarExpr e;
    e.chart_ = std::move(chart);
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    e.normalize();
    return e;
}

void ScalarExpr::normalize() {
    trig_reduce(num_, *chart_);
    trig_reduce(den_, *chart_);
    if (den_.is_zero()) throw DivisionByZero("division by identically zero expression");
    std::size_t n = chart_->nvars();
    if (num_.is_zero()) {
        den_ = Poly::constant(CNum(1), n);
        return;
    }
    // Cancel the common monomial content.
    Monomial g(n, UINT32_MAX);
    auto shrink = [&](const Poly& p) {
        for (const auto& [m, c] : p.terms)
            for (std::size_t k = 0; k < n; ++k) g[k] = std::min(g[k], m[k]);
    };
    shrink(num_);
    shrink(den_);
    bool nontrivial = false;
    for (std::size_t k = 0; k < n; ++k) nontrivial |= g[k] > 0;
    if (nontrivial) {
        auto strip = [&](Poly& p) {
            Poly q;
            for (const auto& [m, c] : p.terms) {
                Monomial d(n);
                for (std::size_t k = 0; k < n; ++k) d[k] = m[k] - g[k];
                q.terms.emplace(std::move(d), c);
            }
            p = std::move(q);
        };
        strip(num_);
        strip(den_);
    }
    Poly q;
    if (poly_divide(num_, den_, q)) {
        Poly reduced = q;
        trig_reduce(reduced, *chart_);
        num_ = std::move(reduced);
        den_ = Poly::constant(CNum(1), n);
        if (num_.is_zero()) return;
    }
    // Make the leading denominator coefficient 1.
    CNum lead = den_.terms.rbegin()->second;
    if (!(lead == CNum(1))) {
        for (auto& [m, c] : num_.terms) c = c / lead;
        for (auto& [m, c] : den_.terms) c = c / lead;
    }
}

bool ScalarExpr::is_one() const {
    return den_.terms.size() == 1 && (*this - one(chart_)).is_zero();
}

bool ScalarExpr::equals(const ScalarExpr& o) const {
    return (*this - o).is_zero();
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr e = *this;
    e.num_ = -e.num_;
    return e;
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    require_same_chart(a.chart_, b.chart_);
    const Chart& ch = *a.chart_;
    if (a.den_ == b.den_)
        return ScalarExpr::fraction(a.chart_, a.num_ + b.num_, a.den_);
    Poly num = poly_mul(a.num_, b.den_, ch) + poly_mul(b.num_, a.den_, ch);
    Poly den = poly_mul(a.den_, b.den_, ch);
    return ScalarExpr::fraction(a.chart_, std::move(num), std::move(den));
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    require_same_chart(a.chart_, b.chart_);
    const Chart& ch = *a.chart_;
    return ScalarExpr::fraction(a.chart_, poly_mul(a.num_, b.num_, ch),
                                poly_mul(a.den_, b.den_, ch));
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
    require_same_chart(a.chart_, b.chart_);
    const Chart& ch = *a.chart_;
    return ScalarExpr::fraction(a.chart_, poly_mul(a.num_, b.den_, ch),
                                poly_mul(a.den_, b.num_, ch));
}

ScalarExpr ScalarExpr::pow(long n) const {
    if (n < 0) return one(chart_) / pow(-n);
    ScalarExpr r = one(chart_);
    for (long k = 0; k < n; ++k) r = r * *this;
    return r;
}

ScalarExpr ScalarExpr::diff(const std::string& coord) const {
    int ci = chart_->coord_index(coord);
    if (ci < 0) throw StructureError("unknown coordinate: " + coord);
    return diff((std::size_t)ci);
}

ScalarExpr ScalarExpr::diff(std::size_t ci) const {
    const Chart& ch = *chart_;
    Poly dn = poly_diff(num_, ci, ch);
    Poly dd = poly_diff(den_, ci, ch);
    // (n/d)' = (n'd - nd') / d^2
    Poly num = poly_mul(dn, den_, ch) - poly_mul(num_, dd, ch);
    Poly den = poly_mul(den_, den_, ch);
    return fraction(chart_, std::move(num), std::move(den));
}

ScalarExpr ScalarExpr::conj() const {
    ScalarExpr e = *this;
    e.num_ = poly_conj(e.num_);
    e.den_ = poly_conj(e.den_);
    e.normalize();
    return e;
}

ScalarExpr ScalarExpr::subst(const std::string& coord, const CNum& value) const {
    int ci = chart_->coord_index(coord);
    if (ci < 0) throw StructureError("unknown coordinate: " + coord);
    if (chart_->is_angle(ci)) throw StructureError("cannot substitute into an angle coordinate");
    std::size_t v = chart_->coord_var(ci);
    auto sub = [&](const Poly& p) {
        Poly r;
        for (const auto& [m, c] : p.terms) {
            CNum scaled = c;
            for (std::uint32_t k = 0; k < m[v]; ++k) scaled = scaled * value;
            Monomial d = m;
            d[v] = 0;
            r.add_term(d, scaled);
        }
        return r;
    };
    return fraction(chart_, sub(num_), sub(den_));
}

bool ScalarExpr::independent_of(const std::string& coord) const {
    int ci = chart_->coord_index(coord);
    if (ci < 0) throw StructureError("unknown coordinate: " + coord);
    auto uses = [&](const Poly& p, int v) {
        if (v < 0) return false;
        for (const auto& [m, c] : p.terms)
            if (m[v] > 0) return true;
        return false;
    };
    for (int v : {chart_->coord_var(ci), chart_->sin_var(ci), chart_->cos_var(ci)})
        if (uses(num_, v) || uses(den_, v)) return false;
    return true;
}

ScalarExpr ScalarExpr::transfer(ChartPtr target) const {
    std::size_t sn = chart_->nvars(), tn = target->nvars();
    std::vector<int> vmap(sn, -1);
    for (std::size_t v = 0; v < sn; ++v)
        for (std::size_t w = 0; w < tn; ++w)
            if (chart_->var_name(v) == target->var_name(w)) {
                vmap[v] = (int)w;
                break;
            }
    auto move_poly = [&](const Poly& p) {
        Poly r;
        for (const auto& [m, c] : p.terms) {
            Monomial d(tn, 0);
            for (std::size_t v = 0; v < sn; ++v) {
                if (m[v] == 0) continue;
                if (vmap[v] < 0)
                    throw StructureError("expression uses a coordinate absent from the target chart: " +
                                         chart_->var_name(v));
                d[vmap[v]] += m[v];
            }
            r.add_term(d, c);
        }
        return r;
    };
    return fraction(std::move(target), move_poly(num_), move_poly(den_));
}

std::string ScalarExpr::str() const {
    std::size_t n = chart_->nvars();
    if (den_ == Poly::constant(CNum(1), n)) return poly_str(num_, *chart_);
    return "(" + poly_str(num_, *chart_) + ")/(" + poly_str(den_, *chart_) + ")";
}

} // namespace jetgeom
