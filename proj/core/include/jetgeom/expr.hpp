#pragma once
#include "jetgeom/chart.hpp"
#include "jetgeom/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace jetgeom {

// Exponent vector over the chart's polynomial variables; lexicographic order
// (the std::map key order) is the monomial order used throughout.
using Monomial = std::vector<std::uint32_t>;

// Sparse multivariate polynomial with Gaussian-rational coefficients.
// Kept trig-reduced: no monomial carries sin^k with k >= 2 (rewritten via
// sin^2 = 1 - cos^2), so equality of reduced forms decides equality of
// functions for the supported fragment.
class Poly {
public:
    std::map<Monomial, CNum> terms;

    bool is_zero() const { return terms.empty(); }
    static Poly constant(const CNum& c, std::size_t nvars);
    static Poly variable(std::size_t v, std::size_t nvars);

    void add_term(const Monomial& m, const CNum& c);
    Poly operator-() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
};

Poly poly_mul(const Poly& a, const Poly& b, const Chart& chart);
// Rewrite sin^2 -> 1 - cos^2 until no sine exponent exceeds 1.
void trig_reduce(Poly& p, const Chart& chart);
// Exact division in the plain polynomial ring (no trig rewriting); returns
// false when b does not divide a.
bool poly_divide(const Poly& a, const Poly& b, Poly& quotient);
// d/d(coordinate ci), including the sin/cos chain rule for angle coordinates.
Poly poly_diff(const Poly& p, std::size_t ci, const Chart& chart);
Poly poly_conj(const Poly& p);
std::string poly_str(const Poly& p, const Chart& chart);

// Immutable normalized rational expression num/den over a chart.
// Invariants: den != 0; num == 0 implies den == 1; both parts trig-reduced;
// common monomial factors cancelled; the lexicographically leading
// denominator coefficient is 1; exact polynomial quotients are recognized.
class ScalarExpr {
public:
    ScalarExpr() = default;
    static ScalarExpr constant(ChartPtr chart, const CNum& c);
    static ScalarExpr zero(ChartPtr chart) { return constant(std::move(chart), CNum(0)); }
    static ScalarExpr one(ChartPtr chart) { return constant(std::move(chart), CNum(1)); }
    static ScalarExpr coordinate(ChartPtr chart, const std::string& name);
    static ScalarExpr sin_of(ChartPtr chart, const std::string& angle);
    static ScalarExpr cos_of(ChartPtr chart, const std::string& angle);
    static ScalarExpr fraction(ChartPtr chart, Poly num, Poly den);

    const ChartPtr& chart() const { return chart_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool equals(const ScalarExpr& o) const;

    ScalarExpr operator-() const;
    friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
    ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
    ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
    ScalarExpr pow(long n) const;

    ScalarExpr diff(const std::string& coord) const;
    ScalarExpr diff(std::size_t ci) const;
    ScalarExpr conj() const;

    // Substitute a non-angle coordinate by an exact constant.
    ScalarExpr subst(const std::string& coord, const CNum& value) const;
    // True when the expression does not involve the coordinate.
    bool independent_of(const std::string& coord) const;

    // Rewrite onto `target`, mapping variables by name; every variable
    // actually used must exist in the target chart.
    ScalarExpr transfer(ChartPtr target) const;

    std::string str() const;

private:
    ChartPtr chart_;
    Poly num_, den_;
    void normalize();
};

} // namespace jetgeom
