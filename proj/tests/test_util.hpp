#pragma once
#include <jetgeom/expr.hpp>
#include <jetgeom/parser.hpp>

#include <random>

// Random polynomial expression in the chart's non-angle coordinates,
// degree <= max_deg, small integer coefficients (optionally complex).
inline jetgeom::ScalarExpr random_poly(const jetgeom::ChartPtr& chart, std::mt19937& rng,
                                       int max_deg = 2, bool complex_coeffs = false,
                                       int nterms = 4) {
    using namespace jetgeom;
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> pick(0, (int)chart->dim() - 1);
    ScalarExpr e = ScalarExpr::zero(chart);
    for (int t = 0; t < nterms; ++t) {
        CNum c((long)coef(rng));
        if (complex_coeffs) c = c + CNum::i() * CNum((long)coef(rng));
        ScalarExpr term = ScalarExpr::constant(chart, c);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) {
            int ci = pick(rng);
            if (chart->is_angle(ci)) {
                term = term * (coef(rng) >= 0 ? ScalarExpr::sin_of(chart, chart->coords()[ci])
                                              : ScalarExpr::cos_of(chart, chart->coords()[ci]));
            } else {
                term = term * ScalarExpr::coordinate(chart, chart->coords()[ci]);
            }
        }
        e = e + term;
    }
    return e;
}
