#include "jetgeom/numeric.hpp"
#include "jetgeom/error.hpp"

namespace jetgeom {

CNum operator/(const CNum& a, const CNum& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero constant");
    mpq_class n = b.re * b.re + b.im * b.im;
    return CNum((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

static std::string q_str(const mpq_class& q) { return q.get_str(); }

std::string CNum::str() const {
    if (im == 0) return q_str(re);
    std::string ipart;
    if (im == 1) ipart = "i";
    else if (im == -1) ipart = "-i";
    else ipart = q_str(im) + "*i";
    if (re == 0) return ipart;
    std::string s = "(" + q_str(re);
    if (ipart[0] != '-') s += "+";
    s += ipart + ")";
    return s;
}

} // namespace jetgeom
