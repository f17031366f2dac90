#pragma once
#include <gmpxx.h>
#include <string>

namespace jetgeom {

// Gaussian rational: a + b*i with exact rational a, b.
struct CNum {
    mpq_class re, im;

    CNum() : re(0), im(0) {}
    CNum(long r) : re(r), im(0) {}
    CNum(const mpq_class& r) : re(r), im(0) {}
    CNum(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static CNum i() { return CNum(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    CNum conj() const { return CNum(re, -im); }

    CNum operator-() const { return CNum(-re, -im); }
    CNum& operator+=(const CNum& o) { re += o.re; im += o.im; return *this; }
    CNum& operator-=(const CNum& o) { re -= o.re; im -= o.im; return *this; }

    friend CNum operator+(const CNum& a, const CNum& b) { return CNum(a.re + b.re, a.im + b.im); }
    friend CNum operator-(const CNum& a, const CNum& b) { return CNum(a.re - b.re, a.im - b.im); }
    friend CNum operator*(const CNum& a, const CNum& b) {
        return CNum(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend CNum operator/(const CNum& a, const CNum& b);
    friend bool operator==(const CNum& a, const CNum& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CNum& a, const CNum& b) { return !(a == b); }

    // Canonical text form, e.g. "2", "-1/3", "i", "-2*i", "(1+1/2*i)".
    std::string str() const;
};

} // namespace jetgeom
