#pragma once

#include <cmath>
#include <complex>

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Only what the Bessel power series needs: the alternating series suffers
// ~1e11 cancellation near the series/asymptotic switch point, which plain
// doubles cannot absorb at the accuracy the switch-agreement contract asks.
namespace cesaro::dd {

struct Dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline Dd quick_two_sum(double a, double b) {
    // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline Dd add(Dd a, Dd b) {
    Dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline Dd add(Dd a, double b) { return add(a, Dd{b, 0.0}); }

inline Dd neg(Dd a) { return {-a.hi, -a.lo}; }

inline Dd sub(Dd a, Dd b) { return add(a, neg(b)); }

inline Dd mul(Dd a, Dd b) {
    Dd p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline Dd mul(Dd a, double b) {
    Dd p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return quick_two_sum(p.hi, lo);
}

inline Dd div(Dd a, Dd b) {
    double q1 = a.hi / b.hi;
    Dd r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    Dd q = quick_two_sum(q1, q2);
    return add(q, q3);
}

inline double to_double(Dd a) { return a.hi + a.lo; }

struct DdComplex {
    Dd re;
    Dd im;
};

inline DdComplex make(std::complex<double> z) { return {Dd{z.real(), 0.0}, Dd{z.imag(), 0.0}}; }

inline DdComplex add(DdComplex a, DdComplex b) { return {add(a.re, b.re), add(a.im, b.im)}; }

inline DdComplex mul(DdComplex a, DdComplex b) {
    Dd re = sub(mul(a.re, b.re), mul(a.im, b.im));
    Dd im = add(mul(a.re, b.im), mul(a.im, b.re));
    return {re, im};
}

inline DdComplex mul(DdComplex a, Dd s) { return {mul(a.re, s), mul(a.im, s)}; }

inline DdComplex div(DdComplex a, DdComplex b) {
    Dd den = add(mul(b.re, b.re), mul(b.im, b.im));
    Dd re = div(add(mul(a.re, b.re), mul(a.im, b.im)), den);
    Dd im = div(sub(mul(a.im, b.re), mul(a.re, b.im)), den);
    return {re, im};
}

inline std::complex<double> to_complex(DdComplex a) { return {to_double(a.re), to_double(a.im)}; }

inline double abs_estimate(DdComplex a) { return std::hypot(a.re.hi, a.im.hi); }

}  // namespace cesaro::dd
