#include "cesaro/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cesaro/dd.hpp"
#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;

// cos(w)*e^{-|Im w|} and sin(w)*e^{-|Im w|} without overflow.
struct ScaledTrig {
    Cplx cos_s;
    Cplx sin_s;
};

ScaledTrig scaled_trig(Cplx w) {
    double b = w.imag();
    if (std::fabs(b) <= 30.0) {
        double damp = std::exp(-std::fabs(b));
        return {std::cos(w) * damp, std::sin(w) * damp};
    }
    if (b > 0.0) {
        // e^{iw} e^{-b} dominates by e^{-2b} over e^{-iw} e^{-b}
        Cplx ea = std::exp(Cplx(0.0, w.real()));
        double small = std::exp(-2.0 * b);
        Cplx cos_s = (ea * small + std::conj(ea)) * 0.5;
        Cplx sin_s = (ea * small - std::conj(ea)) / Cplx(0.0, 2.0);
        return {cos_s, sin_s};
    }
    ScaledTrig t = scaled_trig(std::conj(w));
    return {std::conj(t.cos_s), std::conj(t.sin_s)};
}

// Power series sum_m (-1)^m (u^2/4)^m / (m! (v+1)_m) in double-double.
// Near u ~ 30 the alternating terms peak around 1e11 while the sum is O(1);
// the dd accumulation keeps the cancellation error near 1e-19 absolute.
ScaledBessel bessel_series_scaled(Cplx v, double u) {
    double log_scale = kPi * std::fabs(v.imag()) / 2.0;

    dd::Dd quarter_u2 = dd::two_prod(u, u);
    quarter_u2.hi *= 0.25;
    quarter_u2.lo *= 0.25;

    dd::DdComplex term = dd::make(Cplx(1.0, 0.0));
    dd::DdComplex sum = term;
    double max_term = 1.0;
    double last_term = 1.0;
    int m = 1;
    for (; m <= 2000; ++m) {
        // term *= -(u^2/4) / (m (v + m))
        dd::Dd re = dd::two_sum(v.real(), double(m));
        dd::DdComplex denom{dd::mul(re, double(m)), dd::mul(dd::Dd{v.imag(), 0.0}, double(m))};
        term = dd::div(dd::mul(term, quarter_u2), denom);
        term.re = dd::neg(term.re);
        term.im = dd::neg(term.im);
        sum = dd::add(sum, term);
        last_term = dd::abs_estimate(term);
        max_term = std::max(max_term, last_term);
        if (max_term > 1e260) break;  // hopeless cancellation, let the caller fall back
        if (double(m) > u / 2.0 + 8.0 && last_term < 1e-22 * std::max(1.0, dd::abs_estimate(sum)))
            break;
    }

    // prefactor (u/2)^v / Gamma(v+1), with the e^{pi |Im v|/2} scale removed
    Cplx log_pref = v * std::log(Cplx(u / 2.0, 0.0)) - log_gamma(v + 1.0) - log_scale;
    Cplx pref = std::exp(log_pref);
    Cplx value = pref * dd::to_complex(sum);

    double pref_abs = std::abs(pref);
    double est = pref_abs * (last_term + max_term * 1e-29) + 1e-15 * std::abs(value);
    return {value, log_scale, BesselMethod::series, est};
}

// Hankel expansion: J_v(u) ~ sqrt(2/(pi u)) [cos(w) P(v,u) - sin(w) Q(v,u)],
// w = u - v pi/2 - pi/4, a_m = prod_{j<=m} (4v^2-(2j-1)^2) / (8^m m!).
// Truncated at the globally smallest term (the terms may hump before they
// decay when u is only moderately larger than |v|^2).
ScaledBessel bessel_asymptotic_scaled(Cplx v, double u) {
    Cplx w = Cplx(u, 0.0) - v * (kPi / 2.0) - kPi / 4.0;
    double log_scale = std::fabs(w.imag());  // = pi*|Im v|/2

    Cplx four_v2 = 4.0 * v * v;
    constexpr int kMaxTerms = 44;
    Cplx terms[kMaxTerms];
    int count = 0;
    Cplx a(1.0, 0.0);
    double upow = 1.0;
    double best = 1.0 / 0.0;
    for (int m = 0; m < kMaxTerms; ++m) {
        Cplx t = a * upow;
        double mag = std::abs(t);
        terms[count++] = t;
        if (mag < 1e-19) break;
        if (mag > 1e4 * std::min(best, 1.0)) break;  // clearly diverging
        best = std::min(best, mag);
        double odd = 2.0 * m + 1.0;
        a *= (four_v2 - odd * odd) / (8.0 * (m + 1.0));
        upow /= u;
    }
    int cut = 0;  // index of the smallest term; sum strictly before it
    for (int m = 1; m < count; ++m)
        if (std::abs(terms[m]) < std::abs(terms[cut])) cut = m;

    Cplx p_sum(0.0, 0.0), q_sum(0.0, 0.0);
    int sign_p = 1, sign_q = 1;
    for (int m = 0; m < cut; ++m) {
        if (m % 2 == 0) {
            p_sum += double(sign_p) * terms[m];
            sign_p = -sign_p;
        } else {
            q_sum += double(sign_q) * terms[m];
            sign_q = -sign_q;
        }
    }
    double trunc = std::abs(terms[cut]);

    ScaledTrig st = scaled_trig(w);
    double amp = std::sqrt(2.0 / (kPi * u));
    Cplx value = amp * (st.cos_s * p_sum - st.sin_s * q_sum);
    double trig_mag = std::max(std::abs(st.cos_s), std::abs(st.sin_s));
    double est = amp * trig_mag * trunc + (1e-15 + u * 1e-17) * std::abs(value);
    return {value, log_scale, BesselMethod::asymptotic, est};
}

}  // namespace

double bessel_switch_point(Cplx v) { return std::max(30.0, std::norm(v) / 2.0); }

ScaledBessel bessel_j_series(Cplx v, double u) { return bessel_series_scaled(v, u); }
ScaledBessel bessel_j_asymptotic(Cplx v, double u) { return bessel_asymptotic_scaled(v, u); }

ScaledBessel bessel_j_scaled(Cplx v, double u) {
    if (v.real() <= -1.0)
        throw std::domain_error("bessel_j: order must satisfy Re v > -1");
    if (u < 0.0) throw std::domain_error("bessel_j: argument must be >= 0");
    if (u == 0.0) {
        if (v == Cplx(0.0, 0.0)) return {Cplx(1.0, 0.0), 0.0, BesselMethod::series, 0.0};
        if (v.real() > 0.0) return {Cplx(0.0, 0.0), 0.0, BesselMethod::series, 0.0};
        throw std::domain_error("bessel_j: u = 0 needs v = 0 or Re v > 0");
    }
    bool series_first = u <= bessel_switch_point(v);
    ScaledBessel r = series_first ? bessel_series_scaled(v, u) : bessel_asymptotic_scaled(v, u);
    if (r.est_error > 1e-8 * (1.0 + std::abs(r.value))) {
        // orders with a large imaginary part leave a band where the preferred
        // method degrades; the other one covers it
        ScaledBessel alt = series_first ? bessel_asymptotic_scaled(v, u)
                                        : bessel_series_scaled(v, u);
        if (alt.est_error < r.est_error) r = alt;
    }
    if (r.est_error > 1e-8 * (1.0 + std::abs(r.value)))
        throw numeric_error("bessel_j: estimated error " + std::to_string(r.est_error) +
                            " exceeds accuracy contract");
    return r;
}

BesselEvalResult bessel_j(Cplx v, double u) {
    ScaledBessel s = bessel_j_scaled(v, u);
    double scale = std::exp(s.log_scale);
    return {s.value * scale, s.method, s.est_error * scale};
}

Cplx bessel_j_quadrature(Cplx v, double u, double a, double t_max, double tol) {
    if (v.real() <= -1.0)
        throw std::domain_error("bessel_j_quadrature: order must satisfy Re v > -1");
    if (a <= 0.0 || u <= 0.0) throw std::domain_error("bessel_j_quadrature: need a > 0, u > 0");

    double b = u * u / 4.0;
    auto integrand = [&](double t) -> Cplx {
        Cplx s(a, t);
        return std::exp(-(v + 1.0) * std::log(s) + s - b / s);
    };

    auto trapezoid = [&](double h) -> Cplx {
        long n = std::lround(t_max / h);
        Cplx acc = 0.5 * (integrand(-double(n) * h) + integrand(double(n) * h));
        for (long i = -n + 1; i < n; ++i) acc += integrand(double(i) * h);
        return acc * h;
    };

    double freq = 1.0 + b / (a * a);  // max oscillation rate along the contour
    double h = std::min(0.02, 0.5 / freq);
    Cplx coarse = trapezoid(h);
    Cplx fine = trapezoid(h / 2.0);
    Cplx integral = (4.0 * fine - coarse) / 3.0;
    double est_trap = std::abs(fine - coarse) / 3.0;

    // Integration-by-parts tail: the integrand is G(t) e^{it} with G slowly
    // varying, so int_{|t|>T} ~ e^{iT}(iG - G' - iG'') + e^{-iT}(-iG + G' + iG'').
    double delta = 0.25;
    auto slow_part = [&](double t) { return integrand(t) * std::exp(Cplx(0.0, -t)); };
    Cplx gp = slow_part(t_max), gp_hi = slow_part(t_max + delta), gp_lo = slow_part(t_max - delta);
    Cplx gm = slow_part(-t_max), gm_hi = slow_part(-t_max + delta), gm_lo = slow_part(-t_max - delta);
    Cplx dgp = (gp_hi - gp_lo) / (2.0 * delta);
    Cplx ddgp = (gp_hi - 2.0 * gp + gp_lo) / (delta * delta);
    Cplx dgm = (gm_hi - gm_lo) / (2.0 * delta);
    Cplx ddgm = (gm_hi - 2.0 * gm + gm_lo) / (delta * delta);
    Cplx eiT = std::exp(Cplx(0.0, t_max));
    Cplx tail = eiT * (Cplx(0.0, 1.0) * gp - dgp - Cplx(0.0, 1.0) * ddgp) +
                std::conj(eiT) * (Cplx(0.0, -1.0) * gm + dgm + Cplx(0.0, 1.0) * ddgm);
    integral += tail;
    double est_tail = 2.0 * (std::abs(ddgp) + std::abs(ddgm)) * (3.0 + std::abs(v)) / t_max;

    Cplx pref = std::exp(v * std::log(Cplx(u / 2.0, 0.0))) / (2.0 * kPi);
    double est = (est_trap + est_tail) * std::abs(pref);
    if (est > tol)
        throw numeric_error("bessel_j_quadrature: t_max too small, estimated error " +
                            std::to_string(est) + " > tol " + std::to_string(tol));
    return pref * integral;
}

}  // namespace cesaro
