#include "skein/gauss.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "skein/invariants.hpp"

namespace skein {

namespace {

Complex zeta_power(long N, long e, mpfr_prec_t prec) {
    long m = e % N;
    if (m < 0) m += N;
    const Real angle = Real(2L, prec) * Real::pi(prec) * Real(m, prec) / Real(N, prec);
    return Complex::unit(angle);
}

void check_gauss_args(long N, long m) {
    if (N < 1) throw std::invalid_argument("gauss_sum: N must be positive");
    if (m < 0 || m >= N) throw std::invalid_argument("gauss_sum: m out of range");
}

}  // namespace

Complex gauss_sum(long N, long m, mpfr_prec_t prec) {
    check_gauss_args(N, m);
    Complex acc(prec);
    for (long k = 0; k <= m; ++k) acc += zeta_power(N, k * k % N, prec);
    const Real scale = Real(2L, prec) / sqrt(Real(N, prec));
    return acc * scale;
}

Complex gauss_sum_reversed(long N, long m, mpfr_prec_t prec) {
    check_gauss_args(N, m);
    Complex acc(prec);
    for (long k = m; k >= 0; --k) acc += zeta_power(N, k * k % N, prec);
    const Real scale = Real(2L, prec) / sqrt(Real(N, prec));
    return acc * scale;
}

namespace {

// Shared series loop: C uses even powers of (pi/2), S odd.
Real fresnel_series(const Real& u, mpfr_prec_t prec, bool sine) {
    const Real half_pi = Real::pi(prec) / Real(2L, prec);
    const Real u2 = u * u;
    const Real u4 = u2 * u2;
    const Real cutoff = Real::pow2(-(prec + 16), prec);
    // Term n of C: (-1)^n (pi/2)^{2n} u^{4n+1} / ((2n)! (4n+1));
    // term n of S: (-1)^n (pi/2)^{2n+1} u^{4n+3} / ((2n+1)! (4n+3)).
    Real power = sine ? half_pi * u * u2 : u;  // (pi/2)^{0 or 1} u^{1 or 3}
    Real factorial(1L, prec);
    Real total(prec);
    for (long n = 0;; ++n) {
        const long denom = sine ? 4 * n + 3 : 4 * n + 1;
        Real term = power / (factorial * Real(denom, prec));
        if (n % 2 == 1) term = -term;
        total += term;
        if (abs(term) < cutoff) break;
        power *= half_pi * half_pi * u4;
        const long f1 = sine ? 2 * n + 2 : 2 * n + 1;
        const long f2 = sine ? 2 * n + 3 : 2 * n + 2;
        factorial *= Real(f1 * f2, prec);
    }
    return total;
}

}  // namespace

Real fresnel_c(const Real& u, mpfr_prec_t prec) {
    return fresnel_series(u, prec, false);
}

Real fresnel_s(const Real& u, mpfr_prec_t prec) {
    return fresnel_series(u, prec, true);
}

Real van_wamelen_residual(int r, mpfr_prec_t prec) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("van_wamelen_residual: r must be odd and at least 3");
    // LHS: 1 + sum_{k=1}^{r-1} (-1)^k zeta_{2r}^{2k^2+2k}.
    Complex lhs(Real(1L, prec), Real(prec));
    for (long k = 1; k <= r - 1; ++k) {
        Complex term = zeta_power(2L * r, (2 * k * k + 2 * k) % (2L * r), prec);
        if (k % 2 != 0) term = -term;
        lhs += term;
    }
    // RHS: zeta_{16r}^{-(r+2)^2} (zeta_{16r}^{9r^2} -
    //      2 sqrt(r) (2 g_{16r}(r-1) - g_{4r}((r-1)/2))).
    const long rr = r;
    Complex inner = zeta_power(16 * rr, 9 * rr * rr, prec);
    Complex sums = gauss_sum(16 * rr, rr - 1, prec) * Real(2L, prec) -
                   gauss_sum(4 * rr, (rr - 1) / 2, prec);
    inner -= sums * (Real(2L, prec) * sqrt(Real(rr, prec)));
    Complex rhs = zeta_power(16 * rr, -(rr + 2) * (rr + 2), prec) * inner;
    return (lhs - rhs).abs();
}

LehmerCircle lehmer_circle(long N, mpfr_prec_t prec) {
    if (N < 1) throw std::invalid_argument("lehmer_circle: N must be positive");
    const Real sqrt2 = sqrt(Real(2L, prec));
    const Real inv_sqrt2_pi = Real(1L, prec) / (sqrt2 * Real::pi(prec));
    LehmerCircle circle{fresnel_c(sqrt2, prec), fresnel_s(sqrt2, prec) - inv_sqrt2_pi,
                        inv_sqrt2_pi + Real(101L, prec) / (Real(40L, prec) * sqrt(Real(N, prec)))};
    return circle;
}

LehmerReport lehmer_scan(const std::vector<long>& ns, mpfr_prec_t prec) {
    LehmerReport report;
    for (long N : ns) {
        if (N < 100) throw std::invalid_argument("lehmer_scan: containment requires N >= 100");
        const LehmerCircle circle = lehmer_circle(N, prec);
        // m from ceil(sqrt(N/2)) to floor(N/4).
        long m_lo = 1;
        while (m_lo * m_lo * 2 < N) ++m_lo;
        const long m_hi = N / 4;
        for (long m = m_lo; m <= m_hi; ++m) {
            const Complex g = gauss_sum(N, m, prec);
            const Complex center(circle.center_x, circle.center_y);
            ++report.checked;
            if ((g - center).abs() > circle.radius) {
                report.ok = false;
                std::ostringstream os;
                os << "g_" << N << "(" << m << ") outside the containment disk";
                report.failures.push_back(os.str());
            }
        }
    }
    return report;
}

std::vector<ScanRow> sign_scan(int r_min, int r_max, mpfr_prec_t prec) {
    if (r_min > r_max) throw std::invalid_argument("sign_scan: empty range");
    std::vector<ScanRow> rows;
    // The two routes agree to 1e-20 at 128 bits and beyond; at lower
    // working precision the comparison loosens with the precision.
    Real route_tol = Real(1e-20, prec);
    const Real coarse = Real::pow2(-(prec - 40), prec);
    if (route_tol < coarse) route_tol = coarse;
    const Real zero_threshold = Real(1e-10, prec);
    for (int r = r_min % 2 == 0 ? r_min + 1 : r_min; r <= r_max; r += 2) {
        // Exact route: (1 - A_r^4) I_r(M) in the cyclotomic field,
        // then embedded.
        CyclotomicNum value = (CyclotomicNum::from_long(r, 1) - CyclotomicNum::zeta_pow(r, 4)) *
                              invariant_sum(r, 0);
        const Complex exact = value.embed(prec);
        // Gauss route: the signed power sum evaluated in floats.
        Complex direct(prec);
        for (long k = 1; k <= r - 1; ++k) {
            Complex term = zeta_power(2L * r, (2 * k * k + 2 * k) % (2L * r), prec);
            if (k % 2 != 0) term = -term;
            direct += term;
        }
        if ((exact - direct).abs() > route_tol)
            throw std::runtime_error("sign_scan: exact and Gauss routes disagree at r = " +
                                     std::to_string(r));
        ScanRow row;
        row.r = r;
        row.r_mod_16 = r % 16;
        row.re = exact.re().to_double();
        row.im = exact.im().to_double();
        const Real shifted = (exact + Complex(Real(1L, prec), Real(prec))).im();
        row.im_shifted = shifted.to_double();
        if (abs(shifted) < zero_threshold)
            row.sign = 0;
        else
            row.sign = shifted.sign() > 0 ? 1 : -1;
        rows.push_back(row);
    }
    return rows;
}

std::pair<Real, Real> angle_constants(mpfr_prec_t prec) {
    const Real sqrt2 = sqrt(Real(2L, prec));
    const Real inv_sqrt2_pi = Real(1L, prec) / (sqrt2 * Real::pi(prec));
    const Real h = fresnel_c(sqrt2, prec);
    const Real k = fresnel_s(sqrt2, prec) - inv_sqrt2_pi;
    const Real big_r = inv_sqrt2_pi + Real(0.0001, prec);
    const Real rad_to_deg = Real(180L, prec) / Real::pi(prec);
    const Real theta = asin(Real(3L, prec) * big_r / sqrt(h * h + k * k)) * rad_to_deg;
    const Real phi = atan(k / h) * rad_to_deg;
    return {theta, phi};
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "r,rmod16,re,im,im_shifted,sign\n";
    for (const auto& row : rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%.17g,%d\n", row.r, row.r_mod_16, row.re,
                      row.im, row.im_shifted, row.sign);
        os << buf;
    }
    return os.str();
}

std::string scan_to_svg(const std::vector<ScanRow>& rows) {
    // Scatter of (re, im), coloured by r mod 16.
    const double width = 640, height = 640, margin = 60;
    double re_min = 0, re_max = 1, im_min = 0, im_max = 1;
    bool first = true;
    for (const auto& row : rows) {
        if (first) {
            re_min = re_max = row.re;
            im_min = im_max = row.im;
            first = false;
        }
        re_min = std::min(re_min, row.re);
        re_max = std::max(re_max, row.re);
        im_min = std::min(im_min, row.im);
        im_max = std::max(im_max, row.im);
    }
    const double re_span = re_max - re_min > 1e-12 ? re_max - re_min : 1.0;
    const double im_span = im_max - im_min > 1e-12 ? im_max - im_min : 1.0;
    static const char* palette[8] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                     "#9467bd", "#8c564b", "#e377c2", "#17becf"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", margin,
                  height - margin, width - margin, height - margin);
    os << buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", margin,
                  margin, margin, height - margin);
    os << buf;
    for (const auto& row : rows) {
        const double x = margin + (row.re - re_min) / re_span * (width - 2 * margin);
        const double y = height - margin - (row.im - im_min) / im_span * (height - 2 * margin);
        const char* color = palette[((row.r_mod_16 - 1) / 2) % 8];
        std::snprintf(buf, sizeof(buf),
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"><title>r=%d</title></circle>\n",
                      x, y, color, row.r);
        os << buf;
    }
    for (int cls = 0; cls < 8; ++cls) {
        const double y = margin + 16.0 * cls;
        std::snprintf(buf, sizeof(buf),
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"%s\"/>"
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\">r = %d mod 16</text>\n",
                      width - margin - 120.0, y, palette[cls], width - margin - 110.0, y + 4.0,
                      2 * cls + 1);
        os << buf;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace skein
