#pragma once

#include <string>
#include <vector>

#include "skein/bigfloat.hpp"

namespace skein {

/// Incomplete normalized Gauss sum g_N(m) = (2/sqrt(N)) sum_{k=0}^m
/// zeta_N^{k^2}, by direct summation; 0 <= m < N.
Complex gauss_sum(long N, long m, mpfr_prec_t precision_bits);

/// Same sum accumulated from k = m down to 0 (summation-order check).
Complex gauss_sum_reversed(long N, long m, mpfr_prec_t precision_bits);

/// Fresnel integrals C(u) = int_0^u cos(pi x^2 / 2) dx and
/// S(u) = int_0^u sin(pi x^2 / 2) dx by their power series, truncated
/// once terms drop below 2^{-(precision+16)}.
Real fresnel_c(const Real& u, mpfr_prec_t precision_bits);
Real fresnel_s(const Real& u, mpfr_prec_t precision_bits);

/// |LHS - RHS| of the splitting of 1 + sum_{k=1}^{r-1} (-1)^k
/// zeta_{2r}^{2k^2+2k} into incomplete Gauss sums, for odd r.
Real van_wamelen_residual(int r, mpfr_prec_t precision_bits);

struct LehmerCircle {
    Real center_x;
    Real center_y;
    Real radius;
};

/// Containment disk for g_N(m): center (C(sqrt 2), S(sqrt 2) -
/// 1/(sqrt 2 pi)), radius 1/(sqrt 2 pi) + 101/(40 sqrt N).
LehmerCircle lehmer_circle(long N, mpfr_prec_t precision_bits);

struct LehmerReport {
    bool ok = true;
    long checked = 0;
    std::vector<std::string> failures;
};

/// Checks |g_N(m) - center| <= radius for all m in
/// [ceil(sqrt(N/2)), floor(N/4)], for each N (each must be >= 100).
LehmerReport lehmer_scan(const std::vector<long>& ns, mpfr_prec_t precision_bits);

struct ScanRow {
    int r = 0;
    int r_mod_16 = 0;
    double re = 0.0;
    double im = 0.0;
    double im_shifted = 0.0;  // Im((1 - A_r^4) I_r(M) + 1)
    int sign = 0;             // signum at the 1e-10 zero threshold
};

/// Values of (1 - A_r^4) I_r(M) for odd r in [r_min, r_max], computed
/// both from the exact cyclotomic invariant and from the Gauss power
/// sum; the two routes must agree to 1e-20 or the scan throws.
std::vector<ScanRow> sign_scan(int r_min, int r_max, mpfr_prec_t precision_bits);

/// (theta, phi) in degrees: theta = arcsin(3R / sqrt(h^2+k^2)) with
/// R = 1/(sqrt 2 pi) + 0.0001, phi = arctan(k/h), for the Lehmer center
/// (h, k).
std::pair<Real, Real> angle_constants(mpfr_prec_t precision_bits);

std::string scan_to_csv(const std::vector<ScanRow>& rows);
std::string scan_to_svg(const std::vector<ScanRow>& rows);

}  // namespace skein
