#include "skein/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace skein {

LaurentPoly UnitCertificate::reconstruct() const {
    LaurentPoly out = LaurentPoly::monomial(sign, monomial_power);
    for (int n : cyclotomic_indices) out *= cyclotomic(n);
    return out;
}

namespace {

LaurentPoly compute_cyclotomic(int n, const std::map<int, LaurentPoly>& cache) {
    LaurentPoly numerator = LaurentPoly::monomial(1, n) - LaurentPoly::one();
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        numerator = *numerator.divided_exactly_by(cache.at(d));
    }
    return numerator;
}

}  // namespace

const LaurentPoly& cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    static std::mutex mutex;
    static std::map<int, LaurentPoly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Fill every divisor first so the divide-out pass finds them cached.
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        cache.emplace(d, compute_cyclotomic(d, cache));
    }
    return cache.at(n);
}

std::optional<UnitCertificate> is_unit_in_r(const LaurentPoly& f, long n_max) {
    if (f.is_zero()) throw std::domain_error("is_unit_in_r: zero is not a unit");
    UnitCertificate cert;
    cert.monomial_power = f.low_exp();
    LaurentPoly rest = f.shifted(-cert.monomial_power);
    if (rest.leading_coeff() < 0) {
        cert.sign = -1;
        rest = -rest;
    }
    if (n_max <= 0) {
        const long span = f.span();
        n_max = 2 * span * span + 2;
    }
    for (int n = 1; n <= n_max && !rest.is_constant(); ++n) {
        const LaurentPoly& phi = cyclotomic(n);
        while (true) {
            auto quotient = rest.divided_exactly_by(phi);
            if (!quotient) break;
            cert.cyclotomic_indices.push_back(n);
            rest = *quotient;
        }
    }
    if (!rest.is_one()) return std::nullopt;
    return cert;
}

}  // namespace skein
