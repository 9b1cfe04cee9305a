#pragma once

#include <optional>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Witness that a Laurent polynomial is a unit of the localized ring:
/// the certified value factors exactly as sign * A^monomial_power *
/// prod of cyclotomic polynomials Phi_n over cyclotomic_indices.
struct UnitCertificate {
    int sign = 1;
    long monomial_power = 0;
    std::vector<int> cyclotomic_indices;  // sorted, with multiplicity

    LaurentPoly reconstruct() const;
};

/// The n-th cyclotomic polynomial Phi_n(A), n >= 1, by the divide-out
/// recurrence Phi_n = (A^n - 1) / prod_{d | n, d < n} Phi_d. Memoized.
const LaurentPoly& cyclotomic(int n);

/// Decides whether f is a unit of Z[A^{+-1}] with all cyclotomic
/// polynomials inverted: strips +-A^k, then trial-divides by Phi_n for
/// n = 1..n_max until a monomial remains. n_max <= 0 selects the default
/// bound 2*span(f)^2 + 2, valid because deg Phi_n = phi(n) >= sqrt(n/2).
std::optional<UnitCertificate> is_unit_in_r(const LaurentPoly& f, long n_max = 0);

}  // namespace skein
