#pragma once

#include <vector>

#include "skein/cyclofield.hpp"

namespace skein {

/// Root-of-unity evaluation context for level r: the coefficients of
/// Omega_r, its bracket, eta^2 (the bracket's inverse) and kappa^6.
struct QuantumContext {
    int r = 0;
    std::vector<CyclotomicNum> omega_coeffs;  // Delta_i at A_r, i <= (r-3)/2
    CyclotomicNum omega_bracket;
    CyclotomicNum eta_sq;
    CyclotomicNum kappa6;

    explicit QuantumContext(int order)
        : r(order), omega_bracket(order), eta_sq(order), kappa6(order) {}
};

QuantumContext quantum_context(int r);

/// Exact value of the level-r invariant of the manifold with the skein
/// (0,0,c) inside, c in {0,1,2}; c = 0 is the invariant of the bare
/// manifold. The half-twist orientation in the summand is pinned by the
/// identity checks in prop_checks.
CyclotomicNum invariant_sum(int r, int c);

struct PropCheck {
    int r = 0;
    bool gauss_identity = false;    // (1 - A^4) I(M) equals the signed power sum
    bool skein2_identity = false;   // A^4 I(M,(0,0,2)) = I(M) - 1
    bool skein1_closed_form = false;
    bool skein1_nonzero = false;

    bool ok() const {
        return gauss_identity && skein2_identity && skein1_closed_form && skein1_nonzero;
    }
};

PropCheck prop_checks(int r);

}  // namespace skein
