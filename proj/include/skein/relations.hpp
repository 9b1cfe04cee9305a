#pragma once

#include <string>
#include <vector>

#include "skein/handlebody.hpp"
#include "skein/linsolve.hpp"

namespace skein {

/// One handle-slide relation family instance. Slides 1-3 take
/// (alpha, beta, gamma) with beta unused by slide 3; slide 4 and 6 take
/// alpha only; slide 5 takes gamma only.
struct RelationId {
    int slide = 1;
    int alpha = 0;
    int beta = 0;
    int gamma = 0;

    std::string to_string() const;
};

/// The relation vector r_i = (right-hand side) - (left-hand side),
/// expanded over the handlebody basis. Throws on invalid parameters.
SkeinVector relation_vector(const RelationId& id);

/// Prose support constraint for each slide family (used as an oracle on
/// computed supports).
bool support_constraint_ok(const RelationId& id, const BasisTriple& t);

/// Linear system extracted from the relations that rewrite a target
/// triple: matrix[i][j] is the coefficient of highest_terms[j] in
/// relations[i], and lesser[i] collects the remaining terms (all
/// strictly below the target).
struct CaseSystem {
    int case_id = 0;
    BasisTriple target;
    std::vector<RelationId> relation_ids;
    std::vector<SkeinVector> relations;
    std::vector<BasisTriple> highest_terms;  // strictly descending
    RatMatrix matrix;
    std::vector<SkeinVector> lesser;
};

/// Which of the five rewriting cases covers t, or 0 for a generator.
int case_of(const BasisTriple& t);

CaseSystem case_system(int case_id, const BasisTriple& target);

/// Closed form of det(case matrix) as a function of the case parameters
/// (Case 1 takes x,y; Case 2 takes x,z; the rest take one parameter).
RationalFn case_determinant_closed_form(int case_id, int p1, int p2 = 0);

struct CaseCheck {
    int case_id = 0;
    std::vector<int> params;
    bool det_matches = false;
    bool det_is_unit = false;
};

struct CaseReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
    std::vector<CaseCheck> checks;
};

/// Verifies det(case matrix) == closed form exactly over the parameter
/// grid (every free parameter up to max_param), and that each
/// determinant is a unit of the localized ring. unit_nmax bounds the
/// cyclotomic trial division (0 selects the span-based default).
CaseReport verify_case_determinants(int case_id, int max_param, long unit_nmax = 0);

}  // namespace skein
