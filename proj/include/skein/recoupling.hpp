#pragma once

#include <array>

#include "skein/laurent.hpp"
#include "skein/qfactor.hpp"
#include "skein/ratfn.hpp"

namespace skein {

/// Jones-Wenzl color carried by a graph edge.
using Label = int;

/// Tetrahedral net in slot order (a b c d e f): the four vertex triples
/// are (a,b,f), (c,d,f), (a,d,e), (b,c,e), so opposite edge pairs are
/// (a,c), (b,d), (e,f). The slot order is pinned jointly by the diagram
/// oracle and the rewriting determinants.
struct TetSpec {
    Label a, b, c, d, e, f;
};

/// [k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2}); [0] = 0.
LaurentPoly quantum_int(int k);
/// [k]! = prod_{j<=k} [j]; [0]! = 1.
LaurentPoly quantum_factorial(int k);
/// Loop value of a k-labelled unknot: Delta_k = (-1)^k [k+1].
LaurentPoly delta_poly(int k);

struct QuantumBasics {
    LaurentPoly qint;
    RationalFn qfact;
    LaurentPoly delta;
};
QuantumBasics quantum_basics(int k);

/// |a-b| <= c <= a+b with even sum.
bool admissible(Label a, Label b, Label c);
/// Admissible, every label <= r-2, and a+b+c <= 2r-4.
bool r_admissible(Label a, Label b, Label c, int r);

/// Theta net; 0 when (a,b,c) is inadmissible. Symmetric in its labels.
RationalFn theta(Label a, Label b, Label c);
/// Same value in factored form (valid only for admissible triples).
QFactorProduct theta_factored(Label a, Label b, Label c);

/// Tetrahedral net; 0 when any vertex triple is inadmissible.
RationalFn tet(const TetSpec& spec);

/// Full positive twist on an a-cable: (-A)^{a(a+2)}.
LaurentPoly twist_coeff(Label a);

/// Half-twist exchange coefficient lambda_c^{ab}; requires (a,b,c)
/// admissible.
LaurentPoly lambda_coeff(Label a, Label b, Label c);

/// Fusion coefficient Delta_i / theta(a,b,i); 0 when inadmissible.
RationalFn fusion_coeff(Label a, Label b, Label i);

}  // namespace skein
