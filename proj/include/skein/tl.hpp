#pragma once

#include <map>
#include <vector>

#include "skein/ratfn.hpp"
#include "skein/recoupling.hpp"

namespace skein {

/// Crossingless perfect matching of the boundary points of an (m,n)-
/// tangle. Boundary indices run counterclockwise around the rectangle:
/// bottom points 0..m-1 left to right, then top points m..m+n-1 right
/// to left. The constructor rejects crossing or non-involutive pairings.
class PlanarMatching {
public:
    PlanarMatching(int bottom, int top, std::vector<int> partner);

    static PlanarMatching identity(int n);
    /// Hook e_i (0-based): cup joining bottom i,i+1 and cap joining top
    /// i,i+1, all other strands vertical.
    static PlanarMatching hook(int n, int i);
    /// (0, 2n)-tangle of n nested arcs.
    static PlanarMatching cup_block(int n);
    /// (2n, 0)-tangle of n nested arcs.
    static PlanarMatching cap_block(int n);
    /// Vertex tangle: c strands entering from below split into an
    /// a-cable (top left) and a b-cable (top right), with the
    /// (a+b-c)/2 middle strands turning back. Requires (a,b,c)
    /// admissible.
    static PlanarMatching split(int a, int b, int c);

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int points() const { return bottom_ + top_; }
    int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& partners() const { return partner_; }

    int top_index(int pos) const { return bottom_ + top_ - 1 - pos; }

    PlanarMatching mirrored() const;

    bool operator==(const PlanarMatching& o) const;
    bool operator<(const PlanarMatching& o) const;

private:
    int bottom_;
    int top_;
    std::vector<int> partner_;
};

/// All crossingless perfect matchings of an (m,n)-tangle boundary.
std::vector<PlanarMatching> all_planar_matchings(int bottom, int top);

/// Finitely supported combination of same-shape planar matchings over
/// the rational function field.
class TLElement {
public:
    TLElement(int bottom, int top) : bottom_(bottom), top_(top) {}
    TLElement(const PlanarMatching& m, const RationalFn& coeff = RationalFn::one());

    static TLElement identity(int n) { return TLElement(PlanarMatching::identity(n)); }
    static TLElement hook(int n, int i) { return TLElement(PlanarMatching::hook(n, i)); }
    /// Elementary crossing of two strands as a Kauffman-resolved sum.
    /// The sign convention is pinned by the half-twist coefficients.
    static TLElement crossing();

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const std::map<PlanarMatching, RationalFn>& combo() const { return combo_; }
    bool is_zero() const { return combo_.empty(); }

    void add_term(const PlanarMatching& m, const RationalFn& coeff);

    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement scaled(const RationalFn& s) const;

    /// Diagram stacking (*this below, o above); closed loops removed at
    /// delta = -A^2 - A^{-2} each. Throws on strand-count mismatch.
    TLElement compose(const TLElement& o) const;
    TLElement tensor(const TLElement& o) const;
    TLElement mirrored() const;

    /// Markov closure of an (n,n) element: joins top p to bottom p.
    RationalFn trace_closure() const;

private:
    int bottom_;
    int top_;
    std::map<PlanarMatching, RationalFn> combo_;
};

/// The n-th Jones-Wenzl idempotent by the Wenzl recursion. The cap
/// bounds the recursion (diagram counts grow as Catalan numbers).
TLElement jones_wenzl(int n, int cap = 8);

enum class NetworkKind { theta, tet, lambda, delta };

struct OracleCaps {
    int theta_sum = 12;
    int tet_sum = 8;
    int lambda_sum = 8;  // bound on a + b
    int jw = 8;
};

/// Evaluates a closed labelled network by expanding every Jones-Wenzl
/// box into diagrams and counting loops; lambda returns the ratio of
/// the crossed theta to the flat theta. Inadmissible labels give 0;
/// labels beyond the caps throw CapExceededError.
RationalFn evaluate_network(NetworkKind kind, const std::vector<int>& labels,
                            const OracleCaps& caps = OracleCaps{});

}  // namespace skein
