#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/ratfn.hpp"
#include "skein/recoupling.hpp"

namespace skein {

/// Admissibly labelled spine of the genus-2 handlebody: b even,
/// b <= 2a and b <= 2c.
struct BasisTriple {
    Label a = 0;
    Label b = 0;
    Label c = 0;

    bool valid() const {
        return a >= 0 && b >= 0 && c >= 0 && b % 2 == 0 && b <= 2 * a && b <= 2 * c;
    }

    BasisTriple mirrored() const { return BasisTriple{c, b, a}; }

    bool operator==(const BasisTriple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const BasisTriple& o) const { return !(*this == o); }

    std::string to_string() const;
};

/// Strict total order: lexicographic on (max(a,c), a, c, b). This is the
/// well-founded order driving the reduction.
bool order_less(const BasisTriple& s, const BasisTriple& t);

struct OrderLess {
    bool operator()(const BasisTriple& s, const BasisTriple& t) const { return order_less(s, t); }
};

/// Class of the triple in H_1(M; Z_2) = Z_2 + Z_2: (a mod 2, c mod 2).
std::pair<int, int> h1_class(const BasisTriple& t);

/// Squared Hermitian norm <<a,b,c>> = theta(a,a,b) theta(b,c,c) /
/// (Delta_a Delta_b Delta_c).
RationalFn norm_sq(const BasisTriple& t);

/// The five spanning generators, in ascending order.
const std::vector<BasisTriple>& generators();

/// Finitely supported map BasisTriple -> RationalFn; zero coefficients
/// are never stored. Keys iterate in the well-founded order.
class SkeinVector {
public:
    using Support = std::map<BasisTriple, RationalFn, OrderLess>;

    SkeinVector() = default;
    explicit SkeinVector(const BasisTriple& t) { add(t, RationalFn::one()); }

    bool is_zero() const { return support_.empty(); }
    std::size_t size() const { return support_.size(); }
    const Support& support() const { return support_; }
    RationalFn coeff(const BasisTriple& t) const;

    void add(const BasisTriple& t, const RationalFn& c);
    SkeinVector operator+(const SkeinVector& o) const;
    SkeinVector operator-(const SkeinVector& o) const;
    SkeinVector scaled(const RationalFn& s) const;

    bool operator==(const SkeinVector& o) const { return support_ == o.support_; }

    std::string to_json() const;
    static SkeinVector from_json(const std::string& text);

private:
    Support support_;
};

/// Hermitian pairing sum_t bar(v_t) w_t <<t>>; the basis is orthogonal.
RationalFn inner_product(const SkeinVector& v, const SkeinVector& w);

}  // namespace skein
