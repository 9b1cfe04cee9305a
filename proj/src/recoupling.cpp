#include "skein/recoupling.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace skein {

LaurentPoly quantum_int(int k) {
    if (k < 0) throw std::invalid_argument("quantum_int: negative argument");
    LaurentPoly out;
    for (int j = 0; j < k; ++j) out += LaurentPoly::monomial(1, 2 * (k - 1) - 4 * j);
    return out;
}

LaurentPoly quantum_factorial(int k) {
    if (k < 0) throw std::invalid_argument("quantum_factorial: negative argument");
    static std::mutex mutex;
    static std::vector<LaurentPoly> cache{LaurentPoly::one()};  // [0]! = 1
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(cache.back() * quantum_int(static_cast<int>(cache.size())));
    return cache[static_cast<std::size_t>(k)];
}

LaurentPoly delta_poly(int k) {
    if (k < 0) throw std::invalid_argument("delta_poly: negative argument");
    LaurentPoly d = quantum_int(k + 1);
    return (k % 2 == 0) ? d : -d;
}

QuantumBasics quantum_basics(int k) {
    return QuantumBasics{quantum_int(k), RationalFn(quantum_factorial(k)), delta_poly(k)};
}

bool admissible(Label a, Label b, Label c) {
    if (a < 0 || b < 0 || c < 0) return false;
    return std::abs(a - b) <= c && c <= a + b && (a + b + c) % 2 == 0;
}

bool r_admissible(Label a, Label b, Label c, int r) {
    return admissible(a, b, c) && a <= r - 2 && b <= r - 2 && c <= r - 2 && a + b + c <= 2 * r - 4;
}

QFactorProduct theta_factored(Label a, Label b, Label c) {
    const int i = (a + b - c) / 2;
    const int j = (b + c - a) / 2;
    const int k = (a + c - b) / 2;
    QFactorProduct p;
    if ((i + j + k) % 2 != 0) p.mul_sign(-1);
    p.mul_qfact(i + j + k + 1);
    p.mul_qfact(i);
    p.mul_qfact(j);
    p.mul_qfact(k);
    p.mul_qfact(i + j, -1);
    p.mul_qfact(j + k, -1);
    p.mul_qfact(i + k, -1);
    return p;
}

RationalFn theta(Label a, Label b, Label c) {
    if (!admissible(a, b, c)) return RationalFn::zero();
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, RationalFn> cache;
    std::array<int, 3> s{a, b, c};
    std::sort(s.begin(), s.end());
    const auto key = std::make_tuple(s[0], s[1], s[2]);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RationalFn value = theta_factored(a, b, c).to_rational();
    cache.emplace(key, value);
    return value;
}

namespace {

// Canonical representative of the 24-element symmetry orbit of a tet
// slot tuple: permutations of the opposite-edge pairs (a,c), (b,d),
// (e,f) composed with simultaneous swaps inside two of the pairs.
std::array<int, 6> tet_canonical_key(const TetSpec& t) {
    const std::array<std::array<int, 2>, 3> cols{{{t.a, t.c}, {t.b, t.d}, {t.e, t.f}}};
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 6> best{};
    bool first = true;
    do {
        for (int flips : {0b000, 0b011, 0b101, 0b110}) {
            std::array<int, 6> cand{};
            for (int j = 0; j < 3; ++j) {
                const auto& col = cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
                const bool flip = (flips >> j) & 1;
                cand[static_cast<std::size_t>(j)] = flip ? col[1] : col[0];
                cand[static_cast<std::size_t>(j + 3)] = flip ? col[0] : col[1];
            }
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

RationalFn tet_uncached(const TetSpec& t) {
    // Vertex half-sums and square half-sums (squares omit one pair of
    // opposite edges each).
    const std::array<int, 4> va{(t.a + t.b + t.f) / 2, (t.c + t.d + t.f) / 2,
                                (t.a + t.d + t.e) / 2, (t.b + t.c + t.e) / 2};
    const std::array<int, 3> vb{(t.b + t.d + t.e + t.f) / 2, (t.a + t.c + t.e + t.f) / 2,
                                (t.a + t.b + t.c + t.d) / 2};
    const int s_min = *std::max_element(va.begin(), va.end());
    const int s_max = *std::min_element(vb.begin(), vb.end());

    QFactorProduct base;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j)
            base.mul_qfact(vb[static_cast<std::size_t>(j)] - va[static_cast<std::size_t>(i)]);
    for (int edge : {t.a, t.b, t.c, t.d, t.e, t.f}) base.mul_qfact(edge, -1);

    std::vector<QFactorProduct> terms;
    for (int s = s_min; s <= s_max; ++s) {
        QFactorProduct term = base;
        if (s % 2 != 0) term.mul_sign(-1);
        term.mul_qfact(s + 1);
        for (int i = 0; i < 4; ++i) term.mul_qfact(s - va[static_cast<std::size_t>(i)], -1);
        for (int j = 0; j < 3; ++j) term.mul_qfact(vb[static_cast<std::size_t>(j)] - s, -1);
        terms.push_back(std::move(term));
    }

    // Factor out the componentwise-minimal part, expand the residuals,
    // and cancel leftover cyclotomic factors of the common denominator
    // against the residual sum by exact trial division.
    QFactorProduct common = terms.front();
    common.mul_sign(common.sign());  // clear the sign to +1
    for (const auto& term : terms) {
        std::map<int, int> mins;
        for (const auto& [k, e] : common.exps()) {
            auto jt = term.exps().find(k);
            mins[k] = std::min(e, jt == term.exps().end() ? 0 : jt->second);
        }
        for (const auto& [k, e] : term.exps())
            if (!common.exps().count(k)) mins[k] = std::min(0, e);
        QFactorProduct next;
        next.mul_apow(std::min(common.apow(), term.apow()));
        for (const auto& [k, e] : mins) next.mul_qint(k, e);
        common = next;
    }

    LaurentPoly residual_sum;
    for (const auto& term : terms) {
        QFactorProduct residual = term * common.inverse();
        LaurentPoly piece = LaurentPoly::monomial(residual.sign(), residual.apow());
        for (const auto& [k, e] : residual.exps()) {
            if (e < 0) throw std::logic_error("tet: residual exponent negative");
            piece *= quantum_int(k).pow(static_cast<unsigned long>(e));
        }
        residual_sum += piece;
    }
    if (residual_sum.is_zero()) return RationalFn::zero();

    auto [apow, cyc] = common.cyclotomic_exponents();
    LaurentPoly num = LaurentPoly::monomial(common.sign(), apow);
    LaurentPoly den = LaurentPoly::one();
    for (auto& [d, e] : cyc) {
        while (e < 0) {
            auto q = residual_sum.divided_exactly_by(cyclotomic(d));
            if (!q) break;
            residual_sum = *q;
            ++e;
        }
        if (e > 0)
            num *= cyclotomic(d).pow(static_cast<unsigned long>(e));
        else if (e < 0)
            den *= cyclotomic(d).pow(static_cast<unsigned long>(-e));
    }
    // The numerator may still carry a monomial unit of the residual.
    if (!residual_sum.is_zero()) {
        const long rlow = residual_sum.low_exp();
        if (rlow != 0) {
            residual_sum.shift(-rlow);
            num.shift(rlow);
        }
    }
    return RationalFn::from_canonical_parts(num * residual_sum, std::move(den));
}

}  // namespace

RationalFn tet(const TetSpec& t) {
    if (!admissible(t.a, t.b, t.f) || !admissible(t.c, t.d, t.f) || !admissible(t.a, t.d, t.e) ||
        !admissible(t.b, t.c, t.e))
        return RationalFn::zero();
    static std::mutex mutex;
    static std::map<std::array<int, 6>, RationalFn> cache;
    const auto key = tet_canonical_key(t);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RationalFn value = tet_uncached(t);
    cache.emplace(key, value);
    return value;
}

LaurentPoly twist_coeff(Label a) {
    const long e = static_cast<long>(a) * (a + 2);
    return LaurentPoly::monomial(a % 2 == 0 ? 1 : -1, e);
}

LaurentPoly lambda_coeff(Label a, Label b, Label c) {
    if (!admissible(a, b, c)) throw std::invalid_argument("lambda_coeff: inadmissible triple");
    const long e = (static_cast<long>(a) * (a + 2) + static_cast<long>(b) * (b + 2) -
                    static_cast<long>(c) * (c + 2)) /
                   2;
    const int sign = ((a + b - c) / 2) % 2 == 0 ? 1 : -1;
    return LaurentPoly::monomial(sign, e);
}

RationalFn fusion_coeff(Label a, Label b, Label i) {
    if (!admissible(a, b, i)) return RationalFn::zero();
    QFactorProduct p = theta_factored(a, b, i).inverse();
    p.mul_qint(i + 1);
    if (i % 2 != 0) p.mul_sign(-1);
    return p.to_rational();
}

}  // namespace skein
