#include "skein/tl.hpp"

#include <algorithm>
#include <functional>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "skein/errors.hpp"

namespace skein {

// ---------------------------------------------------------------------------
// PlanarMatching

PlanarMatching::PlanarMatching(int bottom, int top, std::vector<int> partner)
    : bottom_(bottom), top_(top), partner_(std::move(partner)) {
    const int n = bottom_ + top_;
    if (n < 0 || partner_.size() != static_cast<std::size_t>(n) || n % 2 != 0)
        throw std::invalid_argument("PlanarMatching: bad point count");
    for (int i = 0; i < n; ++i) {
        const int j = partner_[static_cast<std::size_t>(i)];
        if (j < 0 || j >= n || j == i || partner_[static_cast<std::size_t>(j)] != i)
            throw std::invalid_argument("PlanarMatching: not an involution");
    }
    for (int i = 0; i < n; ++i) {
        const int j = partner_[static_cast<std::size_t>(i)];
        if (j < i) continue;
        for (int k = i + 1; k < j; ++k) {
            const int l = partner_[static_cast<std::size_t>(k)];
            if (l < i || l > j) throw std::invalid_argument("PlanarMatching: crossing arcs");
        }
    }
}

PlanarMatching PlanarMatching::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = 2 * n - 1 - i;
        p[static_cast<std::size_t>(2 * n - 1 - i)] = i;
    }
    return PlanarMatching(n, n, std::move(p));
}

PlanarMatching PlanarMatching::hook(int n, int i) {
    if (i < 0 || i + 1 >= n) throw std::invalid_argument("hook: index out of range");
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    auto join = [&p](int x, int y) {
        p[static_cast<std::size_t>(x)] = y;
        p[static_cast<std::size_t>(y)] = x;
    };
    for (int s = 0; s < n; ++s) join(s, 2 * n - 1 - s);
    join(i, i + 1);
    join(2 * n - 1 - i, 2 * n - 2 - i);
    return PlanarMatching(n, n, std::move(p));
}

PlanarMatching PlanarMatching::cup_block(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int t = 0; t < n; ++t) {
        p[static_cast<std::size_t>(t)] = 2 * n - 1 - t;
        p[static_cast<std::size_t>(2 * n - 1 - t)] = t;
    }
    return PlanarMatching(0, 2 * n, std::move(p));
}

PlanarMatching PlanarMatching::cap_block(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int t = 0; t < n; ++t) {
        p[static_cast<std::size_t>(t)] = 2 * n - 1 - t;
        p[static_cast<std::size_t>(2 * n - 1 - t)] = t;
    }
    return PlanarMatching(2 * n, 0, std::move(p));
}

PlanarMatching PlanarMatching::split(int a, int b, int c) {
    if (!admissible(a, b, c)) throw std::invalid_argument("split: inadmissible triple");
    const int k1 = (a + c - b) / 2;  // c-strands continuing into the a-cable
    const int i1 = (a + b - c) / 2;  // turnbacks between the a- and b-cables
    const int j1 = (b + c - a) / 2;  // c-strands continuing into the b-cable
    const int n = c + a + b;
    std::vector<int> p(static_cast<std::size_t>(n), -1);
    auto join = [&p](int x, int y) {
        p[static_cast<std::size_t>(x)] = y;
        p[static_cast<std::size_t>(y)] = x;
    };
    auto top_idx = [&](int pos) { return c + (a + b - 1 - pos); };
    for (int s = 0; s < k1; ++s) join(s, top_idx(s));
    for (int t = 0; t < i1; ++t) join(top_idx(a - 1 - t), top_idx(a + t));
    for (int s = 0; s < j1; ++s) join(k1 + s, top_idx(a + i1 + s));
    return PlanarMatching(c, a + b, std::move(p));
}

PlanarMatching PlanarMatching::mirrored() const {
    const int n = points();
    auto flip = [&](int i) {
        if (i < bottom_) return top_ + bottom_ - 1 - i;  // old bottom pos i -> new top pos i
        return n - 1 - i;                                // old top pos q -> new bottom index q
    };
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(flip(i))] = flip(partner_[static_cast<std::size_t>(i)]);
    return PlanarMatching(top_, bottom_, std::move(p));
}

bool PlanarMatching::operator==(const PlanarMatching& o) const {
    return bottom_ == o.bottom_ && top_ == o.top_ && partner_ == o.partner_;
}

bool PlanarMatching::operator<(const PlanarMatching& o) const {
    if (bottom_ != o.bottom_) return bottom_ < o.bottom_;
    if (top_ != o.top_) return top_ < o.top_;
    return partner_ < o.partner_;
}

namespace {

void enumerate_rec(const std::vector<int>& points, std::vector<int>& partner,
                   const std::function<void()>& done) {
    if (points.empty()) {
        done();
        return;
    }
    const int first = points.front();
    for (std::size_t j = 1; j < points.size(); j += 2) {
        const int mate = points[j];
        partner[static_cast<std::size_t>(first)] = mate;
        partner[static_cast<std::size_t>(mate)] = first;
        const std::vector<int> inside(points.begin() + 1, points.begin() + static_cast<long>(j));
        const std::vector<int> outside(points.begin() + static_cast<long>(j) + 1, points.end());
        enumerate_rec(inside, partner, [&] { enumerate_rec(outside, partner, done); });
    }
}

}  // namespace

std::vector<PlanarMatching> all_planar_matchings(int bottom, int top) {
    const int n = bottom + top;
    if (n % 2 != 0) throw std::invalid_argument("all_planar_matchings: odd point count");
    std::vector<PlanarMatching> out;
    std::vector<int> points(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) points[static_cast<std::size_t>(i)] = i;
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    enumerate_rec(points, partner, [&] { out.emplace_back(bottom, top, partner); });
    return out;
}

// ---------------------------------------------------------------------------
// Composition core: glue the top of X to the bottom of Y, trace strands,
// count closed loops.

namespace {

struct GlueResult {
    std::vector<int> partner;  // matching of the composite boundary
    int loops = 0;
};

GlueResult glue_walk(int mX, int nX, const std::vector<int>& px, int nY,
                     const std::vector<int>& py) {
    const int N1 = mX + nX;
    const int N2 = nX + nY;
    auto partner_of = [&](int g) {
        return g < N1 ? px[static_cast<std::size_t>(g)] : N1 + py[static_cast<std::size_t>(g - N1)];
    };
    // Top position q of X (counterclockwise index mX+nX-1-q) is glued to
    // bottom index q of Y.
    auto twin_of = [&](int g) {
        if (g < N1) return g >= mX ? N1 + (N1 - 1 - g) : -1;
        const int local = g - N1;
        return local < nX ? N1 - 1 - local : -1;
    };
    // New boundary: X's bottom keeps its indices; Y's top local index l
    // becomes mX + (l - nX).
    auto new_index = [&](int g) { return g < N1 ? g : mX + (g - N1 - nX); };

    GlueResult res;
    res.partner.assign(static_cast<std::size_t>(mX + nY), -1);
    std::vector<char> seen(static_cast<std::size_t>(N1 + N2), 0);
    auto walk_from = [&](int f) {
        seen[static_cast<std::size_t>(f)] = 1;
        int x = f;
        while (true) {
            x = partner_of(x);
            seen[static_cast<std::size_t>(x)] = 1;
            const int t = twin_of(x);
            if (t < 0) break;
            x = t;
            seen[static_cast<std::size_t>(x)] = 1;
        }
        res.partner[static_cast<std::size_t>(new_index(f))] = new_index(x);
        res.partner[static_cast<std::size_t>(new_index(x))] = new_index(f);
    };
    for (int f = 0; f < mX; ++f)
        if (!seen[static_cast<std::size_t>(f)]) walk_from(f);
    for (int l = nX; l < N2; ++l)
        if (!seen[static_cast<std::size_t>(N1 + l)]) walk_from(N1 + l);
    for (int g = mX; g < N1; ++g) {
        if (seen[static_cast<std::size_t>(g)]) continue;
        int x = g;
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            x = partner_of(x);
            seen[static_cast<std::size_t>(x)] = 1;
            x = twin_of(x);
        } while (x != g);
        ++res.loops;
    }
    return res;
}

// Markov closure of an (n,n) matching: joins top position q to bottom q;
// the value is the number of resulting loops.
int closure_loops(int n, const std::vector<int>& p) {
    const int N = 2 * n;
    auto twin_of = [&](int g) { return N - 1 - g; };
    std::vector<char> seen(static_cast<std::size_t>(N), 0);
    int loops = 0;
    for (int g = 0; g < N; ++g) {
        if (seen[static_cast<std::size_t>(g)]) continue;
        int x = g;
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            x = p[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(x)] = 1;
            x = twin_of(x);
        } while (x != g);
        ++loops;
    }
    return loops;
}

const RationalFn& loop_value() {
    static const RationalFn delta(delta_poly(1));
    return delta;
}

}  // namespace

// ---------------------------------------------------------------------------
// TLElement over RationalFn

TLElement::TLElement(const PlanarMatching& m, const RationalFn& coeff)
    : bottom_(m.bottom()), top_(m.top()) {
    if (!coeff.is_zero()) combo_.emplace(m, coeff);
}

TLElement TLElement::crossing() {
    // Kauffman resolution of the elementary crossing; the sign of the
    // exponents is pinned by the half-twist checks (lambda oracle).
    TLElement x(2, 2);
    x.add_term(PlanarMatching::identity(2), RationalFn(LaurentPoly::monomial(1, -1)));
    x.add_term(PlanarMatching::hook(2, 0), RationalFn(LaurentPoly::monomial(1, 1)));
    return x;
}

void TLElement::add_term(const PlanarMatching& m, const RationalFn& coeff) {
    if (m.bottom() != bottom_ || m.top() != top_)
        throw std::invalid_argument("TLElement: shape mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = combo_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) combo_.erase(it);
    }
}

TLElement TLElement::operator+(const TLElement& o) const {
    if (bottom_ != o.bottom_ || top_ != o.top_)
        throw std::invalid_argument("TLElement: shape mismatch in addition");
    TLElement out = *this;
    for (const auto& [m, c] : o.combo_) out.add_term(m, c);
    return out;
}

TLElement TLElement::operator-(const TLElement& o) const {
    return *this + o.scaled(-RationalFn::one());
}

TLElement TLElement::scaled(const RationalFn& s) const {
    TLElement out(bottom_, top_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : combo_) out.combo_.emplace(m, c * s);
    return out;
}

namespace {

// Fast-path conversion hooks, defined with the shared-denominator
// machinery below.
struct FastElement;
bool try_fast_compose(const TLElement& x, const TLElement& y, TLElement* out);

}  // namespace

TLElement TLElement::compose(const TLElement& o) const {
    if (top_ != o.bottom_) throw std::invalid_argument("TLElement: strand-count mismatch");
    TLElement out(bottom_, o.top_);
    // Large products go through int64 arithmetic over one shared
    // denominator; huge coefficients fall back to the generic loop.
    if (combo_.size() * o.combo_.size() > 4096 && try_fast_compose(*this, o, &out)) return out;
    for (const auto& [mx, cx] : combo_) {
        for (const auto& [my, cy] : o.combo_) {
            GlueResult g = glue_walk(bottom_, top_, mx.partners(), o.top_, my.partners());
            RationalFn coeff = cx * cy;
            for (int l = 0; l < g.loops; ++l) coeff *= loop_value();
            out.add_term(PlanarMatching(bottom_, o.top_, std::move(g.partner)), coeff);
        }
    }
    return out;
}

TLElement TLElement::tensor(const TLElement& o) const {
    TLElement out(bottom_ + o.bottom_, top_ + o.top_);
    const int m1 = bottom_, n1 = top_, m2 = o.bottom_, n2 = o.top_;
    auto remap_left = [&](int i) {
        if (i < m1) return i;
        const int q = m1 + n1 - 1 - i;  // top position in the left factor
        return m1 + m2 + n1 + n2 - 1 - q;
    };
    auto remap_right = [&](int i) {
        if (i < m2) return m1 + i;
        const int q = m2 + n2 - 1 - i;
        return m1 + m2 + n1 + n2 - 1 - (n1 + q);
    };
    for (const auto& [mx, cx] : combo_) {
        for (const auto& [my, cy] : o.combo_) {
            std::vector<int> p(static_cast<std::size_t>(m1 + m2 + n1 + n2), -1);
            for (int i = 0; i < m1 + n1; ++i)
                p[static_cast<std::size_t>(remap_left(i))] = remap_left(mx.partner(i));
            for (int i = 0; i < m2 + n2; ++i)
                p[static_cast<std::size_t>(remap_right(i))] = remap_right(my.partner(i));
            out.add_term(PlanarMatching(m1 + m2, n1 + n2, std::move(p)), cx * cy);
        }
    }
    return out;
}

TLElement TLElement::mirrored() const {
    TLElement out(top_, bottom_);
    for (const auto& [m, c] : combo_) out.add_term(m.mirrored(), c);
    return out;
}

RationalFn TLElement::trace_closure() const {
    if (bottom_ != top_) throw std::invalid_argument("trace_closure: element not square");
    RationalFn total;
    for (const auto& [m, c] : combo_) {
        const int loops = closure_loops(bottom_, m.partners());
        total += c * loop_value().pow(loops);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Fast internal arithmetic for idempotent construction and network
// sweeps: dense int64 polynomials with a single shared denominator per
// element, so composition needs no rational normalization. Coefficients
// in these sweeps stay far below the overflow guard.

namespace {

struct ZPoly {
    long off = 0;
    std::vector<long long> c;

    bool zero() const { return c.empty(); }

    void trim() {
        std::size_t lead = c.size();
        while (lead > 0 && c[lead - 1] == 0) --lead;
        c.resize(lead);
        std::size_t skip = 0;
        while (skip < c.size() && c[skip] == 0) ++skip;
        if (skip > 0) {
            c.erase(c.begin(), c.begin() + static_cast<long>(skip));
            off += static_cast<long>(skip);
        }
        if (c.empty()) off = 0;
    }

    static ZPoly constant(long long v) {
        ZPoly p;
        if (v != 0) p.c.push_back(v);
        return p;
    }

    static ZPoly monomial(long long v, long e) {
        ZPoly p;
        if (v != 0) {
            p.off = e;
            p.c.push_back(v);
        }
        return p;
    }
};

constexpr long long kZPolyGuard = 1LL << 62;

long long checked_ll(__int128 v) {
    if (v >= kZPolyGuard || v <= -kZPolyGuard)
        throw std::overflow_error("tl oracle: coefficient exceeds the int64 guard");
    return static_cast<long long>(v);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly out;
    if (a.zero() || b.zero()) return out;
    out.off = a.off + b.off;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    std::vector<__int128> acc(out.c.size(), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            acc[i + j] += static_cast<__int128>(a.c[i]) * b.c[j];
    }
    for (std::size_t k = 0; k < acc.size(); ++k) out.c[k] = checked_ll(acc[k]);
    out.trim();
    return out;
}

void zp_add_into(ZPoly& a, const ZPoly& b) {
    if (b.zero()) return;
    if (a.zero()) {
        a = b;
        return;
    }
    const long lo = std::min(a.off, b.off);
    const long hi = std::max(a.off + static_cast<long>(a.c.size()), b.off + static_cast<long>(b.c.size()));
    std::vector<long long> merged(static_cast<std::size_t>(hi - lo), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) merged[static_cast<std::size_t>(a.off - lo) + i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        long long& slot = merged[static_cast<std::size_t>(b.off - lo) + i];
        slot = checked_ll(static_cast<__int128>(slot) + b.c[i]);
    }
    a.off = lo;
    a.c = std::move(merged);
    a.trim();
}

ZPoly zp_neg(ZPoly p) {
    for (auto& v : p.c) v = -v;
    return p;
}

ZPoly zp_from_laurent(const LaurentPoly& p) {
    ZPoly out;
    if (p.is_zero()) return out;
    out.off = p.low_exp();
    out.c.assign(static_cast<std::size_t>(p.degree() - out.off + 1), 0);
    for (const auto& [e, coeff] : p.terms()) {
        if (!coeff.fits_slong_p()) throw std::overflow_error("tl oracle: coefficient too large");
        out.c[static_cast<std::size_t>(e - out.off)] = coeff.get_si();
    }
    return out;
}

LaurentPoly zp_to_laurent(const ZPoly& p) {
    LaurentPoly out;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (p.c[i] != 0)
            out += LaurentPoly::monomial(static_cast<long>(p.c[i]), p.off + static_cast<long>(i));
    return out;
}

const ZPoly& zp_delta_pow(int k) {
    static std::mutex mutex;
    static std::vector<ZPoly> cache{ZPoly::constant(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(zp_mul(cache.back(), zp_from_laurent(delta_poly(1))));
    return cache[static_cast<std::size_t>(k)];
}

// Combination of same-shape matchings with one shared denominator.
struct FastElement {
    int bottom = 0;
    int top = 0;
    std::map<PlanarMatching, ZPoly> nums;
    ZPoly den = ZPoly::constant(1);

    static FastElement from_matching(const PlanarMatching& m) {
        FastElement e;
        e.bottom = m.bottom();
        e.top = m.top();
        e.nums.emplace(m, ZPoly::constant(1));
        return e;
    }

    void add_num(const PlanarMatching& m, const ZPoly& v) {
        if (v.zero()) return;
        auto [it, inserted] = nums.emplace(m, v);
        if (!inserted) {
            zp_add_into(it->second, v);
            if (it->second.zero()) nums.erase(it);
        }
    }
};

FastElement fast_compose(const FastElement& x, const FastElement& y) {
    if (x.top != y.bottom) throw std::invalid_argument("fast_compose: strand-count mismatch");
    FastElement out;
    out.bottom = x.bottom;
    out.top = y.top;
    out.den = zp_mul(x.den, y.den);
    for (const auto& [mx, cx] : x.nums) {
        for (const auto& [my, cy] : y.nums) {
            GlueResult g = glue_walk(x.bottom, x.top, mx.partners(), y.top, my.partners());
            ZPoly coeff = zp_mul(cx, cy);
            if (g.loops > 0) coeff = zp_mul(coeff, zp_delta_pow(g.loops));
            out.add_num(PlanarMatching(x.bottom, y.top, std::move(g.partner)), coeff);
        }
    }
    return out;
}

FastElement fast_tensor(const FastElement& x, const FastElement& y) {
    FastElement out;
    out.bottom = x.bottom + y.bottom;
    out.top = x.top + y.top;
    out.den = zp_mul(x.den, y.den);
    const int m1 = x.bottom, n1 = x.top, m2 = y.bottom, n2 = y.top;
    auto remap_left = [&](int i) {
        if (i < m1) return i;
        const int q = m1 + n1 - 1 - i;
        return m1 + m2 + n1 + n2 - 1 - q;
    };
    auto remap_right = [&](int i) {
        if (i < m2) return m1 + i;
        const int q = m2 + n2 - 1 - i;
        return m1 + m2 + n1 + n2 - 1 - (n1 + q);
    };
    for (const auto& [mx, cx] : x.nums) {
        for (const auto& [my, cy] : y.nums) {
            std::vector<int> p(static_cast<std::size_t>(m1 + m2 + n1 + n2), -1);
            for (int i = 0; i < m1 + n1; ++i)
                p[static_cast<std::size_t>(remap_left(i))] = remap_left(mx.partner(i));
            for (int i = 0; i < m2 + n2; ++i)
                p[static_cast<std::size_t>(remap_right(i))] = remap_right(my.partner(i));
            out.add_num(PlanarMatching(m1 + m2, n1 + n2, std::move(p)), zp_mul(cx, cy));
        }
    }
    return out;
}

// Divides the shared denominator and every numerator by their common
// polynomial factor, then clears denominator monomial units and sign.
void fast_normalize(FastElement& e) {
    if (e.nums.empty()) {
        e.den = ZPoly::constant(1);
        return;
    }
    LaurentPoly g = zp_to_laurent(e.den);
    for (const auto& [m, num] : e.nums) {
        if (g.is_one()) break;
        g = laurent_gcd(g, zp_to_laurent(num));
    }
    if (!g.is_one()) {
        LaurentPoly den = *zp_to_laurent(e.den).divided_exactly_by(g);
        std::map<PlanarMatching, ZPoly> reduced;
        for (const auto& [m, num] : e.nums)
            reduced.emplace(m, zp_from_laurent(*zp_to_laurent(num).divided_exactly_by(g)));
        e.nums = std::move(reduced);
        e.den = zp_from_laurent(den);
    }
    // Shift the denominator's monomial unit into the numerators.
    if (e.den.off != 0) {
        for (auto& [m, num] : e.nums) num.off -= e.den.off;
        e.den.off = 0;
    }
    if (e.den.c.back() < 0) {
        e.den = zp_neg(e.den);
        for (auto& [m, num] : e.nums) num = zp_neg(num);
    }
}

RationalFn fast_trace(const FastElement& e) {
    if (e.bottom != e.top) throw std::invalid_argument("fast_trace: element not square");
    ZPoly total;
    for (const auto& [m, num] : e.nums) {
        const int loops = closure_loops(e.bottom, m.partners());
        zp_add_into(total, zp_mul(num, zp_delta_pow(loops)));
    }
    return RationalFn(zp_to_laurent(total), zp_to_laurent(e.den));
}

// Shared-denominator form of a generic element: the denominator is the
// lcm of the coefficient denominators. Throws std::overflow_error when
// coefficients do not fit the int64 guard.
FastElement to_fast(const TLElement& e) {
    FastElement f;
    f.bottom = e.bottom();
    f.top = e.top();
    LaurentPoly den = LaurentPoly::one();
    for (const auto& [m, c] : e.combo()) {
        const LaurentPoly g = laurent_gcd(den, c.den());
        den = *den.divided_exactly_by(g) * c.den();
    }
    for (const auto& [m, c] : e.combo()) {
        const LaurentPoly scale = *den.divided_exactly_by(c.den());
        f.nums.emplace(m, zp_from_laurent(c.num() * scale));
    }
    f.den = zp_from_laurent(den);
    return f;
}

TLElement from_fast(const FastElement& f) {
    TLElement out(f.bottom, f.top);
    const LaurentPoly den = zp_to_laurent(f.den);
    for (const auto& [m, num] : f.nums) out.add_term(m, RationalFn(zp_to_laurent(num), den));
    return out;
}

bool try_fast_compose(const TLElement& x, const TLElement& y, TLElement* out) {
    try {
        *out = from_fast(fast_compose(to_fast(x), to_fast(y)));
        return true;
    } catch (const std::overflow_error&) {
        return false;
    }
}

const FastElement& jw_fast(int n, int cap) {
    if (n < 0) throw std::invalid_argument("jones_wenzl: negative index");
    if (n > cap) throw CapExceededError("jones_wenzl: index beyond cap");
    static std::mutex mutex;
    static std::map<int, FastElement> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (cache.empty()) {
        FastElement f0;
        f0.nums.emplace(PlanarMatching(0, 0, {}), ZPoly::constant(1));
        cache.emplace(0, std::move(f0));
        cache.emplace(1, FastElement::from_matching(PlanarMatching::identity(1)));
    }
    for (int k = static_cast<int>(cache.rbegin()->first) + 1; k <= n; ++k) {
        const FastElement& prev = cache.at(k - 1);
        FastElement ext = fast_tensor(prev, FastElement::from_matching(PlanarMatching::identity(1)));
        FastElement hooked = fast_compose(ext, FastElement::from_matching(PlanarMatching::hook(k, k - 2)));
        FastElement prod = fast_compose(hooked, ext);
        // f_k = ext - (Delta_{k-2} / Delta_{k-1}) * prod, over den(ext)^2 * cd.
        ZPoly cn = zp_from_laurent(delta_poly(k - 2));
        ZPoly cd = zp_from_laurent(delta_poly(k - 1));
        FastElement f;
        f.bottom = f.top = k;
        f.den = zp_mul(prod.den, cd);
        const ZPoly ext_scale = zp_mul(ext.den, cd);
        for (const auto& [m, num] : ext.nums) f.add_num(m, zp_mul(num, ext_scale));
        for (const auto& [m, num] : prod.nums) f.add_num(m, zp_neg(zp_mul(num, cn)));
        fast_normalize(f);
        cache.emplace(k, std::move(f));
    }
    return cache.at(n);
}

FastElement fast_crossing() {
    FastElement x;
    x.bottom = x.top = 2;
    x.nums.emplace(PlanarMatching::identity(2), ZPoly::monomial(1, -1));
    x.nums.emplace(PlanarMatching::hook(2, 0), ZPoly::monomial(1, 1));
    return x;
}

// Cable crossing: the a-cable (left) passes over the b-cable; strands
// emerge in order (b-cable, a-cable).
FastElement fast_cable_crossing(int a, int b) {
    static std::mutex memo_mutex;
    static std::map<std::pair<int, int>, FastElement> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
    }
    FastElement result = [&] {
    FastElement one_over_b = FastElement::from_matching(PlanarMatching::identity(b + 1));
    {
        const FastElement x = fast_crossing();
        for (int k = 0; k < b; ++k) {
            FastElement layer = x;
            if (k > 0) layer = fast_tensor(FastElement::from_matching(PlanarMatching::identity(k)), layer);
            if (b - 1 - k > 0)
                layer = fast_tensor(layer, FastElement::from_matching(PlanarMatching::identity(b - 1 - k)));
            one_over_b = fast_compose(one_over_b, layer);
        }
    }
    FastElement out = FastElement::from_matching(PlanarMatching::identity(a + b));
    for (int s = 0; s < a; ++s) {
        FastElement layer = one_over_b;
        if (a - 1 - s > 0)
            layer = fast_tensor(FastElement::from_matching(PlanarMatching::identity(a - 1 - s)), layer);
        if (s > 0) layer = fast_tensor(layer, FastElement::from_matching(PlanarMatching::identity(s)));
        out = fast_compose(out, layer);
    }
    return out;
    }();
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(std::pair<int, int>{a, b}, std::move(result)).first->second;
}

RationalFn fast_theta(int a, int b, int c, int cap) {
    FastElement e = jw_fast(c, cap);
    e = fast_compose(e, FastElement::from_matching(PlanarMatching::split(a, b, c)));
    e = fast_compose(e, fast_tensor(jw_fast(a, cap), jw_fast(b, cap)));
    e = fast_compose(e, FastElement::from_matching(PlanarMatching::split(a, b, c).mirrored()));
    return fast_trace(e);
}

}  // namespace

TLElement jones_wenzl(int n, int cap) {
    const FastElement& f = jw_fast(n, cap);
    TLElement out(n, n);
    const LaurentPoly den = zp_to_laurent(f.den);
    for (const auto& [m, num] : f.nums) out.add_term(m, RationalFn(zp_to_laurent(num), den));
    return out;
}


namespace {

RationalFn evaluate_network_uncached(NetworkKind kind, const std::vector<int>& labels,
                                     const OracleCaps& caps) {
    switch (kind) {
        case NetworkKind::delta: {
            if (labels.size() != 1) throw std::invalid_argument("delta network: one label expected");
            return fast_trace(jw_fast(labels[0], caps.jw));
        }
        case NetworkKind::theta: {
            if (labels.size() != 3) throw std::invalid_argument("theta network: three labels expected");
            const int a = labels[0], b = labels[1], c = labels[2];
            if (a + b + c > caps.theta_sum) throw CapExceededError("theta network: beyond cap");
            if (!admissible(a, b, c)) return RationalFn::zero();
            return fast_theta(a, b, c, std::max(caps.jw, caps.theta_sum / 2));
        }
        case NetworkKind::lambda: {
            if (labels.size() != 3) throw std::invalid_argument("lambda network: three labels expected");
            const int a = labels[0], b = labels[1], c = labels[2];
            if (a + b > caps.lambda_sum) throw CapExceededError("lambda network: beyond cap");
            if (!admissible(a, b, c)) return RationalFn::zero();
            const int cap = std::max(caps.jw, a + b);
            FastElement e = jw_fast(c, cap);
            e = fast_compose(e, FastElement::from_matching(PlanarMatching::split(a, b, c)));
            e = fast_compose(e, fast_tensor(jw_fast(a, cap), jw_fast(b, cap)));
            e = fast_compose(e, fast_cable_crossing(a, b));
            e = fast_compose(e, FastElement::from_matching(PlanarMatching::split(b, a, c).mirrored()));
            return fast_trace(e) / fast_theta(a, b, c, cap);
        }
        case NetworkKind::tet: {
            if (labels.size() != 6) throw std::invalid_argument("tet network: six labels expected");
            // Rename into the wiring below, whose vertex triples are
            // (a,b,c), (d,e,c), (a,e,f), (b,d,f): the slot convention
            // (a,b,f), (c,d,f), (a,d,e), (b,c,e) maps via c <-> f and
            // d -> c, e -> d, f -> e.
            const int a = labels[0], b = labels[1], c = labels[5];
            const int d = labels[2], e_ = labels[3], f_ = labels[4];
            if (a + b + c + d + e_ + f_ > caps.tet_sum) throw CapExceededError("tet network: beyond cap");
            if (!admissible(a, b, c) || !admissible(d, e_, c) || !admissible(a, e_, f_) ||
                !admissible(b, d, f_))
                return RationalFn::zero();
            const int cap = std::max(caps.jw, caps.tet_sum);
            FastElement net = jw_fast(c, cap);
            net = fast_compose(net, FastElement::from_matching(PlanarMatching::split(a, b, c)));
            net = fast_compose(net, fast_tensor(jw_fast(a, cap), jw_fast(b, cap)));
            FastElement va = fast_compose(FastElement::from_matching(PlanarMatching::split(e_, f_, a)),
                                          fast_tensor(jw_fast(e_, cap), jw_fast(f_, cap)));
            FastElement vb = fast_compose(FastElement::from_matching(PlanarMatching::split(f_, d, b)),
                                          fast_tensor(jw_fast(f_, cap), jw_fast(d, cap)));
            net = fast_compose(net, fast_tensor(va, vb));
            FastElement mid = FastElement::from_matching(PlanarMatching::identity(e_));
            if (f_ > 0) mid = fast_tensor(mid, FastElement::from_matching(PlanarMatching::cap_block(f_)));
            if (d > 0) mid = fast_tensor(mid, FastElement::from_matching(PlanarMatching::identity(d)));
            net = fast_compose(net, mid);
            net = fast_compose(net, FastElement::from_matching(PlanarMatching::split(e_, d, c).mirrored()));
            return fast_trace(net);
        }
    }
    throw std::invalid_argument("evaluate_network: unknown kind");
}

}  // namespace

RationalFn evaluate_network(NetworkKind kind, const std::vector<int>& labels, const OracleCaps& caps) {
    // Network values are pure in (kind, labels); caps only gate access.
    static std::mutex memo_mutex;
    static std::map<std::pair<int, std::vector<int>>, RationalFn> memo;
    const std::pair<int, std::vector<int>> key{static_cast<int>(kind), labels};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    const RationalFn value = evaluate_network_uncached(kind, labels, caps);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, value);
    return value;
}

}  // namespace skein
