#include "skein/cyclofield.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "skein/cyclotomic.hpp"
#include "skein/errors.hpp"

namespace skein {

namespace {

struct FieldContext {
    int r = 0;
    int degree = 0;
    std::vector<mpq_class> modulus;             // monic Phi_{2r}, length degree+1
    std::vector<std::vector<mpq_class>> xpow;   // x^m reduced, m = 0..2r-1
};

const FieldContext& field_context(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("cyclotomic field: r must be odd and at least 3");
    static std::mutex mutex;
    static std::map<int, FieldContext> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    FieldContext ctx;
    ctx.r = r;
    const LaurentPoly phi = cyclotomic(2 * r);
    ctx.degree = static_cast<int>(phi.degree());
    ctx.modulus.assign(static_cast<std::size_t>(ctx.degree) + 1, 0);
    for (const auto& [e, c] : phi.terms()) ctx.modulus[static_cast<std::size_t>(e)] = mpq_class(c);

    ctx.xpow.reserve(static_cast<std::size_t>(2 * r));
    for (int m = 0; m < 2 * r; ++m) {
        std::vector<mpq_class> row(static_cast<std::size_t>(ctx.degree), 0);
        if (m < ctx.degree) {
            row[static_cast<std::size_t>(m)] = 1;
        } else {
            // x * previous, with x^degree replaced by -(modulus tail).
            const auto& prev = ctx.xpow.back();
            mpq_class lead = prev[static_cast<std::size_t>(ctx.degree - 1)];
            for (int i = ctx.degree - 1; i > 0; --i) row[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
            row[0] = 0;
            if (lead != 0)
                for (int i = 0; i < ctx.degree; ++i)
                    row[static_cast<std::size_t>(i)] -= lead * ctx.modulus[static_cast<std::size_t>(i)];
        }
        ctx.xpow.push_back(std::move(row));
    }
    return cache.emplace(r, std::move(ctx)).first->second;
}

}  // namespace

CyclotomicNum::CyclotomicNum(int r) : r_(r) {
    coeffs_.assign(static_cast<std::size_t>(field_context(r).degree), 0);
}

CyclotomicNum CyclotomicNum::from_rational(int r, const mpq_class& value) {
    CyclotomicNum out(r);
    out.coeffs_[0] = value;
    out.coeffs_[0].canonicalize();
    return out;
}

CyclotomicNum CyclotomicNum::from_long(int r, long value) {
    return from_rational(r, mpq_class(value));
}

CyclotomicNum CyclotomicNum::zeta_pow(int r, long k) {
    const FieldContext& ctx = field_context(r);
    long m = k % (2 * r);
    if (m < 0) m += 2 * r;
    CyclotomicNum out(r);
    out.coeffs_ = ctx.xpow[static_cast<std::size_t>(m)];
    return out;
}

bool CyclotomicNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CyclotomicNum CyclotomicNum::operator-() const {
    CyclotomicNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNum CyclotomicNum::operator+(const CyclotomicNum& o) const {
    if (r_ != o.r_) throw std::invalid_argument("CyclotomicNum: mixed orders");
    CyclotomicNum out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    return out;
}

CyclotomicNum CyclotomicNum::operator-(const CyclotomicNum& o) const {
    return *this + (-o);
}

CyclotomicNum CyclotomicNum::operator*(const CyclotomicNum& o) const {
    if (r_ != o.r_) throw std::invalid_argument("CyclotomicNum: mixed orders");
    const FieldContext& ctx = field_context(r_);
    const int d = ctx.degree;
    std::vector<mpq_class> conv(static_cast<std::size_t>(2 * d - 1), 0);
    for (int i = 0; i < d; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.coeffs_[static_cast<std::size_t>(j)] == 0) continue;
            conv[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    CyclotomicNum out(r_);
    for (int e = 0; e < 2 * d - 1; ++e) {
        const mpq_class& c = conv[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        if (e < d) {
            out.coeffs_[static_cast<std::size_t>(e)] += c;
        } else {
            const auto& row = ctx.xpow[static_cast<std::size_t>(e)];
            for (int i = 0; i < d; ++i)
                if (row[static_cast<std::size_t>(i)] != 0)
                    out.coeffs_[static_cast<std::size_t>(i)] += c * row[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

namespace {

using Poly = std::vector<mpq_class>;  // dense, low degree first

int poly_deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// Division with remainder over Q[x].
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    const int dd = poly_deg(den);
    Poly quot(num.size(), 0);
    int dn = poly_deg(num);
    while (dn >= dd && dn >= 0) {
        mpq_class f = num[static_cast<std::size_t>(dn)] / den[static_cast<std::size_t>(dd)];
        quot[static_cast<std::size_t>(dn - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            num[static_cast<std::size_t>(dn - dd + i)] -= f * den[static_cast<std::size_t>(i)];
        dn = poly_deg(num);
    }
    return {quot, num};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    const int da = poly_deg(a), db = poly_deg(b);
    if (da < 0 || db < 0) return Poly{};
    Poly out(static_cast<std::size_t>(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j <= db; ++j)
            out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

}  // namespace

CyclotomicNum CyclotomicNum::inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicNum: inverse of zero");
    const FieldContext& ctx = field_context(r_);
    // Extended Euclid: s * this + t * modulus = gcd (a nonzero rational).
    Poly r0 = ctx.modulus;
    Poly r1(coeffs_.begin(), coeffs_.end());
    Poly s0{mpq_class(0)};
    Poly s1{mpq_class(1)};
    while (true) {
        const int d1 = poly_deg(r1);
        if (d1 < 0) throw std::domain_error("CyclotomicNum: not invertible");
        if (d1 == 0) break;
        auto [q, rem] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const mpq_class unit = r1[0];
    CyclotomicNum out(r_);
    for (std::size_t i = 0; i < s1.size() && i < out.coeffs_.size(); ++i) out.coeffs_[i] = s1[i] / unit;
    if (poly_deg(s1) >= ctx.degree) throw std::logic_error("CyclotomicNum: inverse degree overflow");
    return out;
}

bool CyclotomicNum::operator==(const CyclotomicNum& o) const {
    return r_ == o.r_ && coeffs_ == o.coeffs_;
}

Complex CyclotomicNum::embed(mpfr_prec_t precision_bits) const {
    const Real pi = Real::pi(precision_bits);
    const Complex zeta = Complex::unit(pi / Real(static_cast<long>(r_), precision_bits));
    Complex acc(precision_bits);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= zeta;
        if (coeffs_[i] != 0) acc += Complex(Real(coeffs_[i], precision_bits), Real(precision_bits));
    }
    return acc;
}

std::string CyclotomicNum::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].get_str();
    }
    os << "]";
    return os.str();
}

void CyclotomicNum::add_scaled_power(long k, const mpq_class& scale) {
    if (scale == 0) return;
    const FieldContext& ctx = field_context(r_);
    long m = k % (2 * r_);
    if (m < 0) m += 2 * r_;
    const auto& row = ctx.xpow[static_cast<std::size_t>(m)];
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (row[i] != 0) coeffs_[i] += scale * row[i];
}

CyclotomicNum eval_at_root(const LaurentPoly& p, int r) {
    CyclotomicNum out(r);
    for (const auto& [e, c] : p.terms()) out.add_scaled_power(e, mpq_class(c));
    return out;
}

CyclotomicNum eval_at_root(const RationalFn& f, int r) {
    const CyclotomicNum den = eval_at_root(f.den(), r);
    if (den.is_zero())
        throw PoleError("eval_at_root: denominator vanishes at the 2r-th root of unity");
    if (f.num().is_zero()) return CyclotomicNum(r);
    return eval_at_root(f.num(), r) * den.inverse();
}

}  // namespace skein
