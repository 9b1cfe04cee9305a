#include "skein/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace skein {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, ExpType exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = coeff;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

LaurentPoly::ExpType LaurentPoly::degree() const {
    if (is_zero()) throw std::domain_error("LaurentPoly::degree: zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly::ExpType LaurentPoly::low_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly::low_exp: zero polynomial");
    return terms_.begin()->first;
}

const mpz_class& LaurentPoly::leading_coeff() const {
    if (is_zero()) throw std::domain_error("LaurentPoly::leading_coeff: zero polynomial");
    return terms_.rbegin()->second;
}

mpz_class LaurentPoly::coeff(ExpType exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(ExpType exp, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out += rhs;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    out -= rhs;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    if (is_zero() || rhs.is_zero()) return out;
    mpz_class prod;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            prod = c1 * c2;
            out.add_term(e1 + e2, prod);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

bool LaurentPoly::operator<(const LaurentPoly& rhs) const {
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    for (; a != terms_.end() && b != rhs.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        int c = cmp(a->second, b->second);
        if (c != 0) return c < 0;
    }
    return a == terms_.end() && b != rhs.terms_.end();
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly result = one();
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[-e] = c;
    return out;
}

void LaurentPoly::shift(ExpType exp) {
    if (exp == 0) return;
    TermMap shifted;
    for (const auto& [e, c] : terms_) shifted.emplace(e + exp, c);
    terms_ = std::move(shifted);
}

LaurentPoly LaurentPoly::shifted(ExpType exp) const {
    LaurentPoly out = *this;
    out.shift(exp);
    return out;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(const LaurentPoly& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly();
    // Reduce to ordinary polynomials with constant term at exponent 0.
    const ExpType flow = low_exp();
    const ExpType dlow = rhs.low_exp();
    LaurentPoly f = shifted(-flow);
    const LaurentPoly d = rhs.shifted(-dlow);
    const ExpType ddeg = d.degree();
    if (f.degree() < ddeg) return std::nullopt;
    const mpz_class dlc = d.leading_coeff();
    LaurentPoly quot;
    while (!f.is_zero()) {
        if (f.degree() < ddeg) return std::nullopt;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.leading_coeff().get_mpz_t(), dlc.get_mpz_t());
        if (r != 0) return std::nullopt;
        const ExpType shift_by = f.degree() - ddeg;
        quot.add_term(shift_by, q);
        f -= d.shifted(shift_by) * LaurentPoly(q);
    }
    return quot.shifted(flow - dlow);
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str() << "*A^" << e;
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::from_string(const std::string& text) {
    LaurentPoly out;
    if (text == "0") return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
        std::size_t star = term.find("*A^");
        if (star == std::string::npos)
            throw std::invalid_argument("LaurentPoly::from_string: bad term '" + term + "'");
        mpz_class c(term.substr(0, star));
        long e = std::stol(term.substr(star + 3));
        out.add_term(e, c);
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return out;
}

LaurentPoly operator*(const mpz_class& scalar, const LaurentPoly& p) {
    return LaurentPoly(scalar) * p;
}

int cmp_sign(const mpz_class& x, const mpz_class& y) {
    return cmp(x, y);
}

namespace {

// Ordinary-polynomial view: coefficient vector indexed from exponent 0.
struct DensePoly {
    std::vector<mpz_class> c;  // c[i] is the coefficient of A^i

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

DensePoly to_dense(const LaurentPoly& p) {
    DensePoly d;
    if (p.is_zero()) return d;
    long low = p.low_exp();
    d.c.assign(static_cast<std::size_t>(p.degree() - low + 1), mpz_class(0));
    for (const auto& [e, coeff] : p.terms()) d.c[static_cast<std::size_t>(e - low)] = coeff;
    return d;
}

LaurentPoly from_dense(const DensePoly& d) {
    LaurentPoly out;
    for (std::size_t i = 0; i < d.c.size(); ++i)
        if (d.c[i] != 0) out += LaurentPoly::monomial(d.c[i], static_cast<long>(i));
    return out;
}

mpz_class dense_content(const DensePoly& p) {
    mpz_class g = 0;
    for (const auto& x : p.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void dense_divide_scalar(DensePoly& p, const mpz_class& s) {
    for (auto& x : p.c) x /= s;
}

// prem(a, b): lc(b)^(deg a - deg b + 1) * a mod b, computed in place.
DensePoly pseudo_rem(DensePoly a, const DensePoly& b) {
    const int db = b.deg();
    const mpz_class& lb = b.c.back();
    while (!a.zero() && a.deg() >= db) {
        const int da = a.deg();
        mpz_class la = a.c.back();
        for (auto& x : a.c) x *= lb;
        for (int i = 0; i <= db; ++i) a.c[static_cast<std::size_t>(da - db + i)] -= la * b.c[static_cast<std::size_t>(i)];
        a.trim();
    }
    return a;
}

// Primitive polynomial remainder sequence; inputs must be primitive.
DensePoly primitive_gcd(DensePoly a, DensePoly b) {
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.zero()) {
        DensePoly r = pseudo_rem(a, b);
        r.trim();
        if (!r.zero()) {
            mpz_class cont = dense_content(r);
            dense_divide_scalar(r, cont);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.zero() && a.c.back() < 0)
        for (auto& x : a.c) x = -x;
    return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero() || b.is_zero()) {
        DensePoly d = to_dense(a.is_zero() ? b : a);
        if (d.c.back() < 0)
            for (auto& x : d.c) x = -x;
        return from_dense(d);
    }
    if (a.is_monomial() || b.is_monomial()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return LaurentPoly(g);
    }
    DensePoly da = to_dense(a);
    DensePoly db = to_dense(b);
    mpz_class ca = dense_content(da);
    mpz_class cb = dense_content(db);
    dense_divide_scalar(da, ca);
    dense_divide_scalar(db, cb);
    DensePoly g = primitive_gcd(std::move(da), std::move(db));
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return LaurentPoly(cg) * from_dense(g);
}

}  // namespace skein
