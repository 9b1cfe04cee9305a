#include "skein/handlebody.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "skein/qfactor.hpp"

namespace skein {

std::string BasisTriple::to_string() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

bool order_less(const BasisTriple& s, const BasisTriple& t) {
    const int ms = std::max(s.a, s.c);
    const int mt = std::max(t.a, t.c);
    if (ms != mt) return ms < mt;
    if (s.a != t.a) return s.a < t.a;
    if (s.c != t.c) return s.c < t.c;
    return s.b < t.b;
}

std::pair<int, int> h1_class(const BasisTriple& t) {
    return {t.a % 2, t.c % 2};
}

RationalFn norm_sq(const BasisTriple& t) {
    if (!t.valid()) throw std::invalid_argument("norm_sq: invalid triple " + t.to_string());
    QFactorProduct p = theta_factored(t.a, t.a, t.b);
    p *= theta_factored(t.b, t.c, t.c);
    // Divide by Delta_a Delta_b Delta_c = (-1)^{a+b+c} [a+1][b+1][c+1].
    p.mul_qint(t.a + 1, -1);
    p.mul_qint(t.b + 1, -1);
    p.mul_qint(t.c + 1, -1);
    if ((t.a + t.b + t.c) % 2 != 0) p.mul_sign(-1);
    return p.to_rational();
}

const std::vector<BasisTriple>& generators() {
    static const std::vector<BasisTriple> g{
        BasisTriple{0, 0, 0}, BasisTriple{0, 0, 1}, BasisTriple{1, 0, 0},
        BasisTriple{1, 0, 1}, BasisTriple{0, 0, 2}};
    return g;
}

RationalFn SkeinVector::coeff(const BasisTriple& t) const {
    auto it = support_.find(t);
    return it == support_.end() ? RationalFn::zero() : it->second;
}

void SkeinVector::add(const BasisTriple& t, const RationalFn& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = support_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) support_.erase(it);
    }
}

SkeinVector SkeinVector::operator+(const SkeinVector& o) const {
    SkeinVector out = *this;
    for (const auto& [t, c] : o.support_) out.add(t, c);
    return out;
}

SkeinVector SkeinVector::operator-(const SkeinVector& o) const {
    SkeinVector out = *this;
    for (const auto& [t, c] : o.support_) out.add(t, -c);
    return out;
}

SkeinVector SkeinVector::scaled(const RationalFn& s) const {
    SkeinVector out;
    if (s.is_zero()) return out;
    for (const auto& [t, c] : support_) out.support_.emplace(t, c * s);
    return out;
}

std::string SkeinVector::to_json() const {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [t, c] : support_) {
        nlohmann::ordered_json term;
        term["a"] = t.a;
        term["b"] = t.b;
        term["c"] = t.c;
        term["coeff"] = {{"num", c.num().to_string()}, {"den", c.den().to_string()}};
        terms.push_back(std::move(term));
    }
    nlohmann::ordered_json out;
    out["terms"] = std::move(terms);
    return out.dump();
}

SkeinVector SkeinVector::from_json(const std::string& text) {
    const auto parsed = nlohmann::json::parse(text);
    SkeinVector out;
    for (const auto& term : parsed.at("terms")) {
        BasisTriple t{term.at("a").get<int>(), term.at("b").get<int>(), term.at("c").get<int>()};
        RationalFn c(LaurentPoly::from_string(term.at("coeff").at("num").get<std::string>()),
                     LaurentPoly::from_string(term.at("coeff").at("den").get<std::string>()));
        out.add(t, c);
    }
    return out;
}

RationalFn inner_product(const SkeinVector& v, const SkeinVector& w) {
    RationalFn total;
    for (const auto& [t, c] : v.support()) {
        const RationalFn wc = w.coeff(t);
        if (wc.is_zero()) continue;
        total += c.bar() * wc * norm_sq(t);
    }
    return total;
}

}  // namespace skein
