#pragma once

#include <map>

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"
#include "skein/ratfn.hpp"

namespace skein {

/// Signed monomial times a product of quantum integers with integer
/// exponents: sign * A^apow * prod_k [k]^{exps[k]}. Since every quantum
/// integer is a monomial times a product of cyclotomic polynomials, a
/// value of this form converts to a canonical RationalFn without any
/// polynomial gcd. Ratios of quantum factorials live here.
class QFactorProduct {
public:
    QFactorProduct() = default;

    static QFactorProduct qint(int k, int e = 1) {
        QFactorProduct p;
        p.mul_qint(k, e);
        return p;
    }
    static QFactorProduct qfact(int k, int e = 1) {
        QFactorProduct p;
        p.mul_qfact(k, e);
        return p;
    }

    int sign() const { return sign_; }
    long apow() const { return apow_; }
    const std::map<int, int>& exps() const { return exps_; }

    void mul_sign(int s) { sign_ *= s; }
    void mul_apow(long e) { apow_ += e; }

    /// Multiply by [k]^e. [1] is the unit and is never stored.
    void mul_qint(int k, int e = 1) {
        if (k == 1 || e == 0) return;
        int& cur = exps_[k];
        cur += e;
        if (cur == 0) exps_.erase(k);
    }

    /// Multiply by ([k]!)^e = prod_{j<=k} [j]^e.
    void mul_qfact(int k, int e = 1) {
        for (int j = 2; j <= k; ++j) mul_qint(j, e);
    }

    QFactorProduct& operator*=(const QFactorProduct& o) {
        sign_ *= o.sign_;
        apow_ += o.apow_;
        for (const auto& [k, e] : o.exps_) mul_qint(k, e);
        return *this;
    }
    QFactorProduct operator*(const QFactorProduct& o) const {
        QFactorProduct p = *this;
        p *= o;
        return p;
    }
    QFactorProduct inverse() const {
        QFactorProduct p;
        p.sign_ = sign_;
        p.apow_ = -apow_;
        for (const auto& [k, e] : exps_) p.exps_[k] = -e;
        return p;
    }

    /// Exponents of cyclotomic polynomials equal to this product, with
    /// the monomial part folded into the returned A-power:
    /// [k] = A^{2-2k} * prod_{d | 4k, d not in {1,2,4}} Phi_d.
    std::pair<long, std::map<int, int>> cyclotomic_exponents() const {
        long apow = apow_;
        std::map<int, int> cyc;
        for (const auto& [k, e] : exps_) {
            apow += static_cast<long>(2 - 2 * k) * e;
            for (int d = 3; d <= 4 * k; ++d) {
                if ((4 * k) % d != 0 || d == 4) continue;
                int& cur = cyc[d];
                cur += e;
                if (cur == 0) cyc.erase(d);
            }
        }
        return {apow, cyc};
    }

    RationalFn to_rational() const {
        auto [apow, cyc] = cyclotomic_exponents();
        LaurentPoly num = LaurentPoly::monomial(sign_, apow);
        LaurentPoly den = LaurentPoly::one();
        for (const auto& [d, e] : cyc) {
            if (e > 0)
                num *= cyclotomic(d).pow(static_cast<unsigned long>(e));
            else
                den *= cyclotomic(d).pow(static_cast<unsigned long>(-e));
        }
        return RationalFn::from_canonical_parts(std::move(num), std::move(den));
    }

private:
    int sign_ = 1;
    long apow_ = 0;
    std::map<int, int> exps_;
};

}  // namespace skein
