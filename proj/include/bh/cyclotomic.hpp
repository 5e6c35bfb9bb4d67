#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bh/laurent.hpp"

namespace bh {

/// The m-th cyclotomic polynomial, obtained by dividing x^m - 1 by Phi_d for every proper divisor d.
QPoly cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Shared modulus data for Q(zeta_m) = Q[x]/Phi_m(x).
struct CyclotomicContext {
    int conductor = 1;
    QPoly modulus;
    int degree = 1;

    /// Cached per conductor; the returned context is immutable.
    static std::shared_ptr<const CyclotomicContext> get(int m);
};

/// Element of Q(zeta_m), as a coefficient vector of length deg Phi_m in the power basis of x = zeta_m.
class CyclotomicNumber {
   public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(int conductor);
    CyclotomicNumber(int conductor, const BigRational& value);
    CyclotomicNumber(int conductor, const QPoly& representative);

    static CyclotomicNumber zeta(int conductor, int exponent = 1);

    int conductor() const { return ctx_->conductor; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    QPoly as_polynomial() const { return QPoly(coeffs_); }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q.
    bool is_rational() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    CyclotomicNumber operator-() const;
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
    CyclotomicNumber inverse() const;

    std::string to_string() const;

   private:
    void check_same_field(const CyclotomicNumber& o) const;
    std::shared_ptr<const CyclotomicContext> ctx_;
    std::vector<BigRational> coeffs_;
};

/// The image of p under the substitution t -> zeta_m^k.
CyclotomicNumber eval_at_root(const LaurentPoly& p, int m, int k);

/// Writes zeta_m^k as a primitive root zeta_{m'}^{k'} with gcd(m', k') = 1 (zeta = 1 gives (1, 0)).
/// Throws std::invalid_argument for m < 1.
std::pair<int, int> reduce_root(int m, int k);

}  // namespace bh
