#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bh/rational.hpp"

namespace bh {

/// Dense univariate polynomial over Q, coefficient i belongs to x^i.
/// Trailing zeros are trimmed so the zero polynomial has no coefficients.
class QPoly {
   public:
    QPoly() = default;
    explicit QPoly(std::vector<BigRational> coeffs);
    QPoly(std::initializer_list<long> coeffs);
    static QPoly constant(const BigRational& c);
    static QPoly monomial(const BigRational& c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const BigRational& leading() const { return coeffs_.back(); }
    BigRational coeff(int i) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const BigRational& c);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const BigRational& c) { return a *= c; }
    QPoly operator-() const;
    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Euclidean division; throws on division by zero.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    bool divides(const QPoly& other) const;
    QPoly monic() const;
    QPoly derivative() const;
    BigRational evaluate(const BigRational& x) const;

    std::string to_string(const std::string& var = "t") const;

   private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Monic gcd over Q; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

/// Element of Q[t, t^-1], stored densely from the lowest exponent.
class LaurentPoly {
   public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int lowest_exp, std::vector<BigRational> coeffs);
    explicit LaurentPoly(const QPoly& p) : LaurentPoly(0, p.coeffs()) {}

    static LaurentPoly t(int power = 1) { return monomial(BigRational(1), power); }
    static LaurentPoly monomial(const BigRational& c, int power);
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return LaurentPoly(1L); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0].is_one(); }
    /// Units of the Laurent ring are the nonzero monomials c t^k.
    bool is_unit() const { return coeffs_.size() == 1; }
    int lowest_exp() const { return low_; }
    int highest_exp() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational coeff(int exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Inverse of a unit; throws if the value is not a monomial.
    LaurentPoly unit_inverse() const;

    /// Writes this as t^shift * p with p(0) != 0 and returns {shift, p}.
    std::pair<int, QPoly> split_monomial() const;
    /// The polynomial t^{-lowest_exp} * this (zero stays zero).
    QPoly shifted_polynomial() const { return split_monomial().second; }

    /// The image under t -> t^{-1}.
    LaurentPoly involute() const;
    BigRational evaluate(const BigRational& x) const;

    std::string to_string(const std::string& var = "t") const;

   private:
    void trim();
    int low_ = 0;
    std::vector<BigRational> coeffs_;
};

/// The associate of p that is a monic polynomial in t with nonzero constant term.
LaurentPoly canonical_associate(const LaurentPoly& p);
/// Same normalization for ordinary polynomials: strips powers of t and makes monic.
QPoly canonical_associate(const QPoly& p);

}  // namespace bh
