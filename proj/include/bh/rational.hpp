#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace bh {

/// Exact rational number, always stored in lowest terms with a positive denominator.
class BigRational {
   public:
    BigRational() = default;
    BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(long num, long den);
    explicit BigRational(const mpz_class& num) : value_(num) {}
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses "a" or "a/b".
    static BigRational parse(const std::string& text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    BigRational inverse() const;

    BigRational& operator+=(const BigRational& o) {
        value_ += o.value_;
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        value_ -= o.value_;
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        value_ *= o.value_;
        return *this;
    }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "a" for integers, "a/b" otherwise.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

   private:
    mpq_class value_{0};
};

/// Returns the value as int64 if it fits.
std::optional<std::int64_t> to_int64(const mpz_class& z);

}  // namespace bh
