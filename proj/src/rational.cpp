#include "bh/rational.hpp"

#include <stdexcept>

namespace bh {

BigRational::BigRational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    value_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    value_.canonicalize();
}

BigRational BigRational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw std::invalid_argument("BigRational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw std::domain_error("BigRational: zero denominator");
    v.canonicalize();
    return BigRational(v);
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    return BigRational(mpq_class(1 / value_));
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string BigRational::to_string() const { return value_.get_str(10); }

std::optional<std::int64_t> to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace bh
