#include "bh/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bh {

namespace {

// Appends one signed term to a human-readable polynomial string.
void append_term(std::ostringstream& out, bool first, const BigRational& c, int exponent,
                 const std::string& var) {
    BigRational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0)
        out << "-";
    else if (!first)
        out << "+";
    bool unit_coeff = mag.is_one();
    if (exponent == 0) {
        out << mag;
        return;
    }
    if (!unit_coeff) out << mag << "*";
    out << var;
    if (exponent != 1) out << "^" << exponent;
}

}  // namespace

QPoly::QPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

QPoly QPoly::constant(const BigRational& c) { return QPoly(std::vector<BigRational>{c}); }

QPoly QPoly::monomial(const BigRational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
    std::vector<BigRational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigRational(0);
    return coeffs_[static_cast<size_t>(i)];
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("QPoly::divmod: division by zero");
    QPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {QPoly{}, rem};
    std::vector<BigRational> quot(static_cast<size_t>(rem.degree() - divisor.degree() + 1));
    BigRational lead_inv = divisor.leading().inverse();
    const int dd = divisor.degree();
    for (int k = rem.degree(); k >= dd; --k) {
        const BigRational& top = rem.coeffs_[static_cast<size_t>(k)];
        if (top.is_zero()) continue;
        BigRational f = top * lead_inv;
        quot[static_cast<size_t>(k - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem.coeffs_[static_cast<size_t>(k - dd + j)] -= f * divisor.coeffs_[static_cast<size_t>(j)];
    }
    rem.trim();
    return {QPoly(std::move(quot)), rem};
}

bool QPoly::divides(const QPoly& other) const {
    if (is_zero()) return other.is_zero();
    return other.divmod(*this).second.is_zero();
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
    return QPoly(std::move(d));
}

BigRational QPoly::evaluate(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string QPoly::to_string(const std::string& var) const {
    return LaurentPoly(*this).to_string(var);
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(long c) : LaurentPoly(BigRational(c)) {}

LaurentPoly::LaurentPoly(const BigRational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(int lowest_exp, std::vector<BigRational> coeffs)
    : low_(lowest_exp), coeffs_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::monomial(const BigRational& c, int power) {
    if (c.is_zero()) return {};
    return LaurentPoly(power, std::vector<BigRational>{c});
}

void LaurentPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

BigRational LaurentPoly::coeff(int exponent) const {
    int i = exponent - low_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigRational(0);
    return coeffs_[static_cast<size_t>(i)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(highest_exp(), o.highest_exp());
    std::vector<BigRational> v(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[static_cast<size_t>(low_ - lo) + i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[static_cast<size_t>(o.low_ - lo) + i] += o.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(v);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("LaurentPoly::unit_inverse: not a unit");
    return monomial(coeffs_[0].inverse(), -low_);
}

std::pair<int, QPoly> LaurentPoly::split_monomial() const { return {low_, QPoly(coeffs_)}; }

LaurentPoly LaurentPoly::involute() const {
    std::vector<BigRational> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-highest_exp(), std::move(rev));
}

BigRational LaurentPoly::evaluate(const BigRational& x) const {
    if (is_zero()) return BigRational(0);
    BigRational acc = QPoly(coeffs_).evaluate(x);
    BigRational xp(1);
    BigRational base = low_ < 0 ? x.inverse() : x;
    for (int i = 0; i < std::abs(low_); ++i) xp *= base;
    return acc * xp;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = highest_exp(); e >= low_; --e) {
        const BigRational& c = coeffs_[static_cast<size_t>(e - low_)];
        if (c.is_zero()) continue;
        append_term(out, first, c, e, var);
        first = false;
    }
    return out.str();
}

LaurentPoly canonical_associate(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return LaurentPoly(p.shifted_polynomial().monic());
}

QPoly canonical_associate(const QPoly& p) {
    if (p.is_zero()) return p;
    return LaurentPoly(p).shifted_polynomial().monic();
}

}  // namespace bh
