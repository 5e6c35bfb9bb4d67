#include "bh/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bh {

QPoly cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    QPoly p = QPoly::monomial(BigRational(1), m) - QPoly::constant(BigRational(1));
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = p.divmod(cyclotomic_polynomial(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
        p = q;
    }
    return p;
}

int euler_phi(int m) {
    int count = 0;
    for (int k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1) ++count;
    return count;
}

std::shared_ptr<const CyclotomicContext> CyclotomicContext::get(int m) {
    if (m < 1) throw std::invalid_argument("CyclotomicContext: conductor must be positive");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CyclotomicContext>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<CyclotomicContext>();
    ctx->conductor = m;
    ctx->modulus = cyclotomic_polynomial(m);
    ctx->degree = ctx->modulus.degree();
    cache.emplace(m, ctx);
    return ctx;
}

CyclotomicNumber::CyclotomicNumber(int conductor)
    : ctx_(CyclotomicContext::get(conductor)), coeffs_(static_cast<size_t>(ctx_->degree)) {}

CyclotomicNumber::CyclotomicNumber(int conductor, const BigRational& value) : CyclotomicNumber(conductor) {
    coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(int conductor, const QPoly& representative) : CyclotomicNumber(conductor) {
    QPoly r = representative.divmod(ctx_->modulus).second;
    for (int i = 0; i <= r.degree(); ++i) coeffs_[static_cast<size_t>(i)] = r.coeff(i);
}

CyclotomicNumber CyclotomicNumber::zeta(int conductor, int exponent) {
    int e = ((exponent % conductor) + conductor) % conductor;
    return CyclotomicNumber(conductor, QPoly::monomial(BigRational(1), e));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && coeffs_[0].is_one(); }

void CyclotomicNumber::check_same_field(const CyclotomicNumber& o) const {
    if (ctx_->conductor != o.ctx_->conductor)
        throw std::invalid_argument("CyclotomicNumber: mixing different cyclotomic fields");
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    check_same_field(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    check_same_field(o);
    if (coeffs_.size() == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    *this = CyclotomicNumber(ctx_->conductor, as_polynomial() * o.as_polynomial());
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.ctx_->conductor == b.ctx_->conductor && a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
    if (coeffs_.size() == 1) return CyclotomicNumber(ctx_->conductor, coeffs_[0].inverse());
    // Track s with s * a == r (mod Phi_m) through the Euclidean remainder sequence.
    QPoly r0 = ctx_->modulus, r1 = as_polynomial();
    QPoly s0, s1 = QPoly::constant(BigRational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        QPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw std::logic_error("CyclotomicNumber: modulus not irreducible");
    return CyclotomicNumber(ctx_->conductor, s0 * r0.leading().inverse());
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream out;
    out << as_polynomial().to_string("z") << " (mod Phi_" << ctx_->conductor << ")";
    return out.str();
}

CyclotomicNumber eval_at_root(const LaurentPoly& p, int m, int k) {
    if (p.is_zero()) return CyclotomicNumber(m);
    // t^e -> x^{e k mod m}; negative exponents wrap since zeta^m = 1.
    std::vector<BigRational> rep(static_cast<size_t>(m));
    for (int e = p.lowest_exp(); e <= p.highest_exp(); ++e) {
        const BigRational c = p.coeff(e);
        if (c.is_zero()) continue;
        long long idx = (static_cast<long long>(e) * k) % m;
        if (idx < 0) idx += m;
        rep[static_cast<size_t>(idx)] += c;
    }
    return CyclotomicNumber(m, QPoly(std::move(rep)));
}

std::pair<int, int> reduce_root(int m, int k) {
    if (m < 1) throw std::invalid_argument("reduce_root: order must be positive");
    k %= m;
    if (k < 0) k += m;
    const int g = std::gcd(m, k);
    return k == 0 ? std::make_pair(1, 0) : std::make_pair(m / g, k / g);
}

}  // namespace bh
