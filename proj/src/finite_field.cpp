#include "bh/finite_field.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bh {

namespace {

constexpr unsigned kMaxTableOrder = 1024;

std::vector<unsigned> unpack(unsigned index, unsigned p, unsigned k) {
    std::vector<unsigned> c(k);
    for (unsigned i = 0; i < k; ++i) {
        c[i] = index % p;
        index /= p;
    }
    return c;
}

unsigned pack(const std::vector<unsigned>& c, unsigned p) {
    unsigned v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
    return v;
}

// Remainder of a by monic b over F_p; both given low-to-high, b monic.
std::vector<unsigned> poly_mod_p(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        unsigned lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - (lead * b[j]) % p) % p;
        }
        a.pop_back();
    }
    return a;
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
    if (q < 2) return std::nullopt;
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, k);
}

bool is_irreducible_mod_p(const std::vector<unsigned>& monic, unsigned p) {
    const unsigned deg = static_cast<unsigned>(monic.size()) - 1;
    if (deg <= 1) return deg == 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (unsigned dd = 1; dd <= deg / 2; ++dd) {
        unsigned count = 1;
        for (unsigned i = 0; i < dd; ++i) count *= p;
        for (unsigned low = 0; low < count; ++low) {
            std::vector<unsigned> divisor = unpack(low, p, dd);
            divisor.push_back(1);
            std::vector<unsigned> r = poly_mod_p(monic, divisor, p);
            bool zero = true;
            for (unsigned c : r)
                if (c != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::make(unsigned p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
    if (k < 1 || k > 4) throw std::invalid_argument("make_field: extension degree must be in 1..4");
    unsigned q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    if (q > kMaxTableOrder) throw std::invalid_argument("make_field: field order too large for tables");

    FieldSpec f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = q;
    if (k > 1) {
        for (unsigned low = 0; low < q; ++low) {
            std::vector<unsigned> cand = unpack(low, p, k);
            cand.push_back(1);
            if (is_irreducible_mod_p(cand, p)) {
                f.modulus_ = cand;
                break;
            }
        }
        if (f.modulus_.empty()) throw std::logic_error("make_field: no irreducible modulus found");
    }

    f.add_.resize(static_cast<std::size_t>(q) * q);
    f.mul_.resize(static_cast<std::size_t>(q) * q);
    f.neg_.resize(q);
    f.inv_.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        auto ca = unpack(a, p, k);
        std::vector<unsigned> cn(k);
        for (unsigned i = 0; i < k; ++i) cn[i] = (p - ca[i]) % p;
        f.neg_[a] = static_cast<std::uint16_t>(pack(cn, p));
        for (unsigned b = 0; b < q; ++b) {
            auto cb = unpack(b, p, k);
            std::vector<unsigned> sum(k);
            for (unsigned i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
            f.add_[a * q + b] = static_cast<std::uint16_t>(pack(sum, p));
            std::vector<unsigned> prod(2 * k - 1, 0);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            if (k > 1) prod = poly_mod_p(prod, f.modulus_, p);
            prod.resize(k, 0);
            f.mul_[a * q + b] = static_cast<std::uint16_t>(pack(prod, p));
        }
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (f.mul_[a * q + b] == 1) {
                f.inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }
    return f;
}

FieldSpec FieldSpec::make_q(unsigned q) {
    auto pk = prime_power(q);
    if (!pk) throw std::invalid_argument("make_field: " + std::to_string(q) + " is not a prime power");
    return make(pk->first, pk->second);
}

FieldElement FieldSpec::from_integer(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElement FieldSpec::from_coefficients(const std::vector<unsigned>& coeffs) const {
    if (coeffs.size() > k_) throw std::invalid_argument("FieldSpec: too many coefficients");
    std::vector<unsigned> c(k_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % p_;
    return {pack(c, p_)};
}

std::vector<unsigned> FieldSpec::coefficients(FieldElement a) const { return unpack(a.index, p_, k_); }

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a.index == 0) throw std::domain_error("FieldSpec: inverse of zero");
    return {inv_[a.index]};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
    FieldElement result = one(), base = a;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out(q_);
    for (unsigned i = 0; i < q_; ++i) out[i] = {i};
    return out;
}

unsigned count_dth_roots(FieldElement a, unsigned d, const FieldSpec& field) {
    if (d == 0 || std::gcd(d, field.q()) != 1)
        throw std::invalid_argument("count_dth_roots: requires gcd(d, q) = 1");
    if (a.index == 0) return 1;
    const unsigned e = std::gcd(d, field.q() - 1);
    return field.pow(a, (field.q() - 1) / e) == field.one() ? e : 0;
}

std::vector<std::uint16_t> dth_root_table(unsigned d, const FieldSpec& field) {
    std::vector<std::uint16_t> table(field.q());
    for (FieldElement a : field.elements()) table[a.index] = static_cast<std::uint16_t>(count_dth_roots(a, d, field));
    return table;
}

unsigned roots_of_unity_count(unsigned e, const FieldSpec& field) { return std::gcd(e, field.q() - 1); }

}  // namespace bh
