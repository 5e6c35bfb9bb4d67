#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bh {

/// An element of F_q, packed as its coefficient vector c_0 + c_1 p + ... + c_{k-1} p^{k-1}
/// over the polynomial basis 1, x, ..., x^{k-1}. The packed value is also the element's
/// position in the canonical enumeration order.
struct FieldElement {
    std::uint32_t index = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
    friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// F_{p^k} with full addition and multiplication tables.
class FieldSpec {
   public:
    /// Builds F_{p^k}; for k > 1 the modulus is the first monic irreducible of degree k
    /// in the canonical coefficient order. Throws std::invalid_argument for non-prime p,
    /// k outside 1..4, or q above the table limit.
    static FieldSpec make(unsigned p, unsigned k);
    /// Builds F_q for a prime power q.
    static FieldSpec make_q(unsigned q);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }
    /// Monic modulus coefficients c_0..c_k (empty for prime fields).
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement from_integer(long v) const;
    FieldElement from_coefficients(const std::vector<unsigned>& coeffs) const;
    std::vector<unsigned> coefficients(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.index * q_ + b.index]}; }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.index * q_ + b.index]}; }
    FieldElement neg(FieldElement a) const { return {neg_[a.index]}; }
    /// Throws std::domain_error for zero.
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// All q elements in canonical order: 0, 1, ..., p-1, x, x+1, ...
    std::vector<FieldElement> elements() const;

    // Raw table access for hot loops.
    const std::uint16_t* add_table() const { return add_.data(); }
    const std::uint16_t* mul_table() const { return mul_.data(); }

   private:
    unsigned p_ = 0, k_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

inline FieldSpec make_field(unsigned p, unsigned k) { return FieldSpec::make(p, k); }

bool is_prime(unsigned n);
/// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q);

/// Exhaustive irreducibility test for a monic polynomial over F_p (coefficients c_0..c_k).
bool is_irreducible_mod_p(const std::vector<unsigned>& monic, unsigned p);

/// #{y in F_q : y^d = a}. Requires gcd(d, q) = 1.
unsigned count_dth_roots(FieldElement a, unsigned d, const FieldSpec& field);

/// Table of count_dth_roots indexed by element.
std::vector<std::uint16_t> dth_root_table(unsigned d, const FieldSpec& field);

/// Number of e-th roots of unity in F_q, i.e. gcd(e, q - 1).
unsigned roots_of_unity_count(unsigned e, const FieldSpec& field);

}  // namespace bh
