#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bh/finite_field.hpp"
#include "bh/rational.hpp"

namespace bh {

/// x^n + a_1 x^{n-1} + ... + a_n over F_q; coeffs holds a_1..a_n.
struct MonicPoly {
    const FieldSpec* field = nullptr;
    std::vector<FieldElement> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()); }
    FieldElement evaluate(FieldElement x) const;
    std::string to_string() const;
};

/// The polynomial at position `index` of the canonical order: digits of index in base q,
/// a_1 most significant.
MonicPoly monic_from_index(const FieldSpec& field, int n, std::uint64_t index);
std::uint64_t monic_count(unsigned q, int n);

/// gcd(f, f') = 1 over F_q.
bool is_squarefree(const MonicPoly& f);

/// All square-free monic polynomials of degree n, in canonical order.
std::vector<MonicPoly> enumerate_squarefree(const FieldSpec& field, int n);
std::uint64_t squarefree_count(const FieldSpec& field, int n);
/// q^n - q^{n-1} for n >= 2, q for n = 1.
std::uint64_t expected_squarefree_count(unsigned q, int n);

/// |{(x, y) in F_q^2 : y^d = f(x)}|. Requires gcd(d, q) = 1.
unsigned count_curve_points(const MonicPoly& f, unsigned d);

struct PointCountReport {
    unsigned q = 0;
    int n = 0;
    unsigned d = 0;
    std::uint64_t squarefree_count = 0;
    mpz_class total;
    BigRational average;
    /// Number of square-free f with exactly c points, keyed by c.
    std::map<unsigned, std::uint64_t> histogram;
};

/// Exhaustive census over square-free f of degree n, split into `jobs` contiguous blocks.
/// jobs = 0 selects the hardware concurrency.
PointCountReport total_and_average(int n, unsigned d, unsigned q, unsigned jobs = 1);

struct VerificationResult {
    std::string identity;
    unsigned q = 0;
    int n = 0;
    unsigned d = 0;
    BigRational expected;
    BigRational observed;
    bool pass = false;
};

/// q when n or d is odd, q - q^{2-n} when both are even.
BigRational expected_average(int n, unsigned d, unsigned q);
VerificationResult verify_expected(int n, unsigned d, unsigned q, unsigned jobs = 1);
/// Same check from an already computed census.
VerificationResult verify_report(const PointCountReport& report);

struct MomentReport {
    unsigned q = 0;
    int n = 0;
    unsigned d = 0;
    /// (m, average of |X_f(F_q)|^m).
    std::vector<std::pair<int, BigRational>> moments;
};

MomentReport moments(int n, unsigned d, unsigned q, int max_m, unsigned jobs = 1);
MomentReport moments_from_report(const PointCountReport& report, int max_m);

/// gcd(gcd(d, n), q - 1).
unsigned points_at_infinity(int n, unsigned d, unsigned q);

/// |N - q| <= (n-1)(d-1) sqrt(q) + gcd(n, d), compared in integers.
bool weil_bound_holds(int n, unsigned d, unsigned q, unsigned count);
bool weil_sanity(const MonicPoly& f, unsigned d);
/// weil_bound_holds for every count in the census histogram.
bool weil_sanity(const PointCountReport& report);

struct PolyCount {
    /// a_1..a_n as element indices.
    std::vector<std::uint32_t> coeffs;
    unsigned count = 0;
};

/// Point count of every square-free f, in canonical order.
std::vector<PolyCount> per_polynomial_counts(int n, unsigned d, unsigned q);

/// Throws std::invalid_argument unless gcd(d, q) = 1 and d >= 1.
void check_coprime(unsigned d, unsigned q);

}  // namespace bh
