#pragma once

#include <json.hpp>

#include "bh/curves.hpp"
#include "bh/homology.hpp"

namespace bh::io {

using nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
ordered_json integer(const mpz_class& z);
/// {num, den}
ordered_json rational(const BigRational& r);
/// [num, den], the compact form used inside coefficient lists.
ordered_json rational_pair(const BigRational& r);
/// {lowest_exp, coeffs: [[num, den], ...]}
ordered_json laurent(const LaurentPoly& p);
/// {conductor, coeffs: [[num, den], ...]} over the power basis of Q(zeta_m).
ordered_json cyclotomic(const CyclotomicNumber& c);

ordered_json matrix(const LaurentMatrix& m);
ordered_json matrix(const RationalMatrix& m);
ordered_json matrix(const CyclotomicMatrix& m);

/// degrees: [{k, free_rank, factors: ["t-1", ...], factors_laurent: [...]}]; field case: [{k, dim}]
ordered_json homology_degrees(const HomologySummary& h);
ordered_json dims(const std::vector<std::size_t>& d);

ordered_json count_report(const PointCountReport& r);
ordered_json verification(const VerificationResult& v);
ordered_json moment_report(const MomentReport& m);

/// Deterministic text form: two-space indentation and a trailing newline.
std::string dump(const ordered_json& j);

}  // namespace bh::io
