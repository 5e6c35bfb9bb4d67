#pragma once

#include <cstddef>
#include <vector>

#include "bh/homology.hpp"

namespace bh {

/// The published closed forms, used to flag computed tables in reports and fixtures.
namespace published {

/// Invariant factors of H_k(B_n; V_n), k = 0..n-1 (all torsion).
std::vector<std::vector<LaurentPoly>> burau_factors(int n);
/// Invariant factors of the rank-one type-B_n homology, k = 0..n (all torsion).
std::vector<std::vector<LaurentPoly>> typeB_factors(int n);
/// dim H_k(B_n; V_n(zeta_m^k)), k = 0..n-1; valid for n >= 3.
std::vector<std::size_t> burau_dims_at(int n, int m, int k);
/// k = 0..n-1.
std::vector<std::size_t> monodromy_dims(int n, int d);
/// k = 0..n.
std::vector<std::size_t> total_space_betti(int n, int d);

/// True when h is torsion and its factors agree degree by degree with `factors`.
bool matches(const HomologySummary& h, const std::vector<std::vector<LaurentPoly>>& factors);

}  // namespace published

}  // namespace bh
