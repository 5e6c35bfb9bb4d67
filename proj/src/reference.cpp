#include "bh/reference.hpp"

namespace bh::published {

namespace {

LaurentPoly t_minus_1() { return LaurentPoly(0, {BigRational(-1), BigRational(1)}); }
LaurentPoly t_plus_1() { return LaurentPoly(0, {BigRational(1), BigRational(1)}); }
LaurentPoly t2_minus_1() { return LaurentPoly(0, {BigRational(-1), BigRational(0), BigRational(1)}); }

}  // namespace

std::vector<std::vector<LaurentPoly>> burau_factors(int n) {
    if (n < 2) throw std::invalid_argument("burau_factors: n >= 2");
    std::vector<std::vector<LaurentPoly>> out(static_cast<std::size_t>(n));
    if (n == 2) {
        out[0] = {t_plus_1()};
        return out;
    }
    for (int k = 1; k < n - 2; ++k) out[static_cast<std::size_t>(k)] = {t_minus_1()};
    out[static_cast<std::size_t>(n - 2)] = {n % 2 == 1 ? t_minus_1() : t2_minus_1()};
    return out;
}

std::vector<std::vector<LaurentPoly>> typeB_factors(int n) {
    if (n < 2) throw std::invalid_argument("typeB_factors: n >= 2");
    std::vector<std::vector<LaurentPoly>> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n - 2; ++k) out[static_cast<std::size_t>(k)] = {t_minus_1()};
    out[static_cast<std::size_t>(n - 1)] = {n % 2 == 1 ? t_minus_1() : t2_minus_1()};
    return out;
}

std::vector<std::size_t> burau_dims_at(int n, int m, int k) {
    if (n < 3) throw std::invalid_argument("burau_dims_at: closed form requires n >= 3");
    const auto [mm, kk] = reduce_root(m, k);
    (void)kk;
    std::vector<std::size_t> out(static_cast<std::size_t>(n), 0);
    if (mm == 1) {
        for (int j = 1; j <= n - 1; ++j) out[static_cast<std::size_t>(j)] = (j == 1 || j == n - 1) ? 1 : 2;
    } else if (mm == 2 && n % 2 == 0) {
        out[static_cast<std::size_t>(n - 2)] = 1;
        out[static_cast<std::size_t>(n - 1)] = 1;
    }
    return out;
}

std::vector<std::size_t> monodromy_dims(int n, int d) {
    std::vector<std::size_t> out(static_cast<std::size_t>(n), 0);
    if (n % 2 == 0 && d % 2 == 0) {
        out[static_cast<std::size_t>(n - 2)] = 1;
        out[static_cast<std::size_t>(n - 1)] = 1;
    }
    return out;
}

std::vector<std::size_t> total_space_betti(int n, int d) {
    std::vector<std::size_t> out(static_cast<std::size_t>(n) + 1, 0);
    out[0] = 1;
    out[1] = 1;
    if (n % 2 == 0 && d % 2 == 0) {
        out[static_cast<std::size_t>(n - 1)] += 1;
        out[static_cast<std::size_t>(n)] += 1;
    }
    return out;
}

bool matches(const HomologySummary& h, const std::vector<std::vector<LaurentPoly>>& factors) {
    if (h.over_field || h.degrees.size() != factors.size()) return false;
    for (std::size_t k = 0; k < factors.size(); ++k)
        if (h.degrees[k].free_rank != 0 || h.degrees[k].factors != factors[k]) return false;
    return true;
}

}  // namespace bh::published
