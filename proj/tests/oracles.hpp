#pragma once

// Slow reference implementations used only by the tests. They share no code
// with the library beyond the field tables.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bh/finite_field.hpp"

namespace oracle {

// f given by a_1..a_n as element indices; returns f(x) by Horner.
inline std::uint32_t eval_monic(const bh::FieldSpec& F, const std::vector<std::uint32_t>& a, std::uint32_t x) {
    bh::FieldElement acc = F.one();
    for (std::uint32_t c : a) acc = F.add(F.mul(acc, bh::FieldElement{x}), bh::FieldElement{c});
    return acc.index;
}

// |{(x, y) : y^d = f(x)}| by the double loop.
inline unsigned naive_count(const bh::FieldSpec& F, const std::vector<std::uint32_t>& a, unsigned d) {
    const unsigned q = F.q();
    std::vector<std::uint32_t> ypow(q);
    for (unsigned y = 0; y < q; ++y) {
        bh::FieldElement p = F.one();
        for (unsigned i = 0; i < d; ++i) p = F.mul(p, bh::FieldElement{y});
        ypow[y] = p.index;
    }
    unsigned count = 0;
    for (unsigned x = 0; x < q; ++x) {
        const std::uint32_t fx = eval_monic(F, a, x);
        for (unsigned y = 0; y < q; ++y) count += ypow[y] == fx;
    }
    return count;
}

// The same count over a prime field with plain modular arithmetic.
inline unsigned naive_count_prime(unsigned p, const std::vector<unsigned>& a, unsigned d) {
    unsigned count = 0;
    for (unsigned x = 0; x < p; ++x) {
        unsigned long fx = 1;
        for (unsigned c : a) fx = (fx * x + c) % p;
        for (unsigned y = 0; y < p; ++y) {
            unsigned long yd = 1;
            for (unsigned i = 0; i < d; ++i) yd = yd * y % p;
            count += yd == fx;
        }
    }
    return count;
}

// Dense polynomial c_0 + c_1 x + ... over F, lowest degree first.
using Poly = std::vector<std::uint32_t>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Poly poly_mul(const bh::FieldSpec& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(bh::FieldElement{out[i + j]}, F.mul(bh::FieldElement{a[i]}, bh::FieldElement{b[j]})).index;
    return poly_trim(out);
}

// Remainder of a modulo a monic b.
inline Poly poly_rem_monic(const bh::FieldSpec& F, Poly a, const Poly& b) {
    a = poly_trim(a);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const bh::FieldElement lead{a.back()};
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.sub(bh::FieldElement{a[shift + i]}, F.mul(lead, bh::FieldElement{b[i]})).index;
        a = poly_trim(a);
    }
    return a;
}

// Square-free test by trial division: no monic g of degree 1..n/2 has g^2 | f.
inline bool naive_squarefree(const bh::FieldSpec& F, const std::vector<std::uint32_t>& a) {
    const int n = static_cast<int>(a.size());
    Poly f(a.rbegin(), a.rend());
    f.push_back(1);
    const unsigned q = F.q();
    for (int k = 1; 2 * k <= n; ++k) {
        std::uint64_t total = 1;
        for (int i = 0; i < k; ++i) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Poly g(static_cast<std::size_t>(k) + 1, 0);
            std::uint64_t v = idx;
            for (int i = 0; i < k; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % q);
                v /= q;
            }
            g[static_cast<std::size_t>(k)] = 1;
            if (poly_rem_monic(F, f, poly_mul(F, g, g)).empty()) return false;
        }
    }
    return true;
}

// Point count of y^d = f(x) summed over all square-free f, by the two oracles above.
inline std::uint64_t naive_total(const bh::FieldSpec& F, int n, unsigned d, std::uint64_t* census) {
    const unsigned q = F.q();
    std::uint64_t total_polys = 1;
    for (int i = 0; i < n; ++i) total_polys *= q;
    std::uint64_t total = 0, sf = 0;
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n));
    for (std::uint64_t idx = 0; idx < total_polys; ++idx) {
        std::uint64_t v = idx;
        for (int i = n - 1; i >= 0; --i) {
            a[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % q);
            v /= q;
        }
        if (!naive_squarefree(F, a)) continue;
        ++sf;
        total += naive_count(F, a, d);
    }
    if (census) *census = sf;
    return total;
}

// Random braid word helper: letters in +-1..n-1.
inline std::vector<int> random_braid_letters(std::mt19937_64& rng, int n, int length) {
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
    std::vector<int> w;
    for (int i = 0; i < length; ++i) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return w;
}

}  // namespace oracle
