#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bh/braid.hpp"
#include "bh/coxeter.hpp"
#include "bh/matrix.hpp"

namespace bh {

enum class SystemKind { Trivial, Rank1TypeB, Burau, BurauSpecialized };

std::string system_name(SystemKind kind);

/// A representation of the Artin group given by the matrices of its standard generators.
template <class R>
struct LocalSystem {
    SystemKind kind = SystemKind::Trivial;
    std::size_t rank = 1;
    std::vector<Matrix<R>> generators;
    R zero;
    R one;
};

/// Trivial rank-one system over Q.
LocalSystem<BigRational> trivial_system(const CoxeterSpec& spec);
/// B_n type system: eps_n acts by t, the other generators trivially.
LocalSystem<LaurentPoly> rank1_typeB_system(int n);
/// Reduced Burau representation of the braid group on n strands.
LocalSystem<LaurentPoly> burau_system(int n);
/// Reduced Burau with t specialised to zeta_m^k, over Q(zeta_m).
LocalSystem<CyclotomicNumber> burau_specialized_system(int n, int m, int k);

/// Finite free chain complex C_N -> ... -> C_0; boundary(k) maps C_k to C_{k-1}.
template <class R>
class ChainComplex {
   public:
    ChainComplex() = default;
    /// Throws std::logic_error if some composite of consecutive boundaries is nonzero.
    ChainComplex(std::vector<std::size_t> ranks, std::vector<Matrix<R>> boundaries)
        : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
        if (ranks_.empty() || boundaries_.size() + 1 != ranks_.size())
            throw std::invalid_argument("ChainComplex: ranks and boundaries disagree");
        for (std::size_t k = 1; k < ranks_.size(); ++k) {
            const auto& d = boundaries_[k - 1];
            if (d.rows() != ranks_[k - 1] || d.cols() != ranks_[k])
                throw std::invalid_argument("ChainComplex: boundary of degree " + std::to_string(k) + " has wrong shape");
        }
        for (std::size_t k = 1; k + 1 < ranks_.size(); ++k)
            if (!(boundaries_[k - 1] * boundaries_[k]).is_zero())
                throw std::logic_error("ChainComplex: boundary does not square to zero in degree " +
                                       std::to_string(k + 1));
    }

    /// Highest degree N.
    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int k) const {
        return k < 0 || k > top_degree() ? 0 : ranks_[static_cast<std::size_t>(k)];
    }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    /// d_k : C_k -> C_{k-1} for 1 <= k <= N.
    const Matrix<R>& boundary(int k) const { return boundaries_.at(static_cast<std::size_t>(k - 1)); }

    template <class F>
    auto map(F f) const -> ChainComplex<decltype(f(std::declval<const R&>()))> {
        using U = decltype(f(std::declval<const R&>()));
        std::vector<Matrix<U>> b;
        for (const auto& d : boundaries_) b.push_back(d.map(f));
        return ChainComplex<U>(ranks_, std::move(b));
    }

   private:
    std::vector<std::size_t> ranks_;
    std::vector<Matrix<R>> boundaries_;
};

/// Cells of the Salvetti complex in degree k: the k-element generator subsets, ordered by bitmask.
std::vector<std::vector<GeneratorSubset>> salvetti_cells(int rank);

/// The complex with cells the generator subsets Gamma and
///   d(Gamma) = sum_{tau in Gamma} sum_beta (-1)^{pos(tau) + l(beta)} rho(lift beta) (Gamma - tau),
/// beta running over the minimal representatives of W_{Gamma - tau} \ W_Gamma and pos(tau)
/// the number of elements of Gamma below tau. Blocks act on column vectors.
template <class R>
ChainComplex<R> build_salvetti(const CoxeterGroup& group, const LocalSystem<R>& system) {
    const int n = group.rank();
    if (system.generators.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("build_salvetti: local system has the wrong number of generators");
    const std::size_t r = system.rank;
    const auto id = Matrix<R>::identity(r, system.zero, system.one);
    const auto weights = positive_lift_weights(
        group, [&](int s) { return system.generators[static_cast<std::size_t>(s - 1)]; }, id);

    const auto cells = salvetti_cells(n);
    std::vector<std::size_t> position(std::size_t{1} << n);
    for (const auto& level : cells)
        for (std::size_t i = 0; i < level.size(); ++i) position[level[i].bits] = i;

    std::vector<std::size_t> ranks;
    for (const auto& level : cells) ranks.push_back(level.size() * r);
    std::vector<Matrix<R>> boundaries;
    for (int k = 1; k <= n; ++k) {
        Matrix<R> d(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)], system.zero);
        const auto& level = cells[static_cast<std::size_t>(k)];
        for (std::size_t c = 0; c < level.size(); ++c) {
            const GeneratorSubset gamma = level[c];
            int pos = 0;
            for (int tau : gamma.members()) {
                const GeneratorSubset face = gamma.without(tau);
                const std::size_t row = position[face.bits] * r;
                for (std::size_t beta : group.min_coset_reps(gamma, face)) {
                    if ((pos + group.length(beta)) % 2 == 0)
                        d.add_block(row, c * r, weights[beta]);
                    else
                        d.add_block(row, c * r, -weights[beta]);
                }
                ++pos;
            }
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplex<R>(std::move(ranks), std::move(boundaries));
}

struct HomologyDegree {
    int k = 0;
    /// Free rank over the PID, or the dimension over a field.
    std::size_t free_rank = 0;
    /// Non-unit invariant factors in divisibility order (PID case only).
    std::vector<LaurentPoly> factors;
    friend bool operator==(const HomologyDegree&, const HomologyDegree&) = default;
};

struct HomologySummary {
    bool over_field = false;
    std::vector<HomologyDegree> degrees;

    const HomologyDegree& at(int k) const { return degrees.at(static_cast<std::size_t>(k)); }
    /// Field dimensions (over_field) or free ranks, by degree.
    std::vector<std::size_t> dims() const;
    /// True when every degree has zero free rank.
    bool is_torsion() const;
    friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// Homology over Q[t, t^-1] via Smith normal form.
HomologySummary homology(const ChainComplex<LaurentPoly>& complex);

/// Homology dimensions over a field by rank-nullity.
template <class R>
HomologySummary field_homology(const ChainComplex<R>& complex) {
    const int top = complex.top_degree();
    std::vector<std::size_t> rk(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k) rk[static_cast<std::size_t>(k)] = field_rank(complex.boundary(k));
    HomologySummary out;
    out.over_field = true;
    for (int k = 0; k <= top; ++k) {
        HomologyDegree h;
        h.k = k;
        h.free_rank = complex.rank(k) - rk[static_cast<std::size_t>(k)] - rk[static_cast<std::size_t>(k) + 1];
        out.degrees.push_back(h);
    }
    return out;
}

inline HomologySummary homology(const ChainComplex<BigRational>& c) { return field_homology(c); }
inline HomologySummary homology(const ChainComplex<CyclotomicNumber>& c) { return field_homology(c); }

/// H_*(B_n; Q) over the trivial system, computed from the complex of type A_{n-1}.
HomologySummary trivial_braid_homology(int n);
/// H_*(B_n; V_n) over Q[t, t^-1].
HomologySummary burau_homology(int n);
/// Homology of the type-B_n Artin group with eps_n acting by t.
HomologySummary typeB_rank1_homology(int n);

/// Compares typeB_rank1_homology(n) in degree k with the direct sum of
/// (Q[t,t^-1]/(t-1))^{dim H_k(B_n;Q)} and burau_homology(n) in degree k-1, as modules.
bool ss_consistency(int n);

/// Dimensions of H_k(B_n; V_n(zeta)) for zeta = zeta_m^k, k = 0..n-1.
std::vector<std::size_t> burau_homology_at(int n, int m, int k);

/// dim H^k(B_n; V_n(zeta)^vee), k = 0..n-1, from the cochain complex Hom(C_*, V_n(zeta)^vee)
/// built directly on the dual module (sigma acts on the dual by the displayed matrices).
std::vector<std::size_t> burau_dual_cohomology_at(int n, int m, int k);

/// Dimensions predicted from burau_homology(n) by the universal coefficient theorem.
std::vector<std::size_t> uct_prediction(int n, int m, int k);
bool uct_consistency(int n, int m, int k);

/// dim H^p(B_n; H^1(X_f; Q)) for p = 0..n-1, summed over the nontrivial d-th roots of unity.
std::vector<std::size_t> monodromy_cohomology_dims(int n, int d);
/// Betti numbers of the total space of the family of curves y^d = f(x), degrees 0..n.
std::vector<std::size_t> total_space_betti(int n, int d);
/// First Betti number (n-1)(d-1) of the affine curve y^d = f(x).
long curve_betti(int n, int d);

/// Invariant factors of the direct sum of cyclic modules Q[t,t^-1]/(f), non-units only.
std::vector<LaurentPoly> direct_sum_factors(const std::vector<LaurentPoly>& cyclic);

}  // namespace bh
