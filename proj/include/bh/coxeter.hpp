#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bh/braid.hpp"

namespace bh {

enum class CoxeterFamily { A, B };

/// Type A_r acts on r+1 points (the Weyl group of B_{r+1} braids); type B_r on r signed points.
/// Generators are numbered 1..rank; in type B the last one is the sign change with m(s_{r-1}, s_r) = 4.
struct CoxeterSpec {
    CoxeterFamily family = CoxeterFamily::A;
    int rank = 1;

    /// A_{n-1}, the Coxeter group underlying the braid group on n strands.
    static CoxeterSpec braid(int strands) { return {CoxeterFamily::A, strands - 1}; }
    static CoxeterSpec type_b(int n) { return {CoxeterFamily::B, n}; }

    int points() const { return family == CoxeterFamily::A ? rank + 1 : rank; }
    /// Coxeter matrix entry m(s_i, s_j).
    int m(int i, int j) const;
    /// |W| (n! or 2^n n!).
    std::uint64_t order() const;
    std::string name() const;
};

/// Bitset over the generator indices 1..rank.
struct GeneratorSubset {
    std::uint32_t bits = 0;

    static GeneratorSubset all(int rank) { return {(1U << rank) - 1U}; }
    static GeneratorSubset of(std::initializer_list<int> gens);
    bool contains(int s) const { return (bits >> (s - 1)) & 1U; }
    int size() const { return __builtin_popcount(bits); }
    GeneratorSubset without(int s) const { return {bits & ~(1U << (s - 1))}; }
    bool subset_of(GeneratorSubset o) const { return (bits & ~o.bits) == 0; }
    std::vector<int> members() const;
    friend bool operator==(GeneratorSubset, GeneratorSubset) = default;
};

/// A (signed) permutation: perm[j] is the image of point j+1, negative for a sign change.
struct CoxeterElement {
    std::vector<int> perm;
    int length = 0;
    friend bool operator==(const CoxeterElement&, const CoxeterElement&) = default;
};

/// Complete BFS enumeration of a finite Coxeter group of type A or B, with per-element
/// length, left descent set, support, and lexicographically minimal reduced word data.
/// Immutable after construction.
class CoxeterGroup {
   public:
    static constexpr std::size_t kDefaultCap = 1'000'000;

    /// Throws std::length_error when |W| exceeds the cap.
    explicit CoxeterGroup(CoxeterSpec spec, std::size_t cap = kDefaultCap);

    const CoxeterSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }
    std::size_t size() const { return length_.size(); }
    std::size_t identity() const { return 0; }
    std::size_t longest() const { return longest_; }

    CoxeterElement element(std::size_t w) const;
    int length(std::size_t w) const { return length_[w]; }
    /// Index of s * w.
    std::size_t left_multiply(int s, std::size_t w) const {
        return left_[w * static_cast<std::size_t>(spec_.rank) + static_cast<std::size_t>(s - 1)];
    }
    GeneratorSubset left_descents(std::size_t w) const { return {descents_[w]}; }
    /// Generators occurring in (every) reduced word of w.
    GeneratorSubset support(std::size_t w) const { return {support_[w]}; }
    /// Index of the element with the given signed permutation; throws if absent.
    std::size_t index_of(const std::vector<int>& perm) const;

    /// Lexicographically smallest reduced word, as generator indices.
    std::vector<int> reduced_word(std::size_t w) const;
    /// First letter of reduced_word(w) (0 for the identity).
    int first_letter(std::size_t w) const { return first_[w]; }
    /// Every reduced word of w; exponential, meant for small verification runs.
    std::vector<std::vector<int>> all_reduced_words(std::size_t w) const;

    /// Number of occurrences of the special generator s_n in a reduced word; type B only.
    int special_generator_count(std::size_t w) const;

    /// Elements of the parabolic subgroup W_gamma.
    std::vector<std::size_t> parabolic(GeneratorSubset gamma) const;
    /// Minimal length representatives of the right cosets W_sub \ W_gamma: the elements of
    /// W_gamma without left descents in sub.
    std::vector<std::size_t> min_coset_reps(GeneratorSubset gamma, GeneratorSubset sub) const;

   private:
    std::vector<int> left_action(int s, const std::vector<int>& perm) const;
    std::uint64_t key(const std::vector<int>& perm) const;

    CoxeterSpec spec_;
    std::vector<std::vector<int>> perms_;
    std::vector<int> length_;
    std::vector<std::size_t> left_;
    std::vector<std::uint32_t> descents_;
    std::vector<std::uint32_t> support_;
    std::vector<int> first_;
    std::vector<int> special_;
    std::size_t longest_ = 0;
};

/// Full list of elements with lengths, in BFS order.
std::vector<CoxeterElement> enumerate(const CoxeterSpec& spec);

/// Weights of positive Artin lifts: weight(w) = gen(s_1) * gen(s_2) * ... along reduced_word(w),
/// memoised over the whole group. `gen(s)` returns the matrix of generator s.
template <class M, class Gen>
std::vector<M> positive_lift_weights(const CoxeterGroup& group, Gen gen, const M& identity) {
    std::vector<M> gens;
    for (int s = 1; s <= group.rank(); ++s) gens.push_back(gen(s));
    std::vector<M> w(group.size(), identity);
    // BFS order is by length, so the tail s*w is always filled before w.
    for (std::size_t i = 1; i < group.size(); ++i) {
        int s = group.first_letter(i);
        w[i] = gens[static_cast<std::size_t>(s - 1)] * w[group.left_multiply(s, i)];
    }
    return w;
}

/// Rank-one type-B system: s_n acts by t, the other generators trivially.
LaurentPoly rank1_typeB_weight(const CoxeterGroup& group, std::size_t w);
/// Burau image of the positive lift of w in type A.
BurauMatrix burau_lift_weight(const CoxeterGroup& group, std::size_t w);

}  // namespace bh
