#include "bh/coxeter.hpp"

#include <cstdlib>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace bh {

int CoxeterSpec::m(int i, int j) const {
    if (i == j) return 1;
    if (std::abs(i - j) > 1) return 2;
    if (family == CoxeterFamily::B && std::max(i, j) == rank) return 4;
    return 3;
}

std::uint64_t CoxeterSpec::order() const {
    std::uint64_t f = 1;
    for (int i = 2; i <= points(); ++i) f *= static_cast<std::uint64_t>(i);
    if (family == CoxeterFamily::B) f <<= static_cast<unsigned>(points());
    return f;
}

std::string CoxeterSpec::name() const {
    return std::string(family == CoxeterFamily::A ? "A" : "B") + std::to_string(rank);
}

GeneratorSubset GeneratorSubset::of(std::initializer_list<int> gens) {
    GeneratorSubset g;
    for (int s : gens) g.bits |= 1U << (s - 1);
    return g;
}

std::vector<int> GeneratorSubset::members() const {
    std::vector<int> out;
    for (int s = 1; s <= 32; ++s)
        if (contains(s)) out.push_back(s);
    return out;
}

std::vector<int> CoxeterGroup::left_action(int s, const std::vector<int>& perm) const {
    std::vector<int> out = perm;
    const bool sign_change = spec_.family == CoxeterFamily::B && s == spec_.rank;
    for (int& v : out) {
        int a = std::abs(v), sg = v < 0 ? -1 : 1;
        if (sign_change) {
            if (a == spec_.points()) v = -v;
        } else if (a == s) {
            v = sg * (s + 1);
        } else if (a == s + 1) {
            v = sg * s;
        }
    }
    return out;
}

std::uint64_t CoxeterGroup::key(const std::vector<int>& perm) const {
    std::uint64_t k = 0;
    for (int v : perm) k = (k << 5U) | static_cast<std::uint64_t>(v + 16);
    return k;
}

CoxeterGroup::CoxeterGroup(CoxeterSpec spec, std::size_t cap) : spec_(spec) {
    if (spec_.rank < 1) throw std::invalid_argument("CoxeterGroup: rank must be positive");
    if (spec_.points() > 12) throw std::length_error("CoxeterGroup: too many points");
    if (spec_.order() > cap) throw std::length_error("CoxeterGroup: group order " + std::to_string(spec_.order()) +
                                                     " exceeds cap " + std::to_string(cap));
    const auto r = static_cast<std::size_t>(spec_.rank);
    const std::size_t n = spec_.order();
    perms_.reserve(n);
    length_.reserve(n);

    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(n * 2);
    std::vector<int> id(static_cast<std::size_t>(spec_.points()));
    for (std::size_t j = 0; j < id.size(); ++j) id[j] = static_cast<int>(j) + 1;
    perms_.push_back(id);
    length_.push_back(0);
    index.emplace(key(id), 0);

    left_.assign(n * r, 0);
    for (std::size_t w = 0; w < perms_.size(); ++w) {
        for (int s = 1; s <= spec_.rank; ++s) {
            std::vector<int> sw = left_action(s, perms_[w]);
            auto [it, fresh] = index.emplace(key(sw), perms_.size());
            if (fresh) {
                perms_.push_back(std::move(sw));
                length_.push_back(length_[w] + 1);
            }
            left_[w * r + static_cast<std::size_t>(s - 1)] = it->second;
        }
    }
    if (perms_.size() != n) throw std::logic_error("CoxeterGroup: enumeration size mismatch");

    descents_.assign(n, 0);
    support_.assign(n, 0);
    first_.assign(n, 0);
    special_.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
        for (int s = spec_.rank; s >= 1; --s) {
            std::size_t sw = left_[w * r + static_cast<std::size_t>(s - 1)];
            if (length_[sw] < length_[w]) {
                descents_[w] |= 1U << (s - 1);
                first_[w] = s;
            }
        }
        if (w == 0) continue;
        // Predecessors come earlier in BFS order.
        std::size_t tail = left_[w * r + static_cast<std::size_t>(first_[w] - 1)];
        support_[w] = support_[tail] | (1U << (first_[w] - 1));
        special_[w] = special_[tail] + (first_[w] == spec_.rank ? 1 : 0);
        if (length_[w] > length_[longest_]) longest_ = w;
    }
}

CoxeterElement CoxeterGroup::element(std::size_t w) const { return {perms_.at(w), length_.at(w)}; }

std::size_t CoxeterGroup::index_of(const std::vector<int>& perm) const {
    // Linear scan; the construction-time hash map is not retained.
    if (perm.size() != static_cast<std::size_t>(spec_.points()))
        throw std::invalid_argument("CoxeterGroup: wrong permutation size");
    const std::uint64_t target = key(perm);
    for (std::size_t w = 0; w < perms_.size(); ++w)
        if (key(perms_[w]) == target) return w;
    throw std::invalid_argument("CoxeterGroup: not a group element");
}

std::vector<int> CoxeterGroup::reduced_word(std::size_t w) const {
    std::vector<int> word;
    while (w != 0) {
        int s = first_[w];
        word.push_back(s);
        w = left_multiply(s, w);
    }
    return word;
}

std::vector<std::vector<int>> CoxeterGroup::all_reduced_words(std::size_t w) const {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == 0) {
            out.push_back(prefix);
            return;
        }
        for (int s = 1; s <= spec_.rank; ++s) {
            if (!left_descents(v).contains(s)) continue;
            prefix.push_back(s);
            rec(left_multiply(s, v));
            prefix.pop_back();
        }
    };
    rec(w);
    return out;
}

int CoxeterGroup::special_generator_count(std::size_t w) const {
    if (spec_.family != CoxeterFamily::B)
        throw std::invalid_argument("special_generator_count: type B only");
    return special_[w];
}

std::vector<std::size_t> CoxeterGroup::parabolic(GeneratorSubset gamma) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < size(); ++w)
        if (support(w).subset_of(gamma)) out.push_back(w);
    return out;
}

std::vector<std::size_t> CoxeterGroup::min_coset_reps(GeneratorSubset gamma, GeneratorSubset sub) const {
    if (!sub.subset_of(gamma)) throw std::invalid_argument("min_coset_reps: subgroup generators not contained in gamma");
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < size(); ++w)
        if (support(w).subset_of(gamma) && (descents_[w] & sub.bits) == 0) out.push_back(w);
    return out;
}

std::vector<CoxeterElement> enumerate(const CoxeterSpec& spec) {
    CoxeterGroup g(spec);
    std::vector<CoxeterElement> out;
    out.reserve(g.size());
    for (std::size_t w = 0; w < g.size(); ++w) out.push_back(g.element(w));
    return out;
}

LaurentPoly rank1_typeB_weight(const CoxeterGroup& group, std::size_t w) {
    return LaurentPoly::t(group.special_generator_count(w));
}

BurauMatrix burau_lift_weight(const CoxeterGroup& group, std::size_t w) {
    if (group.spec().family != CoxeterFamily::A) throw std::invalid_argument("burau_lift_weight: type A only");
    const int n = group.spec().points();
    return burau_word(BraidWord(n, group.reduced_word(w)));
}

}  // namespace bh
