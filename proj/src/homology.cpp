#include "bh/homology.hpp"

#include <map>
#include <mutex>

namespace bh {

std::string system_name(SystemKind kind) {
    switch (kind) {
        case SystemKind::Trivial:
            return "trivial";
        case SystemKind::Rank1TypeB:
            return "rank1-typeB";
        case SystemKind::Burau:
            return "burau";
        case SystemKind::BurauSpecialized:
            return "burau-specialized";
    }
    return "unknown";
}

LocalSystem<BigRational> trivial_system(const CoxeterSpec& spec) {
    LocalSystem<BigRational> sys;
    sys.kind = SystemKind::Trivial;
    sys.rank = 1;
    sys.zero = BigRational(0);
    sys.one = BigRational(1);
    for (int s = 1; s <= spec.rank; ++s) sys.generators.push_back(RationalMatrix::identity(1, sys.zero, sys.one));
    return sys;
}

LocalSystem<LaurentPoly> rank1_typeB_system(int n) {
    if (n < 1) throw std::invalid_argument("rank1_typeB_system: n must be positive");
    LocalSystem<LaurentPoly> sys;
    sys.kind = SystemKind::Rank1TypeB;
    sys.rank = 1;
    sys.zero = LaurentPoly::zero();
    sys.one = LaurentPoly::one();
    for (int s = 1; s <= n; ++s) {
        LaurentMatrix g(1, 1, sys.zero);
        g(0, 0) = s == n ? LaurentPoly::t() : sys.one;
        sys.generators.push_back(g);
    }
    return sys;
}

LocalSystem<LaurentPoly> burau_system(int n) {
    if (n < 2) throw std::invalid_argument("burau_system: need at least two strands");
    LocalSystem<LaurentPoly> sys;
    sys.kind = SystemKind::Burau;
    sys.rank = static_cast<std::size_t>(n - 1);
    sys.zero = LaurentPoly::zero();
    sys.one = LaurentPoly::one();
    // The displayed matrices act on row vectors; the module H_1 of the cover, with column
    // vectors, sees sigma_i through the transpose of the inverse.
    for (int i = 1; i < n; ++i) sys.generators.push_back(burau_generator_inverse(n, i).matrix.transpose());
    return sys;
}

LocalSystem<CyclotomicNumber> burau_specialized_system(int n, int m, int k) {
    const auto [mm, kk] = reduce_root(m, k);
    const auto base = burau_system(n);
    LocalSystem<CyclotomicNumber> sys;
    sys.kind = SystemKind::BurauSpecialized;
    sys.rank = base.rank;
    sys.zero = CyclotomicNumber(mm);
    sys.one = CyclotomicNumber(mm, BigRational(1));
    for (const auto& g : base.generators) sys.generators.push_back(specialize(g, mm, kk));
    return sys;
}

std::vector<std::vector<GeneratorSubset>> salvetti_cells(int rank) {
    if (rank < 0 || rank > 20) throw std::invalid_argument("salvetti_cells: rank out of range");
    std::vector<std::vector<GeneratorSubset>> cells(static_cast<std::size_t>(rank) + 1);
    for (std::uint32_t bits = 0; bits < (1U << rank); ++bits) {
        GeneratorSubset g{bits};
        cells[static_cast<std::size_t>(g.size())].push_back(g);
    }
    return cells;
}

std::vector<std::size_t> HomologySummary::dims() const {
    std::vector<std::size_t> out;
    for (const auto& d : degrees) out.push_back(d.free_rank);
    return out;
}

bool HomologySummary::is_torsion() const {
    for (const auto& d : degrees)
        if (d.free_rank != 0) return false;
    return true;
}

HomologySummary homology(const ChainComplex<LaurentPoly>& complex) {
    const int top = complex.top_degree();
    std::vector<SmithResult> snf(static_cast<std::size_t>(top) + 2);
    for (int k = 1; k <= top; ++k) snf[static_cast<std::size_t>(k)] = smith_normal_form(complex.boundary(k));
    HomologySummary out;
    for (int k = 0; k <= top; ++k) {
        HomologyDegree h;
        h.k = k;
        h.free_rank = complex.rank(k) - snf[static_cast<std::size_t>(k)].rank - snf[static_cast<std::size_t>(k) + 1].rank;
        for (const auto& f : snf[static_cast<std::size_t>(k) + 1].factors)
            if (!f.is_unit()) h.factors.push_back(f);
        out.degrees.push_back(std::move(h));
    }
    return out;
}

namespace {

template <class F>
const HomologySummary& cached(std::map<int, HomologySummary>& cache, std::mutex& mu, int n, F compute) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    HomologySummary h = compute();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(h)).first->second;
}

void check_strands(int n, const char* who) {
    if (n < 2) throw std::invalid_argument(std::string(who) + ": need n >= 2");
}

std::size_t vanishing_count(const HomologyDegree& h, int m, int k) {
    std::size_t c = 0;
    for (const auto& f : h.factors)
        if (eval_at_root(f, m, k).is_zero()) ++c;
    return c;
}

}  // namespace

HomologySummary trivial_braid_homology(int n) {
    check_strands(n, "trivial_braid_homology");
    static std::map<int, HomologySummary> cache;
    static std::mutex mu;
    return cached(cache, mu, n, [n] {
        CoxeterGroup g(CoxeterSpec::braid(n));
        return homology(build_salvetti(g, trivial_system(g.spec())));
    });
}

HomologySummary burau_homology(int n) {
    check_strands(n, "burau_homology");
    static std::map<int, HomologySummary> cache;
    static std::mutex mu;
    return cached(cache, mu, n, [n] {
        CoxeterGroup g(CoxeterSpec::braid(n));
        return homology(build_salvetti(g, burau_system(n)));
    });
}

HomologySummary typeB_rank1_homology(int n) {
    check_strands(n, "typeB_rank1_homology");
    static std::map<int, HomologySummary> cache;
    static std::mutex mu;
    return cached(cache, mu, n, [n] {
        CoxeterGroup g(CoxeterSpec::type_b(n));
        return homology(build_salvetti(g, rank1_typeB_system(n)));
    });
}

std::vector<LaurentPoly> direct_sum_factors(const std::vector<LaurentPoly>& cyclic) {
    if (cyclic.empty()) return {};
    LaurentMatrix d(cyclic.size(), cyclic.size(), LaurentPoly::zero());
    for (std::size_t i = 0; i < cyclic.size(); ++i) d(i, i) = cyclic[i];
    std::vector<LaurentPoly> out;
    for (const auto& f : smith_normal_form(d).factors)
        if (!f.is_unit()) out.push_back(f);
    return out;
}

bool ss_consistency(int n) {
    const auto typeB = typeB_rank1_homology(n);
    const auto burau = burau_homology(n);
    const auto trivial = trivial_braid_homology(n);
    const LaurentPoly t_minus_1(0, {BigRational(-1), BigRational(1)});
    for (int k = 0; k <= typeB.degrees.back().k; ++k) {
        std::vector<LaurentPoly> summands;
        if (k < static_cast<int>(trivial.degrees.size()))
            summands.insert(summands.end(), trivial.at(k).free_rank, t_minus_1);
        std::size_t free_expected = 0;
        if (k >= 1 && k - 1 < static_cast<int>(burau.degrees.size())) {
            const auto& b = burau.at(k - 1);
            summands.insert(summands.end(), b.factors.begin(), b.factors.end());
            free_expected = b.free_rank;
        }
        if (typeB.at(k).free_rank != free_expected) return false;
        if (typeB.at(k).factors != direct_sum_factors(summands)) return false;
    }
    return true;
}

std::vector<std::size_t> burau_homology_at(int n, int m, int k) {
    check_strands(n, "burau_homology_at");
    const auto [mm, kk] = reduce_root(m, k);
    CoxeterGroup g(CoxeterSpec::braid(n));
    return homology(build_salvetti(g, burau_specialized_system(n, mm, kk))).dims();
}

std::vector<std::size_t> burau_dual_cohomology_at(int n, int m, int k) {
    check_strands(n, "burau_dual_cohomology_at");
    const auto [mm, kk] = reduce_root(m, k);
    CoxeterGroup g(CoxeterSpec::braid(n));
    const int rank = g.rank();
    const std::size_t r = static_cast<std::size_t>(n - 1);
    const CyclotomicNumber zero(mm), one(mm, BigRational(1));

    // x[w] = rho(lift w)^{-1} on the dual module, filled along w = s * tail.
    std::vector<CyclotomicMatrix> inv_gens;
    for (int s = 1; s <= rank; ++s) inv_gens.push_back(specialize(burau_generator_inverse(n, s).matrix, mm, kk));
    std::vector<CyclotomicMatrix> x(g.size(), CyclotomicMatrix::identity(r, zero, one));
    for (std::size_t w = 1; w < g.size(); ++w) {
        const int s = g.first_letter(w);
        x[w] = x[g.left_multiply(s, w)] * inv_gens[static_cast<std::size_t>(s - 1)];
    }

    const auto cells = salvetti_cells(rank);
    std::vector<std::size_t> position(std::size_t{1} << rank);
    for (const auto& level : cells)
        for (std::size_t i = 0; i < level.size(); ++i) position[level[i].bits] = i;

    // delta[k] : C^{k-1} -> C^k for k = 1..rank
    std::vector<CyclotomicMatrix> delta(static_cast<std::size_t>(rank) + 1);
    for (int deg = 1; deg <= rank; ++deg) {
        const auto& level = cells[static_cast<std::size_t>(deg)];
        CyclotomicMatrix dm(level.size() * r, cells[static_cast<std::size_t>(deg - 1)].size() * r, zero);
        for (std::size_t c = 0; c < level.size(); ++c) {
            int pos = 0;
            for (int tau : level[c].members()) {
                const GeneratorSubset face = level[c].without(tau);
                for (std::size_t beta : g.min_coset_reps(level[c], face)) {
                    if ((pos + g.length(beta)) % 2 == 0)
                        dm.add_block(c * r, position[face.bits] * r, x[beta]);
                    else
                        dm.add_block(c * r, position[face.bits] * r, -x[beta]);
                }
                ++pos;
            }
        }
        delta[static_cast<std::size_t>(deg)] = std::move(dm);
    }
    for (int deg = 2; deg <= rank; ++deg)
        if (!(delta[static_cast<std::size_t>(deg)] * delta[static_cast<std::size_t>(deg - 1)]).is_zero())
            throw std::logic_error("burau_dual_cohomology_at: coboundary does not square to zero");

    std::vector<std::size_t> rk(static_cast<std::size_t>(rank) + 2, 0);
    for (int deg = 1; deg <= rank; ++deg) rk[static_cast<std::size_t>(deg)] = field_rank(delta[static_cast<std::size_t>(deg)]);
    std::vector<std::size_t> out;
    for (int deg = 0; deg <= rank; ++deg)
        out.push_back(cells[static_cast<std::size_t>(deg)].size() * r - rk[static_cast<std::size_t>(deg)] -
                      rk[static_cast<std::size_t>(deg) + 1]);
    return out;
}

std::vector<std::size_t> uct_prediction(int n, int m, int k) {
    const auto [mm, kk] = reduce_root(m, k);
    const auto h = burau_homology(n);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < h.degrees.size(); ++j) {
        std::size_t dim = h.degrees[j].free_rank + vanishing_count(h.degrees[j], mm, kk);
        if (j > 0) dim += vanishing_count(h.degrees[j - 1], mm, kk);
        out.push_back(dim);
    }
    return out;
}

bool uct_consistency(int n, int m, int k) { return burau_homology_at(n, m, k) == uct_prediction(n, m, k); }

std::vector<std::size_t> monodromy_cohomology_dims(int n, int d) {
    check_strands(n, "monodromy_cohomology_dims");
    if (d < 1) throw std::invalid_argument("monodromy_cohomology_dims: d must be positive");
    std::vector<std::size_t> out(static_cast<std::size_t>(n), 0);
    // Cohomology with coefficients in V_n(zeta)^\vee has the same dimensions as homology with V_n(zeta).
    for (int j = 1; j < d; ++j) {
        const auto dims = burau_homology_at(n, d, j);
        for (std::size_t p = 0; p < dims.size(); ++p) out[p] += dims[p];
    }
    return out;
}

std::vector<std::size_t> total_space_betti(int n, int d) {
    const auto base = trivial_braid_homology(n).dims();
    const auto mono = monodromy_cohomology_dims(n, d);
    std::vector<std::size_t> out(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < base.size(); ++k) out[k] += base[k];
    for (std::size_t p = 0; p < mono.size(); ++p) out[p + 1] += mono[p];
    return out;
}

long curve_betti(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("curve_betti: n and d must be positive");
    return static_cast<long>(n - 1) * (d - 1);
}

}  // namespace bh
