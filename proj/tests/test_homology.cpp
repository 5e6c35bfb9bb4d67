#include <doctest.h>

#include <numeric>

#include "bh/homology.hpp"

using namespace bh;

namespace {

LaurentPoly poly(std::initializer_list<long> c) {
    std::vector<BigRational> v;
    for (long x : c) v.emplace_back(x);
    return LaurentPoly(0, v);
}

template <class R>
bool squares_to_zero(const ChainComplex<R>& cx) {
    for (int k = 2; k <= cx.top_degree(); ++k)
        if (!(cx.boundary(k - 1) * cx.boundary(k)).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("Salvetti cells") {
    const auto cells = salvetti_cells(3);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0].size() == 1);
    CHECK(cells[1].size() == 3);
    CHECK(cells[2].size() == 3);
    CHECK(cells[3].size() == 1);
    CHECK(cells[2][0] == GeneratorSubset::of({1, 2}));
    CHECK(cells[2][1] == GeneratorSubset::of({1, 3}));
}

TEST_CASE("chain complex validation") {
    RationalMatrix d1(1, 1), d2(1, 1);
    d1(0, 0) = 1;
    d2(0, 0) = 1;
    CHECK_THROWS_AS(ChainComplex<BigRational>({1, 1, 1}, {d1, d2}), std::logic_error);
    CHECK_THROWS_AS(ChainComplex<BigRational>({1, 2}, {d1}), std::invalid_argument);
    ChainComplex<BigRational> ok({1, 1}, {d1});
    CHECK(homology(ok).dims() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("trivial coefficients give the rational homology of braid groups") {
    for (int n = 2; n <= 7; ++n) {
        const auto h = trivial_braid_homology(n);
        std::vector<std::size_t> expected(static_cast<std::size_t>(n), 0);
        expected[0] = expected[1] = 1;
        CHECK(h.dims() == expected);
        CHECK(h.over_field);
    }
}

TEST_CASE("every constructed complex squares to zero") {
    for (int n = 2; n <= 6; ++n) {
        CoxeterGroup a(CoxeterSpec::braid(n)), b(CoxeterSpec::type_b(n));
        CHECK(squares_to_zero(build_salvetti(a, trivial_system(a.spec()))));
        CHECK(squares_to_zero(build_salvetti(a, burau_system(n))));
        CHECK(squares_to_zero(build_salvetti(b, trivial_system(b.spec()))));
        CHECK(squares_to_zero(build_salvetti(b, rank1_typeB_system(n))));
        for (int m = 1; m <= 6; ++m) CHECK(squares_to_zero(build_salvetti(a, burau_specialized_system(n, m, 1))));
    }
}

TEST_CASE("rank-one complex of B_1 and B_2") {
    CoxeterGroup b1(CoxeterSpec::type_b(1));
    const auto h1 = homology(build_salvetti(b1, rank1_typeB_system(1)));
    REQUIRE(h1.degrees.size() == 2);
    CHECK(h1.at(0).factors == std::vector<LaurentPoly>{poly({-1, 1})});
    CHECK(h1.at(1).factors.empty());
    CHECK(h1.is_torsion());
}

TEST_CASE("Burau homology over the Laurent ring, small cases") {
    const auto h2 = burau_homology(2);
    CHECK(h2.at(0).factors == std::vector<LaurentPoly>{poly({1, 1})});
    CHECK(h2.at(1).factors.empty());
    const auto h3 = burau_homology(3);
    CHECK(h3.at(0).factors.empty());
    CHECK(h3.at(1).factors == std::vector<LaurentPoly>{poly({-1, 1})});
    CHECK(h3.at(2).factors.empty());
    CHECK(h3.is_torsion());
    const auto h4 = burau_homology(4);
    CHECK(h4.at(2).factors == std::vector<LaurentPoly>{poly({-1, 0, 1})});
}

TEST_CASE("direct sums of cyclic modules") {
    const auto a = poly({-1, 1}), b = poly({1, 1});
    CHECK(direct_sum_factors({a, b}) == std::vector<LaurentPoly>{poly({-1, 0, 1})});
    CHECK(direct_sum_factors({a, a}) == std::vector<LaurentPoly>{a, a});
    CHECK(direct_sum_factors({LaurentPoly::one(), a}) == std::vector<LaurentPoly>{a});
    CHECK(direct_sum_factors({}).empty());
}

TEST_CASE("specialised homology, universal coefficients and duality") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 6; ++m)
            for (int k = 0; k < m; ++k) {
                if (std::gcd(m, k) != 1 && !(m == 1 && k == 0)) continue;
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(k);
                const auto dims = burau_homology_at(n, m, k);
                CHECK(dims == uct_prediction(n, m, k));
                CHECK(dims == burau_dual_cohomology_at(n, m, k));
                CHECK(uct_consistency(n, m, k));
            }
    // zeta_6^2 is a primitive cube root
    CHECK(burau_homology_at(4, 6, 2) == burau_homology_at(4, 3, 1));
    CHECK_THROWS(burau_homology_at(3, 0, 1));
}

TEST_CASE("spectral sequence consistency") {
    for (int n = 2; n <= 5; ++n) CHECK(ss_consistency(n));
}

TEST_CASE("curve Betti number") {
    CHECK(curve_betti(3, 2) == 2);
    CHECK(curve_betti(4, 3) == 6);
    CHECK(curve_betti(1, 5) == 0);
}
