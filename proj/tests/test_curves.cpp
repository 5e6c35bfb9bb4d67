#include <doctest.h>

#include <numeric>
#include <random>

#include "bh/curves.hpp"
#include "oracles.hpp"

using namespace bh;

namespace {

const unsigned kGridQ[] = {2, 3, 4, 5, 7, 8, 9};

std::vector<std::uint32_t> indices(const MonicPoly& f) {
    std::vector<std::uint32_t> a;
    for (auto c : f.coeffs) a.push_back(c.index);
    return a;
}

}  // namespace

TEST_CASE("canonical polynomial order") {
    const FieldSpec F = FieldSpec::make_q(3);
    CHECK(monic_count(3, 4) == 81);
    const auto f0 = monic_from_index(F, 3, 0);
    CHECK(indices(f0) == std::vector<std::uint32_t>{0, 0, 0});
    CHECK(indices(monic_from_index(F, 3, 1)) == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(indices(monic_from_index(F, 3, 9)) == std::vector<std::uint32_t>{1, 0, 0});
    CHECK(indices(monic_from_index(F, 3, 26)) == std::vector<std::uint32_t>{2, 2, 2});
    const auto f = monic_from_index(F, 2, 5);  // x^2 + x + 2
    CHECK(f.evaluate(F.from_integer(1)) == F.from_integer(1));
    CHECK_FALSE(f.to_string().empty());
}

TEST_CASE("square-free test agrees with trial division") {
    for (unsigned q : kGridQ) {
        const FieldSpec F = FieldSpec::make_q(q);
        for (int n = 1; n <= (q <= 4 ? 5 : 4); ++n) {
            bool ok = true;
            for (std::uint64_t i = 0; i < monic_count(q, n); ++i) {
                const auto f = monic_from_index(F, n, i);
                ok = ok && is_squarefree(f) == oracle::naive_squarefree(F, indices(f));
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("square-free census") {
    for (unsigned q : kGridQ) {
        const FieldSpec F = FieldSpec::make_q(q);
        for (int n = 1; n <= 6; ++n) {
            const std::uint64_t qn = monic_count(q, n), qn1 = monic_count(q, n - 1);
            CHECK(squarefree_count(F, n) == (n == 1 ? q : qn - qn1));
            CHECK(expected_squarefree_count(q, n) == (n == 1 ? q : qn - qn1));
        }
        const auto list = enumerate_squarefree(F, 3);
        CHECK(list.size() == squarefree_count(F, 3));
    }
}

TEST_CASE("fast point counts equal the double loop on the full grid") {
    for (unsigned q : kGridQ) {
        const FieldSpec F = FieldSpec::make_q(q);
        for (int n = 1; n <= 6; ++n)
            for (unsigned d = 1; d <= 6; ++d) {
                if (std::gcd(d, q) != 1) continue;
                const auto counts = per_polynomial_counts(n, d, q);
                std::size_t bad = 0;
                for (const auto& pc : counts) bad += pc.count != oracle::naive_count(F, pc.coeffs, d);
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(d);
                CHECK(bad == 0);
                CHECK(counts.size() == expected_squarefree_count(q, n));
            }
    }
}

TEST_CASE("fast point counts equal the double loop on random samples at q = 11, 13") {
    std::mt19937_64 rng(1311);
    for (unsigned q : {11U, 13U}) {
        const FieldSpec F = FieldSpec::make_q(q);
        int samples = 0;
        while (samples < 1200) {
            const int n = 1 + static_cast<int>(rng() % 8);
            const unsigned d = 1 + static_cast<unsigned>(rng() % 12);
            if (std::gcd(d, q) != 1) continue;
            std::vector<unsigned> a(static_cast<std::size_t>(n));
            MonicPoly f{&F, {}};
            for (auto& c : a) {
                c = static_cast<unsigned>(rng() % q);
                f.coeffs.push_back(F.from_integer(c));
            }
            if (!is_squarefree(f)) continue;
            ++samples;
            REQUIRE(count_curve_points(f, d) == oracle::naive_count_prime(q, a, d));
        }
        CHECK(samples == 1200);
    }
}

TEST_CASE("census totals agree with the oracle") {
    for (unsigned q : {2U, 3U, 4U, 5U})
        for (int n = 1; n <= 4; ++n)
            for (unsigned d = 1; d <= 4; ++d) {
                if (std::gcd(d, q) != 1) continue;
                const FieldSpec F = FieldSpec::make_q(q);
                std::uint64_t census = 0;
                const std::uint64_t total = oracle::naive_total(F, n, d, &census);
                const auto r = total_and_average(n, d, q);
                CHECK(r.total == mpz_class(static_cast<unsigned long>(total)));
                CHECK(r.squarefree_count == census);
                CHECK(r.average == BigRational(mpz_class(static_cast<unsigned long>(total)),
                                               mpz_class(static_cast<unsigned long>(census))));
            }
}

TEST_CASE("literal census values") {
    const auto a = total_and_average(3, 2, 3);
    CHECK(a.squarefree_count == 18);
    CHECK(a.total == 54);
    CHECK(a.average == 3);
    const auto b = total_and_average(2, 2, 3);
    CHECK(b.total == 12);
    CHECK(b.average == 2);
    const FieldSpec F3 = FieldSpec::make_q(3);
    const MonicPoly cubic{&F3, {F3.zero(), F3.from_integer(-1), F3.zero()}};
    CHECK(count_curve_points(cubic, 2) == 3);
    CHECK(weil_sanity(cubic, 2));
}

TEST_CASE("expected value identities") {
    for (unsigned q : {3U, 4U, 5U, 7U, 8U, 9U})
        for (int n = 2; n <= 5; ++n)
            for (unsigned d = 2; d <= 6; ++d) {
                if (std::gcd(d, q) != 1) continue;
                const auto v = verify_expected(n, d, q, 2);
                CHECK(v.pass);
                mpz_class qn2 = 1;
                for (int i = 2; i < n; ++i) qn2 *= q;
                const BigRational want =
                    (n % 2 == 0 && d % 2 == 0) ? BigRational(q) - BigRational(mpz_class(1), qn2) : BigRational(q);
                CHECK(v.expected == want);
            }
    CHECK(expected_average(2, 2, 5) == BigRational(4));
    CHECK(expected_average(4, 2, 3) == BigRational(26, 9));
}

TEST_CASE("worker partition does not change the census") {
    const auto base = total_and_average(4, 3, 5, 1);
    for (unsigned jobs : {2U, 3U, 7U, 0U}) {
        const auto r = total_and_average(4, 3, 5, jobs);
        CHECK(r.total == base.total);
        CHECK(r.histogram == base.histogram);
        CHECK(r.average == base.average);
    }
}

TEST_CASE("moments") {
    const auto m = moments(3, 2, 3, 4);
    REQUIRE(m.moments.size() == 4);
    CHECK(m.moments[0].second == BigRational(3));
    CHECK(m.moments[1].second == BigRational(35, 3));
    CHECK(m.moments[2].second == BigRational(51));
    CHECK(m.moments[3].second == BigRational(719, 3));
    // against the oracle sums
    const FieldSpec F = FieldSpec::make_q(4);
    const auto counts = per_polynomial_counts(3, 3, 4);
    const auto m4 = moments(3, 3, 4, 3);
    for (int k = 1; k <= 3; ++k) {
        mpz_class s = 0;
        for (const auto& pc : counts) {
            mpz_class c = oracle::naive_count(F, pc.coeffs, 3), p = 1;
            for (int i = 0; i < k; ++i) p *= c;
            s += p;
        }
        CHECK(m4.moments[static_cast<std::size_t>(k - 1)].second ==
              BigRational(s, mpz_class(static_cast<unsigned long>(counts.size()))));
    }
}

TEST_CASE("points at infinity and the Weil bound") {
    CHECK(points_at_infinity(3, 3, 4) == 3);
    CHECK(points_at_infinity(4, 2, 3) == 2);
    CHECK(points_at_infinity(3, 2, 5) == 1);
    CHECK(weil_bound_holds(3, 2, 3, 3));
    CHECK_FALSE(weil_bound_holds(3, 2, 3, 10));
    for (unsigned q : kGridQ)
        for (int n = 1; n <= 6; ++n)
            for (unsigned d = 1; d <= 6; ++d)
                if (std::gcd(d, q) == 1) CHECK(weil_sanity(total_and_average(n, d, q, 0)));
    const FieldSpec F = FieldSpec::make_q(5);
    for (const auto& f : enumerate_squarefree(F, 4))
        for (unsigned d = 1; d <= 4; ++d) CHECK(weil_sanity(f, d));
}

TEST_CASE("characteristic must not divide d") {
    CHECK_THROWS(check_coprime(2, 4));
    CHECK_THROWS(check_coprime(0, 5));
    CHECK_NOTHROW(check_coprime(3, 4));
    CHECK_THROWS(total_and_average(3, 3, 9));
    CHECK_THROWS(total_and_average(3, 2, 6));
}
