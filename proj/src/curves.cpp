#include "bh/curves.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bh {

namespace {

using Poly = std::vector<std::uint16_t>;  // low to high, trimmed

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo b (b nonzero).
Poly poly_mod(Poly a, const Poly& b, const FieldSpec& f) {
    const std::size_t db = b.size() - 1;
    const FieldElement lead_inv = f.inv({b.back()});
    while (a.size() > db) {
        const FieldElement c = f.mul({a.back()}, lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] = static_cast<std::uint16_t>(f.sub({a[shift + j]}, f.mul(c, {b[j]})).index);
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, const FieldSpec& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Dense low-to-high representation, leading 1 included.
Poly to_dense(const MonicPoly& p) {
    const int n = p.degree();
    Poly out(static_cast<std::size_t>(n) + 1);
    out[static_cast<std::size_t>(n)] = 1;
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(n - i)] = static_cast<std::uint16_t>(p.coeffs[static_cast<std::size_t>(i - 1)].index);
    return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Census worker over monic indices [begin, end): histogram of point counts over square-free f.
// Digits are advanced incrementally so that monic_from_index is not called per polynomial.
void census_block(const FieldSpec& field, int n, unsigned d, std::uint64_t begin, std::uint64_t end,
                  std::vector<std::uint64_t>& hist) {
    const unsigned q = field.q();
    const auto roots = dth_root_table(d, field);
    const std::uint16_t* add = field.add_table();
    const std::uint16_t* mul = field.mul_table();
    MonicPoly f = monic_from_index(field, n, begin);
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = f.coeffs[static_cast<std::size_t>(i)].index;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        for (int i = 0; i < n; ++i) f.coeffs[static_cast<std::size_t>(i)].index = a[static_cast<std::size_t>(i)];
        if (is_squarefree(f)) {
            unsigned count = 0;
            for (unsigned x = 0; x < q; ++x) {
                unsigned v = 1;
                for (int i = 0; i < n; ++i) v = add[mul[v * q + x] * q + a[static_cast<std::size_t>(i)]];
                count += roots[v];
            }
            if (count >= hist.size()) hist.resize(count + 1, 0);
            ++hist[count];
        }
        for (int i = n - 1; i >= 0; --i) {
            auto& digit = a[static_cast<std::size_t>(i)];
            if (++digit < q) break;
            digit = 0;
        }
    }
}

}  // namespace

void check_coprime(unsigned d, unsigned q) {
    if (d == 0 || std::gcd(d, q) != 1)
        throw std::invalid_argument("gcd(d, q) must be 1 (d = " + std::to_string(d) + ", q = " + std::to_string(q) + ")");
}

FieldElement MonicPoly::evaluate(FieldElement x) const {
    FieldElement v = field->one();
    for (FieldElement c : coeffs) v = field->add(field->mul(v, x), c);
    return v;
}

std::string MonicPoly::to_string() const {
    std::ostringstream os;
    os << "x^" << degree();
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << " " << coeffs[i].index;
    return os.str();
}

std::uint64_t monic_count(unsigned q, int n) { return ipow(q, n); }

MonicPoly monic_from_index(const FieldSpec& field, int n, std::uint64_t index) {
    if (n < 0) throw std::invalid_argument("monic_from_index: negative degree");
    MonicPoly f{&field, std::vector<FieldElement>(static_cast<std::size_t>(n))};
    for (int i = n - 1; i >= 0; --i) {
        f.coeffs[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(index % field.q())};
        index /= field.q();
    }
    return f;
}

bool is_squarefree(const MonicPoly& f) {
    const FieldSpec& field = *f.field;
    Poly p = to_dense(f);
    Poly dp(p.size() > 1 ? p.size() - 1 : 0);
    for (std::size_t i = 1; i < p.size(); ++i)
        dp[i - 1] = static_cast<std::uint16_t>(field.mul(field.from_integer(static_cast<long>(i % field.p())), {p[i]}).index);
    trim(dp);
    if (dp.empty()) return p.size() == 1;
    return poly_gcd(p, dp, field).size() == 1;
}

std::vector<MonicPoly> enumerate_squarefree(const FieldSpec& field, int n) {
    std::vector<MonicPoly> out;
    const std::uint64_t total = monic_count(field.q(), n);
    for (std::uint64_t i = 0; i < total; ++i) {
        MonicPoly f = monic_from_index(field, n, i);
        if (is_squarefree(f)) out.push_back(std::move(f));
    }
    return out;
}

std::uint64_t squarefree_count(const FieldSpec& field, int n) {
    std::uint64_t c = 0;
    const std::uint64_t total = monic_count(field.q(), n);
    for (std::uint64_t i = 0; i < total; ++i)
        if (is_squarefree(monic_from_index(field, n, i))) ++c;
    return c;
}

std::uint64_t expected_squarefree_count(unsigned q, int n) {
    if (n <= 0) return 1;
    if (n == 1) return q;
    return ipow(q, n) - ipow(q, n - 1);
}

unsigned count_curve_points(const MonicPoly& f, unsigned d) {
    check_coprime(d, f.field->q());
    unsigned count = 0;
    for (FieldElement x : f.field->elements()) count += count_dth_roots(f.evaluate(x), d, *f.field);
    return count;
}

PointCountReport total_and_average(int n, unsigned d, unsigned q, unsigned jobs) {
    if (n < 1) throw std::invalid_argument("total_and_average: n must be positive");
    const FieldSpec field = FieldSpec::make_q(q);
    check_coprime(d, q);
    const std::uint64_t total = monic_count(q, n);
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(jobs), total));

    std::vector<std::vector<std::uint64_t>> hists(workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min(total, w * chunk);
        const std::uint64_t end = std::min(total, begin + chunk);
        if (workers == 1)
            census_block(field, n, d, begin, end, hists[w]);
        else
            threads.emplace_back([&, w, begin, end] { census_block(field, n, d, begin, end, hists[w]); });
    }
    for (auto& t : threads) t.join();

    PointCountReport r;
    r.q = q;
    r.n = n;
    r.d = d;
    r.total = 0;
    for (const auto& h : hists)
        for (std::size_t c = 0; c < h.size(); ++c)
            if (h[c] != 0) r.histogram[static_cast<unsigned>(c)] += h[c];
    for (const auto& [c, mult] : r.histogram) {
        r.squarefree_count += mult;
        r.total += mpz_class(static_cast<unsigned long>(c)) * mpz_class(static_cast<unsigned long>(mult));
    }
    if (r.squarefree_count == 0) throw std::logic_error("total_and_average: empty census");
    r.average = BigRational(r.total, mpz_class(static_cast<unsigned long>(r.squarefree_count)));
    return r;
}

BigRational expected_average(int n, unsigned d, unsigned q) {
    const BigRational qq(static_cast<long>(q));
    if (n % 2 != 0 || d % 2 != 0) return qq;
    // q - q^{2-n}
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), q, static_cast<unsigned long>(n - 2));
    return qq - BigRational(mpz_class(1), den);
}

VerificationResult verify_report(const PointCountReport& report) {
    VerificationResult v;
    const bool even_even = report.n % 2 == 0 && report.d % 2 == 0;
    v.identity = even_even ? "average = q - q^(2-n)" : "average = q";
    v.q = report.q;
    v.n = report.n;
    v.d = report.d;
    v.expected = expected_average(report.n, report.d, report.q);
    v.observed = report.average;
    v.pass = v.expected == v.observed;
    return v;
}

VerificationResult verify_expected(int n, unsigned d, unsigned q, unsigned jobs) {
    return verify_report(total_and_average(n, d, q, jobs));
}

MomentReport moments_from_report(const PointCountReport& report, int max_m) {
    MomentReport out;
    out.q = report.q;
    out.n = report.n;
    out.d = report.d;
    const mpz_class den(static_cast<unsigned long>(report.squarefree_count));
    for (int m = 1; m <= max_m; ++m) {
        mpz_class sum = 0;
        for (const auto& [c, mult] : report.histogram) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), c, static_cast<unsigned long>(m));
            sum += p * mpz_class(static_cast<unsigned long>(mult));
        }
        out.moments.emplace_back(m, BigRational(sum, den));
    }
    return out;
}

MomentReport moments(int n, unsigned d, unsigned q, int max_m, unsigned jobs) {
    if (max_m < 1) throw std::invalid_argument("moments: max_m must be positive");
    return moments_from_report(total_and_average(n, d, q, jobs), max_m);
}

unsigned points_at_infinity(int n, unsigned d, unsigned q) {
    return std::gcd(std::gcd(d, static_cast<unsigned>(n)), q - 1);
}

bool weil_bound_holds(int n, unsigned d, unsigned q, unsigned count) {
    const long long qq = q, c = count, nn = n;
    const long long a = c > qq ? c - qq : qq - c;
    const long long b = (nn - 1) * static_cast<long long>(d - 1);
    const long long g = std::gcd(nn, static_cast<long long>(d));
    // a <= b sqrt(q) + g  <=>  a - g <= 0  or  (a - g)^2 <= b^2 q
    const long long lhs = a - g;
    if (lhs <= 0) return true;
    if (b <= 0) return false;
    return static_cast<__int128>(lhs) * lhs <= static_cast<__int128>(b) * b * qq;
}

bool weil_sanity(const MonicPoly& f, unsigned d) {
    return weil_bound_holds(f.degree(), d, f.field->q(), count_curve_points(f, d));
}

bool weil_sanity(const PointCountReport& report) {
    for (const auto& [c, mult] : report.histogram)
        if (!weil_bound_holds(report.n, report.d, report.q, c)) return false;
    return true;
}

std::vector<PolyCount> per_polynomial_counts(int n, unsigned d, unsigned q) {
    const FieldSpec field = FieldSpec::make_q(q);
    check_coprime(d, q);
    std::vector<PolyCount> out;
    for (const MonicPoly& f : enumerate_squarefree(field, n)) {
        PolyCount pc;
        for (FieldElement c : f.coeffs) pc.coeffs.push_back(c.index);
        pc.count = count_curve_points(f, d);
        out.push_back(std::move(pc));
    }
    return out;
}

}  // namespace bh
