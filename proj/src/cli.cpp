#include "bh/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "bh/reference.hpp"
#include "bh/serialize.hpp"

namespace bh::cli {

using io::ordered_json;

namespace {

const char* const kConvention =
    "invariant factors are monic polynomials in t with nonzero constant term, so Q[t,t^-1]/(1-t) is "
    "reported as t-1 and Q[t,t^-1]/(1-t^2) as t^2-1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Evaluates f(0..count-1) on up to `jobs` threads; results keep index order.
template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{0}))> {
    using T = decltype(f(std::size_t{0}));
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (config.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(config.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + config.out);
    f << text;
}

struct Triple {
    unsigned q;
    int n;
    unsigned d;
};

std::vector<Triple> admissible_triples(const RunConfig& c, std::ostream& err) {
    std::vector<Triple> out;
    for (int q : c.q.values()) {
        if (q < 2 || !prime_power(static_cast<unsigned>(q))) {
            err << "skipping q = " << q << ": not a prime power\n";
            continue;
        }
        if (q > 1024) throw UsageError("q = " + std::to_string(q) + " exceeds the field table limit 1024");
        for (int n : c.n.values())
            for (int d : c.d.values()) {
                if (std::gcd(d, q) != 1) continue;
                out.push_back({static_cast<unsigned>(q), n, static_cast<unsigned>(d)});
            }
    }
    return out;
}

void check_count_ranges(const RunConfig& c, int min_n) {
    if (c.n.lo < min_n) throw UsageError("--n must be at least " + std::to_string(min_n));
    if (c.n.hi > 12) throw UsageError("--n above 12 is not supported");
    if (c.d.lo < 1) throw UsageError("--d must be positive");
    if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
}

std::string rational_csv(const BigRational& r) { return r.numerator().get_str() + "," + r.denominator().get_str(); }

int run_count(const RunConfig& c, std::ostream& out, std::ostream& err) {
    check_count_ranges(c, 1);
    if (c.dump && c.format == "csv") throw UsageError("--dump is only available with --format json");
    bool ok = true;
    ordered_json results = ordered_json::array();
    std::ostringstream csv;
    csv << "q,n,d,squarefree_count,total,average_num,average_den,points_at_infinity,weil\n";
    for (const Triple& t : admissible_triples(c, err)) {
        const auto r = total_and_average(t.n, t.d, t.q, c.jobs);
        const bool weil = weil_sanity(r);
        ok = ok && weil && r.squarefree_count == expected_squarefree_count(t.q, t.n);
        if (c.format == "csv") {
            csv << t.q << "," << t.n << "," << t.d << "," << r.squarefree_count << "," << r.total.get_str() << ","
                << rational_csv(r.average) << "," << points_at_infinity(t.n, t.d, t.q) << "," << (weil ? 1 : 0)
                << "\n";
            continue;
        }
        ordered_json j = io::count_report(r);
        if (c.dump) {
            ordered_json polys = ordered_json::array();
            for (const auto& pc : per_polynomial_counts(t.n, t.d, t.q)) {
                ordered_json e;
                e["coeffs"] = pc.coeffs;
                e["count"] = pc.count;
                polys.push_back(e);
            }
            j["polynomials"] = polys;
        }
        results.push_back(j);
    }
    if (c.format == "csv") {
        emit(c, out, csv.str());
    } else {
        ordered_json doc;
        doc["command"] = "count";
        doc["results"] = results;
        doc["all_pass"] = ok;
        emit(c, out, io::dump(doc));
    }
    return ok ? kPass : kFail;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    check_count_ranges(c, 2);
    bool ok = true;
    ordered_json results = ordered_json::array();
    std::ostringstream csv;
    csv << "q,n,d,identity,expected_num,expected_den,observed_num,observed_den,pass\n";
    for (const Triple& t : admissible_triples(c, err)) {
        const auto r = total_and_average(t.n, t.d, t.q, c.jobs);
        const auto v = verify_report(r);
        const bool census = r.squarefree_count == expected_squarefree_count(t.q, t.n);
        const bool weil = weil_sanity(r);
        ok = ok && v.pass && census && weil;
        if (c.format == "csv") {
            csv << t.q << "," << t.n << "," << t.d << "," << v.identity << "," << rational_csv(v.expected) << ","
                << rational_csv(v.observed) << "," << (v.pass ? 1 : 0) << "\n";
            continue;
        }
        ordered_json j = io::verification(v);
        j["squarefree_count"] = r.squarefree_count;
        j["census_ok"] = census;
        j["weil"] = weil;
        results.push_back(j);
    }
    if (c.format == "csv") {
        emit(c, out, csv.str());
    } else {
        ordered_json doc;
        doc["command"] = "verify";
        doc["results"] = results;
        doc["all_pass"] = ok;
        emit(c, out, io::dump(doc));
    }
    return ok ? kPass : kFail;
}

int run_moments(const RunConfig& c, std::ostream& out, std::ostream& err) {
    check_count_ranges(c, 1);
    if (c.max_moment < 1 || c.max_moment > 32) throw UsageError("--m must be in 1..32");
    ordered_json results = ordered_json::array();
    std::ostringstream csv;
    csv << "q,n,d,m,num,den\n";
    for (const Triple& t : admissible_triples(c, err)) {
        const auto m = moments(t.n, t.d, t.q, c.max_moment, c.jobs);
        for (const auto& [k, v] : m.moments) csv << t.q << "," << t.n << "," << t.d << "," << k << "," << rational_csv(v) << "\n";
        results.push_back(io::moment_report(m));
    }
    if (c.format == "csv") {
        emit(c, out, csv.str());
    } else {
        ordered_json doc;
        doc["command"] = "moments";
        doc["results"] = results;
        emit(c, out, io::dump(doc));
    }
    return kPass;
}

int single_n(const RunConfig& c) {
    if (c.n.lo != c.n.hi) throw UsageError("--n must be a single value for this command");
    return c.n.lo;
}

void require_json(const RunConfig& c) {
    if (c.format != "json") throw UsageError("this command only supports --format json");
}

int run_burau(const RunConfig& c, std::ostream& out) {
    require_json(c);
    const int n = single_n(c);
    if (n < 2 || n > 16) throw UsageError("--n must be in 2..16");
    BraidWord w;
    try {
        w = BraidWord::parse(n, c.word);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const BurauMatrix m = burau_word(w);
    ordered_json doc;
    doc["command"] = "burau";
    doc["n"] = n;
    doc["word"] = w.letters;
    doc["convention"] = "matrices act on column vectors; the product follows the word from left to right";
    doc["matrix"] = io::matrix(m.matrix);
    doc["determinant"] = io::laurent(determinant(m.matrix));
    bool ok = true;
    if (c.cover) {
        const BurauMatrix cover = burau_via_cover(w);
        doc["cover_matrix"] = io::matrix(cover.matrix);
        doc["cover_agrees"] = cover == m;
        ok = cover == m;
    }
    if (c.zeta) {
        const auto [mm, kk] = reduce_root(c.zeta->first, c.zeta->second);
        ordered_json z;
        z["m"] = mm;
        z["k"] = kk;
        doc["zeta"] = z;
        doc["specialized"] = io::matrix(specialize(m.matrix, mm, kk));
    }
    emit(c, out, io::dump(doc));
    return ok ? kPass : kFail;
}

std::string default_system(const RunConfig& c) {
    if (!c.system.empty()) return c.system;
    return c.group == "typeB" ? "rank1" : "burau";
}

void check_homology_config(const RunConfig& c, const std::string& system) {
    require_json(c);
    if (c.group != "braid" && c.group != "typeB") throw UsageError("--group must be braid or typeB");
    const bool braid = c.group == "braid";
    if (braid && system != "burau" && system != "trivial")
        throw UsageError("--system for the braid group must be burau or trivial");
    if (!braid && system != "rank1" && system != "trivial")
        throw UsageError("--system for typeB must be rank1 or trivial");
    if (c.zeta && !(braid && system == "burau")) throw UsageError("--zeta applies to the braid group with the burau system");
    if (c.d_given && !(braid && system == "burau")) throw UsageError("--d applies to the braid group with the burau system");
    if (c.zeta && c.d_given) throw UsageError("--zeta and --d are mutually exclusive");
    const int cap = braid ? (system == "burau" ? 7 : 8) : 7;
    if (c.n.lo < 2 || c.n.hi > cap)
        throw UsageError("--n must lie in 2.." + std::to_string(cap) + " for this group and system");
    if (c.d_given && (c.d.lo < 2 || c.d.hi > 24)) throw UsageError("--d must lie in 2..24");
}

ordered_json zeta_json(int m, int k) {
    ordered_json z;
    z["m"] = m;
    z["k"] = k;
    return z;
}

ordered_json specialized_entry(int n, int m, int k) {
    const auto [mm, kk] = reduce_root(m, k);
    const auto dims = burau_homology_at(n, mm, kk);
    const auto dual = burau_dual_cohomology_at(n, mm, kk);
    const auto uct = uct_prediction(n, mm, kk);
    ordered_json j;
    j["n"] = n;
    j["zeta"] = zeta_json(mm, kk);
    j["dims"] = io::dims(dims);
    j["dual_cohomology_dims"] = io::dims(dual);
    j["uct_prediction"] = io::dims(uct);
    j["uct_consistency"] = uct == dims;
    if (n >= 3) {
        const auto expected = published::burau_dims_at(n, mm, kk);
        j["expected"] = io::dims(expected);
        j["expected_match"] = expected == dims && expected == dual;
    } else {
        j["expected"] = nullptr;
        j["expected_match"] = nullptr;
    }
    return j;
}

ordered_json derived_entry(int n, int d) {
    const auto mono = monodromy_cohomology_dims(n, d);
    const auto total = total_space_betti(n, d);
    ordered_json j;
    j["n"] = n;
    j["d"] = d;
    j["monodromy_cohomology_dims"] = io::dims(mono);
    j["total_space_betti"] = io::dims(total);
    j["curve_betti"] = curve_betti(n, d);
    if (n >= 3)
        j["expected_match"] = mono == published::monodromy_dims(n, d) && total == published::total_space_betti(n, d);
    else
        j["expected_match"] = nullptr;
    return j;
}

ordered_json homology_entry(const std::string& group, const std::string& system, int n) {
    ordered_json j;
    j["n"] = n;
    if (system == "trivial") {
        HomologySummary h;
        if (group == "braid") {
            h = trivial_braid_homology(n);
        } else {
            CoxeterGroup g(CoxeterSpec::type_b(n));
            h = homology(build_salvetti(g, trivial_system(g.spec())));
        }
        j["degrees"] = io::homology_degrees(h);
        if (group == "braid") {
            std::vector<std::size_t> expected(static_cast<std::size_t>(n), 0);
            expected[0] = 1;
            expected[1] = 1;
            j["expected_match"] = h.dims() == expected;
        } else {
            j["expected_match"] = nullptr;
        }
        return j;
    }
    if (group == "braid") {
        const auto h = burau_homology(n);
        j["degrees"] = io::homology_degrees(h);
        j["torsion"] = h.is_torsion();
        j["expected_match"] = published::matches(h, published::burau_factors(n));
    } else {
        const auto h = typeB_rank1_homology(n);
        j["degrees"] = io::homology_degrees(h);
        j["torsion"] = h.is_torsion();
        j["expected_match"] = published::matches(h, published::typeB_factors(n));
        j["ss_consistency"] = ss_consistency(n);
        // The closed form is quoted in cohomological degrees 1..n, i.e. homological 0..n-1;
        // degree n is computed but sits outside that range.
        j["degrees_outside_published_range"] = ordered_json::array({n});
    }
    return j;
}

bool entry_ok(const ordered_json& j) {
    for (const char* key : {"expected_match", "uct_consistency", "ss_consistency"})
        if (j.contains(key) && j[key].is_boolean() && !j[key].get<bool>()) return false;
    return true;
}

int run_homology(const RunConfig& c, std::ostream& out) {
    const std::string system = default_system(c);
    check_homology_config(c, system);
    const auto ns = c.n.values();
    std::vector<ordered_json> entries;
    if (c.zeta) {
        entries = parallel_map(ns.size(), c.jobs,
                               [&](std::size_t i) { return specialized_entry(ns[i], c.zeta->first, c.zeta->second); });
    } else if (c.d_given) {
        std::vector<std::pair<int, int>> grid;
        for (int n : ns)
            for (int d : c.d.values()) grid.emplace_back(n, d);
        entries = parallel_map(grid.size(), c.jobs,
                               [&](std::size_t i) { return derived_entry(grid[i].first, grid[i].second); });
    } else {
        entries = parallel_map(ns.size(), c.jobs, [&](std::size_t i) { return homology_entry(c.group, system, ns[i]); });
    }
    bool ok = true;
    ordered_json results = ordered_json::array();
    for (auto& e : entries) {
        ok = ok && entry_ok(e);
        results.push_back(std::move(e));
    }
    ordered_json doc;
    doc["command"] = "homology";
    doc["group"] = c.group;
    doc["system"] = c.zeta ? "burau-specialized" : system;
    doc["convention"] = kConvention;
    doc["results"] = results;
    emit(c, out, io::dump(doc));
    return ok ? kPass : kFail;
}

template <class R>
ordered_json export_complex(const CoxeterGroup& g, const ChainComplex<R>& cx) {
    ordered_json doc;
    ordered_json cells = ordered_json::array();
    for (const auto& level : salvetti_cells(g.rank())) {
        ordered_json lv = ordered_json::array();
        for (const auto& s : level) lv.push_back(s.members());
        cells.push_back(lv);
    }
    doc["cells"] = cells;
    doc["ranks"] = cx.ranks();
    ordered_json bd = ordered_json::array();
    for (int k = 1; k <= cx.top_degree(); ++k) {
        ordered_json b;
        b["k"] = k;
        b["matrix"] = io::matrix(cx.boundary(k));
        bd.push_back(b);
    }
    doc["boundaries"] = bd;
    return doc;
}

int run_export(const RunConfig& c, std::ostream& out) {
    const std::string system = default_system(c);
    check_homology_config(c, system);
    if (c.d_given) throw UsageError("--d does not apply to salvetti-export");
    const int n = single_n(c);
    const bool braid = c.group == "braid";
    CoxeterGroup g(braid ? CoxeterSpec::braid(n) : CoxeterSpec::type_b(n));
    ordered_json body;
    std::string ring;
    if (system == "trivial") {
        ring = "rational";
        body = export_complex(g, build_salvetti(g, trivial_system(g.spec())));
    } else if (c.zeta) {
        const auto [mm, kk] = reduce_root(c.zeta->first, c.zeta->second);
        ring = "cyclotomic";
        body = export_complex(g, build_salvetti(g, burau_specialized_system(n, mm, kk)));
        body["zeta"] = zeta_json(mm, kk);
    } else {
        ring = "laurent";
        body = export_complex(g, braid ? build_salvetti(g, burau_system(n)) : build_salvetti(g, rank1_typeB_system(n)));
    }
    ordered_json doc;
    doc["command"] = "salvetti-export";
    doc["group"] = c.group;
    doc["n"] = n;
    doc["system"] = c.zeta ? "burau-specialized" : system;
    doc["ring"] = ring;
    doc["format"] =
        "boundaries[k-1].matrix is d_k : C_k -> C_{k-1} acting on column vectors; its block (i, j) of size "
        "ranks[k]/|cells[k]| pairs cells[k-1][i] with cells[k][j]. Laurent entries are {lowest_exp, coeffs}, "
        "rational entries [num, den], cyclotomic entries {conductor, coeffs} in the basis 1, zeta, zeta^2, ...";
    for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
    emit(c, out, io::dump(doc));
    return kPass;
}

// Fixture builders.

std::string burau_fixture(unsigned jobs) {
    const auto entries = parallel_map(5, jobs, [](std::size_t i) { return homology_entry("braid", "burau", static_cast<int>(i) + 2); });
    ordered_json doc;
    doc["table"] = "H_k(B_n; V_n) over Q[t,t^-1]";
    doc["convention"] = kConvention;
    doc["entries"] = entries;
    return io::dump(doc);
}

std::string typeb_fixture(unsigned jobs) {
    const auto entries = parallel_map(5, jobs, [](std::size_t i) { return homology_entry("typeB", "rank1", static_cast<int>(i) + 2); });
    ordered_json doc;
    doc["table"] = "homology of the type-B_n Artin group, eps_n acting by t";
    doc["convention"] = kConvention;
    doc["entries"] = entries;
    return io::dump(doc);
}

std::string specialized_fixture(unsigned jobs) {
    std::vector<std::tuple<int, int, int>> grid;
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m)
            for (int k = (m == 1 ? 0 : 1); k < std::max(m, 1); ++k)
                if (m == 1 || std::gcd(m, k) == 1) grid.emplace_back(n, m, k);
    const auto entries = parallel_map(grid.size(), jobs, [&](std::size_t i) {
        const auto [n, m, k] = grid[i];
        return specialized_entry(n, m, k);
    });
    ordered_json doc;
    doc["table"] = "dim H_k(B_n; V_n(zeta)) over Q(zeta)";
    doc["entries"] = entries;
    return io::dump(doc);
}

std::string derived_fixture(unsigned jobs) {
    std::vector<std::pair<int, int>> grid;
    for (int n = 3; n <= 6; ++n)
        for (int d = 2; d <= 6; ++d) grid.emplace_back(n, d);
    const auto entries =
        parallel_map(grid.size(), jobs, [&](std::size_t i) { return derived_entry(grid[i].first, grid[i].second); });
    ordered_json doc;
    doc["table"] = "monodromy cohomology and total-space Betti numbers";
    doc["entries"] = entries;
    return io::dump(doc);
}

std::string count_fixture(unsigned jobs) {
    ordered_json entries = ordered_json::array();
    for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U})
        for (int n = 1; n <= 6; ++n)
            for (unsigned d = 1; d <= 6; ++d) {
                if (std::gcd(d, q) != 1) continue;
                const auto r = total_and_average(n, d, q, jobs);
                ordered_json j = io::count_report(r);
                if (n >= 2) {
                    const auto v = verify_report(r);
                    j["expected"] = io::rational(v.expected);
                    j["pass"] = v.pass;
                }
                entries.push_back(j);
            }
    ordered_json doc;
    doc["table"] = "point counts on y^d = f(x) over square-free monic f";
    doc["entries"] = entries;
    return io::dump(doc);
}

std::string moments_fixture(unsigned jobs) {
    ordered_json entries = ordered_json::array();
    for (unsigned q : {3U, 4U, 5U, 7U})
        for (int n = 2; n <= 5; ++n)
            for (unsigned d = 2; d <= 4; ++d) {
                if (std::gcd(d, q) != 1) continue;
                entries.push_back(io::moment_report(moments(n, d, q, 4, jobs)));
            }
    ordered_json doc;
    doc["table"] = "moments of |X_f(F_q)|";
    doc["entries"] = entries;
    return io::dump(doc);
}

unsigned env_unsigned(const char* name, unsigned fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != std::string(v).size() || x < 0) throw std::invalid_argument(name);
        return static_cast<unsigned>(x);
    } catch (const std::exception&) {
        throw UsageError(std::string(name) + " must be a non-negative integer");
    }
}

}  // namespace

std::vector<int> Range::values() const {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

Range parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad range '" + text + "'");
        }
        if (pos != s.size()) throw std::invalid_argument("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = to_int(text);
    } else {
        r.lo = to_int(text.substr(0, dots));
        r.hi = to_int(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

std::pair<int, int> parse_zeta(const std::string& text) {
    const auto slash = text.find('/');
    int m = 0, k = 1;
    try {
        std::size_t pos = 0;
        const std::string ms = text.substr(0, slash);
        m = std::stoi(ms, &pos);
        if (pos != ms.size()) throw std::invalid_argument(text);
        if (slash != std::string::npos) {
            const std::string ks = text.substr(slash + 1);
            k = std::stoi(ks, &pos);
            if (pos != ks.size()) throw std::invalid_argument(text);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad --zeta '" + text + "', expected M/K");
    }
    if (m < 1) throw std::invalid_argument("--zeta order must be positive (zeta = 0 is not a root of unity)");
    return {m, k};
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    ParseResult result;
    RunConfig& c = result.config;
    CLI::App app{"Twisted homology of braid groups and point counts on superelliptic curves"};
    app.require_subcommand(1);
    std::string q = "3", n = "3", d = "2", zeta, jobs, fixtures;

    auto grid_options = [&](CLI::App* sub) {
        sub->add_option("--q", q, "field orders A..B (non prime powers are skipped)");
        sub->add_option("--n", n, "polynomial degrees A..B");
        sub->add_option("--d", d, "exponents A..B (gcd(d, q) != 1 is skipped)");
        sub->add_option("--format", c.format, "json or csv");
        sub->add_option("--jobs", jobs, "worker threads (0 = all cores)");
        sub->add_option("--out", c.out, "write the report to a file");
    };
    auto count = app.add_subcommand("count", "point counts over all square-free f");
    grid_options(count);
    count->add_flag("--dump", c.dump, "include per-polynomial counts");
    auto verify = app.add_subcommand("verify", "check the expected-value identities");
    grid_options(verify);
    auto mom = app.add_subcommand("moments", "exact moments of the point count");
    grid_options(mom);
    mom->add_option("--m", c.max_moment, "highest moment");

    auto burau = app.add_subcommand("burau", "reduced Burau matrix of a braid word");
    burau->add_option("--n", n, "number of strands");
    burau->add_option("--word", c.word, "signed generator indices, e.g. \"1 2 -1\"");
    burau->add_option("--zeta", zeta, "also specialise t to zeta_M^K");
    burau->add_flag("--cover", c.cover, "recompute through the infinite cyclic cover");
    burau->add_option("--format", c.format, "json");
    burau->add_option("--out", c.out, "write the report to a file");

    auto homology_options = [&](CLI::App* sub) {
        sub->add_option("--group", c.group, "braid or typeB");
        sub->add_option("--system", c.system, "braid: burau|trivial, typeB: rank1|trivial");
        sub->add_option("--n", n, "strands A..B");
        sub->add_option("--zeta", zeta, "specialise t to zeta_M^K");
        sub->add_option("--format", c.format, "json");
        sub->add_option("--jobs", jobs, "worker threads (0 = all cores)");
        sub->add_option("--out", c.out, "write the report to a file");
    };
    auto hom = app.add_subcommand("homology", "twisted homology tables");
    homology_options(hom);
    auto* d_opt = hom->add_option("--d", d, "cover degrees A..B: report monodromy and total-space tables");
    auto exp = app.add_subcommand("salvetti-export", "dump the boundary matrices of the complex");
    homology_options(exp);

    auto fix = app.add_subcommand("fixtures", "regenerate the regression fixtures");
    fix->add_option("--fixtures", fixtures, "fixture directory");
    fix->add_flag("--force", c.force, "overwrite existing files");
    fix->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? kPass : kUsage;
        return result;
    }

    try {
        c.command = app.get_subcommands().front()->get_name();
        c.q = parse_range(q);
        c.n = parse_range(n);
        c.d = parse_range(d);
        c.d_given = d_opt->count() > 0;
        if (!zeta.empty()) c.zeta = parse_zeta(zeta);
        c.jobs = env_unsigned("BH_JOBS", 0);
        if (!jobs.empty()) {
            std::size_t pos = 0;
            const long v = std::stol(jobs, &pos);
            if (pos != jobs.size() || v < 0) throw std::invalid_argument("--jobs must be a non-negative integer");
            c.jobs = static_cast<unsigned>(v);
        }
        if (const char* env = std::getenv("BH_FIXTURES"); env && *env) c.fixtures = env;
        if (!fixtures.empty()) c.fixtures = fixtures;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n" << app.help();
        result.exit_code = kUsage;
    }
    return result;
}

std::map<std::string, std::string> fixture_contents(unsigned jobs) {
    std::map<std::string, std::string> files;
    files["burau_homology.json"] = burau_fixture(jobs);
    files["typeb_rank1.json"] = typeb_fixture(jobs);
    files["specialized_dims.json"] = specialized_fixture(jobs);
    files["derived_tables.json"] = derived_fixture(jobs);
    files["count_grid.json"] = count_fixture(jobs);
    files["moments.json"] = moments_fixture(jobs);
    return files;
}

int freeze_fixtures(const RunConfig& config, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    const fs::path dir(config.fixtures);
    const auto files = fixture_contents(config.jobs);
    if (!config.force)
        for (const auto& [name, text] : files)
            if (fs::exists(dir / name)) {
                err << "error: " << (dir / name).string() << " exists; pass --force to overwrite\n";
                return kUsage;
            }
    fs::create_directories(dir);
    for (const auto& [name, text] : files) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << (dir / name).string() << "\n";
            return kFail;
        }
        f << text;
        out << "wrote " << (dir / name).string() << "\n";
    }
    return kPass;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "count") return run_count(config, out, err);
        if (config.command == "verify") return run_verify(config, out, err);
        if (config.command == "moments") return run_moments(config, out, err);
        if (config.command == "burau") return run_burau(config, out);
        if (config.command == "homology") return run_homology(config, out);
        if (config.command == "salvetti-export") return run_export(config, out);
        if (config.command == "fixtures") return freeze_fixtures(config, out, err);
        err << "error: unknown command '" << config.command << "'\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

int main(int argc, char** argv) {
    ParseResult parsed;
    try {
        parsed = parse_args(argc, argv, std::cout, std::cerr);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (parsed.exit_code) return *parsed.exit_code;
    return run(parsed.config, std::cout, std::cerr);
}

}  // namespace bh::cli
