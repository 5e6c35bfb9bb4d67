#include "bh/serialize.hpp"

namespace bh::io {

ordered_json integer(const mpz_class& z) {
    if (auto v = to_int64(z)) return *v;
    return z.get_str();
}

ordered_json rational(const BigRational& r) {
    ordered_json j;
    j["num"] = integer(r.numerator());
    j["den"] = integer(r.denominator());
    return j;
}

ordered_json rational_pair(const BigRational& r) {
    return ordered_json::array({integer(r.numerator()), integer(r.denominator())});
}

ordered_json laurent(const LaurentPoly& p) {
    ordered_json j;
    j["lowest_exp"] = p.lowest_exp();
    ordered_json c = ordered_json::array();
    for (const auto& x : p.coeffs()) c.push_back(rational_pair(x));
    j["coeffs"] = c;
    return j;
}

ordered_json cyclotomic(const CyclotomicNumber& x) {
    ordered_json j;
    j["conductor"] = x.conductor();
    ordered_json c = ordered_json::array();
    for (const auto& v : x.coeffs()) c.push_back(rational_pair(v));
    j["coeffs"] = c;
    return j;
}

namespace {

template <class T, class F>
ordered_json matrix_of(const Matrix<T>& m, F entry) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry(m(r, c)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

}  // namespace

ordered_json matrix(const LaurentMatrix& m) { return matrix_of(m, [](const LaurentPoly& p) { return laurent(p); }); }
ordered_json matrix(const RationalMatrix& m) {
    return matrix_of(m, [](const BigRational& r) { return rational_pair(r); });
}
ordered_json matrix(const CyclotomicMatrix& m) {
    return matrix_of(m, [](const CyclotomicNumber& c) { return cyclotomic(c); });
}

ordered_json homology_degrees(const HomologySummary& h) {
    ordered_json out = ordered_json::array();
    for (const auto& d : h.degrees) {
        ordered_json j;
        j["k"] = d.k;
        if (h.over_field) {
            j["dim"] = d.free_rank;
        } else {
            j["free_rank"] = d.free_rank;
            ordered_json f = ordered_json::array(), fl = ordered_json::array();
            for (const auto& p : d.factors) {
                f.push_back(p.to_string());
                fl.push_back(laurent(p));
            }
            j["factors"] = f;
            j["factors_laurent"] = fl;
        }
        out.push_back(j);
    }
    return out;
}

ordered_json dims(const std::vector<std::size_t>& d) {
    ordered_json out = ordered_json::array();
    for (std::size_t x : d) out.push_back(x);
    return out;
}

ordered_json count_report(const PointCountReport& r) {
    ordered_json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["d"] = r.d;
    j["squarefree_count"] = r.squarefree_count;
    j["total"] = integer(r.total);
    j["average"] = rational(r.average);
    j["points_at_infinity"] = points_at_infinity(r.n, r.d, r.q);
    j["weil"] = weil_sanity(r);
    ordered_json h = ordered_json::array();
    for (const auto& [c, mult] : r.histogram) h.push_back(ordered_json::array({c, mult}));
    j["histogram"] = h;
    return j;
}

ordered_json verification(const VerificationResult& v) {
    ordered_json j;
    j["q"] = v.q;
    j["n"] = v.n;
    j["d"] = v.d;
    j["identity"] = v.identity;
    j["expected"] = rational(v.expected);
    j["observed"] = rational(v.observed);
    j["pass"] = v.pass;
    return j;
}

ordered_json moment_report(const MomentReport& m) {
    ordered_json j;
    j["q"] = m.q;
    j["n"] = m.n;
    j["d"] = m.d;
    ordered_json list = ordered_json::array();
    for (const auto& [k, v] : m.moments) {
        ordered_json e;
        e["m"] = k;
        e["value"] = rational(v);
        list.push_back(e);
    }
    j["moments"] = list;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace bh::io
