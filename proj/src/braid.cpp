#include "bh/braid.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bh {

BraidWord::BraidWord(int strands, std::vector<int> word) : n(strands), letters(std::move(word)) {
    if (n < 1) throw std::invalid_argument("BraidWord: need at least one strand");
    for (int l : letters)
        if (l == 0 || std::abs(l) > n - 1)
            throw std::invalid_argument("BraidWord: generator index " + std::to_string(l) + " out of range for B_" +
                                        std::to_string(n));
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("BraidWord: bad letter '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("BraidWord: bad letter '" + tok + "'");
        letters.push_back(v);
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> inv(letters.rbegin(), letters.rend());
    for (int& l : inv) l = -l;
    return BraidWord(n, std::move(inv));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.n != b.n) throw std::invalid_argument("BraidWord: strand counts differ");
    std::vector<int> w = a.letters;
    w.insert(w.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.n, std::move(w));
}

// ---------------------------------------------------------------------------

FreeWord::FreeWord(int rank, const std::vector<int>& letters) : rank_(rank) {
    for (int l : letters) {
        if (l == 0 || std::abs(l) > rank) throw std::invalid_argument("FreeWord: letter out of range");
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

FreeWord FreeWord::generator(int rank, int i) { return FreeWord(rank, {i}); }

FreeWord FreeWord::inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& l : inv) l = -l;
    return FreeWord(rank_, inv);
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("FreeWord: ranks differ");
    std::vector<int> w = a.letters_;
    w.insert(w.end(), b.letters_.begin(), b.letters_.end());
    return FreeWord(a.rank_, w);
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << ' ';
        out << 'g' << std::abs(letters_[i]);
        if (letters_[i] < 0) out << "^-1";
    }
    return out.str();
}

FreeGroupEndo::FreeGroupEndo(int rank, std::vector<FreeWord> images) : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank_) throw std::invalid_argument("FreeGroupEndo: wrong image count");
    for (const auto& w : images_)
        if (w.rank() != rank_) throw std::invalid_argument("FreeGroupEndo: image rank mismatch");
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
    std::vector<FreeWord> im;
    for (int i = 1; i <= rank; ++i) im.push_back(FreeWord::generator(rank, i));
    return FreeGroupEndo(rank, std::move(im));
}

FreeWord FreeGroupEndo::apply(const FreeWord& w) const {
    std::vector<int> out;
    for (int l : w.letters()) {
        const FreeWord& img = image(std::abs(l));
        if (l > 0)
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        else
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(-*it);
    }
    return FreeWord(rank_, out);
}

FreeGroupEndo FreeGroupEndo::compose(const FreeGroupEndo& g) const {
    std::vector<FreeWord> im;
    for (const auto& w : g.images()) im.push_back(apply(w));
    return FreeGroupEndo(rank_, std::move(im));
}

// ---------------------------------------------------------------------------

BurauMatrix burau_identity(int n) {
    const auto dim = static_cast<std::size_t>(n - 1);
    return {n, LaurentMatrix::identity(dim, LaurentPoly::zero(), LaurentPoly::one())};
}

namespace {

void check_generator(int n, int i) {
    if (n < 2 || i < 1 || i > n - 1)
        throw std::invalid_argument("burau_generator: sigma_" + std::to_string(i) + " is not a generator of B_" +
                                    std::to_string(n));
}

}  // namespace

BurauMatrix burau_generator(int n, int i) {
    check_generator(n, i);
    BurauMatrix b = burau_identity(n);
    // Only column i differs from the identity: t above, -t on, 1 below the diagonal.
    const auto c = static_cast<std::size_t>(i - 1);
    b.matrix(c, c) = -LaurentPoly::t();
    if (i > 1) b.matrix(c - 1, c) = LaurentPoly::t();
    if (i < n - 1) b.matrix(c + 1, c) = LaurentPoly::one();
    return b;
}

BurauMatrix burau_generator_inverse(int n, int i) {
    check_generator(n, i);
    BurauMatrix b = burau_identity(n);
    const auto c = static_cast<std::size_t>(i - 1);
    b.matrix(c, c) = -LaurentPoly::t(-1);
    if (i > 1) b.matrix(c - 1, c) = LaurentPoly::one();
    if (i < n - 1) b.matrix(c + 1, c) = LaurentPoly::t(-1);
    return b;
}

BurauMatrix burau_word(const BraidWord& w) {
    BurauMatrix acc = burau_identity(w.n);
    for (int l : w.letters) {
        const BurauMatrix g = l > 0 ? burau_generator(w.n, l) : burau_generator_inverse(w.n, -l);
        acc.matrix = acc.matrix * g.matrix;
    }
    return acc;
}

FreeGroupEndo sigma_action(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("sigma_action: index out of range");
    FreeGroupEndo id = FreeGroupEndo::identity(n);
    std::vector<FreeWord> im = id.images();
    im[static_cast<std::size_t>(i - 1)] = FreeWord(n, {i + 1});
    im[static_cast<std::size_t>(i)] = FreeWord(n, {-(i + 1), i, i + 1});
    return FreeGroupEndo(n, std::move(im));
}

FreeGroupEndo sigma_inverse_action(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("sigma_inverse_action: index out of range");
    FreeGroupEndo id = FreeGroupEndo::identity(n);
    std::vector<FreeWord> im = id.images();
    im[static_cast<std::size_t>(i - 1)] = FreeWord(n, {i, i + 1, -i});
    im[static_cast<std::size_t>(i)] = FreeWord(n, {i});
    return FreeGroupEndo(n, std::move(im));
}

FreeGroupEndo braid_action(const BraidWord& w) {
    FreeGroupEndo acc = FreeGroupEndo::identity(w.n);
    for (int l : w.letters) acc = acc.compose(l > 0 ? sigma_action(w.n, l) : sigma_inverse_action(w.n, -l));
    return acc;
}

int winding(const FreeWord& w) {
    int s = 0;
    for (int l : w.letters()) s += l > 0 ? 1 : -1;
    return s;
}

LaurentPoly fox_derivative(const FreeWord& w, int j) {
    if (j < 1 || j > w.rank()) throw std::invalid_argument("fox_derivative: generator index out of range");
    LaurentPoly acc;
    int prefix = 0;
    for (int l : w.letters()) {
        if (l == j) acc += LaurentPoly::t(prefix);
        if (l == -j) acc -= LaurentPoly::t(prefix - 1);
        prefix += l > 0 ? 1 : -1;
    }
    return acc;
}

LaurentMatrix fox_jacobian(const FreeGroupEndo& f) {
    const auto n = static_cast<std::size_t>(f.rank());
    LaurentMatrix jac(n, n);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row)
            jac(row, col) = fox_derivative(f.images()[col], static_cast<int>(row) + 1);
    return jac;
}

namespace {

// Restricts a Fox Jacobian to ker(sum) and transposes it.
BurauMatrix cover_matrix_from_inverse_action(int n, const FreeGroupEndo& inverse_action) {
    const LaurentMatrix jac = fox_jacobian(inverse_action);
    const auto dim = static_cast<std::size_t>(n - 1);
    LaurentMatrix restricted(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        // image of v_j = column j minus column j+1
        std::vector<LaurentPoly> x(static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < x.size(); ++r) x[r] = jac(r, j) - jac(r, j + 1);
        // coordinates in the basis v_1..v_{n-1} are the partial sums
        LaurentPoly partial;
        for (std::size_t l = 0; l < dim; ++l) {
            partial += x[l];
            restricted(l, j) = partial;
        }
        if (!(partial + x.back()).is_zero())
            throw std::logic_error("burau_via_cover: image left the augmentation kernel");
    }
    return {n, restricted.transpose()};
}

}  // namespace

BurauMatrix burau_via_cover(int n, int i) {
    check_generator(n, i);
    return cover_matrix_from_inverse_action(n, sigma_inverse_action(n, i));
}

BurauMatrix burau_via_cover(const BraidWord& w) {
    if (w.n < 2) throw std::invalid_argument("burau_via_cover: need n >= 2");
    return cover_matrix_from_inverse_action(w.n, braid_action(w.inverse()));
}

int free_group_twisted_h1_dim(int n, int m, int k) {
    if (n < 1) throw std::invalid_argument("free_group_twisted_h1_dim: rank must be positive");
    // C_1 = Q(zeta)^n -> C_0 = Q(zeta), every edge maps to zeta - 1; there are no 2-cells.
    CyclotomicMatrix boundary(1, static_cast<std::size_t>(n), CyclotomicNumber(m));
    CyclotomicNumber z = CyclotomicNumber::zeta(m, k) - CyclotomicNumber(m, BigRational(1));
    for (std::size_t c = 0; c < boundary.cols(); ++c) boundary(0, c) = z;
    return n - static_cast<int>(field_rank(boundary));
}

namespace {

struct SemidirectElement {
    FreeWord word;
    FreeGroupEndo action;
    friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b) {
    return {a.word * a.action.apply(b.word), a.action.compose(b.action)};
}

SemidirectElement product(const std::vector<SemidirectElement>& gens, const std::vector<int>& word, int n) {
    SemidirectElement acc{FreeWord(n, {}), FreeGroupEndo::identity(n)};
    for (int g : word) acc = multiply(acc, gens[static_cast<std::size_t>(g - 1)]);
    return acc;
}

}  // namespace

bool verify_typeB_embedding(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("verify_typeB_embedding: n must be in 2..6");
    std::vector<SemidirectElement> eps;
    for (int i = 1; i < n; ++i) eps.push_back({FreeWord(n, {}), sigma_action(n, i)});
    eps.push_back({FreeWord::generator(n, n), FreeGroupEndo::identity(n)});

    auto holds = [&](const std::vector<int>& lhs, const std::vector<int>& rhs) {
        return product(eps, lhs, n) == product(eps, rhs, n);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!holds({i, j}, {j, i})) return false;
    for (int i = 1; i + 1 < n; ++i)
        if (!holds({i, i + 1, i}, {i + 1, i, i + 1})) return false;
    return holds({n - 1, n, n - 1, n}, {n, n - 1, n, n - 1});
}

CyclotomicMatrix specialize(const LaurentMatrix& m, int conductor, int exponent) {
    return m.map([&](const LaurentPoly& p) { return eval_at_root(p, conductor, exponent); });
}

}  // namespace bh
