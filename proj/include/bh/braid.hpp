#pragma once

#include <string>
#include <vector>

#include "bh/matrix.hpp"

namespace bh {

/// A word in the Artin generators sigma_1..sigma_{n-1}; a negative letter is an inverse.
struct BraidWord {
    int n = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> word);

    /// Accepts whitespace or comma separated signed indices, e.g. "1 2 -1".
    static BraidWord parse(int strands, const std::string& text);
    BraidWord inverse() const;
    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// A freely reduced word in gamma_1..gamma_n.
class FreeWord {
   public:
    FreeWord() = default;
    FreeWord(int rank, const std::vector<int>& letters);
    static FreeWord generator(int rank, int i);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    friend bool operator==(const FreeWord&, const FreeWord&) = default;

    std::string to_string() const;

   private:
    int rank_ = 0;
    std::vector<int> letters_;
};

/// Endomorphism of F_n given by the images of the generators.
class FreeGroupEndo {
   public:
    FreeGroupEndo() = default;
    FreeGroupEndo(int rank, std::vector<FreeWord> images);
    static FreeGroupEndo identity(int rank);

    int rank() const { return rank_; }
    const std::vector<FreeWord>& images() const { return images_; }
    const FreeWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

    FreeWord apply(const FreeWord& w) const;
    /// (f.compose(g))(x) = f(g(x)).
    FreeGroupEndo compose(const FreeGroupEndo& g) const;
    friend bool operator==(const FreeGroupEndo&, const FreeGroupEndo&) = default;

   private:
    int rank_ = 0;
    std::vector<FreeWord> images_;
};

/// rho(sigma) as an (n-1) x (n-1) matrix over Q[t, t^-1]; acts on column vectors.
struct BurauMatrix {
    int n = 2;
    LaurentMatrix matrix;
    friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;
};

BurauMatrix burau_generator(int n, int i);
BurauMatrix burau_generator_inverse(int n, int i);
/// Ordered product of generator matrices; the empty word gives the identity.
BurauMatrix burau_word(const BraidWord& w);
BurauMatrix burau_identity(int n);

/// The half-twist automorphism of F_n: gamma_i -> gamma_{i+1}, gamma_{i+1} -> gamma_{i+1}^-1 gamma_i gamma_{i+1}.
FreeGroupEndo sigma_action(int n, int i);
FreeGroupEndo sigma_inverse_action(int n, int i);
/// phi(w) = phi(letter_1) o phi(letter_2) o ...
FreeGroupEndo braid_action(const BraidWord& w);

/// Exponent sum; equals the total winding number of the loop.
int winding(const FreeWord& w);

/// Fox derivative d/d gamma_j, abelianized through gamma_i -> t.
LaurentPoly fox_derivative(const FreeWord& w, int j);

/// n x n matrix whose column j holds the Fox derivatives of the image of gamma_j.
LaurentMatrix fox_jacobian(const FreeGroupEndo& f);

/// rho(sigma_i) recomputed from the action on H_1 of the infinite cyclic cover,
/// modelled as ker(sum: L^n -> L) with basis v_j = delta_j - delta_{j+1}. The returned
/// matrix is the contragredient of that action, which is the convention under
/// which it agrees with the classical matrices.
BurauMatrix burau_via_cover(int n, int i);
/// Same construction for an arbitrary braid word.
BurauMatrix burau_via_cover(const BraidWord& w);

/// dim over Q(zeta) of H_1(F_n; Q(zeta)) with every generator acting by zeta = zeta_m^k.
int free_group_twisted_h1_dim(int n, int m, int k);

/// Checks every defining relation of the type-B Artin group on the images
/// eps_i -> (1, sigma_i), eps_n -> (gamma_n, 1) in F_n x| B_n.
bool verify_typeB_embedding(int n);

/// Entrywise substitution t -> zeta_m^k.
CyclotomicMatrix specialize(const LaurentMatrix& m, int conductor, int exponent);

}  // namespace bh
