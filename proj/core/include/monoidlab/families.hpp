// Generators for the word and identity families of the modular-element
// classification: a-words, the identity basis, variety generators and the
// witness words used in the Step 1-3 arguments.

#ifndef MONOIDLAB_FAMILIES_HPP_
#define MONOIDLAB_FAMILIES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoidlab/equational.hpp"
#include "monoidlab/words.hpp"

namespace monoidlab::families {

  //! A permutation of {1, ..., n} in one-line notation: images[i - 1] is iρ.
  class Permutation {
   public:
    //! Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    //! Whitespace separated one-line images such as `2 1`.
    static Permutation parse(std::string_view text);
    //! All of S_n in lexicographic order of their one-line form.
    static std::vector<Permutation> all(std::size_t n);

    [[nodiscard]] std::size_t degree() const noexcept {
      return images_.size();
    }
    //! iρ for 1 <= i <= degree().
    [[nodiscard]] std::size_t operator()(std::size_t i) const {
      return images_.at(i - 1);
    }
    [[nodiscard]] std::vector<std::size_t> const& images() const noexcept {
      return images_;
    }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<std::size_t> images_;
  };

  //! x t1 x t2 x ... tn x.
  [[nodiscard]] Word chain_word(std::size_t n);

  //! (prod_{i<=n} z_i t_i) x (prod_{i<=n+m} z_{iρ}) x (prod_{n<i<=n+m} t_i z_i).
  [[nodiscard]] Word a_word(std::size_t n, std::size_t m, Permutation const& rho);
  //! Same with the two x replaced by x^2 after the middle product.
  [[nodiscard]] Word a_prime_word(std::size_t n, std::size_t m, Permutation const& rho);

  //! x^2 = x^3, x^2y = yx^2 and the four two-block swaps.
  [[nodiscard]] std::vector<Identity> theorem_basis_fixed();

  //! theorem_basis_fixed() followed by a_{n,m}[ρ] = a'_{n,m}[ρ] for all
  //! n <= n_max, m <= m_max and ρ in S_{n+m}.
  [[nodiscard]] std::vector<Identity> theorem_ii_basis(std::size_t n_max,
                                                       std::size_t m_max);

  enum class VarietyKind { empty, one, x, xy, chain, chain_with_zigzag };

  //! A finite member of the list of modular varieties; the two infinite
  //! families are represented only by their truncations at a given n.
  struct VarietySpec {
    VarietyKind kind = VarietyKind::empty;
    std::size_t n    = 0;

    //! `empty`, `one`, `x`, `xy`, `chain:N`, `chain-zigzag:N`.
    static VarietySpec parse(std::string_view text);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(VarietySpec const&, VarietySpec const&) = default;
  };

  //! The finite W with M(W) generating the variety.
  [[nodiscard]] std::vector<Word> variety_generators(VarietySpec const& spec);

  //! Every finite spec with chain length at most n_max, in list order.
  [[nodiscard]] std::vector<VarietySpec> finite_varieties(std::size_t n_max);

  //! The pair u, v whose one-step closure is examined in Step 1.
  [[nodiscard]] std::pair<Word, Word> step1_words();
  //! The analogous pair of Step 3.
  [[nodiscard]] std::pair<Word, Word> step3_words();

  struct Step2Construction {
    Word              p;
    Word              r;
    std::vector<Word> x_generators;
    Word              u;
    Word              a;
    Word              a_prime;
    Word              u_prime;
    //! True in the branch 1 <= 1ρ <= n.
    bool              low_branch = true;
  };

  //! How the blocks n < i <= n + m of r are ordered. `consistent` uses
  //! t_i z_i as in the tail of a_{n,m}[ρ], so that deleting y1, y2, s1, s2
  //! and z from u gives a_{n,m}[ρ]; `as_printed` uses z_i t_i.
  enum class Step2Reading { consistent, as_printed };

  [[nodiscard]] Step2Construction step2_construction(
      std::size_t        n,
      std::size_t        m,
      Permutation const& rho,
      Step2Reading       reading = Step2Reading::consistent);

  //! x (prod_{i<=n} t_i x) = x^2 (prod_{i<=n} t_i).
  [[nodiscard]] Identity block_identity_one_letter(std::size_t n);

  //! (prod_{i<=k} a_i t_i) xy (prod_{k<i<=k+l} t_i a_i) = same with yx, where
  //! a_i = assignment[i - 1] ranges over x and y. Throws if k + l > 0 and the
  //! assignment does not use both x and y, or has the wrong length.
  [[nodiscard]] Identity block_identity_two_letters(std::size_t                k,
                                                    std::size_t                l,
                                                    std::vector<Letter> const& assignment);

}  // namespace monoidlab::families

#endif  // MONOIDLAB_FAMILIES_HPP_
