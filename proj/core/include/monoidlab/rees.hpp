// The Rees quotient monoid M(W): nonzero elements are the factors of the words
// in W, and every product that is not such a factor collapses to zero.

#ifndef MONOIDLAB_REES_HPP_
#define MONOIDLAB_REES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "monoidlab/equational.hpp"
#include "monoidlab/verdict.hpp"
#include "monoidlab/words.hpp"

namespace monoidlab::rees {

  using ElementId = std::uint32_t;

  //! Either zero or a nonzero factor of W, kept as the literal word.
  class ReesElement {
   public:
    ReesElement() = default;  // zero
    explicit ReesElement(Word w) : word_(std::move(w)) {}

    static ReesElement zero() {
      return ReesElement();
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return !word_.has_value();
    }
    //! Precondition: !is_zero().
    [[nodiscard]] Word const& word() const {
      return *word_;
    }
    [[nodiscard]] std::string to_string() const {
      return word_ ? word_->to_string() : "0";
    }

    friend bool operator==(ReesElement const&, ReesElement const&) = default;

   private:
    std::optional<Word> word_;
  };

  using Assignment = std::map<Letter, ReesElement>;

  struct Verdict {
    Outcome     outcome = Outcome::unknown;
    Assignment  witness;  // set when outcome == fails
    SearchStats stats;
  };

  class ReesMonoid {
   public:
    //! M(W) for a finite set W. M(∅) is the trivial monoid, in which the
    //! identity and zero coincide.
    static ReesMonoid build(std::span<Word const> generators);

    [[nodiscard]] std::span<Word const> generators() const noexcept {
      return generators_;
    }
    //! Number of elements including zero.
    [[nodiscard]] std::size_t size() const noexcept {
      return factors_.size() + 1;
    }
    [[nodiscard]] std::size_t nonzero_count() const noexcept {
      return factors_.size();
    }
    [[nodiscard]] ElementId zero_id() const noexcept {
      return static_cast<ElementId>(factors_.size());
    }
    //! The empty word, or zero in the trivial monoid.
    [[nodiscard]] ElementId identity_id() const noexcept {
      return factors_.empty() ? zero_id() : 0;
    }
    [[nodiscard]] bool is_zero(ElementId id) const noexcept {
      return id == zero_id();
    }

    //! Nonzero elements in shortlex order; id i is factors()[i].
    [[nodiscard]] std::span<Word const> factors() const noexcept {
      return factors_;
    }
    [[nodiscard]] std::optional<ElementId> find(Word const& w) const;
    [[nodiscard]] ReesElement              element(ElementId id) const;
    //! Throws std::invalid_argument for a word that is not a factor of W.
    [[nodiscard]] ElementId id_of(ReesElement const& e) const;

    [[nodiscard]] ElementId   multiply(ElementId a, ElementId b) const;
    [[nodiscard]] ReesElement multiply(ReesElement const& a,
                                       ReesElement const& b) const;

    //! Product of the images of the letters of `w`. Throws
    //! std::invalid_argument if a letter of `w` has no image.
    [[nodiscard]] ReesElement evaluate(Word const& w, Assignment const& psi) const;

    [[nodiscard]] bool is_associative() const;

   private:
    ReesMonoid() = default;

    // Extends element `id` on the right by alphabet letter `letter`.
    [[nodiscard]] ElementId extend(ElementId id, std::size_t letter) const {
      return extend_[id * alphabet_.size() + letter];
    }
    [[nodiscard]] std::optional<std::size_t> letter_index(Letter x) const;

    std::vector<Word>                                    generators_;
    std::vector<Word>                                    factors_;
    std::unordered_map<Word, ElementId, WordHash>        index_;
    std::vector<Letter>                                  alphabet_;
    std::vector<ElementId>                               extend_;
    std::vector<std::vector<std::uint16_t>>              factor_codes_;
  };

  //! Exact decision by matching: `s = t` holds iff for every nonzero factor m
  //! and every match of s onto m, the matched substitution sends t to m (and
  //! symmetrically). Letters of the other side that are unconstrained by the
  //! match can be sent to zero, so any such letter yields a failure.
  //! `options.budget` bounds the number of matches visited.
  [[nodiscard]] Verdict satisfies(ReesMonoid const&   m,
                                  Identity const&     id,
                                  CheckOptions const& options = {});

  //! Cross-check by enumerating every assignment of the identity's letters
  //! into M. Returns unknown when |M|^letters exceeds `budget`.
  [[nodiscard]] Verdict satisfies_naive(ReesMonoid const& m,
                                        Identity const&   id,
                                        std::uint64_t     budget = 10'000'000);

}  // namespace monoidlab::rees

#endif  // MONOIDLAB_REES_HPP_
