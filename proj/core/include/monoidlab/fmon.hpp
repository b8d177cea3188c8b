// Finite monoids given by multiplication tables, identity checking by
// exhaustive substitution enumeration, truncated equational theories and
// bounded isoterm search.

#ifndef MONOIDLAB_FMON_HPP_
#define MONOIDLAB_FMON_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "monoidlab/equational.hpp"
#include "monoidlab/rees.hpp"
#include "monoidlab/verdict.hpp"
#include "monoidlab/words.hpp"

namespace monoidlab::fmon {

  using ElementId = std::uint32_t;

  class FiniteMonoid {
   public:
    //! Validates closure and the two-sided identity; associativity is checked
    //! separately by \ref is_associative. Throws std::invalid_argument.
    FiniteMonoid(std::vector<std::string> names,
                 ElementId                identity,
                 std::vector<ElementId>   table);

    [[nodiscard]] std::size_t size() const noexcept {
      return names_.size();
    }
    [[nodiscard]] ElementId identity() const noexcept {
      return identity_;
    }
    [[nodiscard]] ElementId multiply(ElementId a, ElementId b) const noexcept {
      return table_[static_cast<std::size_t>(a) * names_.size() + b];
    }
    [[nodiscard]] std::string const& name(ElementId a) const {
      return names_.at(a);
    }
    [[nodiscard]] std::span<std::string const> names() const noexcept {
      return names_;
    }
    [[nodiscard]] std::span<ElementId const> table() const noexcept {
      return table_;
    }
    [[nodiscard]] bool is_associative() const;

   private:
    std::vector<std::string> names_;
    ElementId                identity_;
    std::vector<ElementId>   table_;
  };

  //! The multiplication table of M(W); element ids agree with the ReesMonoid.
  [[nodiscard]] FiniteMonoid from_rees(rees::ReesMonoid const& m);

  //! Componentwise product; (a, b) has id a * |B| + b. Throws
  //! std::length_error if |A| * |B| exceeds `max_size`.
  [[nodiscard]] FiniteMonoid direct_product(FiniteMonoid const& a,
                                            FiniteMonoid const& b,
                                            std::size_t max_size = 1u << 14);

  using Assignment = std::map<Letter, ElementId>;

  struct Verdict {
    Outcome     outcome = Outcome::unknown;
    Assignment  witness;  // lexicographically least failing assignment
    SearchStats stats;
  };

  //! Checks every assignment of the identity's letters into M, in
  //! lexicographic order of the letters sorted by first occurrence, reusing
  //! prefix products between consecutive assignments. Unknown when
  //! |M|^letters exceeds `options.budget`.
  [[nodiscard]] Verdict satisfies(FiniteMonoid const& m,
                                  Identity const&     id,
                                  CheckOptions const& options = {});

  struct TheoryParams {
    std::size_t max_length  = 6;
    std::size_t max_letters = 4;

    friend bool operator==(TheoryParams const&, TheoryParams const&) = default;
  };

  //! The nontrivial canonical identities with both sides of length at most
  //! `max_length` over at most `max_letters` letters that hold in a monoid.
  struct TruncatedTheory {
    TheoryParams       params;
    std::set<Identity> identities;
    //! False if the budget forced a shorter length; all identities up to
    //! `complete_length` are then still present.
    bool        complete        = true;
    std::size_t complete_length = 0;
  };

  //! Words of length <= L over k letters are grouped by their value under all
  //! |M|^k assignments; identities are the pairs inside each group. `budget`
  //! bounds words * |M|^k evaluations plus the number of pairs.
  [[nodiscard]] TruncatedTheory truncated_theory(FiniteMonoid const& m,
                                                 TheoryParams        params,
                                                 std::uint64_t budget = 2'000'000'000);

  //! Throws std::invalid_argument if the parameters differ.
  [[nodiscard]] TruncatedTheory theory_intersect(TruncatedTheory const& a,
                                                 TruncatedTheory const& b);
  [[nodiscard]] bool theory_leq(TruncatedTheory const& a,
                                TruncatedTheory const& b);

  enum class IsotermOutcome { isoterm_up_to, not_isoterm, unknown };

  struct IsotermVerdict {
    IsotermOutcome      outcome = IsotermOutcome::unknown;
    std::size_t         bound   = 0;
    std::optional<Word> witness;  // v != u with M satisfying u = v
    SearchStats         stats;
  };

  //! Searches every word v != u of length <= `bound` over the letters of u
  //! plus `fresh_letters` new letters, stopping at the first (shortlex) v with
  //! M satisfying u = v. `isoterm_up_to` is relative to the bound only.
  [[nodiscard]] IsotermVerdict isoterm_check(FiniteMonoid const& m,
                                             Word const&         u,
                                             std::size_t         bound,
                                             std::size_t         fresh_letters = 1,
                                             CheckOptions const& options = {});

}  // namespace monoidlab::fmon

#endif  // MONOIDLAB_FMON_HPP_
