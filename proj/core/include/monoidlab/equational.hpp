// Identities, substitutions, pattern matching and bounded equational
// deduction over the free monoid.

#ifndef MONOIDLAB_EQUATIONAL_HPP_
#define MONOIDLAB_EQUATIONAL_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monoidlab/words.hpp"

namespace monoidlab {

  //! An identity `lhs = rhs`. The pair is unordered semantically; use
  //! \ref canonical to obtain the representative used for deduplication.
  struct Identity {
    Word lhs;
    Word rhs;
    bool is_canonical = false;

    Identity() = default;
    Identity(Word l, Word r) : lhs(std::move(l)), rhs(std::move(r)) {}

    //! Accepts `u = v` and `u ≈ v`.
    static Identity parse(std::string_view text);

    [[nodiscard]] bool trivial() const {
      return lhs == rhs;
    }
    [[nodiscard]] LetterSet   alphabet() const;
    [[nodiscard]] std::string to_string() const;

    //! Joint renaming of both sides by first occurrence, choosing the side
    //! order that gives the shortlex-least pair. Invariant under swapping the
    //! sides and under any bijective renaming of letters.
    [[nodiscard]] Identity canonical() const;

    friend bool operator==(Identity const& a, Identity const& b) {
      return a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend std::strong_ordering operator<=>(Identity const& a,
                                            Identity const& b) {
      if (auto c = a.lhs <=> b.lhs; c != 0) {
        return c;
      }
      return a.rhs <=> b.rhs;
    }
  };

  //! Reads one identity per line; blank lines and `#` comments are skipped.
  std::vector<Identity> parse_identities(std::istream& in);

  //! A monoid endomorphism of the free monoid given by finitely many letter
  //! images; letters without an explicit image are fixed.
  class Substitution {
   public:
    Substitution() = default;
    explicit Substitution(std::map<Letter, Word> images)
        : images_(std::move(images)) {}

    void set(Letter x, Word image) {
      images_[x] = std::move(image);
    }
    [[nodiscard]] Word image(Letter x) const;
    [[nodiscard]] Word apply(Word const& w) const;

    [[nodiscard]] std::map<Letter, Word> const& images() const noexcept {
      return images_;
    }

    friend bool operator==(Substitution const&, Substitution const&) = default;

   private:
    std::map<Letter, Word> images_;
  };

  [[nodiscard]] inline Word apply(Substitution const& phi, Word const& w) {
    return phi.apply(w);
  }

  //! Position of a variable image inside a matched target.
  struct ImageSpan {
    std::uint32_t start  = 0;
    std::uint32_t length = 0;
  };

  //! Backtracking matcher for a fixed pattern word. Every letter of the
  //! pattern is a variable whose image may be any word, including the empty
  //! word, as long as all occurrences of a variable receive the same image.
  class PatternMatcher {
   public:
    explicit PatternMatcher(Word const& pattern);

    //! Distinct pattern letters in order of first occurrence.
    [[nodiscard]] std::span<Letter const> variables() const noexcept {
      return variables_;
    }
    [[nodiscard]] std::size_t pattern_length() const noexcept {
      return ids_.size();
    }

    //! Calls `visit(std::span<ImageSpan const>)` once per match of the whole
    //! pattern onto `target`, images indexed like \ref variables. Matches are
    //! produced with shorter images for earlier positions first. The visitor
    //! returns false to stop; the function returns false iff stopped.
    template <typename Visitor>
    bool for_each_match(std::span<Letter const> target, Visitor&& visit) const {
      State st;
      st.images.assign(variables_.size(), ImageSpan{});
      st.bound.assign(variables_.size(), false);
      return search(0, 0, st, target, visit);
    }

    //! Builds the substitution described by a set of images.
    [[nodiscard]] Substitution to_substitution(std::span<Letter const>    target,
                                               std::span<ImageSpan const> images) const;

   private:
    struct State {
      std::vector<ImageSpan> images;
      std::vector<bool>      bound;
    };

    std::size_t min_rest(std::size_t i, State const& st) const {
      std::size_t sum = 0;
      for (std::size_t j = i; j < ids_.size(); ++j) {
        if (st.bound[ids_[j]]) {
          sum += st.images[ids_[j]].length;
        }
      }
      return sum;
    }

    template <typename Visitor>
    bool search(std::size_t             i,
                std::size_t             pos,
                State&                  st,
                std::span<Letter const> target,
                Visitor&                visit) const {
      if (i == ids_.size()) {
        if (pos != target.size()) {
          return true;
        }
        return visit(std::span<ImageSpan const>(st.images));
      }
      std::size_t var = ids_[i];
      if (st.bound[var]) {
        ImageSpan img = st.images[var];
        if (pos + img.length > target.size()) {
          return true;
        }
        for (std::uint32_t k = 0; k < img.length; ++k) {
          if (target[pos + k] != target[img.start + k]) {
            return true;
          }
        }
        return search(i + 1, pos + img.length, st, target, visit);
      }
      std::size_t remaining = target.size() - pos;
      std::size_t rest      = min_rest(i + 1, st);
      if (rest > remaining) {
        return true;
      }
      std::size_t copies = 1 + later_occurrences_[i];
      std::size_t max_len = (remaining - rest) / copies;
      st.bound[var] = true;
      for (std::size_t len = 0; len <= max_len; ++len) {
        st.images[var] = ImageSpan{static_cast<std::uint32_t>(pos),
                                   static_cast<std::uint32_t>(len)};
        if (!search(i + 1, pos + len, st, target, visit)) {
          st.bound[var] = false;
          return false;
        }
      }
      st.bound[var] = false;
      return true;
    }

    std::vector<Letter>      variables_;
    std::vector<std::size_t> ids_;
    std::vector<std::size_t> later_occurrences_;
  };

  //! All substitutions `phi` supported on the letters of `pattern` with
  //! `phi(pattern) == target`; erasing images are allowed.
  [[nodiscard]] std::vector<Substitution> match_pattern(Word const& pattern,
                                                        Word const& target);

  //! Witness of one direct deduction step: the step rewrites
  //! `prefix phi(from) suffix` into `prefix phi(to) suffix`, where `from` is
  //! the left side of `sigma[identity_index]` when `forward` is set and the
  //! right side otherwise.
  struct RewriteStep {
    std::size_t  identity_index = 0;
    bool         forward        = true;
    Word         prefix;
    Word         suffix;
    Substitution substitution;

    //! The same step read in the opposite direction.
    [[nodiscard]] RewriteStep reversed() const {
      RewriteStep r = *this;
      r.forward     = !forward;
      return r;
    }
  };

  struct Successor {
    Word        word;
    RewriteStep step;
  };

  inline constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

  //! Every word other than `w` obtained from `w` by one direct deduction step
  //! using an identity of `sigma` in either direction, with one witness each.
  //! Sorted in shortlex order; the witness kept is the first found in the
  //! order (identity, direction, factor start, factor length, match).
  //! Letters of the replacing side that do not occur in the matched side take
  //! every image over the letters of `w` and `image_letters` that keeps the
  //! result within `max_length`, shortest images first. With no length bound
  //! they are sent to the empty word only. Results longer than `max_length`
  //! are dropped.
  [[nodiscard]] std::vector<Successor> direct_successors(
      Word const&               w,
      std::span<Identity const> sigma,
      std::size_t               max_length    = unbounded,
      LetterSet const&          image_letters = {});

  struct SearchBudget {
    std::size_t max_word_length    = 16;
    std::size_t max_visited_states = 1'000'000;
    std::size_t max_depth          = 64;

    //! Throws std::invalid_argument unless every field is positive.
    void validate() const;
  };

  //! A chain `chain[0], ..., chain[m]` with `steps[i]` rewriting `chain[i]`
  //! into `chain[i + 1]`.
  struct Derivation {
    std::vector<Word>        chain;
    std::vector<RewriteStep> steps;
  };

  //! Returned when a bounded search gives up. This is never a proof that no
  //! derivation exists.
  struct NotFoundWithinBudget {
    std::size_t visited_states   = 0;
    std::size_t expanded_states  = 0;
    std::size_t depth_reached    = 0;
    bool        frontier_exhausted = false;
  };

  using DeductionResult = std::variant<Derivation, NotFoundWithinBudget>;

  //! Bidirectional breadth-first search for a derivation of `u = v` from
  //! `sigma`. Frontiers are expanded in shortlex order, so the result is
  //! deterministic. Letters erased by a step may be reintroduced only as
  //! letters of `u` or `v`; renaming any other letter to the empty word
  //! keeps a derivation valid and no longer.
  [[nodiscard]] DeductionResult deduce(Word const&               u,
                                       Word const&               v,
                                       std::span<Identity const> sigma,
                                       SearchBudget const&       budget);

  //! Replays every step. Throws std::out_of_range for an identity index
  //! outside `sigma` and std::invalid_argument if the step count does not
  //! match the chain.
  [[nodiscard]] bool verify_derivation(Derivation const&         d,
                                       std::span<Identity const> sigma);

}  // namespace monoidlab

#endif  // MONOIDLAB_EQUATIONAL_HPP_
