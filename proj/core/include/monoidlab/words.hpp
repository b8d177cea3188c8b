// Letters, words and the combinatorics on words used throughout monoidlab.

#ifndef MONOIDLAB_WORDS_HPP_
#define MONOIDLAB_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monoidlab {

  //! A letter is a lowercase base name with an optional non-negative index,
  //! so that `t1`, `t2` and `t` are three distinct letters.
  //!
  //! Letters are packed into a single 64-bit code whose integer order is the
  //! order "base lexicographically, then index (unindexed first)". Bases are
  //! limited to \ref max_base_length ASCII lowercase characters.
  class Letter {
   public:
    static constexpr std::size_t max_base_length = 6;

    Letter() = default;
    explicit Letter(std::string_view                base,
                    std::optional<std::uint32_t>    index = std::nullopt);

    //! Parses a single token such as `x`, `t1` or `z12`.
    static Letter parse(std::string_view token);

    [[nodiscard]] std::string                  base() const;
    [[nodiscard]] std::optional<std::uint32_t> index() const;
    [[nodiscard]] std::string                  to_string() const;

    [[nodiscard]] std::uint64_t code() const noexcept {
      return code_;
    }

    auto operator<=>(Letter const&) const = default;

   private:
    std::uint64_t code_ = 0;
  };

  //! A finite word over letters; the empty word is the identity of the free
  //! monoid and prints as `1`.
  //!
  //! Words compare in shortlex order (length first, then lexicographically
  //! letter by letter).
  class Word {
   public:
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::span<Letter const> letters)
        : letters_(letters.begin(), letters.end()) {}

    //! Parses whitespace separated tokens; the lone token `1` is the empty
    //! word. Throws std::invalid_argument on malformed input.
    static Word parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    [[nodiscard]] Letter operator[](std::size_t i) const {
      return letters_[i];
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return letters_.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return letters_.end();
    }
    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    //! The factor of length `len` starting at `pos`.
    [[nodiscard]] Word factor(std::size_t pos, std::size_t len) const;

    void push_back(Letter x) {
      letters_.push_back(x);
    }
    Word& operator*=(Word const& other);

    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& a, Word const& b);

   private:
    std::vector<Letter> letters_;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
    std::size_t operator()(std::span<Letter const> w) const noexcept;
  };

  using LetterSet = std::set<Letter>;

  //! `x` repeated `n` times.
  [[nodiscard]] Word power(Letter x, std::size_t n);

  [[nodiscard]] LetterSet   alphabet(Word const& w);
  [[nodiscard]] std::size_t occurrences(Word const& w, Letter x);
  [[nodiscard]] LetterSet   simple_letters(Word const& w);
  [[nodiscard]] LetterSet   multiple_letters(Word const& w);

  //! Removes every occurrence of the letters in `z`.
  [[nodiscard]] Word delete_letters(Word const& w, LetterSet const& z);
  //! Keeps only the occurrences of the letters in `z`.
  [[nodiscard]] Word restrict_to(Word const& w, LetterSet const& z);

  //! True iff `w = a f b` for some words `a`, `b`.
  [[nodiscard]] bool is_factor(Word const& f, Word const& w);

  //! All distinct factors of the words in `ws`, including the empty word
  //! whenever `ws` is non-empty. Returned in shortlex order.
  [[nodiscard]] std::set<Word> factors(std::span<Word const> ws);

  //! The ordinal-th (1-based) occurrence of a letter in some word.
  struct OccurrenceRef {
    Letter      letter;
    std::size_t ordinal  = 1;
    std::size_t position = 0;

    friend bool operator==(OccurrenceRef const&, OccurrenceRef const&)
        = default;
  };

  //! Throws std::out_of_range if `x` occurs fewer than `ordinal` times.
  [[nodiscard]] OccurrenceRef locate_occurrence(Word const& w,
                                                Letter      x,
                                                std::size_t ordinal);

  //! True iff occurrence `a` is strictly to the left of occurrence `b` in
  //! `w`. Both references are validated against `w`.
  [[nodiscard]] bool occurrence_precedes(Word const&          w,
                                         OccurrenceRef const& a,
                                         OccurrenceRef const& b);

  //! The i-th letter of the fixed renaming alphabet `a, b, ..., z, a1, ...`.
  [[nodiscard]] Letter canonical_letter(std::size_t i);

  //! Renames letters to the fixed alphabet in order of first occurrence.
  [[nodiscard]] Word canonical_rename(Word const& w);

}  // namespace monoidlab

#endif  // MONOIDLAB_WORDS_HPP_
