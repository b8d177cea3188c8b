#include "monoidlab/words.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace monoidlab {

  namespace {
    constexpr unsigned      bits_per_char = 5;
    constexpr unsigned      index_bits    = 32;
    constexpr std::uint64_t has_index_bit = std::uint64_t{1} << index_bits;
    constexpr unsigned      base_shift    = index_bits + 1;

    bool is_lower(char c) {
      return c >= 'a' && c <= 'z';
    }
  }  // namespace

  Letter::Letter(std::string_view base, std::optional<std::uint32_t> index) {
    if (base.empty() || base.size() > max_base_length) {
      throw std::invalid_argument("letter base must have 1 to "
                                  + std::to_string(max_base_length)
                                  + " characters, got \"" + std::string(base)
                                  + "\"");
    }
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < max_base_length; ++i) {
      std::uint64_t c = 0;
      if (i < base.size()) {
        if (!is_lower(base[i])) {
          throw std::invalid_argument("letter base must be lowercase ASCII: \""
                                      + std::string(base) + "\"");
        }
        c = static_cast<std::uint64_t>(base[i] - 'a' + 1);
      }
      packed = (packed << bits_per_char) | c;
    }
    code_ = packed << base_shift;
    if (index) {
      code_ |= has_index_bit | *index;
    }
  }

  Letter Letter::parse(std::string_view token) {
    std::size_t split = 0;
    while (split < token.size() && is_lower(token[split])) {
      ++split;
    }
    if (split == 0) {
      throw std::invalid_argument("letter token must start with a lowercase "
                                  "letter: \""
                                  + std::string(token) + "\"");
    }
    if (split == token.size()) {
      return Letter(token);
    }
    std::uint32_t index = 0;
    auto const*   first = token.data() + split;
    auto const*   last  = token.data() + token.size();
    auto [ptr, ec]      = std::from_chars(first, last, index);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("malformed letter token: \"" + std::string(token)
                                  + "\"");
    }
    return Letter(token.substr(0, split), index);
  }

  std::string Letter::base() const {
    std::string   result;
    std::uint64_t packed = code_ >> base_shift;
    for (std::size_t i = 0; i < max_base_length; ++i) {
      unsigned shift = bits_per_char * (max_base_length - 1 - i);
      auto     c     = static_cast<unsigned>((packed >> shift) & 0x1f);
      if (c == 0) {
        break;
      }
      result.push_back(static_cast<char>('a' + c - 1));
    }
    return result;
  }

  std::optional<std::uint32_t> Letter::index() const {
    if ((code_ & has_index_bit) == 0) {
      return std::nullopt;
    }
    return static_cast<std::uint32_t>(code_ & 0xffffffffu);
  }

  std::string Letter::to_string() const {
    auto i = index();
    return i ? base() + std::to_string(*i) : base();
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word Word::parse(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t                   i = 0;
    auto is_space = [](char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    };
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) {
        ++j;
      }
      if (j > i) {
        tokens.push_back(text.substr(i, j - i));
      }
      i = j;
    }
    if (tokens.empty()) {
      throw std::invalid_argument("empty word text (write 1 for the empty word)");
    }
    if (tokens.size() == 1 && tokens[0] == "1") {
      return Word();
    }
    std::vector<Letter> letters;
    letters.reserve(tokens.size());
    for (auto tok : tokens) {
      if (tok == "1") {
        throw std::invalid_argument("the token 1 may only appear alone");
      }
      letters.push_back(Letter::parse(tok));
    }
    return Word(std::move(letters));
  }

  std::string Word::to_string() const {
    if (letters_.empty()) {
      return "1";
    }
    std::string result;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i != 0) {
        result.push_back(' ');
      }
      result += letters_[i].to_string();
    }
    return result;
  }

  Word Word::factor(std::size_t pos, std::size_t len) const {
    if (pos > letters_.size() || len > letters_.size() - pos) {
      throw std::out_of_range("factor out of range");
    }
    return Word(std::vector<Letter>(letters_.begin() + pos,
                                    letters_.begin() + pos + len));
  }

  Word& Word::operator*=(Word const& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  std::strong_ordering operator<=>(Word const& a, Word const& b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a.begin(), a.end(), b.begin(), b.end());
  }

  std::size_t WordHash::operator()(std::span<Letter const> w) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
    for (Letter x : w) {
      std::uint64_t k = x.code() * 0xbf58476d1ce4e5b9ULL;
      k ^= k >> 31;
      h = (h ^ k) * 0x94d049bb133111ebULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    return (*this)(w.letters());
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  Word power(Letter x, std::size_t n) {
    return Word(std::vector<Letter>(n, x));
  }

  LetterSet alphabet(Word const& w) {
    return LetterSet(w.begin(), w.end());
  }

  std::size_t occurrences(Word const& w, Letter x) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
  }

  namespace {
    std::map<Letter, std::size_t> occurrence_counts(Word const& w) {
      std::map<Letter, std::size_t> counts;
      for (Letter x : w) {
        ++counts[x];
      }
      return counts;
    }
  }  // namespace

  LetterSet simple_letters(Word const& w) {
    LetterSet result;
    for (auto const& [x, n] : occurrence_counts(w)) {
      if (n == 1) {
        result.insert(x);
      }
    }
    return result;
  }

  LetterSet multiple_letters(Word const& w) {
    LetterSet result;
    for (auto const& [x, n] : occurrence_counts(w)) {
      if (n > 1) {
        result.insert(x);
      }
    }
    return result;
  }

  Word delete_letters(Word const& w, LetterSet const& z) {
    Word result;
    for (Letter x : w) {
      if (!z.contains(x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  Word restrict_to(Word const& w, LetterSet const& z) {
    Word result;
    for (Letter x : w) {
      if (z.contains(x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  bool is_factor(Word const& f, Word const& w) {
    return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()
           || f.empty();
  }

  std::set<Word> factors(std::span<Word const> ws) {
    std::set<Word> result;
    if (ws.empty()) {
      return result;
    }
    std::unordered_set<Word, WordHash> seen;
    for (Word const& w : ws) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        for (std::size_t len = 0; i + len <= w.size(); ++len) {
          auto f = w.factor(i, len);
          if (seen.insert(f).second) {
            result.insert(std::move(f));
          }
        }
      }
    }
    return result;
  }

  OccurrenceRef locate_occurrence(Word const& w, Letter x, std::size_t ordinal) {
    if (ordinal == 0) {
      throw std::out_of_range("occurrence ordinals are 1-based");
    }
    std::size_t seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == x && ++seen == ordinal) {
        return OccurrenceRef{x, ordinal, i};
      }
    }
    throw std::out_of_range("letter " + x.to_string() + " occurs only "
                            + std::to_string(seen) + " time(s), asked for #"
                            + std::to_string(ordinal));
  }

  bool occurrence_precedes(Word const&          w,
                           OccurrenceRef const& a,
                           OccurrenceRef const& b) {
    if (locate_occurrence(w, a.letter, a.ordinal) != a
        || locate_occurrence(w, b.letter, b.ordinal) != b) {
      throw std::invalid_argument("occurrence reference does not match word");
    }
    return a.position < b.position;
  }

  Letter canonical_letter(std::size_t i) {
    char        c   = static_cast<char>('a' + i % 26);
    std::size_t lap = i / 26;
    std::string base(1, c);
    if (lap == 0) {
      return Letter(base);
    }
    return Letter(base, static_cast<std::uint32_t>(lap));
  }

  Word canonical_rename(Word const& w) {
    std::map<Letter, Letter> renaming;
    Word                     result;
    for (Letter x : w) {
      auto it = renaming.find(x);
      if (it == renaming.end()) {
        it = renaming.emplace(x, canonical_letter(renaming.size())).first;
      }
      result.push_back(it->second);
    }
    return result;
  }

}  // namespace monoidlab
