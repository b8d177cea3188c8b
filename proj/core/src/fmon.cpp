#include "monoidlab/fmon.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "detail/parallel.hpp"

namespace monoidlab::fmon {

  FiniteMonoid::FiniteMonoid(std::vector<std::string> names,
                             ElementId                identity,
                             std::vector<ElementId>   table)
      : names_(std::move(names)), identity_(identity), table_(std::move(table)) {
    std::size_t const n = names_.size();
    if (n == 0) {
      throw std::invalid_argument("a monoid has at least one element");
    }
    if (table_.size() != n * n) {
      throw std::invalid_argument("multiplication table must be "
                                  + std::to_string(n) + "x"
                                  + std::to_string(n));
    }
    if (identity_ >= n) {
      throw std::invalid_argument("identity index out of range");
    }
    for (ElementId v : table_) {
      if (v >= n) {
        throw std::invalid_argument("table entry " + std::to_string(v)
                                    + " out of range");
      }
    }
    for (ElementId a = 0; a < n; ++a) {
      if (multiply(identity_, a) != a || multiply(a, identity_) != a) {
        throw std::invalid_argument("element " + std::to_string(identity_)
                                    + " is not a two-sided identity");
      }
    }
  }

  bool FiniteMonoid::is_associative() const {
    auto n = static_cast<ElementId>(size());
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        ElementId ab = multiply(a, b);
        for (ElementId c = 0; c < n; ++c) {
          if (multiply(ab, c) != multiply(a, multiply(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  FiniteMonoid from_rees(rees::ReesMonoid const& m) {
    auto const               n = static_cast<ElementId>(m.size());
    std::vector<std::string> names;
    names.reserve(n);
    for (ElementId a = 0; a < n; ++a) {
      names.push_back(m.element(a).to_string());
    }
    std::vector<ElementId> table(static_cast<std::size_t>(n) * n);
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        table[static_cast<std::size_t>(a) * n + b] = m.multiply(a, b);
      }
    }
    return FiniteMonoid(std::move(names), m.identity_id(), std::move(table));
  }

  FiniteMonoid direct_product(FiniteMonoid const& a,
                              FiniteMonoid const& b,
                              std::size_t         max_size) {
    std::size_t const na = a.size();
    std::size_t const nb = b.size();
    if (na * nb > max_size) {
      throw std::length_error("direct product of size " + std::to_string(na * nb)
                              + " exceeds the cap " + std::to_string(max_size));
    }
    std::size_t const        n = na * nb;
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        names.push_back("(" + a.names()[i] + "," + b.names()[j] + ")");
      }
    }
    std::vector<ElementId> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto p = a.multiply(static_cast<ElementId>(x / nb),
                            static_cast<ElementId>(y / nb));
        auto q = b.multiply(static_cast<ElementId>(x % nb),
                            static_cast<ElementId>(y % nb));
        table[x * n + y] = static_cast<ElementId>(p * nb + q);
      }
    }
    auto id = static_cast<ElementId>(a.identity() * nb + b.identity());
    return FiniteMonoid(std::move(names), id, std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // satisfies
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // n^k, or nullopt when it exceeds `cap`.
    std::optional<std::uint64_t> bounded_power(std::uint64_t n,
                                               std::size_t   k,
                                               std::uint64_t cap) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (n != 0 && total > cap / n) {
          return std::nullopt;
        }
        total *= n;
      }
      if (total > cap) {
        return std::nullopt;
      }
      return total;
    }

    // One side of an identity as letter indices, with cached prefix products.
    struct Side {
      std::vector<std::size_t> codes;
      // first_at[d]: first position holding a letter with index >= d.
      std::vector<std::size_t> first_at;
      std::vector<ElementId>   prefix;

      Side(std::vector<std::size_t> c, std::size_t letters, ElementId one)
          : codes(std::move(c)), first_at(letters + 1, 0), prefix(codes.size() + 1, one) {
        for (std::size_t d = 0; d <= letters; ++d) {
          std::size_t p = 0;
          while (p < codes.size() && codes[p] < d) {
            ++p;
          }
          first_at[d] = p;
        }
      }

      // Recomputes the products after letters >= d changed.
      ElementId update(FiniteMonoid const&           m,
                       std::vector<ElementId> const& values,
                       std::size_t                   d) {
        for (std::size_t p = first_at[d]; p < codes.size(); ++p) {
          prefix[p + 1] = m.multiply(prefix[p], values[codes[p]]);
        }
        return prefix.back();
      }
    };
  }  // namespace

  Verdict satisfies(FiniteMonoid const& m,
                    Identity const&     id,
                    CheckOptions const& options) {
    Verdict verdict;
    verdict.stats.budget = options.budget;

    std::vector<Letter>         letters;
    std::map<Letter, std::size_t> index;
    auto code_of = [&](Letter x) {
      auto [it, fresh] = index.emplace(x, letters.size());
      if (fresh) {
        letters.push_back(x);
      }
      return it->second;
    };
    std::vector<std::size_t> lhs, rhs;
    for (Letter x : id.lhs) {
      lhs.push_back(code_of(x));
    }
    for (Letter x : id.rhs) {
      rhs.push_back(code_of(x));
    }
    std::size_t const   k = letters.size();
    std::uint64_t const n = m.size();
    auto total = bounded_power(n, k, options.budget);
    if (!total) {
      verdict.outcome = Outcome::unknown;
      return verdict;
    }

    // Work is split on the value of the first letter.
    std::size_t const items        = k == 0 ? 1 : static_cast<std::size_t>(n);
    std::uint64_t const per_item   = k == 0 ? 1 : *total / n;
    std::vector<std::optional<std::vector<ElementId>>> witnesses(items);
    std::atomic<std::uint64_t>                        explored{0};

    auto probe = [&](std::size_t item) {
      Side                   left(lhs, k, m.identity());
      Side                   right(rhs, k, m.identity());
      std::vector<ElementId> values(k, 0);
      if (k > 0) {
        values[0] = static_cast<ElementId>(item);
      }
      std::size_t changed = 0;
      for (std::uint64_t step = 0; step < per_item; ++step) {
        ElementId a = left.update(m, values, changed);
        ElementId b = right.update(m, values, changed);
        if (a != b) {
          explored.fetch_add(step + 1, std::memory_order_relaxed);
          witnesses[item] = values;
          return detail::Probe::hit;
        }
        // Odometer over letters 1..k-1, last letter fastest.
        changed = k;
        for (std::size_t i = k; i-- > 1;) {
          changed = i;
          if (++values[i] < n) {
            break;
          }
          values[i] = 0;
        }
      }
      explored.fetch_add(per_item, std::memory_order_relaxed);
      return detail::Probe::miss;
    };

    auto result            = detail::first_hit(items, options.jobs, probe);
    verdict.stats.explored = explored.load();
    if (result.index < items) {
      verdict.outcome = Outcome::fails;
      auto const& values = *witnesses[result.index];
      for (std::size_t i = 0; i < k; ++i) {
        verdict.witness.emplace(letters[i], values[i]);
      }
    } else {
      verdict.outcome = Outcome::holds;
    }
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Truncated theories
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // All words of length <= max_length over `k` letters as a trie in
    // shortlex order: word i = word parent[i] followed by letter last[i].
    struct WordTrie {
      std::vector<std::size_t>   parent;
      std::vector<std::uint32_t> last;
      std::vector<std::uint32_t> length;

      WordTrie(std::size_t k, std::size_t max_length) {
        parent.push_back(0);
        last.push_back(0);
        length.push_back(0);
        std::size_t level_begin = 0;
        std::size_t level_end   = 1;
        for (std::size_t len = 1; len <= max_length; ++len) {
          for (std::size_t p = level_begin; p < level_end; ++p) {
            for (std::size_t a = 0; a < k; ++a) {
              parent.push_back(p);
              last.push_back(static_cast<std::uint32_t>(a));
              length.push_back(static_cast<std::uint32_t>(len));
            }
          }
          level_begin = level_end;
          level_end   = parent.size();
        }
      }

      [[nodiscard]] std::size_t size() const {
        return parent.size();
      }

      [[nodiscard]] Word word(std::size_t i) const {
        std::vector<Letter> letters(length[i]);
        for (std::size_t pos = length[i]; pos-- > 0;) {
          letters[pos] = canonical_letter(last[i]);
          i            = parent[i];
        }
        return Word(std::move(letters));
      }
    };

    std::uint64_t word_count(std::uint64_t k, std::size_t max_length) {
      std::uint64_t total = 0;
      std::uint64_t level = 1;
      for (std::size_t len = 0; len <= max_length; ++len) {
        total += level;
        level *= k;
      }
      return total;
    }
  }  // namespace

  TruncatedTheory truncated_theory(FiniteMonoid const& m,
                                   TheoryParams        params,
                                   std::uint64_t       budget) {
    TruncatedTheory theory;
    theory.params         = params;
    std::size_t const k   = params.max_letters;
    std::uint64_t const n = m.size();

    auto assignments = bounded_power(n, k, budget);
    std::size_t length = params.max_length;
    if (!assignments) {
      theory.complete        = false;
      theory.complete_length = 0;
      return theory;
    }
    while (length > 0 && word_count(k, length) > budget / *assignments) {
      --length;
      theory.complete = false;
    }
    theory.complete_length = length;

    WordTrie const trie(k, length);
    std::size_t const words = trie.size();

    // Partition refinement: two words share a class iff they agree on every
    // assignment processed so far.
    std::vector<std::uint32_t> cls(words, 0);
    std::vector<ElementId>     value(words);
    std::vector<ElementId>     psi(k, 0);
    std::unordered_map<std::uint64_t, std::uint32_t> renumber;
    for (std::uint64_t step = 0; step < *assignments; ++step) {
      value[0] = m.identity();
      for (std::size_t i = 1; i < words; ++i) {
        value[i] = m.multiply(value[trie.parent[i]], psi[trie.last[i]]);
      }
      renumber.clear();
      for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t key = (static_cast<std::uint64_t>(cls[i]) << 32) | value[i];
        auto [it, fresh] = renumber.emplace(key, static_cast<std::uint32_t>(renumber.size()));
        cls[i] = it->second;
      }
      for (std::size_t i = k; i-- > 0;) {
        if (++psi[i] < n) {
          break;
        }
        psi[i] = 0;
      }
    }

    std::vector<std::vector<std::size_t>> groups;
    std::unordered_map<std::uint32_t, std::size_t> group_of;
    for (std::size_t i = 0; i < words; ++i) {
      auto [it, fresh] = group_of.emplace(cls[i], groups.size());
      if (fresh) {
        groups.emplace_back();
      }
      groups[it->second].push_back(i);
    }

    std::uint64_t pair_budget = budget;
    std::vector<Word> cache(words);
    auto word_of = [&](std::size_t i) -> Word const& {
      if (cache[i].size() != trie.length[i]) {
        cache[i] = trie.word(i);
      }
      return cache[i];
    };
    for (auto const& g : groups) {
      for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
          if (pair_budget-- == 0) {
            theory.complete = false;
            return theory;
          }
          theory.identities.insert(Identity(word_of(g[a]), word_of(g[b])).canonical());
        }
      }
    }
    return theory;
  }

  namespace {
    void require_same_params(TruncatedTheory const& a, TruncatedTheory const& b) {
      if (!(a.params == b.params)) {
        throw std::invalid_argument("truncated theories have different parameters");
      }
    }
  }  // namespace

  TruncatedTheory theory_intersect(TruncatedTheory const& a,
                                   TruncatedTheory const& b) {
    require_same_params(a, b);
    TruncatedTheory result;
    result.params          = a.params;
    result.complete        = a.complete && b.complete;
    result.complete_length = std::min(a.complete_length, b.complete_length);
    std::set_intersection(a.identities.begin(), a.identities.end(),
                          b.identities.begin(), b.identities.end(),
                          std::inserter(result.identities, result.identities.end()));
    return result;
  }

  bool theory_leq(TruncatedTheory const& a, TruncatedTheory const& b) {
    require_same_params(a, b);
    return std::includes(b.identities.begin(), b.identities.end(),
                         a.identities.begin(), a.identities.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Isoterms
  ////////////////////////////////////////////////////////////////////////

  IsotermVerdict isoterm_check(FiniteMonoid const& m,
                               Word const&         u,
                               std::size_t         bound,
                               std::size_t         fresh_letters,
                               CheckOptions const& options) {
    IsotermVerdict verdict;
    verdict.bound        = bound;
    verdict.stats.budget = options.budget;

    LetterSet const     own = alphabet(u);
    std::vector<Letter> letters(own.begin(), own.end());
    std::size_t const   fixed = letters.size();
    for (std::uint32_t i = 1; letters.size() < fixed + fresh_letters; ++i) {
      Letter candidate("fresh", i);
      if (!own.contains(candidate)) {
        letters.push_back(candidate);
      }
    }
    std::size_t const   k = letters.size();
    std::uint64_t const n = m.size();
    auto assignments = bounded_power(n, k, options.budget);
    if (!assignments) {
      verdict.outcome = IsotermOutcome::unknown;
      return verdict;
    }

    std::vector<std::size_t> u_codes;
    for (Letter x : u) {
      u_codes.push_back(static_cast<std::size_t>(
          std::lower_bound(letters.begin(), letters.begin() + fixed, x) - letters.begin()));
    }
    auto evaluate = [&](std::vector<std::size_t> const& codes,
                        std::vector<ElementId> const&   psi) {
      ElementId cur = m.identity();
      for (auto c : codes) {
        cur = m.multiply(cur, psi[c]);
      }
      return cur;
    };

    // Values of u under every assignment, in odometer order, when small
    // enough to cache.
    constexpr std::uint64_t cache_limit = std::uint64_t{1} << 22;
    std::vector<ElementId>  u_values;
    if (*assignments <= cache_limit) {
      u_values.resize(*assignments);
      std::vector<ElementId> psi(k, 0);
      for (std::uint64_t a = 0; a < *assignments; ++a) {
        u_values[a] = evaluate(u_codes, psi);
        for (std::size_t i = k; i-- > 0;) {
          if (++psi[i] < n) {
            break;
          }
          psi[i] = 0;
        }
      }
    }

    std::uint64_t const candidates = word_count(k, bound);
    std::atomic<std::uint64_t> explored{0};
    std::mutex found_mutex;
    std::map<std::size_t, Word> witnesses;

    auto probe = [&](std::size_t index) {
      // Decode the index-th word in shortlex order.
      std::uint64_t rest  = index;
      std::size_t   len   = 0;
      std::uint64_t level = 1;
      while (rest >= level) {
        rest -= level;
        level *= k;
        ++len;
      }
      std::vector<std::size_t> codes(len);
      for (std::size_t p = len; p-- > 0;) {
        codes[p] = static_cast<std::size_t>(rest % k);
        rest /= k;
      }
      if (codes == u_codes) {
        return detail::Probe::miss;
      }
      // Fresh letters only in order of first appearance.
      std::size_t next_fresh = fixed;
      for (auto c : codes) {
        if (c >= fixed) {
          if (c > next_fresh) {
            return detail::Probe::miss;
          }
          if (c == next_fresh) {
            ++next_fresh;
          }
        }
      }
      std::vector<ElementId> psi(k, 0);
      std::uint64_t          steps = 0;
      bool                   equal = true;
      for (std::uint64_t a = 0; a < *assignments; ++a) {
        ++steps;
        ElementId expected = u_values.empty() ? evaluate(u_codes, psi) : u_values[a];
        if (evaluate(codes, psi) != expected) {
          equal = false;
          break;
        }
        for (std::size_t i = k; i-- > 0;) {
          if (++psi[i] < n) {
            break;
          }
          psi[i] = 0;
        }
      }
      if (explored.fetch_add(steps, std::memory_order_relaxed) + steps > options.budget) {
        return detail::Probe::abort;
      }
      if (!equal) {
        return detail::Probe::miss;
      }
      std::vector<Letter> letters_of_v;
      for (auto c : codes) {
        letters_of_v.push_back(letters[c]);
      }
      std::lock_guard lock(found_mutex);
      witnesses.emplace(index, Word(std::move(letters_of_v)));
      return detail::Probe::hit;
    };

    auto result            = detail::first_hit(candidates, options.jobs, probe);
    verdict.stats.explored = explored.load();
    if (result.aborted) {
      verdict.outcome = IsotermOutcome::unknown;
    } else if (result.index < candidates) {
      verdict.outcome = IsotermOutcome::not_isoterm;
      verdict.witness = witnesses.at(result.index);
    } else {
      verdict.outcome = IsotermOutcome::isoterm_up_to;
    }
    return verdict;
  }

}  // namespace monoidlab::fmon
