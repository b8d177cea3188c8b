#include "monoidlab/rees.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "detail/parallel.hpp"

namespace monoidlab::rees {

  ReesMonoid ReesMonoid::build(std::span<Word const> generators) {
    ReesMonoid m;
    m.generators_.assign(generators.begin(), generators.end());
    std::sort(m.generators_.begin(), m.generators_.end());
    m.generators_.erase(std::unique(m.generators_.begin(), m.generators_.end()),
                        m.generators_.end());

    auto all = monoidlab::factors(m.generators_);
    m.factors_.assign(all.begin(), all.end());
    for (std::size_t i = 0; i < m.factors_.size(); ++i) {
      m.index_.emplace(m.factors_[i], static_cast<ElementId>(i));
    }

    LetterSet letters;
    for (Word const& w : m.generators_) {
      letters.insert(w.begin(), w.end());
    }
    m.alphabet_.assign(letters.begin(), letters.end());

    std::size_t const k = m.alphabet_.size();
    m.extend_.assign(m.factors_.size() * k, m.zero_id());
    m.factor_codes_.resize(m.factors_.size());
    for (std::size_t i = 0; i < m.factors_.size(); ++i) {
      Word const& f = m.factors_[i];
      for (Letter x : f) {
        m.factor_codes_[i].push_back(
            static_cast<std::uint16_t>(*m.letter_index(x)));
      }
      for (std::size_t a = 0; a < k; ++a) {
        Word g = f;
        g.push_back(m.alphabet_[a]);
        if (auto it = m.index_.find(g); it != m.index_.end()) {
          m.extend_[i * k + a] = it->second;
        }
      }
    }
    return m;
  }

  std::optional<std::size_t> ReesMonoid::letter_index(Letter x) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), x);
    if (it == alphabet_.end() || *it != x) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - alphabet_.begin());
  }

  std::optional<ElementId> ReesMonoid::find(Word const& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ReesElement ReesMonoid::element(ElementId id) const {
    if (id > zero_id()) {
      throw std::out_of_range("element id out of range");
    }
    if (is_zero(id)) {
      return ReesElement::zero();
    }
    return ReesElement(factors_[id]);
  }

  ElementId ReesMonoid::id_of(ReesElement const& e) const {
    if (e.is_zero()) {
      return zero_id();
    }
    if (auto id = find(e.word())) {
      return *id;
    }
    // In the trivial monoid the empty word is the zero.
    if (factors_.empty() && e.word().empty()) {
      return identity_id();
    }
    throw std::invalid_argument("\"" + e.word().to_string()
                                + "\" is not an element of this monoid");
  }

  ElementId ReesMonoid::multiply(ElementId a, ElementId b) const {
    if (a > zero_id() || b > zero_id()) {
      throw std::out_of_range("element id out of range");
    }
    if (is_zero(a) || is_zero(b)) {
      return zero_id();
    }
    ElementId cur = a;
    for (auto code : factor_codes_[b]) {
      cur = extend(cur, code);
      if (is_zero(cur)) {
        break;
      }
    }
    return cur;
  }

  ReesElement ReesMonoid::multiply(ReesElement const& a,
                                   ReesElement const& b) const {
    return element(multiply(id_of(a), id_of(b)));
  }

  ReesElement ReesMonoid::evaluate(Word const& w, Assignment const& psi) const {
    ElementId cur = identity_id();
    for (Letter x : w) {
      auto it = psi.find(x);
      if (it == psi.end()) {
        throw std::invalid_argument("no image for letter " + x.to_string());
      }
      cur = multiply(cur, id_of(it->second));
    }
    return element(cur);
  }

  bool ReesMonoid::is_associative() const {
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

  ////////////////////////////////////////////////////////////////////////
  // satisfies
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // phi(to) == target, where phi is given by matcher images into target.
    bool image_equals(Word const&                to,
                      PatternMatcher const&      matcher,
                      std::span<Letter const>    target,
                      std::span<ImageSpan const> images) {
      auto const  vars = matcher.variables();
      std::size_t pos  = 0;
      for (Letter x : to) {
        auto it = std::find(vars.begin(), vars.end(), x);
        auto img = images[static_cast<std::size_t>(it - vars.begin())];
        if (pos + img.length > target.size()) {
          return false;
        }
        for (std::uint32_t k = 0; k < img.length; ++k) {
          if (target[pos + k] != target[img.start + k]) {
            return false;
          }
        }
        pos += img.length;
      }
      return pos == target.size();
    }
  }  // namespace

  Verdict satisfies(ReesMonoid const&   m,
                    Identity const&     id,
                    CheckOptions const& options) {
    Verdict verdict;
    verdict.stats.budget = options.budget;
    std::size_t const count = m.nonzero_count();
    if (count == 0) {
      verdict.outcome = Outcome::holds;
      return verdict;
    }

    struct Direction {
      Word const*    to;
      PatternMatcher matcher;
      LetterSet      unbound;
    };
    std::vector<Direction> dirs;
    for (bool forward : {true, false}) {
      Word const& from = forward ? id.lhs : id.rhs;
      Word const& to   = forward ? id.rhs : id.lhs;
      Direction   d{&to, PatternMatcher(from), alphabet(to)};
      for (Letter x : d.matcher.variables()) {
        d.unbound.erase(x);
      }
      dirs.push_back(std::move(d));
    }

    std::atomic<std::uint64_t>             explored{0};
    std::vector<std::optional<Assignment>> witnesses(2 * count);

    auto probe = [&](std::size_t item) {
      Direction const& d      = dirs[item / count];
      Word const&      factor = m.factors()[item % count];
      auto const       target = factor.letters();
      bool             over   = false;
      bool             hit    = false;
      d.matcher.for_each_match(target, [&](std::span<ImageSpan const> images) {
        if (explored.fetch_add(1, std::memory_order_relaxed) >= options.budget) {
          over = true;
          return false;
        }
        if (d.unbound.empty() && image_equals(*d.to, d.matcher, target, images)) {
          return true;
        }
        Assignment psi;
        auto const vars = d.matcher.variables();
        for (std::size_t v = 0; v < vars.size(); ++v) {
          psi.emplace(vars[v], ReesElement(Word(target.subspan(
                                   images[v].start, images[v].length))));
        }
        for (Letter x : d.unbound) {
          psi.emplace(x, ReesElement::zero());
        }
        witnesses[item] = std::move(psi);
        hit             = true;
        return false;
      });
      if (over) {
        return detail::Probe::abort;
      }
      return hit ? detail::Probe::hit : detail::Probe::miss;
    };

    auto result             = detail::first_hit(2 * count, options.jobs, probe);
    verdict.stats.explored  = explored.load();
    if (result.aborted) {
      verdict.outcome = Outcome::unknown;
    } else if (result.index < 2 * count) {
      verdict.outcome = Outcome::fails;
      verdict.witness = std::move(*witnesses[result.index]);
    } else {
      verdict.outcome = Outcome::holds;
    }
    return verdict;
  }

  Verdict satisfies_naive(ReesMonoid const& m,
                          Identity const&   id,
                          std::uint64_t     budget) {
    Verdict verdict;
    verdict.stats.budget = budget;
    LetterSet const     letter_set = id.alphabet();
    std::vector<Letter> letters(letter_set.begin(), letter_set.end());
    std::uint64_t const n = m.size();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (total > budget / n) {
        verdict.outcome = Outcome::unknown;
        return verdict;
      }
      total *= n;
    }
    if (total > budget) {
      verdict.outcome = Outcome::unknown;
      return verdict;
    }

    auto position = [&](Letter x) {
      return static_cast<std::size_t>(
          std::lower_bound(letters.begin(), letters.end(), x) - letters.begin());
    };
    std::vector<std::size_t> lhs, rhs;
    for (Letter x : id.lhs) {
      lhs.push_back(position(x));
    }
    for (Letter x : id.rhs) {
      rhs.push_back(position(x));
    }
    auto eval = [&](std::vector<std::size_t> const& w,
                    std::vector<ElementId> const&   values) {
      ElementId cur = m.identity_id();
      for (auto i : w) {
        cur = m.multiply(cur, values[i]);
      }
      return cur;
    };

    std::vector<ElementId> values(letters.size(), 0);
    for (std::uint64_t step = 0; step < total; ++step) {
      ++verdict.stats.explored;
      if (eval(lhs, values) != eval(rhs, values)) {
        verdict.outcome = Outcome::fails;
        for (std::size_t i = 0; i < letters.size(); ++i) {
          verdict.witness.emplace(letters[i], m.element(values[i]));
        }
        return verdict;
      }
      for (std::size_t i = letters.size(); i-- > 0;) {
        if (++values[i] < n) {
          break;
        }
        values[i] = 0;
      }
    }
    verdict.outcome = Outcome::holds;
    return verdict;
  }

}  // namespace monoidlab::rees
