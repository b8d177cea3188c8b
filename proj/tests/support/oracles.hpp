// Brute-force reference implementations and seeded generators for the test
// suites. Nothing here uses the library's matching, tables or search; only
// the Word and Letter value types are shared.

#ifndef MONOIDLAB_TESTS_ORACLES_HPP_
#define MONOIDLAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monoidlab/equational.hpp"
#include "monoidlab/lattice.hpp"
#include "monoidlab/words.hpp"

namespace oracle {

  using monoidlab::Identity;
  using monoidlab::Letter;
  using monoidlab::Word;

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<Letter> pool(std::size_t k) {
    static char const* const names[] = {"x", "y", "z", "t", "s", "u", "v", "w"};
    std::vector<Letter>      out;
    for (std::size_t i = 0; i < k; ++i) {
      out.emplace_back(names[i]);
    }
    return out;
  }

  inline Word random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len,
                          std::size_t letters) {
    auto const                                 p = pool(letters);
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, letters - 1);
    Word                                       w;
    for (std::size_t n = len(rng); n > 0; --n) {
      w.push_back(p[pick(rng)]);
    }
    return w;
  }

  //! Mostly balanced pairs (a shuffle of one side) so that both outcomes are
  //! common, mixed with unrelated pairs.
  inline Identity random_identity(std::mt19937_64& rng, std::size_t max_len,
                                  std::size_t letters) {
    Word lhs = random_word(rng, 1, max_len, letters);
    Word rhs;
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0:
        rhs = random_word(rng, 0, max_len, letters);
        break;
      case 1: {
        std::vector<Letter> v(lhs.begin(), lhs.end());
        std::shuffle(v.begin(), v.end(), rng);
        rhs = Word(std::move(v));
        break;
      }
      case 2: {
        std::vector<Letter> v(lhs.begin(), lhs.end());
        auto const          i = std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng);
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), v[i]);
        if (v.size() > max_len) {
          v.erase(v.begin());
        }
        rhs = Word(std::move(v));
        break;
      }
      default: {
        std::vector<Letter> v(lhs.begin(), lhs.end());
        if (v.size() >= 2) {
          auto const i = std::uniform_int_distribution<std::size_t>(0, v.size() - 2)(rng);
          std::swap(v[i], v[i + 1]);
        }
        rhs = Word(std::move(v));
        break;
      }
    }
    return Identity(std::move(lhs), std::move(rhs));
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  inline Word slice(Word const& w, std::size_t from, std::size_t to) {
    return Word(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(from),
                                    w.begin() + static_cast<std::ptrdiff_t>(to)));
  }

  inline std::set<Word> factors(std::vector<Word> const& ws) {
    std::set<Word> out;
    for (auto const& w : ws) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        for (std::size_t j = i; j <= w.size(); ++j) {
          out.insert(slice(w, i, j));
        }
      }
    }
    return out;
  }

  inline Word concat(Word a, Word const& b) {
    for (Letter x : b) {
      a.push_back(x);
    }
    return a;
  }

  inline Word substitute(Word const& w, std::map<Letter, Word> const& phi) {
    Word out;
    for (Letter x : w) {
      auto it = phi.find(x);
      out     = concat(std::move(out), it == phi.end() ? Word{x} : it->second);
    }
    return out;
  }

  inline std::vector<Letter> letters_of(Word const& w) {
    std::set<Letter> s(w.begin(), w.end());
    return {s.begin(), s.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees quotients, elements are words or nullopt for zero
  ////////////////////////////////////////////////////////////////////////

  using Element = std::optional<Word>;

  struct Rees {
    std::set<Word>       factor_set;
    std::vector<Element> elements;

    explicit Rees(std::vector<Word> const& ws) : factor_set(factors(ws)) {
      for (auto const& f : factor_set) {
        elements.emplace_back(f);
      }
      elements.emplace_back(std::nullopt);
    }

    Element multiply(Element const& a, Element const& b) const {
      if (!a || !b) {
        return std::nullopt;
      }
      Word ab = concat(*a, *b);
      if (!factor_set.contains(ab)) {
        return std::nullopt;
      }
      return ab;
    }

    Element evaluate(Word const& w, std::map<Letter, Element> const& psi) const {
      Element cur = Word();
      if (factor_set.empty()) {
        return cur;  // the trivial monoid
      }
      for (Letter x : w) {
        cur = multiply(cur, psi.at(x));
      }
      return cur;
    }

    //! Every assignment of the identity's letters; nullopt when none fails.
    std::optional<std::map<Letter, Element>> counterexample(Identity const& id) const {
      auto const letters = letters_of(concat(id.lhs, id.rhs));
      if (factor_set.empty()) {
        return std::nullopt;
      }
      std::vector<std::size_t> pick(letters.size(), 0);
      while (true) {
        std::map<Letter, Element> psi;
        for (std::size_t i = 0; i < letters.size(); ++i) {
          psi[letters[i]] = elements[pick[i]];
        }
        if (evaluate(id.lhs, psi) != evaluate(id.rhs, psi)) {
          return psi;
        }
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < elements.size()) {
            break;
          }
          pick[i] = 0;
        }
        if (i == pick.size()) {
          return std::nullopt;
        }
      }
    }

    bool holds(Identity const& id) const {
      return !counterexample(id).has_value();
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // One-step deduction
  ////////////////////////////////////////////////////////////////////////

  //! All substitutions of the letters of s into factors of b with image b.
  inline std::vector<std::map<Letter, Word>> all_matches(Word const& s, Word const& b) {
    auto const                          vars = letters_of(s);
    auto const                          fs   = factors({b});
    std::vector<Word> const             imgs(fs.begin(), fs.end());
    std::vector<std::map<Letter, Word>> out;
    std::vector<std::size_t>            pick(vars.size(), 0);
    while (true) {
      std::map<Letter, Word> phi;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        phi[vars[i]] = imgs[pick[i]];
      }
      if (substitute(s, phi) == b) {
        out.push_back(std::move(phi));
      }
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < imgs.size()) {
          break;
        }
        pick[i] = 0;
      }
      if (i == pick.size()) {
        return out;
      }
    }
  }

  //! Every word over `alpha` of length <= len.
  inline std::vector<Word> words_up_to(std::set<Letter> const& alpha, std::size_t len) {
    std::vector<Word> out{Word()};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() < len) {
        for (auto x : alpha) {
          Word w = out[i];
          w.push_back(x);
          out.push_back(w);
        }
      }
    }
    return out;
  }

  //! Words w' != w reachable in one step. Letters of the other side that the
  //! matched side lacks are erased when max_len is 0, and otherwise range over
  //! words on the letters of w and `extra` with |w'| <= max_len.
  inline std::set<Word> successors(Word const& w, std::vector<Identity> const& sigma,
                                   std::size_t max_len = 0, std::set<Letter> extra = {}) {
    for (auto x : w) {
      extra.insert(x);
    }
    std::vector<Word> const images = max_len == 0 ? std::vector<Word>{Word()}
                                                  : words_up_to(extra, max_len);
    std::set<Word> out;
    for (auto const& id : sigma) {
      for (int dir = 0; dir < 2; ++dir) {
        Word const& s = dir == 0 ? id.lhs : id.rhs;
        Word const& t = dir == 0 ? id.rhs : id.lhs;
        std::vector<Letter> free;
        for (auto x : letters_of(t)) {
          if (std::find(s.begin(), s.end(), x) == s.end()) {
            free.push_back(x);
          }
        }
        for (std::size_t i = 0; i <= w.size(); ++i) {
          for (std::size_t j = i; j <= w.size(); ++j) {
            for (auto const& base : all_matches(s, slice(w, i, j))) {
              std::vector<std::size_t> pick(free.size(), 0);
              while (true) {
                auto phi = base;
                for (std::size_t k = 0; k < free.size(); ++k) {
                  phi[free[k]] = images[pick[k]];
                }
                Word next =
                    concat(concat(slice(w, 0, i), substitute(t, phi)), slice(w, j, w.size()));
                if (next != w && (max_len == 0 || next.size() <= max_len)) {
                  out.insert(std::move(next));
                }
                std::size_t k = 0;
                for (; k < pick.size(); ++k) {
                  if (++pick[k] < images.size()) {
                    break;
                  }
                  pick[k] = 0;
                }
                if (k == pick.size()) {
                  break;
                }
              }
            }
          }
        }
      }
    }
    return out;
  }

  //! Plain breadth-first search over words of length <= max_len on the
  //! letters of u and v.
  inline std::optional<std::size_t> distance(Word const& u, Word const& v,
                                             std::vector<Identity> const& sigma,
                                             std::size_t max_len) {
    std::set<Letter> letters;
    for (auto x : concat(u, v)) {
      letters.insert(x);
    }
    std::map<Word, std::size_t> dist{{u, 0}};
    std::deque<Word>            queue{u};
    while (!queue.empty()) {
      Word w = queue.front();
      queue.pop_front();
      if (w == v) {
        return dist[w];
      }
      for (auto const& next : successors(w, sigma, max_len, letters)) {
        if (dist.emplace(next, dist[w] + 1).second) {
          queue.push_back(next);
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattices, from the order relation only
  ////////////////////////////////////////////////////////////////////////

  struct Order {
    std::size_t       n = 0;
    std::vector<bool> le;

    bool leq(std::size_t a, std::size_t b) const {
      return le[a * n + b];
    }

    std::size_t meet(std::size_t a, std::size_t b) const {
      for (std::size_t c = 0; c < n; ++c) {
        if (!leq(c, a) || !leq(c, b)) {
          continue;
        }
        bool greatest = true;
        for (std::size_t d = 0; d < n && greatest; ++d) {
          greatest = !(leq(d, a) && leq(d, b)) || leq(d, c);
        }
        if (greatest) {
          return c;
        }
      }
      return n;
    }

    std::size_t join(std::size_t a, std::size_t b) const {
      for (std::size_t c = 0; c < n; ++c) {
        if (!leq(a, c) || !leq(b, c)) {
          continue;
        }
        bool least = true;
        for (std::size_t d = 0; d < n && least; ++d) {
          least = !(leq(a, d) && leq(b, d)) || leq(c, d);
        }
        if (least) {
          return c;
        }
      }
      return n;
    }
  };

  inline Order order_of(monoidlab::lattice::FiniteLattice const& l) {
    Order o;
    o.n = l.size();
    o.le.assign(o.n * o.n, false);
    for (std::size_t a = 0; a < o.n; ++a) {
      for (std::size_t b = 0; b < o.n; ++b) {
        o.le[a * o.n + b] = l.leq(a, b);
      }
    }
    return o;
  }

  inline bool modular(Order const& o, std::size_t x) {
    for (std::size_t y = 0; y < o.n; ++y) {
      for (std::size_t z = 0; z < o.n; ++z) {
        if (o.leq(y, z) && o.meet(o.join(x, y), z) != o.join(o.meet(x, z), y)) {
          return false;
        }
      }
    }
    return true;
  }

  //! Exhaustive over 5-element subsets and their role assignments.
  inline bool has_pentagon_with_center(Order const& o, std::size_t x) {
    auto lt = [&](std::size_t a, std::size_t b) { return a != b && o.leq(a, b); };
    for (std::size_t bot = 0; bot < o.n; ++bot) {
      for (std::size_t a = 0; a < o.n; ++a) {
        for (std::size_t b = 0; b < o.n; ++b) {
          for (std::size_t top = 0; top < o.n; ++top) {
            std::set<std::size_t> five{bot, a, b, top, x};
            if (five.size() != 5 || !lt(bot, a) || !lt(a, b) || !lt(b, top)) {
              continue;
            }
            if (o.meet(x, a) == bot && o.meet(x, b) == bot && o.join(x, a) == top
                && o.join(x, b) == top) {
              return true;
            }
          }
        }
      }
    }
    return false;
  }

  //! A random lattice: subsets of {0..k-1} closed under intersection, with
  //! the full set on top, ordered by inclusion.
  inline monoidlab::lattice::FiniteLattice random_lattice(std::mt19937_64& rng,
                                                          std::size_t      max_size) {
    std::size_t const          k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::uint32_t const        full = (1u << k) - 1;
    std::set<std::uint32_t>    family{full};
    std::size_t const          seeds = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    std::uniform_int_distribution<std::uint32_t> subset(0, full);
    for (std::size_t i = 0; i < seeds; ++i) {
      std::set<std::uint32_t> next = family;
      next.insert(subset(rng));
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto a : std::vector<std::uint32_t>(next.begin(), next.end())) {
          for (auto b : std::vector<std::uint32_t>(next.begin(), next.end())) {
            grew = next.insert(a & b).second || grew;
          }
        }
      }
      if (next.size() <= max_size) {
        family = std::move(next);
      }
    }
    std::vector<std::uint32_t> members(family.begin(), family.end());
    std::vector<std::string>   names;
    for (auto m : members) {
      names.push_back("s" + std::to_string(m));
    }
    auto sub = [](std::uint32_t a, std::uint32_t b) { return a != b && (a & b) == a; };
    std::vector<monoidlab::lattice::FiniteLattice::Edge> edges;
    for (auto a : members) {
      for (auto b : members) {
        if (!sub(a, b)) {
          continue;
        }
        bool cover = true;
        for (auto c : members) {
          cover = cover && !(sub(a, c) && sub(c, b));
        }
        if (cover) {
          edges.emplace_back("s" + std::to_string(a), "s" + std::to_string(b));
        }
      }
    }
    std::shuffle(names.begin(), names.end(), rng);
    return monoidlab::lattice::FiniteLattice::from_covers(std::move(names), edges);
  }

}  // namespace oracle

#endif  // MONOIDLAB_TESTS_ORACLES_HPP_
