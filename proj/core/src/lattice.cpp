#include "monoidlab/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace monoidlab::lattice {

  FiniteLattice FiniteLattice::from_covers(std::vector<std::string> elements,
                                           std::vector<Edge> const& edges) {
    if (elements.empty()) {
      throw std::invalid_argument("a lattice needs at least one element");
    }
    std::map<std::string, Element, std::less<>> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].empty()) {
        throw std::invalid_argument("empty element name");
      }
      if (!index.emplace(elements[i], i).second) {
        throw std::invalid_argument("repeated element \"" + elements[i] + "\"");
      }
    }
    auto lookup = [&](std::string const& s) {
      auto it = index.find(s);
      if (it == index.end()) {
        throw std::invalid_argument("edge mentions unknown element \"" + s + "\"");
      }
      return it->second;
    };

    FiniteLattice     l;
    std::size_t const n = elements.size();
    l.names_            = std::move(elements);
    l.leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      l.leq_[i * n + i] = true;
    }
    for (auto const& [a, b] : edges) {
      Element ia = lookup(a);
      Element ib = lookup(b);
      if (ia == ib) {
        throw LatticeError("edge from \"" + a + "\" to itself", {a, b});
      }
      l.leq_[ia * n + ib] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!l.leq_[i * n + k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (l.leq_[k * n + j]) {
            l.leq_[i * n + j] = true;
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (l.leq_[i * n + j] && l.leq_[j * n + i]) {
          throw LatticeError("cycle through \"" + l.names_[i] + "\" and \""
                                 + l.names_[j] + "\"",
                             {l.names_[i], l.names_[j]});
        }
      }
    }

    // Greatest common lower bound (or least upper bound when `up`).
    auto bound = [&](Element a, Element b, bool up) -> std::optional<Element> {
      auto below = [&](Element p, Element q) { return up ? l.leq(q, p) : l.leq(p, q); };
      std::optional<Element> best;
      for (Element c = 0; c < n; ++c) {
        if (below(c, a) && below(c, b) && (!best || below(*best, c))) {
          best = c;
        }
      }
      if (!best) {
        return std::nullopt;
      }
      for (Element c = 0; c < n; ++c) {
        if (below(c, a) && below(c, b) && !below(c, *best)) {
          return std::nullopt;
        }
      }
      return best;
    };
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a) {
      for (Element b = a; b < n; ++b) {
        auto m = bound(a, b, false);
        if (!m) {
          throw LatticeError("\"" + l.names_[a] + "\" and \"" + l.names_[b]
                                 + "\" have no meet",
                             {l.names_[a], l.names_[b]});
        }
        auto j = bound(a, b, true);
        if (!j) {
          throw LatticeError("\"" + l.names_[a] + "\" and \"" + l.names_[b]
                                 + "\" have no join",
                             {l.names_[a], l.names_[b]});
        }
        l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
        l.join_[a * n + b] = l.join_[b * n + a] = *j;
      }
    }
    l.bottom_ = l.meet_[0];
    l.top_    = l.join_[0];
    for (Element a = 1; a < n; ++a) {
      l.bottom_ = l.meet(l.bottom_, a);
      l.top_    = l.join(l.top_, a);
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!l.less(a, b)) {
          continue;
        }
        bool cover = true;
        for (Element c = 0; c < n && cover; ++c) {
          cover = !(l.less(a, c) && l.less(c, b));
        }
        if (cover) {
          l.covers_.emplace_back(a, b);
        }
      }
    }
    return l;
  }

  Element FiniteLattice::index(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      throw std::invalid_argument("unknown element \"" + std::string(name) + "\"");
    }
    return static_cast<Element>(it - names_.begin());
  }

  bool is_modular_element(FiniteLattice const& l, Element x) {
    std::size_t const n = l.size();
    for (Element y = 0; y < n; ++y) {
      Element const xy = l.join(x, y);
      for (Element z = 0; z < n; ++z) {
        if (l.leq(y, z) && l.meet(xy, z) != l.join(l.meet(x, z), y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_pentagon(FiniteLattice const& l, Pentagon const& p) {
    auto const n = l.size();
    if (p.bottom >= n || p.top >= n || p.low >= n || p.high >= n || p.center >= n) {
      return false;
    }
    return l.less(p.bottom, p.low) && l.less(p.low, p.high) && l.less(p.high, p.top)
           && l.meet(p.center, p.low) == p.bottom && l.meet(p.center, p.high) == p.bottom
           && l.join(p.center, p.low) == p.top && l.join(p.center, p.high) == p.top;
  }

  std::optional<Pentagon> find_pentagon_with_center(FiniteLattice const& l, Element x) {
    std::size_t const n = l.size();
    for (Element low = 0; low < n; ++low) {
      if (l.leq(low, x) || l.leq(x, low)) {
        continue;
      }
      for (Element high = 0; high < n; ++high) {
        if (!l.less(low, high)) {
          continue;
        }
        Pentagon p{l.meet(x, high), l.join(x, low), low, high, x};
        if (is_pentagon(l, p)) {
          return p;
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Element> modular_elements(FiniteLattice const& l) {
    std::vector<Element> result;
    for (Element x = 0; x < l.size(); ++x) {
      if (is_modular_element(l, x)) {
        result.push_back(x);
      }
    }
    return result;
  }

  FiniteLattice fig1() {
    return FiniteLattice::from_covers(
        {"0", "a", "b", "c", "1"},
        {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  }

  FiniteLattice fig2() {
    return FiniteLattice::from_covers({"0", "x", "y", "c", "p", "q", "r", "s", "1"},
                                      {{"0", "x"},
                                       {"0", "y"},
                                       {"0", "c"},
                                       {"x", "p"},
                                       {"x", "q"},
                                       {"y", "q"},
                                       {"y", "r"},
                                       {"c", "p"},
                                       {"c", "r"},
                                       {"c", "s"},
                                       {"p", "1"},
                                       {"q", "1"},
                                       {"r", "1"},
                                       {"s", "1"}});
  }

  FiniteLattice chain(std::size_t n) {
    std::vector<std::string>        names;
    std::vector<FiniteLattice::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
      if (i > 0) {
        edges.emplace_back(names[i - 1], names[i]);
      }
    }
    return FiniteLattice::from_covers(std::move(names), edges);
  }

  FiniteLattice boolean(std::size_t k) {
    if (k > 10) {
      throw std::length_error("boolean lattice too large");
    }
    auto name = [k](std::size_t mask) {
      std::string s = "{";
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::size_t{1} << i)) {
          if (s.size() > 1) {
            s.push_back(',');
          }
          s += std::to_string(i + 1);
        }
      }
      return s + "}";
    };
    std::vector<std::string>        names;
    std::vector<FiniteLattice::Edge> edges;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      names.push_back(name(mask));
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::size_t{1} << i)) {
          edges.emplace_back(name(mask & ~(std::size_t{1} << i)), name(mask));
        }
      }
    }
    return FiniteLattice::from_covers(std::move(names), edges);
  }

  namespace {
    std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
      if (!name.starts_with(prefix) || name.size() == prefix.size()) {
        return std::nullopt;
      }
      auto        digits = name.substr(prefix.size());
      std::size_t value  = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        return std::nullopt;
      }
      return value;
    }
  }  // namespace

  FiniteLattice builtin(std::string_view name) {
    if (name == "fig1") {
      return fig1();
    }
    if (name == "fig2") {
      return fig2();
    }
    if (auto n = suffix_number(name, "chain"); n && *n >= 1 && *n <= 64) {
      return chain(*n);
    }
    if (auto k = suffix_number(name, "boolean"); k && *k <= 6) {
      return boolean(*k);
    }
    throw std::invalid_argument("unknown built-in lattice \"" + std::string(name)
                                + "\" (expected fig1, fig2, chainN or booleanK)");
  }

  std::vector<std::string> builtin_names() {
    return {"fig1", "fig2", "chain1", "chain2", "chain4", "boolean2", "boolean3"};
  }

}  // namespace monoidlab::lattice
