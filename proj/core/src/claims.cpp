#include "monoidlab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "monoidlab/families.hpp"

namespace monoidlab::claims {

  std::string_view to_string(Status s) noexcept {
    switch (s) {
      case Status::verified:
        return "verified";
      case Status::refuted:
        return "refuted";
      case Status::unknown:
        return "unknown";
    }
    return "unknown";
  }

  int exit_code(Status s) noexcept {
    switch (s) {
      case Status::verified:
        return 0;
      case Status::refuted:
        return 1;
      case Status::unknown:
        return 2;
    }
    return 2;
  }

  namespace {
    using io::json;

    Status combine(Status a, Status b) {
      if (a == Status::refuted || b == Status::refuted) {
        return Status::refuted;
      }
      if (a == Status::unknown || b == Status::unknown) {
        return Status::unknown;
      }
      return Status::verified;
    }

    Status from_outcome(Outcome o) {
      switch (o) {
        case Outcome::holds:
          return Status::verified;
        case Outcome::fails:
          return Status::refuted;
        case Outcome::unknown:
          return Status::unknown;
      }
      return Status::unknown;
    }

    CheckOptions check_options(ClaimParams const& p) {
      return {p.budget, p.jobs};
    }

    json word_list(std::vector<Word> const& ws) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(w.to_string());
      }
      return out;
    }

    // Successors of u and v under {u = v} must be exactly {v} and {u}.
    ClaimReport closure(std::pair<Word, Word> const& uv) {
      auto const& [u, v] = uv;
      std::vector<Identity> const sigma{Identity(u, v)};
      ClaimReport                 r;
      r.status = Status::verified;
      json sides = json::array();
      for (auto const& [from, expected] : {std::pair{u, v}, std::pair{v, u}}) {
        auto              succ = direct_successors(from, sigma);
        std::vector<Word> words;
        for (auto const& s : succ) {
          words.push_back(s.word);
        }
        bool const exact = words.size() == 1 && words.front() == expected;
        json       side;
        side["word"]       = from.to_string();
        side["successors"] = word_list(words);
        side["exact"]      = exact;
        if (!exact) {
          r.status = Status::refuted;
        }
        sides.push_back(std::move(side));
      }
      r.evidence["identity"] = sigma.front().to_string();
      r.evidence["sides"]    = std::move(sides);
      return r;
    }

    ClaimReport step1(ClaimParams const&) {
      return closure(families::step1_words());
    }

    ClaimReport step3(ClaimParams const&) {
      return closure(families::step3_words());
    }

    families::Step2Reading parse_reading(std::string const& text) {
      if (text == "consistent") {
        return families::Step2Reading::consistent;
      }
      if (text == "as-printed") {
        return families::Step2Reading::as_printed;
      }
      throw std::invalid_argument("unknown reading \"" + text
                                  + "\" (expected consistent or as-printed)");
    }

    ClaimReport step2(ClaimParams const& p) {
      std::size_t const n = p.n.value_or(1);
      std::size_t const m = p.m.value_or(1);
      if (n == 0 || m == 0) {
        throw std::invalid_argument("--n and --m must be positive");
      }
      std::vector<families::Permutation> perms;
      if (p.perm) {
        perms.push_back(families::Permutation::parse(*p.perm));
      } else {
        perms = families::Permutation::all(n + m);
      }
      auto const reading = parse_reading(p.reading.value_or("consistent"));
      ClaimReport r;
      r.params["n"]       = n;
      r.params["m"]       = m;
      r.params["reading"] = p.reading.value_or("consistent");
      r.status            = Status::verified;
      json cases          = json::array();
      for (auto const& rho : perms) {
        auto const c    = families::step2_construction(n, m, rho, reading);
        auto const mu   = rees::ReesMonoid::build(std::vector<Word>{c.u});
        Identity   id(c.a, c.a_prime);
        auto const v    = rees::satisfies(mu, id, check_options(p));
        auto const cross = rees::satisfies_naive(mu, id, 10'000'000);
        json       item;
        item["perm"]    = rho.to_string();
        item["branch"]  = c.low_branch ? "low" : "high";
        item["u"]       = c.u.to_string();
        item["a"]       = c.a.to_string();
        item["a_prime"] = c.a_prime.to_string();
        item["monoid_size"] = mu.size();
        item["verdict"] = io::to_json(v);
        if (cross.outcome == Outcome::unknown) {
          item["naive_cross_check"] = "skipped: beyond naive budget";
        } else {
          item["naive_cross_check"] = std::string(to_string(cross.outcome));
          if (cross.outcome != v.outcome && v.outcome != Outcome::unknown) {
            throw std::logic_error("decision procedures disagree on " + id.to_string());
          }
        }
        r.status = combine(r.status, from_outcome(v.outcome));
        cases.push_back(std::move(item));
      }
      r.evidence["cases"] = std::move(cases);
      return r;
    }

    ClaimReport theorem_ii(ClaimParams const& p) {
      std::vector<families::VarietySpec> specs;
      if (p.variety) {
        specs.push_back(families::VarietySpec::parse(*p.variety));
      } else {
        specs = families::finite_varieties(p.n.value_or(2));
      }
      auto const  basis = families::theorem_ii_basis(p.n.value_or(1), p.m.value_or(1));
      ClaimReport r;
      r.params["basis_n_max"] = p.n.value_or(1);
      r.params["basis_m_max"] = p.m.value_or(1);
      r.status                = Status::verified;
      json varieties          = json::array();
      for (auto const& spec : specs) {
        auto const gens = families::variety_generators(spec);
        auto const mu   = rees::ReesMonoid::build(gens);
        json       checks = json::array();
        for (auto const& id : basis) {
          auto const v = rees::satisfies(mu, id, check_options(p));
          json       item;
          item["identity"] = id.to_string();
          item["verdict"]  = io::to_json(v);
          checks.push_back(std::move(item));
          r.status = combine(r.status, from_outcome(v.outcome));
        }
        json item;
        item["variety"]    = spec.to_string();
        item["generators"] = word_list(gens);
        item["checks"]     = std::move(checks);
        varieties.push_back(std::move(item));
      }
      r.evidence["varieties"] = std::move(varieties);
      return r;
    }

    ClaimReport basis_derives(ClaimParams const& p) {
      std::vector<Identity> const sigma{Identity::parse("x x = x x x"),
                                        Identity::parse("x x y = x y x"),
                                        Identity::parse("x y x = y x x")};
      Identity const target =
          Identity::parse(p.target.value_or("x y z x t y = y x z x t y"));
      SearchBudget budget;
      budget.max_word_length =
          p.max_len != 0 ? p.max_len : std::max(target.lhs.size(), target.rhs.size()) + 3;
      budget.max_visited_states = p.max_steps;
      budget.max_depth          = 4 * budget.max_word_length + 16;

      ClaimReport r;
      r.params["target"]          = target.to_string();
      r.params["max_word_length"] = budget.max_word_length;
      r.params["max_visited"]     = budget.max_visited_states;
      json sig                    = json::array();
      for (auto const& id : sigma) {
        sig.push_back(id.to_string());
      }
      r.evidence["sigma"] = std::move(sig);
      auto result         = deduce(target.lhs, target.rhs, sigma, budget);
      if (auto const* d = std::get_if<Derivation>(&result)) {
        bool const ok          = verify_derivation(*d, sigma);
        r.evidence["derivation"] = io::to_json(*d, sigma);
        r.evidence["replayed"]   = ok;
        r.status                 = ok ? Status::verified : Status::unknown;
      } else {
        auto const& nf           = std::get<NotFoundWithinBudget>(result);
        r.evidence["derivation"] = io::to_json(nf);
        r.status                 = Status::unknown;
      }
      return r;
    }

    //! Simple letters in the same order and equal alphabets once they are
    //! removed.
    bool mxy_shape(Identity const& id) {
      auto simple_sequence = [](Word const& w) {
        auto const s = simple_letters(w);
        Word       seq;
        for (Letter x : w) {
          if (s.contains(x)) {
            seq.push_back(x);
          }
        }
        return seq;
      };
      return simple_sequence(id.lhs) == simple_sequence(id.rhs)
             && multiple_letters(id.lhs) == multiple_letters(id.rhs);
    }

    ClaimReport mxy(ClaimParams const& p) {
      fmon::TheoryParams tp;
      tp.max_length  = p.max_len != 0 ? p.max_len : 6;
      tp.max_letters = p.n.value_or(4);
      auto const mu  = rees::ReesMonoid::build(std::vector<Word>{Word::parse("x y")});
      auto const th  = fmon::truncated_theory(fmon::from_rees(mu), tp, p.budget * 20);
      ClaimReport r;
      r.params["max_length"]  = tp.max_length;
      r.params["max_letters"] = tp.max_letters;
      std::size_t violations  = 0;
      json        first       = nullptr;
      for (auto const& id : th.identities) {
        if (!mxy_shape(id)) {
          if (violations++ == 0) {
            first = id.to_string();
          }
        }
      }
      r.evidence["identities"]       = th.identities.size();
      r.evidence["complete"]         = th.complete;
      r.evidence["complete_length"]  = th.complete_length;
      r.evidence["violations"]       = violations;
      if (violations != 0) {
        r.evidence["first_violation"] = first;
      }
      r.status = violations != 0 ? Status::refuted
                 : th.complete   ? Status::verified
                                 : Status::unknown;
      return r;
    }

    json classification(lattice::FiniteLattice const& l) {
      json out = json::array();
      for (lattice::Element x = 0; x < l.size(); ++x) {
        json item;
        item["element"] = l.name(x);
        item["modular"] = lattice::is_modular_element(l, x);
        if (auto pent = lattice::find_pentagon_with_center(l, x)) {
          item["pentagon"] = io::to_json(l, *pent);
        }
        out.push_back(std::move(item));
      }
      return out;
    }

    ClaimReport fig1(ClaimParams const&) {
      auto const        l = lattice::fig1();
      ClaimReport       r;
      bool              ok = true;
      lattice::Element const center = l.index("c");
      for (lattice::Element x = 0; x < l.size(); ++x) {
        bool const modular = lattice::is_modular_element(l, x);
        auto const pent    = lattice::find_pentagon_with_center(l, x);
        ok = ok && modular == (x != center) && modular == !pent.has_value();
      }
      r.evidence["hasse"]          = io::format_hasse(l);
      r.evidence["classification"] = classification(l);
      r.status                     = ok ? Status::verified : Status::refuted;
      return r;
    }

    ClaimReport fig2(ClaimParams const&) {
      auto const             l  = lattice::fig2();
      lattice::Element const x  = l.index("x");
      lattice::Element const y  = l.index("y");
      lattice::Element const xy = l.join(x, y);
      ClaimReport            r;
      r.evidence["join"]           = l.name(xy);
      r.evidence["classification"] = classification(l);
      bool const ok = lattice::is_modular_element(l, x) && lattice::is_modular_element(l, y)
                      && !lattice::is_modular_element(l, xy);
      r.status = ok ? Status::verified : Status::refuted;
      return r;
    }

    ClaimReport chain_isoterms(ClaimParams const& p) {
      std::size_t const n = p.n.value_or(1);
      Word const        u = families::chain_word(n);
      auto const        mu =
          fmon::from_rees(rees::ReesMonoid::build(std::vector<Word>{u}));
      std::size_t const bound = p.max_len != 0 ? p.max_len : 2 * n + 3;
      auto const        v     = fmon::isoterm_check(mu, u, bound, 1, check_options(p));
      ClaimReport       r;
      r.params["n"]     = n;
      r.params["bound"] = bound;
      r.evidence["word"]    = u.to_string();
      r.evidence["verdict"] = io::to_json(v);
      switch (v.outcome) {
        case fmon::IsotermOutcome::isoterm_up_to:
          r.status = Status::verified;
          break;
        case fmon::IsotermOutcome::not_isoterm:
          r.status = Status::refuted;
          break;
        case fmon::IsotermOutcome::unknown:
          r.status = Status::unknown;
          break;
      }
      return r;
    }

    struct Entry {
      ClaimInfo                                       info;
      std::function<ClaimReport(ClaimParams const&)> run;
    };

    std::vector<Entry> const& entries() {
      static std::vector<Entry> const table = {
          {{"step1-closure",
            "One-step deduction from the first pair u, v only swaps u and v.",
            ""},
           step1},
          {{"step3-closure",
            "One-step deduction from the second pair u, v only swaps u and v.",
            ""},
           step3},
          {{"step2-satisfaction",
            "M(u) satisfies a = a' for the words built from (n, m, rho).",
            "--n --m --perm --reading"},
           step2},
          {{"theorem-ii-holds",
            "Each listed finite-generated variety satisfies the identity basis.",
            "--variety --n --m"},
           theorem_ii},
          {{"basis-derives",
            "The target follows from x^2 = x^3, x^2y = xyx, xyx = yx^2.",
            "--target --max-len --max-steps"},
           basis_derives},
          {{"mxy-structure",
            "Identities of M(xy) keep simple letters in order and the multiple letters.",
            "--max-len --n"},
           mxy},
          {{"fig1-pentagon",
            "In the pentagon only the center is not a modular element.",
            ""},
           fig1},
          {{"fig2-modularity",
            "In the nine-element lattice x and y are modular but their join is not.",
            ""},
           fig2},
          {{"chain-isoterms",
            "x t1 x ... tn x is an isoterm for its own Rees quotient.",
            "--n --max-len"},
           chain_isoterms},
      };
      return table;
    }
  }  // namespace

  std::vector<ClaimInfo> registry() {
    std::vector<ClaimInfo> out;
    for (auto const& e : entries()) {
      out.push_back(e.info);
    }
    return out;
  }

  ClaimReport verify(std::string_view id, ClaimParams const& params) {
    auto const& table = entries();
    auto        it    = std::find_if(table.begin(), table.end(),
                             [&](Entry const& e) { return e.info.id == id; });
    if (it == table.end()) {
      std::string known;
      for (auto const& e : table) {
        known += (known.empty() ? "" : ", ") + e.info.id;
      }
      throw std::invalid_argument("unknown claim \"" + std::string(id)
                                  + "\" (known: " + known + ")");
    }
    auto const  start = std::chrono::steady_clock::now();
    ClaimReport r     = it->run(params);
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.id        = it->info.id;
    r.statement = it->info.statement;
    if (r.params.is_null()) {
      r.params = json::object();
    }
    return r;
  }

  std::string emit(ClaimReport const& r, Format format, bool timing) {
    if (format == Format::json) {
      json out;
      out["claim"]     = r.id;
      out["statement"] = r.statement;
      out["verdict"]   = std::string(to_string(r.status));
      out["params"]    = r.params;
      out["evidence"]  = r.evidence;
      if (timing) {
        out["seconds"] = r.seconds;
      }
      return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "claim:     " << r.id << '\n'
        << "statement: " << r.statement << '\n'
        << "verdict:   " << to_string(r.status) << '\n';
    if (!r.params.empty()) {
      out << "params:    " << r.params.dump() << '\n';
    }
    out << "evidence:\n";
    for (auto const& [key, value] : r.evidence.items()) {
      if (value.is_string()) {
        std::string text = value.get<std::string>();
        if (text.find('\n') != std::string::npos) {
          out << "  " << key << ":\n";
          std::istringstream lines(text);
          for (std::string line; std::getline(lines, line);) {
            out << "    " << line << '\n';
          }
          continue;
        }
        out << "  " << key << ": " << text << '\n';
      } else {
        out << "  " << key << ": " << value.dump() << '\n';
      }
    }
    if (timing) {
      out << "seconds:   " << r.seconds << '\n';
    }
    return out.str();
  }

}  // namespace monoidlab::claims
