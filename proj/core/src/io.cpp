#include "monoidlab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace monoidlab::io {

  namespace {
    // The line with any `#` comment removed and surrounding blanks trimmed.
    std::string strip(std::string line) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        return {};
      }
      auto const last = line.find_last_not_of(" \t\r");
      return line.substr(first, last - first + 1);
    }

    std::string at_line(std::size_t n) {
      return "line " + std::to_string(n) + ": ";
    }
  }  // namespace

  std::vector<Word> read_words(std::istream& in) {
    std::vector<Word> words;
    std::string       line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      line = strip(std::move(line));
      if (line.empty()) {
        continue;
      }
      try {
        words.push_back(Word::parse(line));
      } catch (std::invalid_argument const& e) {
        throw std::invalid_argument(at_line(n) + e.what());
      }
    }
    return words;
  }

  lattice::FiniteLattice read_lattice(std::istream& in) {
    std::vector<std::string>                 names;
    std::set<std::string>                    seen;
    std::vector<lattice::FiniteLattice::Edge> edges;
    auto add = [&](std::string const& name) {
      if (seen.insert(name).second) {
        names.push_back(name);
      }
    };
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      line = strip(std::move(line));
      if (line.empty()) {
        continue;
      }
      std::istringstream       tokens(line);
      std::vector<std::string> parts;
      for (std::string t; tokens >> t;) {
        parts.push_back(t);
      }
      if (line.find('<') == std::string::npos) {
        for (auto const& p : parts) {
          add(p);
        }
        continue;
      }
      if (parts.size() != 3 || parts[1] != "<") {
        throw std::invalid_argument(at_line(n) + "expected \"a < b\", found \"" + line
                                    + "\"");
      }
      add(parts[0]);
      add(parts[2]);
      edges.emplace_back(parts[0], parts[2]);
    }
    return lattice::FiniteLattice::from_covers(std::move(names), edges);
  }

  fmon::FiniteMonoid read_table(std::istream& in) {
    json doc;
    try {
      doc = json::parse(in);
    } catch (json::exception const& e) {
      throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
    }
    // Reports from `rees build --table --json` nest the table.
    if (doc.is_object() && !doc.contains("elements") && doc.contains("table")
        && doc["table"].is_object()) {
      doc = json(doc["table"]);
    }
    try {
      auto names    = doc.at("elements").get<std::vector<std::string>>();
      auto identity = doc.at("identity").get<fmon::ElementId>();
      auto rows     = doc.at("table").get<std::vector<std::vector<fmon::ElementId>>>();
      if (rows.size() != names.size()) {
        throw std::invalid_argument("table has " + std::to_string(rows.size())
                                    + " rows for " + std::to_string(names.size())
                                    + " elements");
      }
      std::vector<fmon::ElementId> table;
      for (auto const& row : rows) {
        if (row.size() != names.size()) {
          throw std::invalid_argument("table rows must have one entry per element");
        }
        table.insert(table.end(), row.begin(), row.end());
      }
      return fmon::FiniteMonoid(std::move(names), identity, std::move(table));
    } catch (json::exception const& e) {
      throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
    }
  }

  json table_json(fmon::FiniteMonoid const& m) {
    json rows = json::array();
    for (std::size_t a = 0; a < m.size(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < m.size(); ++b) {
        row.push_back(m.multiply(static_cast<fmon::ElementId>(a),
                                 static_cast<fmon::ElementId>(b)));
      }
      rows.push_back(std::move(row));
    }
    json doc;
    doc["elements"] = std::vector<std::string>(m.names().begin(), m.names().end());
    doc["identity"] = m.identity();
    doc["table"]    = std::move(rows);
    return doc;
  }

  std::string slurp(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  json to_json(Word const& w) {
    return w.to_string();
  }

  json to_json(Identity const& id) {
    return id.to_string();
  }

  json to_json(Substitution const& phi) {
    json out = json::object();
    for (auto const& [x, image] : phi.images()) {
      out[x.to_string()] = image.to_string();
    }
    return out;
  }

  json to_json(SearchStats const& s) {
    json out;
    out["explored"] = s.explored;
    out["budget"]   = s.budget;
    return out;
  }

  json to_json(Derivation const& d, std::span<Identity const> sigma) {
    json steps = json::array();
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto const& s = d.steps[i];
      json        step;
      step["from"]         = d.chain[i].to_string();
      step["to"]           = d.chain[i + 1].to_string();
      step["identity"]     = s.identity_index < sigma.size()
                                 ? sigma[s.identity_index].to_string()
                                 : std::string("?");
      step["index"]        = s.identity_index;
      step["direction"]    = s.forward ? "forward" : "backward";
      step["prefix"]       = s.prefix.to_string();
      step["suffix"]       = s.suffix.to_string();
      step["substitution"] = to_json(s.substitution);
      steps.push_back(std::move(step));
    }
    json chain = json::array();
    for (Word const& w : d.chain) {
      chain.push_back(w.to_string());
    }
    json out;
    out["result"] = "derived";
    out["length"] = d.steps.size();
    out["chain"]  = std::move(chain);
    out["steps"]  = std::move(steps);
    return out;
  }

  json to_json(NotFoundWithinBudget const& n) {
    json out;
    out["result"]             = "not-found-within-budget";
    out["visited_states"]     = n.visited_states;
    out["expanded_states"]    = n.expanded_states;
    out["depth_reached"]      = n.depth_reached;
    out["frontier_exhausted"] = n.frontier_exhausted;
    return out;
  }

  json to_json(rees::Verdict const& v) {
    json out;
    out["outcome"] = std::string(to_string(v.outcome));
    if (v.outcome == Outcome::fails) {
      json witness = json::object();
      for (auto const& [x, e] : v.witness) {
        witness[x.to_string()] = e.to_string();
      }
      out["witness"] = std::move(witness);
    }
    out["stats"] = to_json(v.stats);
    return out;
  }

  json to_json(fmon::Verdict const& v, fmon::FiniteMonoid const& m) {
    json out;
    out["outcome"] = std::string(to_string(v.outcome));
    if (v.outcome == Outcome::fails) {
      json witness = json::object();
      for (auto const& [x, e] : v.witness) {
        witness[x.to_string()] = m.name(e);
      }
      out["witness"] = std::move(witness);
    }
    out["stats"] = to_json(v.stats);
    return out;
  }

  json to_json(fmon::IsotermVerdict const& v) {
    json out;
    switch (v.outcome) {
      case fmon::IsotermOutcome::isoterm_up_to:
        out["outcome"] = "isoterm-up-to";
        break;
      case fmon::IsotermOutcome::not_isoterm:
        out["outcome"] = "not-isoterm";
        break;
      case fmon::IsotermOutcome::unknown:
        out["outcome"] = "unknown";
        break;
    }
    out["bound"] = v.bound;
    if (v.witness) {
      out["witness"] = v.witness->to_string();
    }
    out["stats"] = to_json(v.stats);
    return out;
  }

  json to_json(lattice::FiniteLattice const& l, lattice::Pentagon const& p) {
    json out;
    out["bottom"] = l.name(p.bottom);
    out["low"]    = l.name(p.low);
    out["high"]   = l.name(p.high);
    out["top"]    = l.name(p.top);
    out["center"] = l.name(p.center);
    return out;
  }

  std::string format_derivation(Derivation const& d, std::span<Identity const> sigma) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.chain.size(); ++i) {
      out << (i == 0 ? "   " : "-> ") << d.chain[i].to_string();
      if (i < d.steps.size()) {
        auto const& s = d.steps[i];
        out << "    [" << (s.identity_index < sigma.size()
                               ? sigma[s.identity_index].to_string()
                               : std::string("?"))
            << (s.forward ? ", forward" : ", backward");
        for (auto const& [x, image] : s.substitution.images()) {
          out << ", " << x.to_string() << " -> " << image.to_string();
        }
        out << ']';
      }
      out << '\n';
    }
    return out.str();
  }

  std::string format_hasse(lattice::FiniteLattice const& l) {
    std::ostringstream out;
    for (lattice::Element a = 0; a < l.size(); ++a) {
      out << l.name(a) << " <";
      bool any = false;
      for (auto const& [lo, hi] : l.covers()) {
        if (lo == a) {
          out << ' ' << l.name(hi);
          any = true;
        }
      }
      if (!any) {
        out << " (top)";
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace monoidlab::io
