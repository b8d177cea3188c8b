// monoidlab: command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monoidlab/claims.hpp"
#include "monoidlab/equational.hpp"
#include "monoidlab/families.hpp"
#include "monoidlab/fmon.hpp"
#include "monoidlab/io.hpp"
#include "monoidlab/lattice.hpp"
#include "monoidlab/rees.hpp"
#include "monoidlab/words.hpp"

namespace {

  using monoidlab::io::json;
  namespace ml = monoidlab;

  constexpr int exit_verified = 0;
  constexpr int exit_refuted  = 1;
  constexpr int exit_unknown  = 2;
  constexpr int exit_usage    = 3;

  struct Globals {
    bool          json_output = false;
    bool          timing      = false;
    std::size_t   max_len     = 0;
    std::size_t   max_steps   = 1'000'000;
    std::uint64_t budget      = 100'000'000;
    unsigned      jobs        = 1;
    std::size_t   letters     = 4;
  };

  Globals g;

  ml::CheckOptions options() {
    return {g.budget, g.jobs};
  }

  void print(json const& doc, std::string const& text) {
    if (g.json_output) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << text;
    }
  }

  int outcome_code(ml::Outcome o) {
    switch (o) {
      case ml::Outcome::holds:
        return exit_verified;
      case ml::Outcome::fails:
        return exit_refuted;
      case ml::Outcome::unknown:
        return exit_unknown;
    }
    return exit_unknown;
  }

  int worst(int a, int b) {
    if (a == exit_refuted || b == exit_refuted) {
      return exit_refuted;
    }
    return std::max(a, b);
  }

  std::vector<ml::Word> read_words_file(std::string const& path) {
    std::istringstream in(ml::io::slurp(path));
    return ml::io::read_words(in);
  }

  std::vector<ml::Identity> read_identity_file(std::string const& path) {
    std::istringstream in(ml::io::slurp(path));
    return ml::parse_identities(in);
  }

  // A multiplication table in JSON, or otherwise a W-set file.
  ml::fmon::FiniteMonoid read_monoid(std::string const& path) {
    std::string const text = ml::io::slurp(path);
    auto const        first = text.find_first_not_of(" \t\r\n");
    std::istringstream in(text);
    if (first != std::string::npos && text[first] == '{') {
      return ml::io::read_table(in);
    }
    auto const words = ml::io::read_words(in);
    return ml::fmon::from_rees(ml::rees::ReesMonoid::build(words));
  }

  std::string join(std::vector<std::string> const& parts, std::string const& sep = " ") {
    std::string out;
    for (auto const& p : parts) {
      out += (out.empty() ? "" : sep) + p;
    }
    return out;
  }

  std::string letters_text(ml::LetterSet const& s) {
    std::vector<std::string> parts;
    for (auto x : s) {
      parts.push_back(x.to_string());
    }
    return parts.empty() ? "(none)" : join(parts);
  }

  json letters_json(ml::LetterSet const& s) {
    json out = json::array();
    for (auto x : s) {
      out.push_back(x.to_string());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // word
  ////////////////////////////////////////////////////////////////////////

  int cmd_word(std::string const& text, bool list_factors) {
    auto const w = ml::Word::parse(text);
    auto const f = ml::factors(std::vector<ml::Word>{w});
    json       doc;
    doc["word"]      = w.to_string();
    doc["length"]    = w.size();
    doc["alphabet"]  = letters_json(ml::alphabet(w));
    doc["simple"]    = letters_json(ml::simple_letters(w));
    doc["multiple"]  = letters_json(ml::multiple_letters(w));
    doc["canonical"] = ml::canonical_rename(w).to_string();
    doc["factors"]   = f.size();
    std::ostringstream out;
    out << "word:      " << w.to_string() << '\n'
        << "length:    " << w.size() << '\n'
        << "alphabet:  " << letters_text(ml::alphabet(w)) << '\n'
        << "simple:    " << letters_text(ml::simple_letters(w)) << '\n'
        << "multiple:  " << letters_text(ml::multiple_letters(w)) << '\n'
        << "canonical: " << ml::canonical_rename(w).to_string() << '\n'
        << "factors:   " << f.size() << '\n';
    if (list_factors) {
      json all = json::array();
      for (auto const& x : f) {
        all.push_back(x.to_string());
        out << "  " << x.to_string() << '\n';
      }
      doc["factor_list"] = std::move(all);
    }
    print(doc, out.str());
    return exit_verified;
  }

  ////////////////////////////////////////////////////////////////////////
  // ident
  ////////////////////////////////////////////////////////////////////////

  int cmd_ident_deduce(std::string const& sigma_file, std::string const& target_text) {
    auto const     sigma  = read_identity_file(sigma_file);
    ml::Identity const target = ml::Identity::parse(target_text);
    ml::SearchBudget budget;
    budget.max_word_length =
        g.max_len != 0 ? g.max_len : std::max(target.lhs.size(), target.rhs.size()) + 3;
    budget.max_visited_states = g.max_steps;
    budget.max_depth          = 4 * budget.max_word_length + 16;
    auto const result         = ml::deduce(target.lhs, target.rhs, sigma, budget);
    if (auto const* d = std::get_if<ml::Derivation>(&result)) {
      print(ml::io::to_json(*d, sigma),
            "derived in " + std::to_string(d->steps.size()) + " steps\n"
                + ml::io::format_derivation(*d, sigma));
      return exit_verified;
    }
    auto const&        nf = std::get<ml::NotFoundWithinBudget>(result);
    std::ostringstream out;
    out << "not found within budget: visited " << nf.visited_states << ", expanded "
        << nf.expanded_states << ", depth " << nf.depth_reached
        << (nf.frontier_exhausted ? ", frontier exhausted under the length bound" : "")
        << '\n';
    print(ml::io::to_json(nf), out.str());
    return exit_unknown;
  }

  int cmd_ident_check(std::string const& sigma_file, std::string const& step_text) {
    auto const         sigma = read_identity_file(sigma_file);
    ml::Identity const step  = ml::Identity::parse(step_text);
    auto const         succ  = ml::direct_successors(step.lhs, sigma);
    json               doc;
    doc["from"] = step.lhs.to_string();
    doc["to"]   = step.rhs.to_string();
    for (auto const& s : succ) {
      if (s.word == step.rhs) {
        ml::Derivation d{{step.lhs, step.rhs}, {s.step}};
        doc["direct"] = true;
        doc["step"]   = ml::io::to_json(d, sigma)["steps"][0];
        print(doc, "directly deducible\n" + ml::io::format_derivation(d, sigma));
        return exit_verified;
      }
    }
    doc["direct"]     = false;
    doc["successors"] = succ.size();
    print(doc, "not directly deducible (" + std::to_string(succ.size())
                   + " other successors)\n");
    return exit_refuted;
  }

  ////////////////////////////////////////////////////////////////////////
  // rees
  ////////////////////////////////////////////////////////////////////////

  int cmd_rees_build(std::string const& wfile, bool table) {
    auto const words = read_words_file(wfile);
    auto const m     = ml::rees::ReesMonoid::build(words);
    json       doc;
    json       gens = json::array();
    for (auto const& w : m.generators()) {
      gens.push_back(w.to_string());
    }
    doc["generators"]  = std::move(gens);
    doc["size"]        = m.size();
    doc["nonzero"]     = m.nonzero_count();
    doc["associative"] = m.is_associative();
    std::ostringstream out;
    out << "generators:  " << m.generators().size() << '\n'
        << "size:        " << m.size() << " (including zero)\n"
        << "associative: " << (m.is_associative() ? "yes" : "no") << '\n';
    if (table) {
      doc["table"] = ml::io::table_json(ml::fmon::from_rees(m));
      out << doc["table"].dump() << '\n';
    }
    print(doc, out.str());
    return exit_verified;
  }

  int cmd_rees_elements(std::string const& wfile) {
    auto const m   = ml::rees::ReesMonoid::build(read_words_file(wfile));
    json       doc = json::array();
    std::ostringstream out;
    for (ml::rees::ElementId id = 0; id < m.size(); ++id) {
      auto const e = m.element(id).to_string();
      doc.push_back(e);
      out << id << '\t' << e << '\n';
    }
    print(doc, out.str());
    return exit_verified;
  }

  int cmd_rees_check(std::string const& wfile, std::string const& idfile) {
    auto const m   = ml::rees::ReesMonoid::build(read_words_file(wfile));
    auto const ids = read_identity_file(idfile);
    json       doc = json::array();
    std::ostringstream out;
    int code = exit_verified;
    for (auto const& id : ids) {
      auto const v = ml::rees::satisfies(m, id, options());
      json       item;
      item["identity"] = id.to_string();
      item["verdict"]  = ml::io::to_json(v);
      doc.push_back(std::move(item));
      out << ml::to_string(v.outcome) << "\t" << id.to_string();
      if (v.outcome == ml::Outcome::fails) {
        std::vector<std::string> parts;
        for (auto const& [x, e] : v.witness) {
          parts.push_back(x.to_string() + " -> " + e.to_string());
        }
        out << "\t[" << join(parts, ", ") << ']';
      }
      out << '\n';
      code = worst(code, outcome_code(v.outcome));
    }
    print(doc, out.str());
    return code;
  }

  ////////////////////////////////////////////////////////////////////////
  // fmon
  ////////////////////////////////////////////////////////////////////////

  int cmd_fmon_check(std::string const& mfile, std::string const& idfile) {
    auto const m   = read_monoid(mfile);
    auto const ids = read_identity_file(idfile);
    json       doc = json::array();
    std::ostringstream out;
    int code = exit_verified;
    for (auto const& id : ids) {
      auto const v = ml::fmon::satisfies(m, id, options());
      json       item;
      item["identity"] = id.to_string();
      item["verdict"]  = ml::io::to_json(v, m);
      doc.push_back(std::move(item));
      out << ml::to_string(v.outcome) << '\t' << id.to_string() << '\n';
      code = worst(code, outcome_code(v.outcome));
    }
    print(doc, out.str());
    return code;
  }

  int cmd_fmon_theory(std::string const& mfile) {
    auto const m = read_monoid(mfile);
    ml::fmon::TheoryParams params;
    params.max_length  = g.max_len != 0 ? g.max_len : params.max_length;
    params.max_letters = g.letters;
    auto const th      = ml::fmon::truncated_theory(m, params, g.budget * 20);
    json       doc;
    doc["max_length"]      = params.max_length;
    doc["max_letters"]     = params.max_letters;
    doc["complete"]        = th.complete;
    doc["complete_length"] = th.complete_length;
    json ids               = json::array();
    std::ostringstream out;
    for (auto const& id : th.identities) {
      ids.push_back(id.to_string());
      out << id.to_string() << '\n';
    }
    doc["identities"] = std::move(ids);
    if (!th.complete) {
      out << "# incomplete: complete up to length " << th.complete_length << '\n';
    }
    print(doc, out.str());
    return th.complete ? exit_verified : exit_unknown;
  }

  int cmd_fmon_isoterm(std::string const& mfile, std::string const& word, std::size_t fresh) {
    auto const m     = read_monoid(mfile);
    auto const u     = ml::Word::parse(word);
    std::size_t bound = g.max_len != 0 ? g.max_len : 2 * u.size() + 1;
    auto const v     = ml::fmon::isoterm_check(m, u, bound, fresh, options());
    std::ostringstream out;
    switch (v.outcome) {
      case ml::fmon::IsotermOutcome::isoterm_up_to:
        out << "isoterm up to length " << bound << '\n';
        break;
      case ml::fmon::IsotermOutcome::not_isoterm:
        out << "not an isoterm: " << u.to_string() << " = " << v.witness->to_string() << '\n';
        break;
      case ml::fmon::IsotermOutcome::unknown:
        out << "unknown: budget exhausted after " << v.stats.explored << " evaluations\n";
        break;
    }
    print(ml::io::to_json(v), out.str());
    switch (v.outcome) {
      case ml::fmon::IsotermOutcome::isoterm_up_to:
        return exit_verified;
      case ml::fmon::IsotermOutcome::not_isoterm:
        return exit_refuted;
      case ml::fmon::IsotermOutcome::unknown:
        break;
    }
    return exit_unknown;
  }

  int cmd_fmon_product(std::string const& a, std::string const& b) {
    auto const p = ml::fmon::direct_product(read_monoid(a), read_monoid(b));
    std::cout << ml::io::table_json(p).dump(g.json_output ? 2 : -1) << '\n';
    return exit_verified;
  }

  ////////////////////////////////////////////////////////////////////////
  // family
  ////////////////////////////////////////////////////////////////////////

  ml::families::Permutation perm_or_identity(std::string const& text, std::size_t degree) {
    return text.empty() ? ml::families::Permutation::identity(degree)
                        : ml::families::Permutation::parse(text);
  }

  int cmd_family_a_word(std::size_t n, std::size_t m, std::string const& perm) {
    auto const rho = perm_or_identity(perm, n + m);
    auto const a   = ml::families::a_word(n, m, rho);
    auto const ap  = ml::families::a_prime_word(n, m, rho);
    json       doc;
    doc["a"]       = a.to_string();
    doc["a_prime"] = ap.to_string();
    print(doc, a.to_string() + " = " + ap.to_string() + "\n");
    return exit_verified;
  }

  int cmd_family_basis(std::size_t n_max, std::size_t m_max) {
    auto const         basis = ml::families::theorem_ii_basis(n_max, m_max);
    json               doc   = json::array();
    std::ostringstream out;
    for (auto const& id : basis) {
      doc.push_back(id.to_string());
      out << id.to_string() << '\n';
    }
    print(doc, out.str());
    return exit_verified;
  }

  int cmd_family_variety(std::string const& spec_text) {
    auto const         spec = ml::families::VarietySpec::parse(spec_text);
    auto const         gens = ml::families::variety_generators(spec);
    json               doc  = json::array();
    std::ostringstream out;
    for (auto const& w : gens) {
      doc.push_back(w.to_string());
      out << w.to_string() << '\n';
    }
    print(doc, out.str());
    return exit_verified;
  }

  int cmd_family_pair(std::pair<ml::Word, ml::Word> const& uv) {
    json doc;
    doc["u"] = uv.first.to_string();
    doc["v"] = uv.second.to_string();
    print(doc, uv.first.to_string() + "\n" + uv.second.to_string() + "\n");
    return exit_verified;
  }

  int cmd_family_step2(std::size_t n, std::size_t m, std::string const& perm, bool printed) {
    auto const c = ml::families::step2_construction(
        n, m, perm_or_identity(perm, n + m),
        printed ? ml::families::Step2Reading::as_printed
                : ml::families::Step2Reading::consistent);
    json       doc;
    doc["branch"]  = c.low_branch ? "low" : "high";
    doc["p"]       = c.p.to_string();
    doc["r"]       = c.r.to_string();
    json xs        = json::array();
    for (auto const& w : c.x_generators) {
      xs.push_back(w.to_string());
    }
    doc["x_generators"] = std::move(xs);
    doc["u"]            = c.u.to_string();
    doc["a"]            = c.a.to_string();
    doc["a_prime"]      = c.a_prime.to_string();
    doc["u_prime"]      = c.u_prime.to_string();
    std::ostringstream out;
    for (auto const& [key, value] : doc.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << '\n';
    }
    print(doc, out.str());
    return exit_verified;
  }

  ////////////////////////////////////////////////////////////////////////
  // lattice
  ////////////////////////////////////////////////////////////////////////

  ml::lattice::FiniteLattice read_lattice_file(std::string const& path) {
    std::istringstream in(ml::io::slurp(path));
    return ml::io::read_lattice(in);
  }

  int lattice_element(ml::lattice::FiniteLattice const& l, std::string const& name) {
    auto const x       = l.index(name);
    bool const modular = ml::lattice::is_modular_element(l, x);
    auto const pent    = ml::lattice::find_pentagon_with_center(l, x);
    json       doc;
    doc["element"] = name;
    doc["modular"] = modular;
    std::string text = name + (modular ? " is a modular element\n" : " is not a modular element\n");
    if (pent) {
      doc["pentagon"] = ml::io::to_json(l, *pent);
      text += "pentagon: " + l.name(pent->bottom) + " < " + l.name(pent->low) + " < "
              + l.name(pent->high) + " < " + l.name(pent->top) + ", center "
              + l.name(pent->center) + "\n";
    }
    print(doc, text);
    return modular ? exit_verified : exit_refuted;
  }

  int lattice_modular(ml::lattice::FiniteLattice const& l) {
    json               doc = json::array();
    std::ostringstream out;
    out << ml::io::format_hasse(l);
    std::vector<std::string> mods;
    for (auto x : ml::lattice::modular_elements(l)) {
      doc.push_back(l.name(x));
      mods.push_back(l.name(x));
    }
    out << "modular elements: " << join(mods) << '\n';
    print(doc, out.str());
    return exit_verified;
  }

  ////////////////////////////////////////////////////////////////////////
  // claim
  ////////////////////////////////////////////////////////////////////////

  struct ClaimArgs {
    std::string              id;
    ml::claims::ClaimParams  params;
    std::size_t              n = 0;
    std::size_t              m = 0;
    std::string              perm;
    std::string              variety;
    std::string              target;
    std::string              reading;
  };

  int cmd_claim(ClaimArgs& a) {
    if (a.id == "list") {
      json               doc = json::array();
      std::ostringstream out;
      for (auto const& info : ml::claims::registry()) {
        json item;
        item["claim"]     = info.id;
        item["statement"] = info.statement;
        item["options"]   = info.options;
        doc.push_back(std::move(item));
        out << info.id << (info.options.empty() ? "" : " [" + info.options + "]") << "\n  "
            << info.statement << '\n';
      }
      print(doc, out.str());
      return exit_verified;
    }
    auto& p = a.params;
    if (a.n != 0) {
      p.n = a.n;
    }
    if (a.m != 0) {
      p.m = a.m;
    }
    if (!a.perm.empty()) {
      p.perm = a.perm;
    }
    if (!a.variety.empty()) {
      p.variety = a.variety;
    }
    if (!a.target.empty()) {
      p.target = a.target;
    }
    if (!a.reading.empty()) {
      p.reading = a.reading;
    }
    p.budget    = g.budget;
    p.jobs      = g.jobs;
    p.max_len   = g.max_len;
    p.max_steps = g.max_steps;
    auto const report = ml::claims::verify(a.id, p);
    std::cout << ml::claims::emit(report,
                                  g.json_output ? ml::claims::Format::json
                                                : ml::claims::Format::text,
                                  g.timing);
    return ml::claims::exit_code(report.status);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees quotient monoids, identities and modular elements"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json_output, "Machine-readable output");
  app.add_flag("--timing", g.timing, "Include wall time in claim reports");
  app.add_option("--max-len", g.max_len, "Word length bound (0: command default)");
  app.add_option("--max-steps", g.max_steps, "Visited-state bound for deduce");
  app.add_option("--budget", g.budget, "Enumeration budget");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--letters", g.letters, "Letter bound for truncated theories");

  int code = exit_verified;

  // word
  std::string word_text;
  bool        list_factors = false;
  auto*       word         = app.add_subcommand("word", "Describe a word");
  word->add_option("word", word_text, "Word such as \"x t1 x\"")->required();
  word->add_flag("--factors", list_factors, "List all factors");
  word->callback([&] { code = cmd_word(word_text, list_factors); });

  // ident
  std::string sigma_file, ident_text;
  auto*       ident = app.add_subcommand("ident", "Equational deduction");
  ident->require_subcommand(1);
  auto* deduce = ident->add_subcommand("deduce", "Search for a derivation of an identity");
  deduce->add_option("sigma", sigma_file, "Identity file")->required();
  deduce->add_option("identity", ident_text, "Target \"u = v\"")->required();
  deduce->callback([&] { code = cmd_ident_deduce(sigma_file, ident_text); });
  auto* check = ident->add_subcommand("check", "Test whether u = v is one deduction step");
  check->add_option("sigma", sigma_file, "Identity file")->required();
  check->add_option("identity", ident_text, "Step \"u = v\"")->required();
  check->callback([&] { code = cmd_ident_check(sigma_file, ident_text); });

  // rees
  std::string wfile, idfile;
  bool        with_table = false;
  auto*       rees       = app.add_subcommand("rees", "Rees quotients M(W)");
  rees->require_subcommand(1);
  auto* rbuild = rees->add_subcommand("build", "Build M(W) from a W-set file");
  rbuild->add_option("words", wfile, "W-set file")->required();
  rbuild->add_flag("--table", with_table, "Emit the multiplication table");
  rbuild->callback([&] { code = cmd_rees_build(wfile, with_table); });
  auto* relems = rees->add_subcommand("elements", "List the elements of M(W)");
  relems->add_option("words", wfile, "W-set file")->required();
  relems->callback([&] { code = cmd_rees_elements(wfile); });
  auto* rcheck = rees->add_subcommand("check", "Check identities in M(W)");
  rcheck->add_option("words", wfile, "W-set file")->required();
  rcheck->add_option("identities", idfile, "Identity file")->required();
  rcheck->callback([&] { code = cmd_rees_check(wfile, idfile); });

  // fmon
  std::string mfile, mfile2, iso_word;
  std::size_t fresh = 1;
  auto*       fmon  = app.add_subcommand("fmon", "Finite monoids from tables or W-sets");
  fmon->require_subcommand(1);
  auto* fcheck = fmon->add_subcommand("check", "Check identities by enumeration");
  fcheck->add_option("monoid", mfile, "Table JSON or W-set file")->required();
  fcheck->add_option("identities", idfile, "Identity file")->required();
  fcheck->callback([&] { code = cmd_fmon_check(mfile, idfile); });
  auto* ftheory = fmon->add_subcommand("theory", "Truncated equational theory");
  ftheory->add_option("monoid", mfile, "Table JSON or W-set file")->required();
  ftheory->callback([&] { code = cmd_fmon_theory(mfile); });
  auto* fiso = fmon->add_subcommand("isoterm", "Bounded isoterm search");
  fiso->add_option("monoid", mfile, "Table JSON or W-set file")->required();
  fiso->add_option("word", iso_word, "Candidate isoterm")->required();
  fiso->add_option("--fresh", fresh, "Extra letters allowed in v");
  fiso->callback([&] { code = cmd_fmon_isoterm(mfile, iso_word, fresh); });
  auto* fprod = fmon->add_subcommand("product", "Direct product table");
  fprod->add_option("a", mfile, "Table JSON or W-set file")->required();
  fprod->add_option("b", mfile2, "Table JSON or W-set file")->required();
  fprod->callback([&] { code = cmd_fmon_product(mfile, mfile2); });

  // family
  std::size_t fam_n = 1, fam_m = 1, n_max = 1, m_max = 1;
  std::string fam_perm, fam_spec;
  auto*       family = app.add_subcommand("family", "Word and identity families");
  family->require_subcommand(1);
  auto* aw = family->add_subcommand("a-word", "a_{n,m}[rho] = a'_{n,m}[rho]");
  aw->add_option("--n", fam_n)->check(CLI::PositiveNumber);
  aw->add_option("--m", fam_m)->check(CLI::PositiveNumber);
  aw->add_option("--perm", fam_perm, "One-line permutation, default identity");
  aw->callback([&] { code = cmd_family_a_word(fam_n, fam_m, fam_perm); });
  auto* basis = family->add_subcommand("basis", "Identity basis up to n-max, m-max");
  basis->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  basis->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
  basis->callback([&] { code = cmd_family_basis(n_max, m_max); });
  auto* var = family->add_subcommand("variety", "Generators of a finite variety spec");
  var->add_option("spec", fam_spec, "empty|one|x|xy|chain:N|chain-zigzag:N")->required();
  var->callback([&] { code = cmd_family_variety(fam_spec); });
  family->add_subcommand("step1", "Step 1 word pair")->callback([&] {
    code = cmd_family_pair(ml::families::step1_words());
  });
  family->add_subcommand("step3", "Step 3 word pair")->callback([&] {
    code = cmd_family_pair(ml::families::step3_words());
  });
  auto* s2 = family->add_subcommand("step2", "Step 2 construction");
  s2->add_option("--n", fam_n)->check(CLI::PositiveNumber);
  s2->add_option("--m", fam_m)->check(CLI::PositiveNumber);
  s2->add_option("--perm", fam_perm, "One-line permutation, default identity");
  bool as_printed = false;
  s2->add_flag("--as-printed", as_printed, "Order the tail blocks of r as z_i t_i");
  s2->callback([&] { code = cmd_family_step2(fam_n, fam_m, fam_perm, as_printed); });

  // lattice
  std::string lfile, element, builtin_name;
  auto*       lattice = app.add_subcommand("lattice", "Modular elements of finite lattices");
  lattice->require_subcommand(1);
  auto* lcheck = lattice->add_subcommand("check", "Test one element");
  lcheck->add_option("file", lfile, "Lattice file")->required();
  lcheck->add_option("--element", element, "Element name")->required();
  lcheck->callback([&] { code = lattice_element(read_lattice_file(lfile), element); });
  auto* lmod = lattice->add_subcommand("modular", "List all modular elements");
  lmod->add_option("file", lfile, "Lattice file")->required();
  lmod->callback([&] { code = lattice_modular(read_lattice_file(lfile)); });
  auto* lbuiltin = lattice->add_subcommand("builtin", "Built-in lattice");
  lbuiltin->add_option("name", builtin_name, "fig1, fig2, chainN or booleanK")->required();
  lbuiltin->add_option("--element", element, "Test one element");
  lbuiltin->callback([&] {
    auto const l = ml::lattice::builtin(builtin_name);
    code         = element.empty() ? lattice_modular(l) : lattice_element(l, element);
  });

  // claim
  ClaimArgs claim_args;
  auto*     claim = app.add_subcommand("claim", "Run a scripted check (`claim list`)");
  claim->add_option("id", claim_args.id, "Claim id or `list`")->required();
  claim->add_option("--n", claim_args.n, "n parameter")->check(CLI::PositiveNumber);
  claim->add_option("--m", claim_args.m, "m parameter")->check(CLI::PositiveNumber);
  claim->add_option("--perm", claim_args.perm, "One-line permutation");
  claim->add_option("--variety", claim_args.variety, "Variety spec");
  claim->add_option("--target", claim_args.target, "Target identity \"u = v\"");
  claim->add_option("--reading", claim_args.reading, "Step 2 reading: consistent|as-printed");
  claim->callback([&] { code = cmd_claim(claim_args); });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::out_of_range const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::length_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_unknown;
  } catch (std::runtime_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return code;
}
