// Text file readers and JSON serialisation for the library's result types.
// JSON objects use insertion-ordered keys so output is byte-stable.

#ifndef MONOIDLAB_IO_HPP_
#define MONOIDLAB_IO_HPP_

#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monoidlab/equational.hpp"
#include "monoidlab/fmon.hpp"
#include "monoidlab/lattice.hpp"
#include "monoidlab/rees.hpp"
#include "monoidlab/words.hpp"

namespace monoidlab::io {

  using json = nlohmann::ordered_json;

  //! One word per line; blank lines and `#` comments are skipped.
  [[nodiscard]] std::vector<Word> read_words(std::istream& in);

  //! Lines `a < b` are cover edges; any other line lists element names.
  //! Elements mentioned only in edges are appended in order of appearance.
  [[nodiscard]] lattice::FiniteLattice read_lattice(std::istream& in);

  //! `{"elements": [...], "identity": i, "table": [[...], ...]}`, either at
  //! the top level or under a `table` key.
  [[nodiscard]] fmon::FiniteMonoid read_table(std::istream& in);
  [[nodiscard]] json               table_json(fmon::FiniteMonoid const& m);

  //! Reads the file at `path`, throwing std::runtime_error if it cannot be
  //! opened.
  [[nodiscard]] std::string slurp(std::string const& path);

  [[nodiscard]] json to_json(Word const& w);
  [[nodiscard]] json to_json(Identity const& id);
  [[nodiscard]] json to_json(Substitution const& phi);
  [[nodiscard]] json to_json(SearchStats const& s);
  [[nodiscard]] json to_json(Derivation const& d, std::span<Identity const> sigma);
  [[nodiscard]] json to_json(NotFoundWithinBudget const& n);
  [[nodiscard]] json to_json(rees::Verdict const& v);
  [[nodiscard]] json to_json(fmon::Verdict const& v, fmon::FiniteMonoid const& m);
  [[nodiscard]] json to_json(fmon::IsotermVerdict const& v);
  [[nodiscard]] json to_json(lattice::FiniteLattice const& l, lattice::Pentagon const& p);

  //! Human-readable derivation: one word per line with the step used.
  [[nodiscard]] std::string format_derivation(Derivation const&         d,
                                              std::span<Identity const> sigma);

  //! Text Hasse diagram: one line per element listing its upper covers.
  [[nodiscard]] std::string format_hasse(lattice::FiniteLattice const& l);

}  // namespace monoidlab::io

#endif  // MONOIDLAB_IO_HPP_
