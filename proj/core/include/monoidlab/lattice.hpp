// Finite lattices given by their Hasse diagram and the two equivalent tests
// for modular elements.

#ifndef MONOIDLAB_LATTICE_HPP_
#define MONOIDLAB_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monoidlab::lattice {

  using Element = std::size_t;

  //! Thrown by from_covers when the input is not a lattice. `witness` names
  //! the offending pair (a cycle, or a pair without meet or join).
  class LatticeError : public std::invalid_argument {
   public:
    LatticeError(std::string const& what, std::pair<std::string, std::string> witness)
        : std::invalid_argument(what), witness_(std::move(witness)) {}

    [[nodiscard]] std::pair<std::string, std::string> const& witness() const noexcept {
      return witness_;
    }

   private:
    std::pair<std::string, std::string> witness_;
  };

  class FiniteLattice {
   public:
    using Edge = std::pair<std::string, std::string>;

    //! `edges` are pairs (a, b) with a covered by b. Transitive edges are
    //! accepted. Throws std::invalid_argument on unknown or repeated names and
    //! LatticeError if the order is cyclic or some pair lacks a meet or join.
    static FiniteLattice from_covers(std::vector<std::string> elements,
                                     std::vector<Edge> const& edges);

    [[nodiscard]] std::size_t size() const noexcept {
      return names_.size();
    }
    [[nodiscard]] std::string const& name(Element a) const {
      return names_.at(a);
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    //! Throws std::invalid_argument for an unknown name.
    [[nodiscard]] Element index(std::string_view name) const;

    [[nodiscard]] bool leq(Element a, Element b) const {
      return leq_[a * size() + b];
    }
    [[nodiscard]] bool less(Element a, Element b) const {
      return a != b && leq(a, b);
    }
    [[nodiscard]] Element meet(Element a, Element b) const {
      return meet_[a * size() + b];
    }
    [[nodiscard]] Element join(Element a, Element b) const {
      return join_[a * size() + b];
    }
    [[nodiscard]] Element bottom() const noexcept {
      return bottom_;
    }
    [[nodiscard]] Element top() const noexcept {
      return top_;
    }
    //! The cover relation of the order, which may be smaller than the input
    //! edge list; sorted by element index.
    [[nodiscard]] std::vector<std::pair<Element, Element>> const& covers() const noexcept {
      return covers_;
    }

   private:
    std::vector<std::string>                 names_;
    std::vector<bool>                        leq_;
    std::vector<Element>                     meet_;
    std::vector<Element>                     join_;
    std::vector<std::pair<Element, Element>> covers_;
    Element                                  bottom_ = 0;
    Element                                  top_    = 0;
  };

  //! A sublattice o < low < high < i with the center incomparable to both,
  //! center ∧ low = center ∧ high = o and center ∨ low = center ∨ high = i.
  struct Pentagon {
    Element bottom;
    Element top;
    Element low;
    Element high;
    Element center;

    friend bool operator==(Pentagon const&, Pentagon const&) = default;
  };

  //! (x ∨ y) ∧ z = (x ∧ z) ∨ y for every y <= z.
  [[nodiscard]] bool is_modular_element(FiniteLattice const& l, Element x);

  //! The pentagon with center x whose (low, high) pair is least by element
  //! index, or nothing.
  [[nodiscard]] std::optional<Pentagon> find_pentagon_with_center(FiniteLattice const& l,
                                                                  Element              x);

  //! Whether the five elements really form a pentagon sublattice as described.
  [[nodiscard]] bool is_pentagon(FiniteLattice const& l, Pentagon const& p);

  [[nodiscard]] std::vector<Element> modular_elements(FiniteLattice const& l);

  //! The five-element pentagon 0 < a < b < 1, 0 < c < 1 with center c.
  [[nodiscard]] FiniteLattice fig1();
  //! The nine-element lattice 0; atoms x, y, c; coatoms p, q, r, s; 1.
  [[nodiscard]] FiniteLattice fig2();
  //! 0 < 1 < ... < n - 1.
  [[nodiscard]] FiniteLattice chain(std::size_t n);
  //! The subsets of {1..k} ordered by inclusion.
  [[nodiscard]] FiniteLattice boolean(std::size_t k);

  //! `fig1`, `fig2`, `chainN` or `booleanK`.
  [[nodiscard]] FiniteLattice builtin(std::string_view name);
  [[nodiscard]] std::vector<std::string> builtin_names();

}  // namespace monoidlab::lattice

#endif  // MONOIDLAB_LATTICE_HPP_
