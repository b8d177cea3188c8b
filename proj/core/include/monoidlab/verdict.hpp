#ifndef MONOIDLAB_VERDICT_HPP_
#define MONOIDLAB_VERDICT_HPP_

#include <cstdint>
#include <string_view>

namespace monoidlab {

  enum class Outcome { holds, fails, unknown };

  [[nodiscard]] constexpr std::string_view to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::holds:
        return "holds";
      case Outcome::fails:
        return "fails";
      case Outcome::unknown:
        return "unknown";
    }
    return "unknown";
  }

  //! Work counters reported by the enumerating decision procedures.
  struct SearchStats {
    std::uint64_t explored = 0;
    std::uint64_t budget   = 0;
  };

  //! Options shared by the satisfaction checkers.
  struct CheckOptions {
    std::uint64_t budget = 100'000'000;
    unsigned      jobs   = 1;
  };

}  // namespace monoidlab

#endif  // MONOIDLAB_VERDICT_HPP_
