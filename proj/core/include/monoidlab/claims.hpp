// Scripted checks of the finitely verifiable statements and their reports.

#ifndef MONOIDLAB_CLAIMS_HPP_
#define MONOIDLAB_CLAIMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoidlab/io.hpp"

namespace monoidlab::claims {

  enum class Status { verified, refuted, unknown };

  [[nodiscard]] std::string_view to_string(Status s) noexcept;

  //! 0 verified, 1 refuted, 2 unknown.
  [[nodiscard]] int exit_code(Status s) noexcept;

  struct ClaimParams {
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<std::string> perm;
    std::optional<std::string> variety;
    std::optional<std::string> target;
    //! `consistent` (default) or `as-printed`; see families::Step2Reading.
    std::optional<std::string> reading;
    std::uint64_t              budget    = 100'000'000;
    std::size_t                max_len   = 0;  // 0: input length + 3
    std::size_t                max_steps = 1'000'000;
    unsigned                   jobs      = 1;
  };

  struct ClaimReport {
    std::string id;
    std::string statement;
    Status      status = Status::unknown;
    io::json    params;
    io::json    evidence;
    double      seconds = 0;
  };

  struct ClaimInfo {
    std::string id;
    std::string statement;
    std::string options;
  };

  [[nodiscard]] std::vector<ClaimInfo> registry();

  //! Throws std::invalid_argument for an unknown id or bad parameters.
  [[nodiscard]] ClaimReport verify(std::string_view id, ClaimParams const& params);

  enum class Format { text, json };

  //! Wall time is included only when `timing` is set, so that identical
  //! invocations produce identical output by default.
  [[nodiscard]] std::string emit(ClaimReport const& r, Format format, bool timing = false);

}  // namespace monoidlab::claims

#endif  // MONOIDLAB_CLAIMS_HPP_
