#pragma once

#include <stdexcept>
#include <string>

namespace shellmoves {

/// Failure categories surfaced by the library. The CLI maps them onto exit codes.
enum class Errc {
  syntax,
  unknown_chord_id,
  duplicate_chord,
  duplicate_endpoint,
  missing_endpoint,
  bad_sign,
  circle_count_mismatch,
  not_a_self_chord,
  not_a_nonself_chord,
  wrong_component_count,
  unsupported_component_count,
  component_count_mismatch,
  stale_site,
  bad_support,
  malformed_snail_form,
  inconsistent_profile,
  not_realizable,
  constraint_violated,
  negative_lambda,
  budget_exceeded,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// True for errors caused by malformed input text rather than bad arguments.
bool is_parse_error(Errc code) noexcept;

}  // namespace shellmoves
