#include "shellmoves/errors.hpp"

namespace shellmoves {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::syntax: return "Syntax";
    case Errc::unknown_chord_id: return "UnknownChordId";
    case Errc::duplicate_chord: return "DuplicateChord";
    case Errc::duplicate_endpoint: return "DuplicateEndpoint";
    case Errc::missing_endpoint: return "MissingEndpoint";
    case Errc::bad_sign: return "BadSign";
    case Errc::circle_count_mismatch: return "CircleCountMismatch";
    case Errc::not_a_self_chord: return "NotASelfChord";
    case Errc::not_a_nonself_chord: return "NotANonselfChord";
    case Errc::wrong_component_count: return "WrongComponentCount";
    case Errc::unsupported_component_count: return "UnsupportedComponentCount";
    case Errc::component_count_mismatch: return "ComponentCountMismatch";
    case Errc::stale_site: return "StaleSite";
    case Errc::bad_support: return "BadSupport";
    case Errc::malformed_snail_form: return "MalformedSnailForm";
    case Errc::inconsistent_profile: return "InconsistentProfile";
    case Errc::not_realizable: return "NotRealizable";
    case Errc::constraint_violated: return "ConstraintViolated";
    case Errc::negative_lambda: return "NegativeLambda";
    case Errc::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

bool is_parse_error(Errc code) noexcept {
  switch (code) {
    case Errc::syntax:
    case Errc::unknown_chord_id:
    case Errc::duplicate_chord:
    case Errc::duplicate_endpoint:
    case Errc::missing_endpoint:
    case Errc::bad_sign:
    case Errc::circle_count_mismatch:
      return true;
    default:
      return false;
  }
}

}  // namespace shellmoves
