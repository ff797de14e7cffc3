#ifndef DPS_ERROR_HPP_
#define DPS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dps {

  enum class ErrorCode {
    DuplicateDomain,
    NotInjective,
    OutOfRange,
    DegreeMismatch,
    NotZeroFree,
    InvalidElement,
    LimitExceeded,
    Unsupported,
    UnknownLetter,
    NotAConsequence,
    BudgetExceeded,
    LetterOccursInW,
    RelationNotFound,
    ParseError
  };

  constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::DuplicateDomain: return "DuplicateDomain";
      case ErrorCode::NotInjective: return "NotInjective";
      case ErrorCode::OutOfRange: return "OutOfRange";
      case ErrorCode::DegreeMismatch: return "DegreeMismatch";
      case ErrorCode::NotZeroFree: return "NotZeroFree";
      case ErrorCode::InvalidElement: return "InvalidElement";
      case ErrorCode::LimitExceeded: return "LimitExceeded";
      case ErrorCode::Unsupported: return "Unsupported";
      case ErrorCode::UnknownLetter: return "UnknownLetter";
      case ErrorCode::NotAConsequence: return "NotAConsequence";
      case ErrorCode::BudgetExceeded: return "BudgetExceeded";
      case ErrorCode::LetterOccursInW: return "LetterOccursInW";
      case ErrorCode::RelationNotFound: return "RelationNotFound";
      case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
  }

  //! Every failure raised by the library. `count()` carries the partial
  //! size reached for LimitExceeded / BudgetExceeded and is 0 otherwise.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what, std::size_t count = 0)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code),
          _count(count) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    std::size_t count() const noexcept {
      return _count;
    }

   private:
    ErrorCode   _code;
    std::size_t _count;
  };

}  // namespace dps

#endif  // DPS_ERROR_HPP_
