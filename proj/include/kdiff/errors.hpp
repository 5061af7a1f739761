#pragma once

#include <stdexcept>
#include <string>

namespace kdiff {

/// Base of every error the library raises for mathematically invalid input.
/// The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define KDIFF_DEFINE_ERROR(Name)                                      \
  class Name : public DomainError {                                   \
   public:                                                            \
    explicit Name(const std::string& what) : DomainError(#Name, what) {} \
  };

KDIFF_DEFINE_ERROR(InvalidIndex)
KDIFF_DEFINE_ERROR(DimensionMismatch)
KDIFF_DEFINE_ERROR(WrongGenus)
KDIFF_DEFINE_ERROR(InvalidSpec)
KDIFF_DEFINE_ERROR(BadSignature)
KDIFF_DEFINE_ERROR(SingularSystem)
KDIFF_DEFINE_ERROR(OutOfCatalog)
KDIFF_DEFINE_ERROR(BadInput)
KDIFF_DEFINE_ERROR(MixedEdgeOrders)
KDIFF_DEFINE_ERROR(DirectedLoop)
KDIFF_DEFINE_ERROR(MissingResidueState)
KDIFF_DEFINE_ERROR(BudgetExceeded)

#undef KDIFF_DEFINE_ERROR

/// Malformed textual input (JSON, rational strings, flag values).
/// Not a DomainError: the CLI maps it to exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kdiff
