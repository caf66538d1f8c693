#pragma once

#include <stdexcept>
#include <string>

namespace pwp {

/// Base class of every error raised by the library. `kind()` returns a stable
/// short name ("ShapeError", "NoBracket", ...) that the CLI prints verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define PWP_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(#Name, what) {}          \
  };

PWP_DEFINE_ERROR(ShapeError)
PWP_DEFINE_ERROR(ParseError)
PWP_DEFINE_ERROR(DuplicateEdge)
PWP_DEFINE_ERROR(BadWeight)
PWP_DEFINE_ERROR(BlockStructureError)
PWP_DEFINE_ERROR(IndexError)
PWP_DEFINE_ERROR(InvalidArgument)
PWP_DEFINE_ERROR(NumericOverflow)
PWP_DEFINE_ERROR(NoBracket)
PWP_DEFINE_ERROR(IllConditionedBasis)
PWP_DEFINE_ERROR(Degenerate)

#undef PWP_DEFINE_ERROR

}  // namespace pwp
