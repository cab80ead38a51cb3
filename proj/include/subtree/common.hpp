#ifndef SUBTREE_COMMON_HPP
#define SUBTREE_COMMON_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace subtree {

inline constexpr const char* kVersion = "0.1.0";

using Vertex = std::size_t;

/// Exact nonnegative counter. Subtree counts grow like 2^n, so nothing here
/// is ever allowed to round.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUBTREE_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  };

SUBTREE_DEFINE_ERROR(NotRealizable)
SUBTREE_DEFINE_ERROR(NotATree)
SUBTREE_DEFINE_ERROR(InvalidVertex)
SUBTREE_DEFINE_ERROR(EmptySet)
SUBTREE_DEFINE_ERROR(InvalidCut)
SUBTREE_DEFINE_ERROR(IndexOutOfRange)
SUBTREE_DEFINE_ERROR(LengthMismatch)
SUBTREE_DEFINE_ERROR(SumMismatch)
SUBTREE_DEFINE_ERROR(NotComparable)
SUBTREE_DEFINE_ERROR(InfeasibleConstraint)
SUBTREE_DEFINE_ERROR(TooLarge)
SUBTREE_DEFINE_ERROR(ParseError)

#undef SUBTREE_DEFINE_ERROR

}  // namespace subtree

#endif  // SUBTREE_COMMON_HPP
