#ifndef VEXLP_COMMON_HPP
#define VEXLP_COMMON_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace vexlp {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kEulerE = 2.71828182845904523536028747135266250;

// Thrown when an operation's stated precondition is violated.
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a numeric routine cannot reach its tolerance within budget
// and the caller did not opt into a soft-failure result.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(double x) { return std::isfinite(x); }

}  // namespace vexlp

#endif
