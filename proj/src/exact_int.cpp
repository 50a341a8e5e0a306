#include "orbitlab/exact_int.hpp"

#include "orbitlab/error.hpp"

namespace orbitlab {

ExactInt ipow(std::uint64_t base, std::uint64_t exponent) {
  ExactInt result = 1;
  ExactInt factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

ExactInt exact_div(const ExactInt& numerator, const ExactInt& denominator) {
  if (denominator == 0) throw Error(ErrorCode::Arithmetic, "division by zero");
  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw Error(ErrorCode::Arithmetic, to_decimal(numerator) + " is not divisible by " +
                                           to_decimal(denominator));
  }
  return quotient;
}

std::string to_decimal(const ExactInt& value) { return value.str(); }

}  // namespace orbitlab
