#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitlab {

/// Unbounded signed integer used for every count and formula value.
using ExactInt = boost::multiprecision::cpp_int;

/// base^exponent, exact.
ExactInt ipow(std::uint64_t base, std::uint64_t exponent);

/// numerator / denominator; throws Error(Arithmetic) on a nonzero remainder
/// or a zero denominator.
ExactInt exact_div(const ExactInt& numerator, const ExactInt& denominator);

std::string to_decimal(const ExactInt& value);

}  // namespace orbitlab
