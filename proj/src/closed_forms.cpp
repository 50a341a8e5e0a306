#include "orbitlab/closed_forms.hpp"

#include <string>

#include "orbitlab/error.hpp"
#include "orbitlab/residue.hpp"

namespace orbitlab {

namespace {

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

void require_at_least(std::int64_t n, std::int64_t lowest) {
  if (n < lowest) {
    throw Error(ErrorCode::InvalidArgument,
                "n = " + std::to_string(n) + " must be at least " + std::to_string(lowest));
  }
}

std::uint64_t as_exponent(std::int64_t e) { return static_cast<std::uint64_t>(e); }

}  // namespace

ExactInt r_numerator(std::uint32_t p, std::int64_t n) {
  require_prime(p);
  require_at_least(n, 1);
  const ExactInt pp = ExactInt(p) * p;
  return ipow(p, as_exponent(2 * n - 1)) + ipow(p, as_exponent(n + 1)) -
         ipow(p, as_exponent(n - 1)) + pp - p - 1;
}

ExactInt r_formula(std::uint32_t p, std::int64_t n) {
  require_prime(p);
  require_at_least(n, 0);
  if (n == 0) return 1;
  return exact_div(r_numerator(p, n), ExactInt(p) * p - 1);
}

ExactInt r_p2_product(std::int64_t n) {
  require_at_least(n, 1);
  return exact_div((ipow(2, as_exponent(n)) + 1) * (ipow(2, as_exponent(n - 1)) + 1), 3);
}

ExactInt f_closed(std::uint32_t p, std::int64_t n) {
  require_prime(p);
  require_at_least(n, 1);
  return ipow(p, as_exponent(n - 1)) * (ipow(p, as_exponent(n)) + p - 1);
}

ExactInt f_recurrence(std::uint32_t p, std::int64_t n) {
  require_prime(p);
  require_at_least(n, 1);
  ExactInt f = 2 * ExactInt(p) - 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    f = p * f + ipow(p, as_exponent(2 * i - 2)) * (p - 1);
  }
  return f;
}

ExactInt r_telescoped(std::uint32_t p, std::int64_t n) {
  require_prime(p);
  require_at_least(n, 1);
  ExactInt r = 2;
  for (std::int64_t i = 1; i < n; ++i) r += f_closed(p, i);
  return r;
}

std::vector<std::pair<std::int64_t, ExactInt>> sequence_table(std::uint32_t p,
                                                              std::int64_t n_max) {
  require_prime(p);
  require_at_least(n_max, 0);
  std::vector<std::pair<std::int64_t, ExactInt>> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) table.emplace_back(n, r_formula(p, n));
  return table;
}

}  // namespace orbitlab
