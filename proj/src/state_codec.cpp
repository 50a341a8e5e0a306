#include "orbitlab/state_codec.hpp"

#include <utility>

#include "orbitlab/error.hpp"

namespace orbitlab {

namespace {

constexpr std::uint64_t kMaxIndexSpace = std::uint64_t{1} << 63;

}  // namespace

StateCodec::StateCodec(GroupSpec spec) : spec_(std::move(spec)) {
  const std::size_t n = spec_.rank();
  weights_.assign(n, 1);
  // |G|^2 < 2^63 needs |G| < 2^31.5; check each step against the square root.
  constexpr std::uint64_t kMaxOrder = std::uint64_t{3037000499};
  for (std::size_t i = n; i-- > 0;) {
    weights_[i] = group_order_;
    const std::uint32_t d = spec_.modulus(i);
    if (group_order_ > kMaxOrder / d) {
      throw Error(ErrorCode::Budget, "state space of this group does not fit in 63 bits");
    }
    group_order_ *= d;
  }
  state_count_ = group_order_ * group_order_;
  if (state_count_ > kMaxIndexSpace) {
    throw Error(ErrorCode::Budget, "state space of this group does not fit in 63 bits");
  }
  binary_ = spec_.uniform_prime() == 2U;
}

std::uint64_t StateCodec::apply_s(std::uint64_t index) const noexcept {
  const std::uint64_t g = index / group_order_;
  const std::uint64_t k = index % group_order_;
  if (binary_) return (k << spec_.rank()) | g;  // -g == g over Z_2
  std::uint64_t neg_g = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const std::uint32_t d = spec_.modulus(i);
    const std::uint64_t digit = (g / weights_[i]) % d;
    neg_g += (digit == 0 ? 0 : d - digit) * weights_[i];
  }
  return k * group_order_ + neg_g;
}

std::uint64_t StateCodec::apply_t(std::uint64_t index) const noexcept {
  if (binary_) {
    const std::uint64_t g = index >> spec_.rank();
    return index ^ g;  // k ^= g; g sits above the low half
  }
  const std::uint64_t g = index / group_order_;
  const std::uint64_t k = index % group_order_;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const std::uint32_t d = spec_.modulus(i);
    const std::uint64_t gd = (g / weights_[i]) % d;
    const std::uint64_t kd = (k / weights_[i]) % d;
    sum += ((gd + kd) % d) * weights_[i];
  }
  return g * group_order_ + sum;
}

std::uint64_t StateCodec::apply_mat(std::uint64_t index, const Mat2& A) const noexcept {
  const std::uint64_t g = index / group_order_;
  const std::uint64_t k = index % group_order_;
  if (binary_) {
    const std::uint64_t zero = 0;
    const std::uint64_t gm = A.a() ? g : zero;
    const std::uint64_t km = A.c() ? k : zero;
    const std::uint64_t gb = A.b() ? g : zero;
    const std::uint64_t kd = A.d() ? k : zero;
    return ((gm ^ km) << spec_.rank()) | (gb ^ kd);
  }
  const std::uint64_t p = A.modulus();
  std::uint64_t new_g = 0;
  std::uint64_t new_k = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const std::uint64_t gd = (g / weights_[i]) % p;
    const std::uint64_t kd = (k / weights_[i]) % p;
    new_g += ((A.a() * gd + A.c() * kd) % p) * weights_[i];
    new_k += ((A.b() * gd + A.d() * kd) % p) * weights_[i];
  }
  return new_g * group_order_ + new_k;
}

void check_state_budget(const GroupSpec& spec, std::uint64_t budget_states) {
  const ExactInt states = spec.state_count();
  if (states > budget_states) {
    throw Error(ErrorCode::Budget, "group has " + to_decimal(states) +
                                       " pair states, above the budget of " +
                                       std::to_string(budget_states));
  }
}

}  // namespace orbitlab
