#pragma once

#include <cstdint>
#include <vector>

#include "orbitlab/residue.hpp"

namespace orbitlab {

/// Index-level view of G x G. Every move works directly on state_index
/// values so the enumerators never materialize PairState objects. Z_2^n
/// takes a bit-twiddling path; everything else walks mixed-radix digits.
class StateCodec {
 public:
  /// Throws Error(Budget) when |G|^2 does not fit in 63 bits.
  explicit StateCodec(GroupSpec spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::uint64_t state_count() const noexcept { return state_count_; }
  std::uint64_t group_order() const noexcept { return group_order_; }
  bool is_binary() const noexcept { return binary_; }

  std::uint64_t apply_s(std::uint64_t index) const noexcept;
  std::uint64_t apply_t(std::uint64_t index) const noexcept;
  /// Caller guarantees a uniform prime spec matching A.modulus().
  std::uint64_t apply_mat(std::uint64_t index, const Mat2& A) const noexcept;

  /// True when row i of the state is (0,0) for every i, i.e. index == 0.
  static constexpr bool is_zero(std::uint64_t index) noexcept { return index == 0; }

 private:
  GroupSpec spec_;
  std::uint64_t group_order_ = 1;
  std::uint64_t state_count_ = 1;
  bool binary_ = false;
  std::vector<std::uint64_t> weights_; // mixed-radix place value of entry i
};

/// Throws Error(Budget) when spec has more than budget_states pair states.
void check_state_budget(const GroupSpec& spec, std::uint64_t budget_states);

}  // namespace orbitlab
