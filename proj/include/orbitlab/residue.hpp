#pragma once

// Residue vectors over G = Z_{d_1} x ... x Z_{d_n}, pair states (g,k) in G x G,
// the two generating moves S: (g,k) -> (k,-g) and T: (g,k) -> (g,k+g), and
// SL(2,Z_p) acting on the right of the n x 2 matrix [g|k].

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitlab/exact_int.hpp"

namespace orbitlab {

bool is_prime(std::uint64_t value);

class GroupSpec {
 public:
  /// The trivial group (n = 0).
  GroupSpec() = default;

  /// Product of cyclic groups; every modulus must be >= 2.
  explicit GroupSpec(std::vector<std::uint32_t> moduli);

  /// Z_p^n. p is remembered even when n = 0 so the field-based methods
  /// still know which SL(2,Z_p) acts on the single empty state.
  static GroupSpec uniform(std::uint32_t p, std::size_t n);

  std::size_t rank() const noexcept { return moduli_.size(); }
  std::span<const std::uint32_t> moduli() const noexcept { return moduli_; }
  std::uint32_t modulus(std::size_t i) const { return moduli_.at(i); }

  /// Set when every modulus equals one prime p.
  std::optional<std::uint32_t> uniform_prime() const noexcept { return prime_; }
  bool is_uniform_prime() const noexcept { return prime_.has_value(); }

  /// |G|.
  ExactInt element_count() const;
  /// |G x G| = |G|^2.
  ExactInt state_count() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::uint32_t> moduli_;
  std::optional<std::uint32_t> prime_;
};

using SpecRef = std::shared_ptr<const GroupSpec>;

SpecRef make_spec(GroupSpec spec);

class ResidueVector {
 public:
  /// Entries are reduced modulo their d_i; length must equal spec->rank().
  ResidueVector(SpecRef spec, const std::vector<std::int64_t>& entries);
  static ResidueVector zero(SpecRef spec);

  const GroupSpec& spec() const noexcept { return *spec_; }
  const SpecRef& spec_ref() const noexcept { return spec_; }
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const noexcept { return entries_.size(); }

  bool is_zero() const noexcept;

  ResidueVector operator+(const ResidueVector& other) const;
  ResidueVector operator-() const;
  ResidueVector scaled(std::uint32_t factor) const;

  friend bool operator==(const ResidueVector& lhs, const ResidueVector& rhs);

 private:
  static ResidueVector from_reduced(SpecRef spec, std::vector<std::uint32_t> reduced);
  ResidueVector() = default;

  SpecRef spec_;
  std::vector<std::uint32_t> entries_;
};

class PairState {
 public:
  PairState(ResidueVector g, ResidueVector k);
  /// Convenience: both columns from raw entries.
  static PairState make(SpecRef spec, const std::vector<std::int64_t>& g,
                        const std::vector<std::int64_t>& k);
  static PairState zero(SpecRef spec);

  const ResidueVector& g() const noexcept { return g_; }
  const ResidueVector& k() const noexcept { return k_; }
  const GroupSpec& spec() const noexcept { return g_.spec(); }
  const SpecRef& spec_ref() const noexcept { return g_.spec_ref(); }
  std::size_t rows() const noexcept { return g_.size(); }

  friend bool operator==(const PairState& lhs, const PairState& rhs) {
    return lhs.g_ == rhs.g_ && lhs.k_ == rhs.k_;
  }

 private:
  ResidueVector g_;
  ResidueVector k_;
};

/// Element of SL(2,Z_p), acting on row vectors from the right:
/// (x, y) -> (a*x + c*y, b*x + d*y).
class Mat2 {
 public:
  /// Throws Error(NotPrime) for composite p and Error(InvalidArgument) when
  /// ad - bc is not 1 mod p.
  static Mat2 make(std::uint32_t p, std::int64_t a, std::int64_t b,
                   std::int64_t c, std::int64_t d);
  static Mat2 identity(std::uint32_t p);
  /// [[0,-1],[1,0]]: realizes (g,k) -> (k,-g).
  static Mat2 s_generator(std::uint32_t p);
  /// [[1,1],[0,1]]: realizes (g,k) -> (g,k+g).
  static Mat2 t_generator(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t c() const noexcept { return c_; }
  std::uint32_t d() const noexcept { return d_; }

  Mat2 operator*(const Mat2& rhs) const;

  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  Mat2(std::uint32_t p, std::uint32_t a, std::uint32_t b, std::uint32_t c,
       std::uint32_t d)
      : p_(p), a_(a), b_(b), c_(c), d_(d) {}

  std::uint32_t p_, a_, b_, c_, d_;
};

PairState apply_s(const PairState& s);
PairState apply_t(const PairState& s);
/// Throws Error(Incompatible) unless s lives over Z_p^n with p = A.modulus().
PairState apply_mat(const PairState& s, const Mat2& A);

/// All of SL(2,Z_p) in (a,b,c,d) lexicographic order; p(p^2-1) elements.
std::vector<Mat2> enumerate_sl2(std::uint32_t p);

/// Mixed-radix rank in [0, |G|^2): g is the high half, k the low half, and
/// within each column entry 0 is the most significant digit. For Z_2^n this
/// is the 2n-bit concatenation of g then k.
std::uint64_t state_index(const PairState& s);
PairState state_from_index(std::uint64_t index, SpecRef spec);

/// Row-wise rendering "g_0k_0 g_1k_1 ...". Rows use plain digits when every
/// modulus is at most 10 and "g:k" otherwise; the empty state renders as "-".
std::string to_row_string(const PairState& s);

}  // namespace orbitlab
