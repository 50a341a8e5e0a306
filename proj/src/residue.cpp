#include "orbitlab/residue.hpp"

#include <algorithm>
#include <utility>

#include "orbitlab/error.hpp"
#include "orbitlab/state_codec.hpp"

namespace orbitlab {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t f = 3; f <= value / f; f += 2) {
    if (value % f == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t modulus) {
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  return static_cast<std::uint32_t>(r);
}

void require_same_spec(const GroupSpec& lhs, const GroupSpec& rhs) {
  if (!(lhs == rhs)) {
    throw Error(ErrorCode::Incompatible, "residue vectors live over different groups");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
  for (std::uint32_t d : moduli_) {
    if (d < 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "modulus " + std::to_string(d) + " is below 2");
    }
  }
  if (!moduli_.empty() && is_prime(moduli_.front()) &&
      std::all_of(moduli_.begin(), moduli_.end(),
                  [&](std::uint32_t d) { return d == moduli_.front(); })) {
    prime_ = moduli_.front();
  }
}

GroupSpec GroupSpec::uniform(std::uint32_t p, std::size_t n) {
  if (p < 2) {
    throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is below 2");
  }
  GroupSpec spec(std::vector<std::uint32_t>(n, p));
  if (n == 0 && is_prime(p)) spec.prime_ = p;
  return spec;
}

ExactInt GroupSpec::element_count() const {
  ExactInt total = 1;
  for (std::uint32_t d : moduli_) total *= d;
  return total;
}

ExactInt GroupSpec::state_count() const {
  ExactInt order = element_count();
  return order * order;
}

SpecRef make_spec(GroupSpec spec) {
  return std::make_shared<const GroupSpec>(std::move(spec));
}

// ---------------------------------------------------------------------------
// ResidueVector

ResidueVector ResidueVector::from_reduced(SpecRef spec, std::vector<std::uint32_t> reduced) {
  ResidueVector v;
  v.spec_ = std::move(spec);
  v.entries_ = std::move(reduced);
  return v;
}

ResidueVector::ResidueVector(SpecRef spec, const std::vector<std::int64_t>& entries)
    : spec_(std::move(spec)) {
  if (!spec_) throw Error(ErrorCode::InvalidArgument, "null group spec");
  if (entries.size() != spec_->rank()) {
    throw Error(ErrorCode::InvalidArgument,
                "vector of length " + std::to_string(entries.size()) +
                    " does not match group rank " + std::to_string(spec_->rank()));
  }
  entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries_.push_back(reduce(entries[i], spec_->modulus(i)));
  }
}

ResidueVector ResidueVector::zero(SpecRef spec) {
  if (!spec) throw Error(ErrorCode::InvalidArgument, "null group spec");
  const std::size_t n = spec->rank();
  return from_reduced(std::move(spec), std::vector<std::uint32_t>(n, 0));
}

bool ResidueVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::uint32_t e) { return e == 0; });
}

ResidueVector ResidueVector::operator+(const ResidueVector& other) const {
  require_same_spec(*spec_, *other.spec_);
  std::vector<std::uint32_t> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t sum = std::uint64_t{entries_[i]} + other.entries_[i];
    out[i] = static_cast<std::uint32_t>(sum % spec_->modulus(i));
  }
  return from_reduced(spec_, std::move(out));
}

ResidueVector ResidueVector::operator-() const {
  std::vector<std::uint32_t> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = entries_[i] == 0 ? 0 : spec_->modulus(i) - entries_[i];
  }
  return from_reduced(spec_, std::move(out));
}

ResidueVector ResidueVector::scaled(std::uint32_t factor) const {
  std::vector<std::uint32_t> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(std::uint64_t{entries_[i]} * factor %
                                        spec_->modulus(i));
  }
  return from_reduced(spec_, std::move(out));
}

bool operator==(const ResidueVector& lhs, const ResidueVector& rhs) {
  return lhs.entries_ == rhs.entries_ && *lhs.spec_ == *rhs.spec_;
}

// ---------------------------------------------------------------------------
// PairState

PairState::PairState(ResidueVector g, ResidueVector k) : g_(std::move(g)), k_(std::move(k)) {
  require_same_spec(g_.spec(), k_.spec());
}

PairState PairState::make(SpecRef spec, const std::vector<std::int64_t>& g,
                          const std::vector<std::int64_t>& k) {
  return PairState(ResidueVector(spec, g), ResidueVector(spec, k));
}

PairState PairState::zero(SpecRef spec) {
  return PairState(ResidueVector::zero(spec), ResidueVector::zero(spec));
}

// ---------------------------------------------------------------------------
// Mat2

Mat2 Mat2::make(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                std::int64_t d) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "SL(2,Z_p) needs prime p, got " + std::to_string(p));
  }
  Mat2 m(p, reduce(a, p), reduce(b, p), reduce(c, p), reduce(d, p));
  const std::uint64_t ad = std::uint64_t{m.a_} * m.d_ % p;
  const std::uint64_t bc = std::uint64_t{m.b_} * m.c_ % p;
  if ((ad + p - bc) % p != 1 % p) {
    throw Error(ErrorCode::InvalidArgument, "matrix determinant is not 1 mod " +
                                                std::to_string(p));
  }
  return m;
}

Mat2 Mat2::identity(std::uint32_t p) { return make(p, 1, 0, 0, 1); }
Mat2 Mat2::s_generator(std::uint32_t p) { return make(p, 0, -1, 1, 0); }
Mat2 Mat2::t_generator(std::uint32_t p) { return make(p, 1, 1, 0, 1); }

Mat2 Mat2::operator*(const Mat2& rhs) const {
  if (p_ != rhs.p_) {
    throw Error(ErrorCode::Incompatible, "matrix moduli differ");
  }
  const std::uint64_t p = p_;
  auto dot = [p](std::uint64_t x0, std::uint64_t y0, std::uint64_t x1, std::uint64_t y1) {
    return static_cast<std::uint32_t>((x0 * y0 + x1 * y1) % p);
  };
  return Mat2(p_, dot(a_, rhs.a_, b_, rhs.c_), dot(a_, rhs.b_, b_, rhs.d_),
              dot(c_, rhs.a_, d_, rhs.c_), dot(c_, rhs.b_, d_, rhs.d_));
}

std::vector<Mat2> enumerate_sl2(std::uint32_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "SL(2,Z_p) needs prime p, got " + std::to_string(p));
  }
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>(p) * (std::uint64_t{p} * p - 1));
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      for (std::uint64_t c = 0; c < p; ++c) {
        for (std::uint64_t d = 0; d < p; ++d) {
          if ((a * d + p * p - b * c) % p == 1) {
            out.push_back(Mat2::make(p, a, b, c, d));
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// moves

PairState apply_s(const PairState& s) { return PairState(s.k(), -s.g()); }

PairState apply_t(const PairState& s) { return PairState(s.g(), s.k() + s.g()); }

PairState apply_mat(const PairState& s, const Mat2& A) {
  const auto prime = s.spec().uniform_prime();
  if (!prime || *prime != A.modulus()) {
    throw Error(ErrorCode::Incompatible,
                "matrix over Z_" + std::to_string(A.modulus()) +
                    " cannot act on this group");
  }
  return PairState(s.g().scaled(A.a()) + s.k().scaled(A.c()),
                   s.g().scaled(A.b()) + s.k().scaled(A.d()));
}

// ---------------------------------------------------------------------------
// rank / unrank

std::uint64_t state_index(const PairState& s) {
  const GroupSpec& spec = s.spec();
  StateCodec codec(spec);  // rejects index spaces that overflow
  std::uint64_t g_rank = 0;
  std::uint64_t k_rank = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    g_rank = g_rank * spec.modulus(i) + s.g()[i];
    k_rank = k_rank * spec.modulus(i) + s.k()[i];
  }
  return g_rank * codec.group_order() + k_rank;
}

PairState state_from_index(std::uint64_t index, SpecRef spec) {
  if (!spec) throw Error(ErrorCode::InvalidArgument, "null group spec");
  StateCodec codec(*spec);
  if (index >= codec.state_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "state index " + std::to_string(index) + " out of range [0, " +
                    std::to_string(codec.state_count()) + ")");
  }
  std::uint64_t g_rank = index / codec.group_order();
  std::uint64_t k_rank = index % codec.group_order();
  const std::size_t n = spec->rank();
  std::vector<std::int64_t> g(n), k(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::uint32_t d = spec->modulus(i);
    g[i] = static_cast<std::int64_t>(g_rank % d);
    k[i] = static_cast<std::int64_t>(k_rank % d);
    g_rank /= d;
    k_rank /= d;
  }
  return PairState::make(std::move(spec), g, k);
}

std::string to_row_string(const PairState& s) {
  const GroupSpec& spec = s.spec();
  if (spec.rank() == 0) return "-";
  const bool compact = std::all_of(spec.moduli().begin(), spec.moduli().end(),
                                   [](std::uint32_t d) { return d <= 10; });
  std::string out;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(s.g()[i]);
    if (!compact) out += ':';
    out += std::to_string(s.k()[i]);
  }
  return out;
}

}  // namespace orbitlab
