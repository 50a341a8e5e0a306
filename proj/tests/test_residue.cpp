#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/residue.hpp"
#include "orbitlab/state_codec.hpp"

using namespace orbitlab;

namespace {

SpecRef uniform(std::uint32_t p, std::size_t n) { return make_spec(GroupSpec::uniform(p, n)); }

std::vector<PairState> all_states(const SpecRef& spec) {
  std::vector<PairState> out;
  const StateCodec codec(*spec);
  for (std::uint64_t i = 0; i < codec.state_count(); ++i) {
    out.push_back(state_from_index(i, spec));
  }
  return out;
}

}  // namespace

TEST_CASE("group spec basics") {
  const GroupSpec trivial;
  CHECK(trivial.rank() == 0);
  CHECK(trivial.state_count() == 1);
  CHECK_FALSE(trivial.is_uniform_prime());

  const GroupSpec z2_0 = GroupSpec::uniform(2, 0);
  CHECK(z2_0.uniform_prime() == 2U);
  CHECK(z2_0.state_count() == 1);

  const GroupSpec mixed({2, 3, 4});
  CHECK(mixed.element_count() == 24);
  CHECK(mixed.state_count() == 576);
  CHECK_FALSE(mixed.is_uniform_prime());

  CHECK(GroupSpec({5, 5, 5}).uniform_prime() == 5U);
  CHECK_FALSE(GroupSpec::uniform(4, 2).is_uniform_prime());

  CHECK_THROWS_AS(GroupSpec({2, 1}), Error);
  CHECK_THROWS_AS(GroupSpec::uniform(0, 3), Error);
}

TEST_CASE("residue vectors reduce their entries") {
  const SpecRef spec = make_spec(GroupSpec({3, 5}));
  const ResidueVector v(spec, {-1, 12});
  CHECK(v[0] == 2);
  CHECK(v[1] == 2);
  CHECK((-v)[0] == 1);
  CHECK((-v)[1] == 3);
  CHECK((v + v)[1] == 4);
  CHECK_THROWS_AS(ResidueVector(spec, {1}), Error);
}

TEST_CASE("apply_s examples") {
  const SpecRef z2 = uniform(2, 1);
  CHECK(apply_s(PairState::make(z2, {0}, {1})) == PairState::make(z2, {1}, {0}));
  CHECK(apply_s(PairState::zero(z2)) == PairState::zero(z2));

  const SpecRef z3 = uniform(3, 1);
  CHECK(apply_s(PairState::make(z3, {1}, {0})) == PairState::make(z3, {0}, {2}));

  const PairState input = PairState::make(z3, {1}, {2});
  const PairState copy = input;
  (void)apply_s(input);
  CHECK(input == copy);
}

TEST_CASE("apply_t examples") {
  const SpecRef z2 = uniform(2, 1);
  CHECK(apply_t(PairState::make(z2, {1}, {0})) == PairState::make(z2, {1}, {1}));

  const SpecRef z3_2 = uniform(3, 2);
  const PairState zero_g = PairState::make(z3_2, {0, 0}, {2, 1});
  CHECK(apply_t(zero_g) == zero_g);

  const SpecRef z3 = uniform(3, 1);
  CHECK(apply_t(PairState::make(z3, {1}, {1})) == PairState::make(z3, {1}, {2}));
}

TEST_CASE("apply_mat agrees with the generators") {
  for (std::uint32_t p : {2U, 3U}) {
    const SpecRef spec = uniform(p, 2);
    for (const PairState& s : all_states(spec)) {
      CHECK(apply_mat(s, Mat2::identity(p)) == s);
      CHECK(apply_mat(s, Mat2::s_generator(p)) == apply_s(s));
      CHECK(apply_mat(s, Mat2::t_generator(p)) == apply_t(s));
    }
  }
}

TEST_CASE("apply_mat rejects a mismatched modulus") {
  const PairState s = PairState::zero(uniform(3, 2));
  CHECK_THROWS_AS(apply_mat(s, Mat2::identity(2)), Error);
  const PairState mixed = PairState::zero(make_spec(GroupSpec({2, 3})));
  CHECK_THROWS_AS(apply_mat(mixed, Mat2::identity(2)), Error);
}

TEST_CASE("apply_mat is a right action") {
  const SpecRef spec = uniform(2, 2);
  const std::vector<Mat2> group = enumerate_sl2(2);
  for (const PairState& s : all_states(spec)) {
    for (const Mat2& A : group) {
      for (const Mat2& B : group) {
        CHECK(apply_mat(apply_mat(s, A), B) == apply_mat(s, A * B));
      }
    }
  }
}

TEST_CASE("generator orders") {
  for (std::uint32_t p : {2U, 3U}) {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (const PairState& s : all_states(uniform(p, n))) {
        CHECK(apply_s(apply_s(apply_s(apply_s(s)))) == s);
        PairState t = s;
        for (std::uint32_t i = 0; i < p; ++i) t = apply_t(t);
        CHECK(t == s);
      }
    }
  }
}

TEST_CASE("generator orders over mixed moduli") {
  // T has order lcm(d_i) = 12 here.
  const SpecRef spec = make_spec(GroupSpec({3, 4}));
  for (const PairState& s : all_states(spec)) {
    CHECK(apply_s(apply_s(apply_s(apply_s(s)))) == s);
    PairState t = s;
    for (int i = 0; i < 12; ++i) t = apply_t(t);
    CHECK(t == s);
  }
}

TEST_CASE("enumerate_sl2 sizes and contents") {
  CHECK(enumerate_sl2(2).size() == 6);
  CHECK(enumerate_sl2(3).size() == 24);
  CHECK(enumerate_sl2(5).size() == 120);
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    const std::vector<Mat2> group = enumerate_sl2(p);
    CHECK(group.size() == std::size_t{p} * (p * p - 1));
    CHECK(group.size() == oracle::special_linear_group(static_cast<int>(p)).size());
    std::set<std::tuple<int, int, int, int>> distinct;
    for (const Mat2& A : group) {
      CHECK((std::uint64_t{A.a()} * A.d() + std::uint64_t{p} * p - std::uint64_t{A.b()} * A.c()) %
                p ==
            1);
      distinct.insert({A.a(), A.b(), A.c(), A.d()});
    }
    CHECK(distinct.size() == group.size());
  }
  CHECK_THROWS_AS(enumerate_sl2(4), Error);
  CHECK_THROWS_AS(enumerate_sl2(1), Error);
}

TEST_CASE("Mat2 construction checks the determinant") {
  CHECK_THROWS_AS(Mat2::make(3, 1, 1, 1, 1), Error);
  CHECK_THROWS_AS(Mat2::make(6, 1, 0, 0, 1), Error);
  CHECK(Mat2::make(5, -1, 0, 0, -1).a() == 4);
}

TEST_CASE("state_index examples") {
  CHECK(state_index(PairState::zero(uniform(3, 2))) == 0);
  CHECK(state_from_index(3, uniform(2, 1)) == PairState::make(uniform(2, 1), {1}, {1}));
  // Bit-packed: g = 10, k = 01 over Z_2^2 is 1001.
  CHECK(state_index(PairState::make(uniform(2, 2), {1, 0}, {0, 1})) == 0b1001);
  CHECK_THROWS_AS(state_from_index(81, uniform(3, 2)), Error);
}

TEST_CASE("state_index round trip is exhaustive at p=3, n=2") {
  const SpecRef spec = uniform(3, 2);
  for (std::uint64_t i = 0; i < 81; ++i) {
    CHECK(state_index(state_from_index(i, spec)) == i);
  }
}

TEST_CASE("property: rank/unrank and moves on random mixed-radix groups") {
  std::mt19937 rng(20131303);
  std::uniform_int_distribution<std::uint32_t> modulus(2, 9);
  std::uniform_int_distribution<std::size_t> rank(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> moduli(rank(rng));
    for (auto& d : moduli) d = modulus(rng);
    const SpecRef spec = make_spec(GroupSpec(moduli));
    const StateCodec codec(*spec);
    std::uniform_int_distribution<std::uint64_t> pick(0, codec.state_count() - 1);
    for (int k = 0; k < 20; ++k) {
      const std::uint64_t index = pick(rng);
      const PairState s = state_from_index(index, spec);
      REQUIRE(state_index(s) == index);
      // The codec's index-level moves match the value-level moves.
      CHECK(codec.apply_s(index) == state_index(apply_s(s)));
      CHECK(codec.apply_t(index) == state_index(apply_t(s)));
    }
  }
}

TEST_CASE("codec matrix action matches apply_mat") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const SpecRef spec = uniform(p, 2);
    const StateCodec codec(*spec);
    const std::vector<Mat2> group = enumerate_sl2(p);
    for (std::uint64_t i = 0; i < codec.state_count(); i += (p == 5 ? 7 : 1)) {
      const PairState s = state_from_index(i, spec);
      for (const Mat2& A : group) {
        CHECK(codec.apply_mat(i, A) == state_index(apply_mat(s, A)));
      }
    }
  }
}

TEST_CASE("oversized index spaces are refused") {
  CHECK_THROWS_AS(StateCodec(GroupSpec::uniform(2, 40)), Error);
  CHECK_NOTHROW(StateCodec(GroupSpec::uniform(2, 31)));
}

TEST_CASE("row rendering") {
  CHECK(to_row_string(PairState::make(uniform(2, 3), {1, 1, 0}, {0, 1, 1})) == "10 11 01");
  CHECK(to_row_string(PairState::zero(uniform(2, 0))) == "-");
  CHECK(to_row_string(PairState::make(uniform(11, 1), {10}, {3})) == "10:3");
}
