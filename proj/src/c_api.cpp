#include "orbitlab/orbitlab.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/closed_forms.hpp"
#include "orbitlab/encoding.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/rg_language.hpp"

using namespace orbitlab;

struct orbitlab_text {
  std::string value;
};

struct orbitlab_census {
  struct Row {
    std::string representative;
    std::string size;
    std::string stabilizer;
    bool has_stabilizer = false;
  };
  std::string count;
  std::vector<Row> rows;
};

struct orbitlab_sequence {
  std::vector<std::string> values;
};

struct orbitlab_encoding {
  std::vector<std::string> rows;
  std::string canonical;
  std::string orbit_size;
};

struct orbitlab_bridge {
  std::string word_count;
  std::string orbit_count;
  bool injective = false;
  bool surjective = false;
  std::vector<std::pair<std::string, std::string>> collisions;
  std::vector<std::string> missed;
};

namespace {

thread_local std::string last_error;

orbitlab_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ORBITLAB_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotPrime: return ORBITLAB_ERR_NOT_PRIME;
    case ErrorCode::Incompatible: return ORBITLAB_ERR_INCOMPATIBLE;
    case ErrorCode::Budget: return ORBITLAB_ERR_BUDGET;
    case ErrorCode::Arithmetic: return ORBITLAB_ERR_ARITHMETIC;
  }
  return ORBITLAB_ERR_INTERNAL;
}

orbitlab_status fail(orbitlab_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
orbitlab_status guarded(Body&& body) noexcept {
  last_error.clear();
  try {
    body();
    return ORBITLAB_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ORBITLAB_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return fail(ORBITLAB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ORBITLAB_ERR_INTERNAL, "unknown error");
  }
}

template <typename T>
orbitlab_status require_out(T** out) {
  if (out == nullptr) return fail(ORBITLAB_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return ORBITLAB_OK;
}

orbitlab_status make_text(std::string value, orbitlab_text** out) {
  *out = new orbitlab_text{std::move(value)};
  return ORBITLAB_OK;
}

}  // namespace

extern "C" {

const char* orbitlab_version(void) { return "1.0.0"; }

const char* orbitlab_status_name(orbitlab_status status) {
  switch (status) {
    case ORBITLAB_OK: return "ok";
    case ORBITLAB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ORBITLAB_ERR_NOT_PRIME: return "not prime";
    case ORBITLAB_ERR_INCOMPATIBLE: return "incompatible";
    case ORBITLAB_ERR_BUDGET: return "budget exceeded";
    case ORBITLAB_ERR_ARITHMETIC: return "arithmetic";
    case ORBITLAB_ERR_INTERNAL: return "internal";
  }
  return "unknown status";
}

const char* orbitlab_last_error(void) { return last_error.c_str(); }

uint64_t orbitlab_default_budget(void) { return kDefaultStateBudget; }

const char* orbitlab_text_str(const orbitlab_text* text) {
  return text ? text->value.c_str() : nullptr;
}

void orbitlab_text_free(orbitlab_text* text) { delete text; }

// ---- census ---------------------------------------------------------------

orbitlab_status orbitlab_census_run(uint32_t p, uint32_t n, orbitlab_method method,
                                    int with_summaries, uint64_t budget, unsigned threads,
                                    orbitlab_census** out) {
  if (auto s = require_out(out); s != ORBITLAB_OK) return s;
  return guarded([&] {
    auto census = std::make_unique<orbitlab_census>();
    const GroupSpec spec = GroupSpec::uniform(p, n);
    const Budget limits{budget};
    switch (method) {
      case ORBITLAB_METHOD_BFS: {
        const CensusReport report = count_orbits_bfs(spec, limits, with_summaries != 0);
        census->count = to_decimal(report.orbit_count);
        if (report.summaries) {
          for (const OrbitSummary& s : *report.summaries) {
            orbitlab_census::Row row;
            row.representative = to_row_string(s.representative);
            row.size = to_decimal(s.size);
            if (s.stabilizer_order) {
              row.stabilizer = to_decimal(*s.stabilizer_order);
              row.has_stabilizer = true;
            }
            census->rows.push_back(std::move(row));
          }
        }
        break;
      }
      case ORBITLAB_METHOD_CANONICAL:
        census->count = to_decimal(count_orbits_canonical(spec, limits, threads).orbit_count);
        break;
      case ORBITLAB_METHOD_BURNSIDE:
        census->count = to_decimal(count_orbits_burnside(spec).orbit_count);
        break;
      case ORBITLAB_METHOD_FORMULA:
        census->count = to_decimal(r_formula(p, n));
        break;
      default:
        throw Error(ErrorCode::InvalidArgument, "unknown census method");
    }
    *out = census.release();
  });
}

const char* orbitlab_census_count(const orbitlab_census* census) {
  return census ? census->count.c_str() : nullptr;
}

size_t orbitlab_census_summary_count(const orbitlab_census* census) {
  return census ? census->rows.size() : 0;
}

orbitlab_status orbitlab_census_summary(const orbitlab_census* census, size_t i,
                                        const char** representative, const char** size,
                                        const char** stabilizer) {
  if (census == nullptr || i >= census->rows.size()) {
    return fail(ORBITLAB_ERR_INVALID_ARGUMENT, "summary index out of range");
  }
  const auto& row = census->rows[i];
  if (representative) *representative = row.representative.c_str();
  if (size) *size = row.size.c_str();
  if (stabilizer) *stabilizer = row.has_stabilizer ? row.stabilizer.c_str() : nullptr;
  return ORBITLAB_OK;
}

void orbitlab_census_free(orbitlab_census* census) { delete census; }

// ---- closed forms ---------------------------------------------------------

orbitlab_status orbitlab_r_formula(uint32_t p, int64_t n, orbitlab_text** out) {
  if (auto s = require_out(out); s != ORBITLAB_OK) return s;
  return guarded([&] { make_text(to_decimal(r_formula(p, n)), out); });
}

orbitlab_status orbitlab_f_closed(uint32_t p, int64_t n, orbitlab_text** out) {
  if (auto s = require_out(out); s != ORBITLAB_OK) return s;
  return guarded([&] { make_text(to_decimal(f_closed(p, n)), out); });
}

orbitlab_status orbitlab_sequence_run(uint32_t p, int64_t n_max, orbitlab_sequence** out) {
  if (auto s = require_out(out); s != ORBITLAB_OK) return s;
  return guarded([&] {
    auto seq = std::make_unique<orbitlab_sequence>();
    for (const auto& [n, value] : sequence_table(p, n_max)) {
      seq->values.push_back(to_decimal(value));
    }
    *out = seq.release();
  });
}

size_t orbitlab_sequence_length(const orbitlab_sequence* seq) {
  return seq ? seq->values.size() : 0;
}

const char* orbitlab_sequence_value(const orbitlab_sequence* seq, size_t n) {
  if (seq == nullptr || n >= seq->values.size()) return nullptr;
  return seq->values[n].c_str();
}

void orbitlab_sequence_free(orbitlab_sequence* seq) { delete seq; }

// ---- words ----------------------------------------------------------------

orbitlab_status orbitlab_words_count(uint32_t m, orbitlab_text** out) {
  if (auto s = require_out(out); s != ORBITLAB_OK) return s;
  return guarded([&] { make_text(to_decimal(count_words(m)), out); });
}

orbitlab_status orbitlab_words_for_each(uint32_t m, uint64_t budget,
                                        orbitlab_word_visitor visit, void* user) {
  if (visit == nullptr) return fail(ORBITLAB_ERR_INVALID_ARGUMENT, "null visitor");
  return guarded([&] {
    const ExactInt count = count_words(m);
    if (count > budget) {
      throw Error(ErrorCode::Budget, "length " + std::to_string(m) + " has " +
                                         to_decimal(count) + " words, above the budget of " +
                                         std::to_string(budget));
    }
    // for_each_word has no early exit; stop forwarding once asked to.
    bool stopped = false;
    std::string text;
    for_each_word(m, [&](std::span<const std::uint8_t> letters) {
      if (stopped) return;
      text.clear();
      for (const std::uint8_t letter : letters) text += static_cast<char>('0' + letter);
      stopped = visit(text.c_str(), user) != 0;
    });
  });
}

orbitlab_status orbitlab_word_check(const char* word) {
  if (word == nullptr) return fail(ORBITLAB_ERR_INVALID_ARGUMENT, "null word");
  return guarded([&] {
    if (auto why = word_violation(std::string_view(word))) {
      throw Error(ErrorCode::InvalidArgument, *why);
    }
  });
}

// ---- encoding -------------------------------------------------------------

orbitlab_status orbitlab_encode_word(const char* word, orbitlab_encoding** out) {
  if (auto s = require_out(out); s != ORBITLAB_OK) return s;
  if (word == nullptr) return fail(ORBITLAB_ERR_INVALID_ARGUMENT, "null word");
  return guarded([&] {
    const PairState state = encode_word(RGWord::parse(word));
    auto enc = std::make_unique<orbitlab_encoding>();
    for (std::size_t i = 0; i < state.rows(); ++i) {
      enc->rows.push_back(std::to_string(state.g()[i]) + std::to_string(state.k()[i]));
    }
    enc->canonical = to_row_string(canonical_form(state));
    enc->orbit_size = std::to_string(orbit_of(state).size());
    *out = enc.release();
  });
}

size_t orbitlab_encoding_row_count(const orbitlab_encoding* enc) {
  return enc ? enc->rows.size() : 0;
}

const char* orbitlab_encoding_row(const orbitlab_encoding* enc, size_t i) {
  if (enc == nullptr || i >= enc->rows.size()) return nullptr;
  return enc->rows[i].c_str();
}

const char* orbitlab_encoding_canonical(const orbitlab_encoding* enc) {
  return enc ? enc->canonical.c_str() : nullptr;
}

const char* orbitlab_encoding_orbit_size(const orbitlab_encoding* enc) {
  return enc ? enc->orbit_size.c_str() : nullptr;
}

void orbitlab_encoding_free(orbitlab_encoding* enc) { delete enc; }

// ---- bridge ---------------------------------------------------------------

orbitlab_status orbitlab_bridge_verify(uint32_t m, uint64_t budget, orbitlab_bridge** out) {
  if (auto s = require_out(out); s != ORBITLAB_OK) return s;
  return guarded([&] {
    const BridgeReport report = verify_bridge(m, Budget{budget});
    auto br = std::make_unique<orbitlab_bridge>();
    br->word_count = to_decimal(report.word_count);
    br->orbit_count = to_decimal(report.orbit_count);
    br->injective = report.is_injective_on_orbits;
    br->surjective = report.is_surjective_on_orbits;
    for (const auto& [first, second] : report.collisions) {
      br->collisions.emplace_back(first.str(), second.str());
    }
    for (const PairState& s : report.missed_orbits) br->missed.push_back(to_row_string(s));
    *out = br.release();
  });
}

const char* orbitlab_bridge_word_count(const orbitlab_bridge* br) {
  return br ? br->word_count.c_str() : nullptr;
}

const char* orbitlab_bridge_orbit_count(const orbitlab_bridge* br) {
  return br ? br->orbit_count.c_str() : nullptr;
}

int orbitlab_bridge_injective(const orbitlab_bridge* br) { return br && br->injective; }

int orbitlab_bridge_surjective(const orbitlab_bridge* br) { return br && br->surjective; }

size_t orbitlab_bridge_collision_count(const orbitlab_bridge* br) {
  return br ? br->collisions.size() : 0;
}

orbitlab_status orbitlab_bridge_collision(const orbitlab_bridge* br, size_t i,
                                          const char** first, const char** second) {
  if (br == nullptr || i >= br->collisions.size()) {
    return fail(ORBITLAB_ERR_INVALID_ARGUMENT, "collision index out of range");
  }
  if (first) *first = br->collisions[i].first.c_str();
  if (second) *second = br->collisions[i].second.c_str();
  return ORBITLAB_OK;
}

size_t orbitlab_bridge_missed_count(const orbitlab_bridge* br) {
  return br ? br->missed.size() : 0;
}

const char* orbitlab_bridge_missed(const orbitlab_bridge* br, size_t i) {
  if (br == nullptr || i >= br->missed.size()) return nullptr;
  return br->missed[i].c_str();
}

void orbitlab_bridge_free(orbitlab_bridge* br) { delete br; }

}  // extern "C"
