// orbitlab command-line front end. Talks to the library only through the C
// interface in orbitlab.h.
//
//   orbitlab orbits   --p 2 --n 2 --method bfs [--list]
//   orbitlab words    --m 3 [--list]
//   orbitlab encode   234
//   orbitlab verify   --m-max 8
//   orbitlab sequence --p 2 --n-max 6 --format csv
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbitlab/orbitlab.h"

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOptions {
  Format format = Format::Text;
  std::optional<std::uint64_t> budget;
};

// Thrown from command bodies; carries the exit code.
struct CommandError {
  int exit_code;
  std::string message;
};

[[noreturn]] void raise(orbitlab_status status) {
  const std::string message = orbitlab_last_error();
  switch (status) {
    case ORBITLAB_ERR_BUDGET: throw CommandError{kExitBudget, message};
    case ORBITLAB_ERR_INVALID_ARGUMENT:
    case ORBITLAB_ERR_NOT_PRIME:
    case ORBITLAB_ERR_INCOMPATIBLE: throw CommandError{kExitUsage, message};
    default:
      throw CommandError{kExitFailed, std::string(orbitlab_status_name(status)) + ": " + message};
  }
}

void check(orbitlab_status status) {
  if (status != ORBITLAB_OK) raise(status);
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using CensusPtr = std::unique_ptr<orbitlab_census, Deleter<orbitlab_census, orbitlab_census_free>>;
using TextPtr = std::unique_ptr<orbitlab_text, Deleter<orbitlab_text, orbitlab_text_free>>;
using SequencePtr =
    std::unique_ptr<orbitlab_sequence, Deleter<orbitlab_sequence, orbitlab_sequence_free>>;
using EncodingPtr =
    std::unique_ptr<orbitlab_encoding, Deleter<orbitlab_encoding, orbitlab_encoding_free>>;
using BridgePtr = std::unique_ptr<orbitlab_bridge, Deleter<orbitlab_bridge, orbitlab_bridge_free>>;

std::uint64_t resolve_budget(const CommonOptions& common) {
  if (common.budget) return *common.budget;
  if (const char* env = std::getenv("ORBITLAB_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw CommandError{kExitUsage, std::string("ORBITLAB_BUDGET is not a number: ") + env};
  }
  return orbitlab_default_budget();
}

void print_json(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

CensusPtr run_census(std::uint32_t p, std::uint32_t n, orbitlab_method method, bool summaries,
                     std::uint64_t budget) {
  orbitlab_census* raw = nullptr;
  check(orbitlab_census_run(p, n, method, summaries ? 1 : 0, budget, 0, &raw));
  return CensusPtr(raw);
}

std::string text_value(orbitlab_status status, orbitlab_text* raw) {
  TextPtr text(raw);
  check(status);
  return orbitlab_text_str(text.get());
}

std::string r_formula(std::uint32_t p, std::int64_t n) {
  orbitlab_text* raw = nullptr;
  const orbitlab_status status = orbitlab_r_formula(p, n, &raw);
  return text_value(status, raw);
}

std::string words_count(std::uint32_t m) {
  orbitlab_text* raw = nullptr;
  const orbitlab_status status = orbitlab_words_count(m, &raw);
  return text_value(status, raw);
}

// ---- orbits -----------------------------------------------------------------

struct OrbitsOptions {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  std::string method = "bfs";
  bool list = false;
};

int cmd_orbits(const OrbitsOptions& opt, const CommonOptions& common) {
  const std::uint64_t budget = resolve_budget(common);
  orbitlab_method method = ORBITLAB_METHOD_BFS;
  if (opt.method == "canonical") method = ORBITLAB_METHOD_CANONICAL;
  if (opt.method == "burnside") method = ORBITLAB_METHOD_BURNSIDE;
  if (opt.method == "formula") method = ORBITLAB_METHOD_FORMULA;

  const CensusPtr census = run_census(opt.p, opt.n, method, opt.list && method == ORBITLAB_METHOD_BFS, budget);
  const std::string count = orbitlab_census_count(census.get());

  // The listing always comes from the BFS sweep.
  CensusPtr bfs_listing;
  const orbitlab_census* listing = nullptr;
  if (opt.list) {
    if (method == ORBITLAB_METHOD_BFS) {
      listing = census.get();
    } else {
      bfs_listing = run_census(opt.p, opt.n, ORBITLAB_METHOD_BFS, true, budget);
      listing = bfs_listing.get();
    }
  }
  struct Row {
    std::string rep, size;
    const char* stabilizer;
  };
  std::vector<Row> rows;
  if (listing) {
    for (std::size_t i = 0; i < orbitlab_census_summary_count(listing); ++i) {
      const char *rep = nullptr, *size = nullptr, *stab = nullptr;
      check(orbitlab_census_summary(listing, i, &rep, &size, &stab));
      rows.push_back({rep, size, stab});
    }
  }

  switch (common.format) {
    case Format::Text:
      if (!opt.list) {
        std::cout << count << '\n';
      } else {
        for (const Row& r : rows) {
          std::cout << r.rep << ' ' << r.size << ' ' << (r.stabilizer ? r.stabilizer : "-")
                    << '\n';
        }
      }
      break;
    case Format::Json: {
      Json doc{{"p", opt.p}, {"n", opt.n}, {"method", opt.method}, {"orbit_count", count}};
      if (opt.list) {
        Json orbits = Json::array();
        for (const Row& r : rows) {
          orbits.push_back({{"representative", r.rep},
                            {"size", r.size},
                            {"stabilizer_order", r.stabilizer ? Json(r.stabilizer) : Json()}});
        }
        doc["orbits"] = std::move(orbits);
      }
      print_json(doc);
      break;
    }
    case Format::Csv:
      if (!opt.list) {
        std::cout << "p,n,method,orbit_count\n"
                  << opt.p << ',' << opt.n << ',' << opt.method << ',' << count << '\n';
      } else {
        std::cout << "representative,size,stabilizer_order\n";
        for (const Row& r : rows) {
          std::cout << r.rep << ',' << r.size << ',' << (r.stabilizer ? r.stabilizer : "")
                    << '\n';
        }
      }
      break;
  }
  return kExitOk;
}

// ---- words ------------------------------------------------------------------

struct WordsOptions {
  std::uint32_t m = 1;
  bool list = false;
};

int cmd_words(const WordsOptions& opt, const CommonOptions& common) {
  const std::uint64_t budget = resolve_budget(common);
  const std::string count = words_count(opt.m);

  if (!opt.list) {
    switch (common.format) {
      case Format::Text: std::cout << count << '\n'; break;
      case Format::Json: print_json(Json{{"m", opt.m}, {"count", count}}); break;
      case Format::Csv: std::cout << "m,count\n" << opt.m << ',' << count << '\n'; break;
    }
    return kExitOk;
  }

  if (common.format == Format::Json) {
    Json words = Json::array();
    check(orbitlab_words_for_each(
        opt.m, budget,
        [](const char* word, void* user) {
          static_cast<Json*>(user)->push_back(word);
          return 0;
        },
        &words));
    print_json(Json{{"m", opt.m}, {"count", count}, {"words", std::move(words)}});
    return kExitOk;
  }
  // Stream straight to stdout. The library checks the budget before the
  // first visit, so a refused walk prints nothing.
  struct Stream {
    bool header;
  } stream{common.format == Format::Csv};
  check(orbitlab_words_for_each(
      opt.m, budget,
      [](const char* word, void* user) {
        auto* s = static_cast<Stream*>(user);
        if (s->header) {
          std::cout << "word\n";
          s->header = false;
        }
        std::cout << word << '\n';
        return 0;
      },
      &stream));
  return kExitOk;
}

// ---- encode -----------------------------------------------------------------

int cmd_encode(const std::string& word, const CommonOptions& common) {
  orbitlab_encoding* raw = nullptr;
  const orbitlab_status status = orbitlab_encode_word(word.c_str(), &raw);
  const EncodingPtr enc(raw);
  check(status);

  std::vector<std::string> rows;
  for (std::size_t i = 0; i < orbitlab_encoding_row_count(enc.get()); ++i) {
    rows.emplace_back(orbitlab_encoding_row(enc.get(), i));
  }
  const std::string canonical = orbitlab_encoding_canonical(enc.get());
  const std::string orbit_size = orbitlab_encoding_orbit_size(enc.get());

  std::string joined;
  for (const std::string& r : rows) joined += (joined.empty() ? "" : " ") + r;

  switch (common.format) {
    case Format::Text:
      for (const std::string& r : rows) std::cout << r << '\n';
      std::cout << "canonical: " << canonical << '\n';
      break;
    case Format::Json:
      print_json(Json{{"word", word},
                      {"rows", rows},
                      {"canonical", canonical},
                      {"orbit_size", orbit_size}});
      break;
    case Format::Csv:
      std::cout << "word,rows,canonical,orbit_size\n"
                << word << ',' << joined << ',' << canonical << ',' << orbit_size << '\n';
      break;
  }
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyRow {
  std::uint32_t m;
  bool methods, formula, words, bijection;
  std::string r;
  bool ok() const { return methods && formula && words && bijection; }
};

VerifyRow verify_one(std::uint32_t m, std::uint64_t budget) {
  VerifyRow row{m, false, false, false, false, {}};
  const std::string bfs =
      orbitlab_census_count(run_census(2, m, ORBITLAB_METHOD_BFS, false, budget).get());
  const std::string canonical =
      orbitlab_census_count(run_census(2, m, ORBITLAB_METHOD_CANONICAL, false, budget).get());
  const std::string burnside =
      orbitlab_census_count(run_census(2, m, ORBITLAB_METHOD_BURNSIDE, false, budget).get());
  const std::string formula = r_formula(2, m);
  row.r = bfs;
  row.methods = bfs == canonical && canonical == burnside;
  row.formula = bfs == formula;

  std::uint64_t listed = 0;
  check(orbitlab_words_for_each(
      m, budget,
      [](const char*, void* user) {
        ++*static_cast<std::uint64_t*>(user);
        return 0;
      },
      &listed));
  const std::string counted = words_count(m);
  row.words = counted == std::to_string(listed) && counted == formula;

  orbitlab_bridge* raw = nullptr;
  const orbitlab_status status = orbitlab_bridge_verify(m, budget, &raw);
  const BridgePtr bridge(raw);
  check(status);
  row.bijection = orbitlab_bridge_injective(bridge.get()) &&
                  orbitlab_bridge_surjective(bridge.get()) &&
                  std::string(orbitlab_bridge_word_count(bridge.get())) == counted &&
                  std::string(orbitlab_bridge_orbit_count(bridge.get())) == bfs;
  for (std::size_t i = 0; i < orbitlab_bridge_collision_count(bridge.get()); ++i) {
    const char *a = nullptr, *b = nullptr;
    check(orbitlab_bridge_collision(bridge.get(), i, &a, &b));
    std::cerr << "m=" << m << ": words " << a << " and " << b << " share an orbit\n";
  }
  for (std::size_t i = 0; i < orbitlab_bridge_missed_count(bridge.get()); ++i) {
    std::cerr << "m=" << m << ": orbit " << orbitlab_bridge_missed(bridge.get(), i)
              << " is not reached by any word\n";
  }
  return row;
}

int cmd_verify(std::uint32_t m_max, const CommonOptions& common) {
  const std::uint64_t budget = resolve_budget(common);
  if (m_max < 1) throw CommandError{kExitUsage, "--m-max must be at least 1"};
  // The largest sweep is Z_2^m_max x Z_2^m_max.
  if (m_max >= 32 || (std::uint64_t{1} << (2 * m_max)) > budget) {
    throw CommandError{kExitBudget, "verify up to m = " + std::to_string(m_max) +
                                        " needs 4^" + std::to_string(m_max) +
                                        " states, above the budget of " +
                                        std::to_string(budget)};
  }

  std::vector<VerifyRow> rows;
  for (std::uint32_t m = 1; m <= m_max; ++m) rows.push_back(verify_one(m, budget));
  bool all = true;
  for (const VerifyRow& r : rows) all = all && r.ok();

  auto mark = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  switch (common.format) {
    case Format::Text: {
      std::ostringstream out;
      out << std::left << std::setw(4) << "m" << std::setw(9) << "methods" << std::setw(9)
          << "formula" << std::setw(7) << "words" << std::setw(11) << "bijection" << "r\n";
      for (const VerifyRow& r : rows) {
        out << std::left << std::setw(4) << r.m << std::setw(9) << mark(r.methods)
            << std::setw(9) << mark(r.formula) << std::setw(7) << mark(r.words)
            << std::setw(11) << mark(r.bijection) << r.r << '\n';
      }
      out << "overall: " << mark(all) << '\n';
      std::cout << out.str();
      break;
    }
    case Format::Json: {
      Json list = Json::array();
      for (const VerifyRow& r : rows) {
        list.push_back({{"m", r.m},
                        {"methods", mark(r.methods)},
                        {"formula", mark(r.formula)},
                        {"words", mark(r.words)},
                        {"bijection", mark(r.bijection)},
                        {"r", r.r}});
      }
      print_json(Json{{"m_max", m_max}, {"rows", std::move(list)}, {"all_pass", all}});
      break;
    }
    case Format::Csv:
      std::cout << "m,methods,formula,words,bijection,r\n";
      for (const VerifyRow& r : rows) {
        std::cout << r.m << ',' << mark(r.methods) << ',' << mark(r.formula) << ','
                  << mark(r.words) << ',' << mark(r.bijection) << ',' << r.r << '\n';
      }
      break;
  }
  return all ? kExitOk : kExitFailed;
}

// ---- sequence ---------------------------------------------------------------

int cmd_sequence(std::uint32_t p, std::int64_t n_max, const CommonOptions& common) {
  orbitlab_sequence* raw = nullptr;
  const orbitlab_status status = orbitlab_sequence_run(p, n_max, &raw);
  const SequencePtr seq(raw);
  check(status);
  const std::size_t len = orbitlab_sequence_length(seq.get());

  switch (common.format) {
    case Format::Text:
      for (std::size_t n = 0; n < len; ++n) {
        std::cout << n << ' ' << orbitlab_sequence_value(seq.get(), n) << '\n';
      }
      break;
    case Format::Json: {
      Json doc = Json::array();
      for (std::size_t n = 0; n < len; ++n) {
        doc.push_back({{"n", n}, {"r", orbitlab_sequence_value(seq.get(), n)}});
      }
      print_json(doc);
      break;
    }
    case Format::Csv:
      std::cout << "n,r\n";
      for (std::size_t n = 0; n < len; ++n) {
        std::cout << n << ',' << orbitlab_sequence_value(seq.get(), n) << '\n';
      }
      break;
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  cmd->add_option("--format", common.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--budget", common.budget,
                  "Maximum number of states or words to enumerate (env ORBITLAB_BUDGET)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit counts of SL(2,Z_p) on pairs of vectors, and the four-letter "
               "restricted-growth language"};
  app.require_subcommand(1);

  CommonOptions common;

  OrbitsOptions orbits;
  auto* orbits_cmd = app.add_subcommand("orbits", "Count orbits of Z_p^n x Z_p^n");
  orbits_cmd->add_option("--p", orbits.p, "Modulus (prime except for --method bfs)")
      ->required()
      ->check(CLI::Range(2U, 0xFFFFFFFFU));
  orbits_cmd->add_option("--n", orbits.n, "Rank n")->required();
  orbits_cmd->add_option("--method", orbits.method, "Counting method")
      ->check(CLI::IsMember({"bfs", "canonical", "burnside", "formula"}));
  orbits_cmd->add_flag("--list", orbits.list, "List one orbit per line");
  add_common(orbits_cmd, common);

  WordsOptions words;
  auto* words_cmd = app.add_subcommand("words", "Count or list restricted-growth words");
  words_cmd->add_option("--m", words.m, "Word length")->required();
  words_cmd->add_flag("--list", words.list, "List the words in lexicographic order");
  add_common(words_cmd, common);

  std::string word;
  auto* encode_cmd = app.add_subcommand("encode", "Encode a word as a bit matrix");
  encode_cmd->add_option("word", word, "Word over {1,2,3,4}")->required();
  add_common(encode_cmd, common);

  std::uint32_t m_max = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check for m = 1..m-max");
  verify_cmd->add_option("--m-max", m_max, "Largest word length / rank")->required();
  add_common(verify_cmd, common);

  std::uint32_t seq_p = 2;
  std::int64_t n_max = 0;
  auto* sequence_cmd = app.add_subcommand("sequence", "Emit r(p, n) for n = 0..n-max");
  sequence_cmd->add_option("--p", seq_p, "Prime p")->required();
  sequence_cmd->add_option("--n-max", n_max, "Largest n")->required()->check(
      CLI::NonNegativeNumber);
  add_common(sequence_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*orbits_cmd) return cmd_orbits(orbits, common);
    if (*words_cmd) return cmd_words(words, common);
    if (*encode_cmd) return cmd_encode(word, common);
    if (*verify_cmd) return cmd_verify(m_max, common);
    if (*sequence_cmd) return cmd_sequence(seq_p, n_max, common);
  } catch (const CommandError& e) {
    std::cout.flush();
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }
  return kExitUsage;
}
