#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monoclose/hilbert.hpp"
#include "monoclose/ideal.hpp"
#include "monoclose/semigroup.hpp"
#include "monoclose/theorems.hpp"

namespace monoclose::io {

using json = nlohmann::ordered_json;

/// Integers are written as decimal strings and read from either form.
json int_value(std::int64_t v);
std::int64_t parse_int(const json& j, const std::string& where);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

struct IdealRecord {
  std::vector<ExponentVector> generators;
  bool ordered = true;
};

AffineSemigroup parse_ring(const json& j, const std::string& where = "ring");
json ring_to_json(const AffineSemigroup& ring);

IdealRecord parse_ideal(const json& j, std::size_t dim, const std::string& where = "ideal");
json ideal_to_json(const std::vector<ExponentVector>& generators, bool ordered);

/// The record's generators in supplied order, or sorted when unordered.
ParameterIdeal make_parameter_ideal(const AffineSemigroup& ring, const IdealRecord& rec);

/// A list of {"id", "ring", "ideal"} records, bare or under "instances".
std::vector<Instance> parse_corpus(const json& j);
json instance_to_json(const Instance& inst);
json corpus_to_json(const std::vector<Instance>& corpus);

json profile_to_json(const RingProfile& p);
json hilbert_to_json(const HilbertReport& r);

struct AnalyzeContext {
  std::optional<std::int64_t> characteristic;
  std::optional<int> e_max;
  int n_max = 10;
};

/// Report bundle for one (ring, ideal); flat e<i>_<kind> keys sit beside the
/// per-filtration records.
json analysis_to_json(const AffineSemigroup& ring, const IdealRecord& ideal, const std::vector<HilbertReport>& reports,
                      const std::optional<RingProfile>& profile, const std::optional<CoefficientReport>& coeffs,
                      const AnalyzeContext& ctx);
std::string analysis_to_csv(const std::vector<HilbertReport>& reports);
std::string analysis_to_table(const std::vector<HilbertReport>& reports, const std::optional<RingProfile>& profile,
                              const std::optional<CoefficientReport>& coeffs);

json verdict_to_json(const ChainVerdict& v);
json summary_to_json(const CorpusSummary& s);
/// Re-parses as a one-instance corpus.
json reproducer_to_json(const Instance& inst, const ChainVerdict& v);

}  // namespace monoclose::io
