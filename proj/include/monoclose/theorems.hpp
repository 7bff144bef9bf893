#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoclose/closure.hpp"
#include "monoclose/hilbert.hpp"
#include "monoclose/ideal.hpp"
#include "monoclose/semigroup.hpp"

namespace monoclose {

struct RingProfile {
  bool is_regular = false;
  bool is_CM = false;
  bool is_S2 = false;
  std::size_t dim = 0;
  std::size_t embedding_dim = 0;
  // evidence
  std::int64_t colength_q = 0;
  std::int64_t e0 = 0;
  std::vector<std::int64_t> ordinary_lengths;
};

/// CM is read off as colength(Q) = e_0(Q); S2 coincides with CM in dimension 2.
RingProfile ring_profile(const AffineSemigroup& ring, const ParameterIdeal& q, const FitOptions& opts = {});
/// Same, reusing an already computed ordinary report of q.
RingProfile ring_profile(const ParameterIdeal& q, const HilbertReport& ordinary);

enum class Verdict { Pass, Vacuous, Witness, NotApplicable, Fail };
std::string_view to_string(Verdict v);

struct ImplicationVerdict {
  Verdict verdict = Verdict::NotApplicable;
  std::string detail = "not evaluated";

  bool ok() const noexcept { return verdict != Verdict::Fail; }
};

struct ClaimRow {
  int n = 0;
  std::int64_t lhs = 0;  // l(R / limInt(n + 1))
  std::int64_t rhs = 0;  // C(n + d, d) e_0(Q)
  bool ok = true;
};

struct ChainOptions {
  FitOptions fit{8, 14, 3};
  LimitOptions limit{};
  std::optional<FrobeniusContext> frobenius;
  /// Inclusions involving the tight candidate are checked for n <= this.
  int tight_n_max = 6;
};

struct ChainVerdict {
  std::string id;
  bool inclusions_ok = true;
  std::vector<ClaimRow> claim;
  Verdict coefficient_chain = Verdict::NotApplicable;
  std::optional<std::int64_t> e0, e1, e1_lim, e1_bar;

  bool tight_checked = false;
  bool tight_inclusions_ok = true;
  std::optional<Bracket> e1_tight;
  Verdict tight_bracket = Verdict::NotApplicable;

  ImplicationVerdict vanishing;
  ImplicationVerdict e1_zero;
  bool conjecture_specimen = false;

  std::optional<RingProfile> profile;
  std::optional<CoefficientReport> coefficients;
  std::vector<std::string> details;

  bool claim_ok() const noexcept;
  bool pass() const noexcept;
};

ChainVerdict check_nonnegativity_chain(const AffineSemigroup& ring, const ParameterIdeal& q,
                                       const ChainOptions& opts = {});

ClaimRow check_claim_bound(const AffineSemigroup& ring, const ParameterIdeal& q, int n,
                           const LimitOptions& limit = {});

ImplicationVerdict check_vanishing(const AffineSemigroup& ring, const ParameterIdeal& q,
                                   const FitOptions& opts = {});

ImplicationVerdict check_e1_zero_implies_CM(const AffineSemigroup& ring, const ParameterIdeal& q,
                                            const FitOptions& opts = {},
                                            const std::optional<FrobeniusContext>& frobenius = std::nullopt);

struct Instance {
  std::string id;
  ParameterIdeal q;

  const AffineSemigroup& ring() const noexcept { return q.ring(); }
};

/// Every check on one instance, sharing one coefficient report.
ChainVerdict verify_instance(const Instance& inst, const ChainOptions& opts = {});

struct FuzzBounds {
  std::int64_t max_coord = 6;
  int max_generators = 4;
  std::size_t dim = 2;
};

/// Deterministic in (seed, count, bounds). Q is spanned by multiples of the
/// two extreme-ray generators, so it is always a parameter ideal.
std::vector<Instance> fuzz_corpus(std::uint64_t seed, std::size_t count, const FuzzBounds& bounds = {});

struct CorpusSummary {
  std::vector<ChainVerdict> verdicts;  // sorted by id
  std::size_t instances = 0;
  std::size_t passes = 0;
  std::size_t violations = 0;
  std::size_t witnesses = 0;
  std::size_t specimens = 0;
  std::size_t unstabilized = 0;
};

CorpusSummary verify_corpus(std::vector<Instance> corpus, const ChainOptions& opts = {});

/// Canned instances: remark-s2, free-x2y3, free-maximal.
std::vector<std::string> builtin_names();
Instance builtin_instance(std::string_view name);

}  // namespace monoclose
