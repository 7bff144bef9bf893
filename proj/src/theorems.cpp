#include "monoclose/theorems.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "monoclose/errors.hpp"

namespace monoclose {

namespace {

std::int64_t binom_i64(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

std::optional<ExponentVector> escape(const MonomialIdeal& small, const MonomialIdeal& big) {
  for (const auto& g : small.generators()) {
    if (!big.contains(g)) return g;
  }
  return std::nullopt;
}

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::int64_t pick_e0(const CoefficientReport& rep) {
  if (auto e = rep.ordinary.coefficient(0)) return *e;
  if (auto e = rep.integral.coefficient(0)) return *e;
  throw Error(ErrorCode::NotStabilized, "no stabilized fit determines e_0(Q)");
}

ImplicationVerdict vanishing_from(const RingProfile& p, std::optional<std::int64_t> e1_bar, int nu) {
  if (!e1_bar) return {Verdict::NotApplicable, "normal Hilbert fit did not stabilize"};
  if (*e1_bar != 0) return {Verdict::Vacuous, cat("e1_bar = ", *e1_bar)};
  if (!p.is_S2) return {Verdict::Witness, "e1_bar = 0 on a ring that is not S2"};
  if (p.is_regular && nu <= 1) return {Verdict::Pass, cat("regular, nu(m/Q) = ", nu)};
  return {Verdict::Fail, cat("e1_bar = 0 and S2 but regular = ", p.is_regular, ", nu(m/Q) = ", nu)};
}

ImplicationVerdict e1_zero_from(const ParameterIdeal& q, const RingProfile& p, std::optional<std::int64_t> e1,
                                std::optional<std::int64_t> e1_lim, std::optional<Bracket> e1_tight,
                                const std::optional<FrobeniusContext>& ctx, const LimitOptions& limit) {
  if (!e1) return {Verdict::NotApplicable, "ordinary Hilbert fit did not stabilize"};
  if (*e1 != 0) return {Verdict::Vacuous, cat("e1 = ", *e1)};
  if (!p.is_CM) {
    return {Verdict::Fail, cat("e1 = 0 but colength(Q) = ", p.colength_q, " != e0 = ", p.e0)};
  }
  std::string detail = "e1 = 0 and CM";
  if (e1_lim && *e1_lim == 0) {
    const auto lim = limit_closure(q, limit).ideal;
    if (!(lim == q.ideal())) return {Verdict::Fail, "e1_lim = e1 = 0 but Q^lim != Q"};
    detail += ", Q^lim = Q";
    if (ctx && e1_tight && e1_tight->upper == 0) {
      const auto t = tight_closure_candidate(q.ideal(), *ctx).ideal;
      if (!(t == q.ideal())) return {Verdict::Fail, "e1* bracket is [0,0] but tight candidate of Q != Q"};
      detail += ", tight candidate of Q = Q";
    }
  }
  return {Verdict::Pass, detail};
}

void check_inclusions(const ParameterIdeal& q, const ChainOptions& opts, ChainVerdict& v) {
  std::optional<MonomialIdeal> power;
  for (int n = 1; n <= opts.fit.n_max; ++n) {
    power = power ? ideal_product(*power, q.ideal()) : q.ideal();
    const auto bar = integral_closure_power(q.ideal(), n);
    std::optional<MonomialIdeal> lim;
    try {
      lim = lim_intersection(q, n, opts.limit);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotStabilized) throw;
      v.details.push_back(cat("n=", n, ": limInt not certified, sandwich checked as Q^n in closure"));
    }
    const MonomialIdeal& middle = lim ? *lim : *power;
    if (auto w = escape(*power, middle)) {
      v.inclusions_ok = false;
      v.details.push_back(cat("n=", n, ": generator ", *w, " of Q^n outside limInt(n)"));
    }
    if (auto w = escape(middle, bar)) {
      v.inclusions_ok = false;
      v.details.push_back(cat("n=", n, ": generator ", *w, " of limInt(n) outside closure of Q^n"));
    }
    if (!opts.frobenius || n > opts.tight_n_max) continue;
    v.tight_checked = true;
    const auto t = tight_closure_candidate(*power, *opts.frobenius).ideal;
    if (auto w = escape(middle, t)) {
      v.tight_inclusions_ok = false;
      v.details.push_back(cat("n=", n, ": generator ", *w, " of limInt(n) outside tight candidate"));
    }
    if (auto w = escape(t, bar)) {
      v.tight_inclusions_ok = false;
      v.details.push_back(cat("n=", n, ": generator ", *w, " of tight candidate outside closure of Q^n"));
    }
  }
}

void fill_coefficients(const CoefficientReport& rep, std::size_t d, ChainVerdict& v) {
  v.e0 = rep.ordinary.coefficient(0);
  v.e1 = rep.ordinary.coefficient(1);
  v.e1_lim = rep.lim_intersect.coefficient(1);
  v.e1_bar = rep.integral.coefficient(1);

  bool failed = false;
  if (v.e1 && *v.e1 > 0) {
    failed = true;
    v.details.push_back(cat("e1 = ", *v.e1, " > 0"));
  }
  if (v.e1_lim && *v.e1_lim < 0) {
    failed = true;
    v.details.push_back(cat("e1_lim = ", *v.e1_lim, " < 0"));
  }
  if (v.e1_lim && v.e1_bar && *v.e1_bar < *v.e1_lim) {
    failed = true;
    v.details.push_back(cat("e1_bar = ", *v.e1_bar, " < e1_lim = ", *v.e1_lim));
  }
  if (failed) {
    v.coefficient_chain = Verdict::Fail;
  } else if (v.e1 && v.e1_lim && v.e1_bar) {
    v.coefficient_chain = Verdict::Pass;
  } else {
    v.coefficient_chain = Verdict::NotApplicable;
    v.details.push_back("coefficient chain partial: some fit did not stabilize, claim bound stands in");
  }

  const std::int64_t e0 = pick_e0(rep);
  const auto& lim = rep.lim_intersect.lengths;
  for (std::size_t n = 0; n < lim.size(); ++n) {
    const auto rhs = checked_mul(binom_i64(static_cast<std::int64_t>(n + d), static_cast<std::int64_t>(d)), e0);
    ClaimRow row{static_cast<int>(n), lim[n], rhs, lim[n] <= rhs};
    if (!row.ok) v.details.push_back(cat("claim bound fails at n=", n, ": ", row.lhs, " > ", row.rhs));
    v.claim.push_back(row);
  }

  if (rep.e1_tight) {
    v.e1_tight = rep.e1_tight;
    const auto& b = *rep.e1_tight;
    const bool ok = b.lower >= 0 && b.lower <= b.upper && (!v.e1_bar || b.upper <= *v.e1_bar);
    v.tight_bracket = ok ? Verdict::Pass : Verdict::Fail;
    if (!ok) v.details.push_back(cat("e1* bracket [", b.lower, ", ", b.upper, "] inconsistent"));
  }
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Witness: return "witness";
    case Verdict::NotApplicable: return "n/a";
    case Verdict::Fail: return "fail";
  }
  return "?";
}

RingProfile ring_profile(const ParameterIdeal& q, const HilbertReport& ordinary) {
  const auto& ring = q.ring();
  RingProfile p;
  p.dim = ring.dim();
  p.embedding_dim = ring.atoms().size();
  p.is_regular = p.embedding_dim == p.dim;
  p.colength_q = q.ideal().colength();
  p.ordinary_lengths = ordinary.lengths;
  if (auto e0 = ordinary.coefficient(0)) {
    p.e0 = *e0;
  } else {
    p.e0 = *hilbert_report(Filtration(FiltrationKind::Integral, q)).coefficient(0);
  }
  p.is_CM = p.colength_q == p.e0;
  p.is_S2 = p.dim == 2 && !ring.is_free() ? p.is_CM : true;
  return p;
}

RingProfile ring_profile(const AffineSemigroup& ring, const ParameterIdeal& q, const FitOptions& opts) {
  require_same_ring(ring, q.ring());
  return ring_profile(q, hilbert_report(Filtration(FiltrationKind::Ordinary, q), opts));
}

bool ChainVerdict::claim_ok() const noexcept {
  return std::all_of(claim.begin(), claim.end(), [](const ClaimRow& r) { return r.ok; });
}

bool ChainVerdict::pass() const noexcept {
  return inclusions_ok && tight_inclusions_ok && claim_ok() && coefficient_chain != Verdict::Fail &&
         tight_bracket != Verdict::Fail && vanishing.ok() && e1_zero.ok();
}

ChainVerdict check_nonnegativity_chain(const AffineSemigroup& ring, const ParameterIdeal& q,
                                       const ChainOptions& opts) {
  require_same_ring(ring, q.ring());
  ChainVerdict v;
  check_inclusions(q, opts, v);
  auto rep = coefficient_report(q, opts.fit, opts.frobenius, opts.limit);
  fill_coefficients(rep, ring.dim(), v);
  v.coefficients = std::move(rep);
  return v;
}

ClaimRow check_claim_bound(const AffineSemigroup& ring, const ParameterIdeal& q, int n, const LimitOptions& limit) {
  require_same_ring(ring, q.ring());
  if (n < 0) throw Error(ErrorCode::InvalidInput, "claim bound needs n >= 0");
  const auto ordinary = hilbert_report(Filtration(FiltrationKind::Ordinary, q));
  const auto e0 = ring_profile(q, ordinary).e0;
  const auto d = static_cast<std::int64_t>(ring.dim());
  ClaimRow row{n, lim_intersection(q, n + 1, limit).colength(), checked_mul(binom_i64(n + d, d), e0), true};
  row.ok = row.lhs <= row.rhs;
  return row;
}

ImplicationVerdict check_vanishing(const AffineSemigroup& ring, const ParameterIdeal& q, const FitOptions& opts) {
  require_same_ring(ring, q.ring());
  const auto profile = ring_profile(q, hilbert_report(Filtration(FiltrationKind::Ordinary, q), opts));
  const auto bar = hilbert_report(Filtration(FiltrationKind::Integral, q), opts);
  return vanishing_from(profile, bar.coefficient(1), nu_m_mod_q(q));
}

ImplicationVerdict check_e1_zero_implies_CM(const AffineSemigroup& ring, const ParameterIdeal& q,
                                            const FitOptions& opts,
                                            const std::optional<FrobeniusContext>& frobenius) {
  require_same_ring(ring, q.ring());
  const auto rep = coefficient_report(q, opts, frobenius);
  const auto profile = ring_profile(q, rep.ordinary);
  return e1_zero_from(q, profile, rep.ordinary.coefficient(1), rep.lim_intersect.coefficient(1), rep.e1_tight,
                      frobenius, {});
}

ChainVerdict verify_instance(const Instance& inst, const ChainOptions& opts) {
  ChainVerdict v = check_nonnegativity_chain(inst.ring(), inst.q, opts);
  v.id = inst.id;
  const auto& rep = *v.coefficients;
  v.profile = ring_profile(inst.q, rep.ordinary);
  v.vanishing = vanishing_from(*v.profile, v.e1_bar, nu_m_mod_q(inst.q));
  v.e1_zero = e1_zero_from(inst.q, *v.profile, v.e1, v.e1_lim, v.e1_tight, opts.frobenius, opts.limit);
  v.conjecture_specimen = v.e1_lim && v.e1_bar && *v.e1_lim == 0 && *v.e1_bar == 0 && v.profile->is_S2 &&
                          !v.profile->is_CM;
  if (v.vanishing.verdict == Verdict::Fail) v.details.push_back("vanishing: " + v.vanishing.detail);
  if (v.e1_zero.verdict == Verdict::Fail) v.details.push_back("e1 = 0 implication: " + v.e1_zero.detail);
  return v;
}

std::vector<Instance> fuzz_corpus(std::uint64_t seed, std::size_t count, const FuzzBounds& bounds) {
  if (bounds.dim != 2) throw Error(ErrorCode::InvalidInput, "fuzzing supports dimension 2 only");
  if (bounds.max_generators < 2) throw Error(ErrorCode::InvalidInput, "need at least two generators");
  std::vector<Instance> out;
  if (count == 0) return out;
  if (bounds.max_coord < 1) throw Error(ErrorCode::GenerationExhausted, "no nonzero exponent within bounds");

  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::set<std::string> seen;
  const std::size_t attempts = 200 * count + 1000;
  for (std::size_t a = 0; a < attempts && out.size() < count; ++a) {
    const auto k = draw(2, bounds.max_generators);
    std::vector<ExponentVector> gens;
    for (std::int64_t i = 0; i < k; ++i) {
      ExponentVector g{draw(0, bounds.max_coord), draw(0, bounds.max_coord)};
      if (!g.is_zero()) gens.push_back(g);
    }
    const auto m1 = draw(1, 2);
    const auto m2 = draw(1, 2);
    try {
      AffineSemigroup ring(2, gens);
      const auto& rays = ring.ray_generators();
      ParameterIdeal q(ring, {m1 * rays[0], m2 * rays[1]});
      std::string key;
      for (const auto& g : ring.atoms()) key += g.to_string();
      key += "|" + q.ordered()[0].to_string() + q.ordered()[1].to_string();
      if (!seen.insert(key).second) continue;
      std::ostringstream id;
      id << "fuzz-" << seed << "-" << std::setw(4) << std::setfill('0') << out.size();
      out.push_back(Instance{id.str(), std::move(q)});
    } catch (const Error&) {
      // rank-deficient draws are skipped
    }
  }
  if (out.size() < count) {
    throw Error(ErrorCode::GenerationExhausted,
                cat("bounds admit only ", out.size(), " distinct instances, ", count, " requested"));
  }
  return out;
}

CorpusSummary verify_corpus(std::vector<Instance> corpus, const ChainOptions& opts) {
  std::stable_sort(corpus.begin(), corpus.end(), [](const Instance& a, const Instance& b) { return a.id < b.id; });
  CorpusSummary s;
  for (const auto& inst : corpus) {
    auto v = verify_instance(inst, opts);
    ++s.instances;
    if (v.pass()) {
      ++s.passes;
    } else {
      ++s.violations;
    }
    if (v.vanishing.verdict == Verdict::Witness) ++s.witnesses;
    if (v.conjecture_specimen) ++s.specimens;
    if (!v.e1 || !v.e1_lim || !v.e1_bar) ++s.unstabilized;
    s.verdicts.push_back(std::move(v));
  }
  return s;
}

std::vector<std::string> builtin_names() { return {"remark-s2", "free-x2y3", "free-maximal"}; }

Instance builtin_instance(std::string_view name) {
  if (name == "remark-s2") {
    AffineSemigroup ring(2, {{1, 0}, {1, 1}, {0, 2}, {0, 3}});
    return {"remark-s2", ParameterIdeal(ring, {{1, 0}, {0, 2}})};
  }
  if (name == "free-x2y3") return {"free-x2y3", ParameterIdeal(AffineSemigroup::free(2), {{2, 0}, {0, 3}})};
  if (name == "free-maximal") return {"free-maximal", ParameterIdeal(AffineSemigroup::free(2), {{1, 0}, {0, 1}})};
  throw Error(ErrorCode::InvalidInput, cat("unknown example '", name, "'"));
}

}  // namespace monoclose
