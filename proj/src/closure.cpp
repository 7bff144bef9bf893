#include "monoclose/closure.hpp"

#include <algorithm>

namespace monoclose {

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const auto np = newton_polyhedron(ideal.generators(), ideal.ring());
  return MonomialIdeal::from_predicate(ideal, [&](const ExponentVector& s) { return np.contains(s); });
}

MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "closure power needs n >= 1");
  const auto np = newton_polyhedron(ideal.generators(), ideal.ring()).scaled(n);
  // The n-th power of the extreme-ray generators already forces finiteness;
  // the scan certifies the complement without forming I^n.
  std::vector<ExponentVector> floor_gens;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero() || ideal.ring().extreme_ray_of(g)) floor_gens.push_back(static_cast<std::int64_t>(n) * g);
  }
  MonomialIdeal floor(ideal.ring(), std::move(floor_gens));
  return MonomialIdeal::from_predicate(floor, [&](const ExponentVector& s) { return np.contains(s); });
}

LimitClosureCertificate limit_closure(const ParameterIdeal& q, const LimitOptions& opts) {
  const auto& ring = q.ring();
  const auto& u = q.ordered();
  const auto& base = q.ideal().complement();
  ExponentVector prod(ring.dim());
  for (const auto& g : u) prod += g;

  // Complement of the colon at t, as a subset of the complement of Q.
  auto colon_complement = [&](int t) {
    std::vector<ExponentVector> out;
    const ExponentVector shift = static_cast<std::int64_t>(t) * prod;
    for (const auto& s : base.points) {
      const ExponentVector v = s + shift;
      bool member = std::any_of(u.begin(), u.end(), [&](const ExponentVector& g) {
        return ring.contains(v - static_cast<std::int64_t>(t + 1) * g);
      });
      if (!member) out.push_back(s);
    }
    return out;
  };

  std::vector<std::vector<ExponentVector>> chain;
  chain.push_back(colon_complement(0));
  for (int t = 1; t <= opts.t_cap; ++t) {
    chain.push_back(colon_complement(t));
    int start = t - opts.window;
    if (start < 0) continue;
    bool flat = true;
    for (int k = start + 1; k <= t && flat; ++k) flat = chain[static_cast<std::size_t>(k)] == chain[static_cast<std::size_t>(start)];
    if (flat) {
      return {MonomialIdeal::from_complement(ring, chain[static_cast<std::size_t>(start)], base.certified_degree),
              start, opts.window};
    }
  }
  throw Error(ErrorCode::NotStabilized,
              "limit closure colon chain still moving at t = " + std::to_string(opts.t_cap));
}

std::vector<ParameterSplit> parameter_splits(std::size_t d, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "splits need n >= 1");
  const int total = n + static_cast<int>(d) - 1;
  std::vector<ParameterSplit> out;
  std::vector<int> alpha(d, 1);
  // Enumerate compositions of `total` into d positive parts, lexicographically.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == d) {
      alpha[i] = left;
      out.push_back({alpha, n});
      return;
    }
    for (int a = 1; a <= left - static_cast<int>(d - i - 1); ++a) {
      alpha[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, total);
  return out;
}

ParameterIdeal split_ideal(const ParameterIdeal& q, const ParameterSplit& split) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < q.ordered().size(); ++i) gens.push_back(split.alpha[i] * q.ordered()[i]);
  return ParameterIdeal(q.ring(), std::move(gens));
}

MonomialIdeal lim_intersection(const ParameterIdeal& q, int n, const LimitOptions& opts) {
  std::vector<ExponentVector> comp;
  std::int64_t degree = 0;
  for (const auto& split : parameter_splits(q.ring().dim(), n)) {
    auto cert = limit_closure(split_ideal(q, split), opts);
    const auto& w = cert.ideal.complement();
    comp.insert(comp.end(), w.points.begin(), w.points.end());
    degree = std::max(degree, w.certified_degree);
  }
  return MonomialIdeal::from_complement(q.ring(), std::move(comp), degree);
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::int64_t q) {
  if (q < 1) throw Error(ErrorCode::InvalidInput, "Frobenius power needs q >= 1");
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back(q * g);
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

FrobeniusContext FrobeniusContext::for_ring(const AffineSemigroup& ring, std::int64_t p, int e_max) {
  for (const auto& g : ring.generators()) {
    if (ring.frees_on_inversion(g)) return FrobeniusContext{p, e_max, g};
  }
  throw Error(ErrorCode::InvalidInput, "no generator frees the semigroup on inversion");
}

void FrobeniusContext::validate(const AffineSemigroup& ring) const {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidInput, "characteristic " + std::to_string(p) + " is not prime");
  if (e_max < 2) throw Error(ErrorCode::InvalidInput, "e_max must be at least 2");
  require_same_dim(test_element, ring.dim());
  if (!ring.frees_on_inversion(test_element)) {
    throw Error(ErrorCode::InvalidInput, "test element " + test_element.to_string() + " has a singular localization");
  }
}

TightCandidate tight_closure_candidate(const MonomialIdeal& ideal, const FrobeniusContext& ctx) {
  ctx.validate(ideal.ring());
  const auto& ring = ideal.ring();
  const auto& gens = ideal.generators();
  // For each complement point, the largest e_max at which it still passes.
  auto passes = [&](const ExponentVector& s, std::int64_t q) {
    const ExponentVector v = ctx.test_element + q * s;
    return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return ring.contains(v - q * g); });
  };
  auto survives = [&](const ExponentVector& s, int e_max) {
    std::int64_t q = 1;
    for (int e = 0; e <= e_max; ++e, q = checked_mul(q, ctx.p)) {
      if (!passes(s, q)) return false;
    }
    return true;
  };
  auto full = MonomialIdeal::from_predicate(ideal, [&](const ExponentVector& s) { return survives(s, ctx.e_max); });
  auto prev = MonomialIdeal::from_predicate(ideal, [&](const ExponentVector& s) { return survives(s, ctx.e_max - 1); });
  bool stable = full.complement().points == prev.complement().points;
  return {std::move(full), ctx.e_max, stable};
}

}  // namespace monoclose
