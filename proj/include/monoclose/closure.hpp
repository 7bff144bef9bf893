#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monoclose/ideal.hpp"
#include "monoclose/polyhedron.hpp"

namespace monoclose {

MonomialIdeal integral_closure(const MonomialIdeal& ideal);

/// overline(I^n) as the lattice points of S inside n * NP(I). Does not form
/// I^n.
MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, int n);

struct LimitOptions {
  int t_cap = 16;
  int window = 2;
};

struct LimitClosureCertificate {
  MonomialIdeal ideal;
  int stabilized_t;
  int window;
};

/// Union over t of (u_1^{t+1}, ..., u_d^{t+1}) : (u_1 ... u_d)^t, declared
/// stable once `window` further values of t give the same colon.
LimitClosureCertificate limit_closure(const ParameterIdeal& q, const LimitOptions& opts = {});

/// alpha in Lambda_n: d positive parts summing to n + d - 1, so that
/// alpha = (1, ..., 1) corresponds to n = 1.
struct ParameterSplit {
  std::vector<int> alpha;
  int n;
};

/// All splits for the given n, lexicographic.
std::vector<ParameterSplit> parameter_splits(std::size_t d, int n);

/// Q(alpha) = (u_1^{alpha_1}, ..., u_d^{alpha_d}) keeping the generator order.
ParameterIdeal split_ideal(const ParameterIdeal& q, const ParameterSplit& split);

/// The intersection of Q(alpha)^lim over Lambda_n (n >= 1). Sits between Q^n
/// and overline(Q^n).
MonomialIdeal lim_intersection(const ParameterIdeal& q, int n, const LimitOptions& opts = {});

/// I^[q]: generators scaled by q.
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::int64_t q);

bool is_prime(std::int64_t p);

struct FrobeniusContext {
  std::int64_t p = 2;
  int e_max = 4;
  ExponentVector test_element;

  /// Default test element: the lexicographically smallest generator whose
  /// inversion frees the semigroup.
  static FrobeniusContext for_ring(const AffineSemigroup& ring, std::int64_t p, int e_max);
  /// Throws InvalidInput unless p is prime, e_max >= 2 and the test element
  /// lies in S with a regular localization.
  void validate(const AffineSemigroup& ring) const;
};

struct TightCandidate {
  MonomialIdeal ideal;
  int e_max;
  /// The candidate did not change between e_max - 1 and e_max.
  bool stable;
};

/// {s in S : c + q s in I^[q] for every q = p^e, 0 <= e <= e_max}. A superset
/// of I* when c is a test element; shrinks as e_max grows.
TightCandidate tight_closure_candidate(const MonomialIdeal& ideal, const FrobeniusContext& ctx);

}  // namespace monoclose
