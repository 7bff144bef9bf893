#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "monoclose/exponent.hpp"
#include "monoclose/semigroup.hpp"

namespace monoclose {

/// Finite complement {s in S : s not in I} of an m-primary monomial ideal,
/// together with the degree D from which every semigroup element is known
/// to be a member.
struct ComplementWitness {
  std::vector<ExponentVector> points;  // sorted
  std::int64_t certified_degree = 0;

  bool contains(const ExponentVector& v) const;
};

/// Monomial ideal of k[S]: the S-stable up-set generated by a finite
/// antichain of exponents.
///
/// An m-primary ideal also carries its exact complement, certified by a
/// degree window: if every element of S whose total degree lies in
/// [D, D + W) belongs to the up-set, W being the largest atom degree, then so
/// does every element of degree >= D (peel atoms off one at a time).
class MonomialIdeal {
 public:
  MonomialIdeal(AffineSemigroup ring, std::vector<ExponentVector> generators);

  /// The m-primary up-set S \ complement. Generators are recovered as the
  /// members all of whose atom predecessors lie in the complement.
  static MonomialIdeal from_complement(AffineSemigroup ring, std::vector<ExponentVector> complement,
                                       std::int64_t certified_degree);

  /// The up-set described by a membership predicate that is known to contain
  /// the m-primary ideal `floor`. The predicate must be S-stable.
  static MonomialIdeal from_predicate(const MonomialIdeal& floor,
                                      const std::function<bool(const ExponentVector&)>& member);

  const AffineSemigroup& ring() const noexcept { return ring_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  bool is_m_primary() const noexcept { return witness_.has_value(); }
  /// Throws NotMPrimary when no finite complement exists.
  const ComplementWitness& complement() const;
  std::int64_t colength() const { return static_cast<std::int64_t>(complement().points.size()); }

  bool contains(const ExponentVector& v) const;
  /// other ⊆ *this
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.generators_ == b.generators_;
  }

 private:
  MonomialIdeal(AffineSemigroup ring) : ring_(std::move(ring)) {}

  AffineSemigroup ring_;
  std::vector<ExponentVector> generators_;
  std::optional<ComplementWitness> witness_;
};

/// d ordered monomials generating an m-primary ideal. The order matters for
/// the splits Q(alpha) used by limit-closure intersections.
class ParameterIdeal {
 public:
  ParameterIdeal(AffineSemigroup ring, std::vector<ExponentVector> ordered_generators);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const AffineSemigroup& ring() const noexcept { return ideal_.ring(); }
  const std::vector<ExponentVector>& ordered() const noexcept { return ordered_; }

 private:
  std::vector<ExponentVector> ordered_;
  MonomialIdeal ideal_;
};

/// Reduce to an antichain under S-divisibility (u <=_S v iff v - u in S).
std::vector<ExponentVector> minimalize(const AffineSemigroup& ring, std::vector<ExponentVector> gens);

/// m-primary iff some generator lies on every extreme ray of cone(S).
bool generates_m_primary(const AffineSemigroup& ring, std::span<const ExponentVector> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, int n);
/// Both arguments m-primary.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : f) = {s in S : s + f in I}; I m-primary, f in S.
MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const ExponentVector& f);
MonomialIdeal ideal_colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by);

bool is_parameter_ideal(const MonomialIdeal& ideal);
/// Number of atoms of S outside Q + m^2, i.e. outside Q.
int nu_m_mod_q(const ParameterIdeal& q);

}  // namespace monoclose
