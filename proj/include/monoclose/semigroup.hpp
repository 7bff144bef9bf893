#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "monoclose/exponent.hpp"

namespace monoclose {

/// A gap family {base + k * direction : k >= 0} lying entirely in the
/// saturation but outside the semigroup.
struct GapRay {
  ExponentVector base;
  ExponentVector direction;

  friend bool operator==(const GapRay&, const GapRay&) = default;
};

/// S̄ \ S described exactly: finitely many isolated gaps plus ray-periodic
/// families, and a conductor c with c + S̄ ⊆ S.
struct SaturationReport {
  std::vector<ExponentVector> finite_gaps;
  std::vector<GapRay> gap_rays;
  ExponentVector conductor;

  bool gaps_empty() const { return finite_gaps.empty() && gap_rays.empty(); }
};

/// Finitely generated submonoid S of Z_{>=0}^d, d <= 2 in general and d = 3
/// for the free monoid only. The value is immutable; all derived structure
/// is computed at construction and shared between copies.
///
/// Membership is exact for every integer vector. Writing v in the basis of
/// the two extreme-ray generators a1, a2 (scaled by det[a1 a2]), the cone is
/// split into a core, where membership reduces to the lattice test, and two
/// strips along the rays, where each residue class along a ray direction is
/// an up-set with a single minimal element (an Apéry element) found by a
/// shortest-path pass.
class AffineSemigroup {
 public:
  AffineSemigroup(std::size_t dim, std::vector<ExponentVector> generators);

  /// Z_{>=0}^dim.
  static AffineSemigroup free(std::size_t dim);

  std::size_t dim() const noexcept;
  /// Generators as supplied (deduplicated, sorted lexicographically).
  const std::vector<ExponentVector>& generators() const noexcept;
  /// Minimal generating set (irreducible elements), sorted.
  const std::vector<ExponentVector>& atoms() const noexcept;
  /// Smallest semigroup element on each extreme ray of the cone.
  const std::vector<ExponentVector>& ray_generators() const noexcept;
  bool is_free() const noexcept;
  std::int64_t max_atom_degree() const noexcept;

  /// True iff v is a nonnegative integer combination of the generators.
  bool contains(const ExponentVector& v) const;
  bool in_cone(const ExponentVector& v) const;
  /// Membership in cone(S) ∩ group(S).
  bool in_saturation(const ExponentVector& v) const;
  /// Index of the extreme ray containing the nonzero vector v, if any.
  std::optional<std::size_t> extreme_ray_of(const ExponentVector& v) const;

  /// Lattice points of the half-open parallelepiped spanned by the ray
  /// generators; S̄ = P + N a_1 + ... + N a_d.
  std::vector<ExponentVector> parallelepiped_points() const;

  /// c + S̄ ⊆ S, checked exactly through the parallelepiped points.
  bool is_conductor(const ExponentVector& c) const;
  SaturationReport saturation() const;

  /// Whether S[-c] is a group times a free monoid (the localization at the
  /// monomial c is regular).
  bool frees_on_inversion(const ExponentVector& c) const;

  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b);

 private:
  struct Structure;
  std::shared_ptr<const Structure> s_;
};

/// Brute-force style check that two rings are the same monoid; throws
/// RingMismatch otherwise.
void require_same_ring(const AffineSemigroup& a, const AffineSemigroup& b);

}  // namespace monoclose
