#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monoclose/exponent.hpp"
#include "monoclose/semigroup.hpp"

namespace monoclose {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// <normal, x> >= offset, with a primitive integer normal.
struct Halfspace {
  std::vector<std::int64_t> normal;
  Rational offset;

  bool contains(const ExponentVector& p) const;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    if (a.offset < b.offset) return std::strong_ordering::less;
    if (b.offset < a.offset) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

std::ostream& operator<<(std::ostream& os, const Halfspace& h);

class RationalPolyhedron {
 public:
  RationalPolyhedron(std::size_t dim, std::vector<Halfspace> halfspaces);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }

  bool contains(const ExponentVector& p) const;
  /// n * P: offsets multiplied by n, recession cone unchanged.
  RationalPolyhedron scaled(std::int64_t n) const;

  friend bool operator==(const RationalPolyhedron&, const RationalPolyhedron&) = default;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;  // sorted, deduplicated
};

/// conv(points) + cone(S) as its facet halfspaces.
RationalPolyhedron newton_polyhedron(std::span<const ExponentVector> points, const AffineSemigroup& ring);

/// The facets of P whose normals are strictly positive, as the vertex lists
/// of bounded faces (d <= 3). Used by the volume formula.
std::vector<std::vector<ExponentVector>> compact_facets(std::span<const ExponentVector> points,
                                                        const RationalPolyhedron& poly);

}  // namespace monoclose
