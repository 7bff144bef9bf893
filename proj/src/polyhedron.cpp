#include "monoclose/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace monoclose {

namespace {

std::int64_t dot(std::span<const std::int64_t> n, const ExponentVector& p) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s = checked_add(s, checked_mul(n[i], p[i]));
  return s;
}

bool make_primitive(std::vector<std::int64_t>& n) {
  std::int64_t g = 0;
  for (auto x : n) g = std::gcd(g, x);
  if (g == 0) return false;
  for (auto& x : n) x /= g;
  return true;
}

// Rank of a small integer vector family (d <= 3), by exact elimination.
std::size_t rank(std::vector<std::vector<BigInt>> rows, std::size_t dim) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    auto piv = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                            [&](const auto& row) { return row[col] != 0; });
    if (piv == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), piv);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      BigInt a = rows[r][col], b = rows[i][col];
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
    }
    ++r;
  }
  return r;
}

std::vector<BigInt> to_big(const ExponentVector& v) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < v.dim(); ++i) out.emplace_back(v[i]);
  return out;
}

}  // namespace

bool Halfspace::contains(const ExponentVector& p) const {
  const BigInt& num = boost::multiprecision::numerator(offset);
  const BigInt& den = boost::multiprecision::denominator(offset);
  return BigInt(dot(normal, p)) * den >= num;
}

std::ostream& operator<<(std::ostream& os, const Halfspace& h) {
  os << '<';
  for (std::size_t i = 0; i < h.normal.size(); ++i) os << (i ? "," : "") << h.normal[i];
  return os << "> . x >= " << h.offset;
}

RationalPolyhedron::RationalPolyhedron(std::size_t dim, std::vector<Halfspace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  for (const auto& h : halfspaces_) {
    if (h.normal.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "halfspace normal length");
  }
  std::sort(halfspaces_.begin(), halfspaces_.end());
  halfspaces_.erase(std::unique(halfspaces_.begin(), halfspaces_.end()), halfspaces_.end());
}

bool RationalPolyhedron::contains(const ExponentVector& p) const {
  require_same_dim(p, dim_);
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return h.contains(p); });
}

RationalPolyhedron RationalPolyhedron::scaled(std::int64_t n) const {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "polyhedron scale must be positive");
  auto hs = halfspaces_;
  for (auto& h : hs) h.offset *= n;
  return RationalPolyhedron(dim_, std::move(hs));
}

RationalPolyhedron newton_polyhedron(std::span<const ExponentVector> points, const AffineSemigroup& ring) {
  const std::size_t d = ring.dim();
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "Newton polyhedron of an empty point set");
  for (const auto& p : points) require_same_dim(p, d);
  const auto& rays = ring.ray_generators();

  // Directions the facets may contain: edges between points and the rays.
  std::vector<ExponentVector> dirs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] != points[j]) dirs.push_back(points[j] - points[i]);
    }
  }
  dirs.insert(dirs.end(), rays.begin(), rays.end());

  std::vector<std::vector<std::int64_t>> candidates;
  if (d == 1) {
    candidates.push_back({1});
  } else if (d == 2) {
    for (const auto& w : dirs) candidates.push_back({-w[1], w[0]});
  } else {
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        const auto &u = dirs[i], &v = dirs[j];
        candidates.push_back({checked_add(checked_mul(u[1], v[2]), -checked_mul(u[2], v[1])),
                              checked_add(checked_mul(u[2], v[0]), -checked_mul(u[0], v[2])),
                              checked_add(checked_mul(u[0], v[1]), -checked_mul(u[1], v[0]))});
      }
    }
  }

  std::vector<Halfspace> facets;
  for (auto n : candidates) {
    if (!make_primitive(n)) continue;
    // Orient so the recession cone is inside; skip normals that cut it.
    bool pos = true, neg = true;
    for (const auto& r : rays) {
      std::int64_t s = dot(n, r);
      pos = pos && s >= 0;
      neg = neg && s <= 0;
    }
    if (!pos && !neg) continue;
    if (!pos) {
      for (auto& x : n) x = -x;
    }
    std::int64_t off = dot(n, points[0]);
    for (const auto& p : points) off = std::min(off, dot(n, p));

    // Facet iff the tight points and tight rays span a (d-1)-dimensional face.
    std::vector<ExponentVector> tight;
    for (const auto& p : points) {
      if (dot(n, p) == off) tight.push_back(p);
    }
    std::vector<std::vector<BigInt>> span;
    for (std::size_t i = 1; i < tight.size(); ++i) span.push_back(to_big(tight[i] - tight[0]));
    for (const auto& r : rays) {
      if (dot(n, r) == 0) span.push_back(to_big(r));
    }
    if (rank(span, d) + 1 < d) continue;
    facets.push_back({n, Rational(off)});
  }
  return RationalPolyhedron(d, std::move(facets));
}

std::vector<std::vector<ExponentVector>> compact_facets(std::span<const ExponentVector> points,
                                                        const RationalPolyhedron& poly) {
  const std::size_t d = poly.dim();
  std::vector<std::vector<ExponentVector>> out;
  for (const auto& h : poly.halfspaces()) {
    if (!std::all_of(h.normal.begin(), h.normal.end(), [](std::int64_t x) { return x > 0; })) continue;
    std::vector<ExponentVector> tight;
    for (const auto& p : points) {
      if (BigInt(dot(h.normal, p)) == boost::multiprecision::numerator(h.offset)) tight.push_back(p);
    }
    std::sort(tight.begin(), tight.end());
    tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
    if (d == 3 && tight.size() > 2) {
      // Order the face's hull vertices cyclically in the projection that
      // drops coordinate 2 (its normal component is nonzero).
      auto cr = [](const ExponentVector& o, const ExponentVector& a, const ExponentVector& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
      };
      std::vector<ExponentVector> hull(2 * tight.size());
      std::size_t k = 0;
      for (const auto& p : tight) {
        while (k >= 2 && cr(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
      }
      for (std::size_t i = tight.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cr(hull[k - 2], hull[k - 1], tight[i]) <= 0) --k;
        hull[k++] = tight[i];
      }
      hull.resize(k - 1);
      tight = std::move(hull);
    } else if (d == 2 && tight.size() > 2) {
      tight = {tight.front(), tight.back()};
    }
    out.push_back(std::move(tight));
  }
  return out;
}

}  // namespace monoclose
