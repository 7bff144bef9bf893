#include "monoclose/semigroup.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <utility>

namespace monoclose {

namespace {

std::int64_t pmod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t cross(const ExponentVector& u, const ExponentVector& v) {
  return checked_add(checked_mul(u[0], v[1]), -checked_mul(u[1], v[0]));
}

ExponentVector unit(std::size_t dim, std::size_t i) {
  ExponentVector e(dim);
  e[i] = 1;
  return e;
}

void sort_unique(std::vector<ExponentVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Shortest path over residue classes with nonnegative costs. `next` maps a
// node and a generator index to the successor node (or -1) and its cost.
std::vector<std::int64_t> dijkstra(std::size_t nodes, std::size_t start, std::size_t gens,
                                   const std::function<std::pair<std::int64_t, std::int64_t>(
                                       std::size_t, std::int64_t, std::size_t)>& next) {
  std::vector<std::int64_t> dist(nodes, -1);
  using Item = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[start] = 0;
  pq.emplace(0, start);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (std::size_t g = 0; g < gens; ++g) {
      auto [v, nd] = next(u, d, g);
      if (v < 0) continue;
      auto vi = static_cast<std::size_t>(v);
      if (dist[vi] < 0 || nd < dist[vi]) {
        dist[vi] = nd;
        pq.emplace(nd, vi);
      }
    }
  }
  return dist;
}

}  // namespace

struct AffineSemigroup::Structure {
  std::size_t dim = 0;
  std::vector<ExponentVector> generators;
  std::vector<ExponentVector> atoms;
  std::vector<ExponentVector> rays;
  bool free = false;
  std::int64_t max_deg = 0;

  // Scaled coordinates X(v) = det * A^{-1} v with A = [a1 a2] (d = 2) or
  // X(v) = v (d = 1, det = a1).
  std::int64_t det = 1;
  std::array<std::int64_t, 2> threshold{0, 0};
  std::vector<std::uint8_t> coset;    // d = 2: reached classes of L / (Z a1 + Z a2)
  std::vector<std::int64_t> strip1;   // d = 2: [X2 * det + X1 mod det] -> min X1
  std::vector<std::int64_t> strip2;   // d = 2: [X1 * det + X2 mod det] -> min X2
  std::vector<std::int64_t> apery;    // d = 1: [v mod a1] -> min v

  std::array<std::int64_t, 2> coords(const ExponentVector& v) const {
    if (dim == 1) return {v[0], 0};
    return {cross(v, rays[1]), cross(rays[0], v)};
  }

  ExponentVector from_coords(std::int64_t x1, std::int64_t x2) const {
    ExponentVector v(2);
    for (std::size_t j = 0; j < 2; ++j) {
      v[j] = checked_add(checked_mul(x1, rays[0][j]), checked_mul(x2, rays[1][j])) / det;
    }
    return v;
  }

  bool coset_reached(std::int64_t x1, std::int64_t x2) const {
    return coset[static_cast<std::size_t>(pmod(x1, det) * det + pmod(x2, det))] != 0;
  }

  bool contains(const ExponentVector& v) const {
    if (dim == 3) return v.nonnegative();
    if (dim == 1) {
      if (v[0] < 0) return false;
      std::int64_t m = apery[static_cast<std::size_t>(pmod(v[0], det))];
      return m >= 0 && v[0] >= m;
    }
    auto [x1, x2] = coords(v);
    if (x1 < 0 || x2 < 0) return false;
    if (x2 < threshold[1]) {
      std::int64_t m = strip1[static_cast<std::size_t>(x2 * det + pmod(x1, det))];
      return m >= 0 && x1 >= m;
    }
    if (x1 < threshold[0]) {
      std::int64_t m = strip2[static_cast<std::size_t>(x1 * det + pmod(x2, det))];
      return m >= 0 && x2 >= m;
    }
    return coset_reached(x1, x2);
  }

  void build_line();
  void build_plane();
};

void AffineSemigroup::Structure::build_line() {
  const auto& gens = generators;
  rays = {gens.front()};
  for (const auto& g : gens) {
    if (g[0] < rays[0][0]) rays[0] = g;
  }
  det = rays[0][0];
  apery = dijkstra(static_cast<std::size_t>(det), 0, gens.size(),
                   [&](std::size_t, std::int64_t d, std::size_t g) {
                     std::int64_t nd = checked_add(d, gens[g][0]);
                     return std::pair<std::int64_t, std::int64_t>{pmod(nd, det), nd};
                   });
  for (std::int64_t m : apery) threshold[0] = std::max(threshold[0], m);
}

void AffineSemigroup::Structure::build_plane() {
  const auto& gens = generators;
  // Extreme rays: every generator lies counterclockwise of rays[0] and
  // clockwise of rays[1].
  auto extreme = [&](bool first) {
    ExponentVector best = gens.front();
    for (const auto& g : gens) {
      std::int64_t c = first ? cross(g, best) : cross(best, g);
      if (c > 0 || (c == 0 && g.degree() < best.degree())) best = g;
    }
    return best;
  };
  rays = {extreme(true), extreme(false)};
  det = cross(rays[0], rays[1]);
  if (det <= 0) {
    throw Error(ErrorCode::InvalidSemigroup, "generators do not span a full-dimensional cone");
  }

  std::vector<std::array<std::int64_t, 2>> gx;
  gx.reserve(gens.size());
  for (const auto& g : gens) gx.push_back(coords(g));

  // Classes of the lattice modulo Z a1 + Z a2, with representatives in S.
  const auto ud = static_cast<std::size_t>(det);
  coset.assign(ud * ud, 0);
  std::vector<std::array<std::int64_t, 2>> frontier{{0, 0}};
  coset[0] = 1;
  while (!frontier.empty()) {
    std::vector<std::array<std::int64_t, 2>> next;
    for (const auto& x : frontier) {
      for (const auto& h : gx) {
        std::array<std::int64_t, 2> y{x[0] + h[0], x[1] + h[1]};
        auto idx = static_cast<std::size_t>(pmod(y[0], det) * det + pmod(y[1], det));
        if (coset[idx]) continue;
        coset[idx] = 1;
        threshold[0] = std::max(threshold[0], y[0]);
        threshold[1] = std::max(threshold[1], y[1]);
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }

  // Strip along a1 (X2 < T2): minimal X1 per class (X2, X1 mod det).
  const auto t1 = static_cast<std::size_t>(threshold[0]);
  const auto t2 = static_cast<std::size_t>(threshold[1]);
  if (t2 > 0) {
    strip1 = dijkstra(t2 * ud, 0, gx.size(), [&](std::size_t node, std::int64_t d, std::size_t g) {
      std::int64_t x2 = static_cast<std::int64_t>(node / ud) + gx[g][1];
      if (x2 >= threshold[1]) return std::pair<std::int64_t, std::int64_t>{-1, 0};
      std::int64_t x1 = d + gx[g][0];
      return std::pair<std::int64_t, std::int64_t>{x2 * det + pmod(x1, det), x1};
    });
  }
  if (t1 > 0) {
    strip2 = dijkstra(t1 * ud, 0, gx.size(), [&](std::size_t node, std::int64_t d, std::size_t g) {
      std::int64_t x1 = static_cast<std::int64_t>(node / ud) + gx[g][0];
      if (x1 >= threshold[0]) return std::pair<std::int64_t, std::int64_t>{-1, 0};
      std::int64_t x2 = d + gx[g][1];
      return std::pair<std::int64_t, std::int64_t>{x1 * det + pmod(x2, det), x2};
    });
  }
}

AffineSemigroup::AffineSemigroup(std::size_t dim, std::vector<ExponentVector> generators) {
  if (dim == 0 || dim > kMaxDim) {
    throw Error(ErrorCode::InvalidSemigroup, "ambient dimension must be 1, 2 or 3");
  }
  if (generators.empty()) throw Error(ErrorCode::InvalidSemigroup, "no generators");
  for (const auto& g : generators) {
    require_same_dim(g, dim);
    if (!g.nonnegative()) throw Error(ErrorCode::InvalidSemigroup, "negative generator " + g.to_string());
    if (g.is_zero()) throw Error(ErrorCode::InvalidSemigroup, "zero generator");
  }
  sort_unique(generators);

  auto s = std::make_shared<Structure>();
  s->dim = dim;
  s->generators = generators;

  if (dim == 3) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!std::binary_search(generators.begin(), generators.end(), unit(3, i))) {
        throw Error(ErrorCode::InvalidSemigroup, "only the free monoid is supported in dimension 3");
      }
    }
    s->rays = {unit(3, 0), unit(3, 1), unit(3, 2)};
  } else if (dim == 1) {
    s->build_line();
  } else {
    s->build_plane();
  }

  for (const auto& h : generators) {
    bool reducible = std::any_of(generators.begin(), generators.end(), [&](const ExponentVector& g) {
      return g != h && s->contains(h - g);
    });
    if (!reducible) s->atoms.push_back(h);
  }
  for (const auto& a : s->atoms) s->max_deg = std::max(s->max_deg, a.degree());
  s->free = s->atoms.size() == dim && std::all_of(s->atoms.begin(), s->atoms.end(),
                                                  [](const ExponentVector& a) { return a.degree() == 1; });
  s_ = std::move(s);
}

AffineSemigroup AffineSemigroup::free(std::size_t dim) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(unit(dim, i));
  return AffineSemigroup(dim, std::move(gens));
}

std::size_t AffineSemigroup::dim() const noexcept { return s_->dim; }
const std::vector<ExponentVector>& AffineSemigroup::generators() const noexcept { return s_->generators; }
const std::vector<ExponentVector>& AffineSemigroup::atoms() const noexcept { return s_->atoms; }
const std::vector<ExponentVector>& AffineSemigroup::ray_generators() const noexcept { return s_->rays; }
bool AffineSemigroup::is_free() const noexcept { return s_->free; }
std::int64_t AffineSemigroup::max_atom_degree() const noexcept { return s_->max_deg; }

bool AffineSemigroup::contains(const ExponentVector& v) const {
  require_same_dim(v, s_->dim);
  return s_->contains(v);
}

bool AffineSemigroup::in_cone(const ExponentVector& v) const {
  require_same_dim(v, s_->dim);
  if (s_->dim != 2) return v.nonnegative();
  auto [x1, x2] = s_->coords(v);
  return x1 >= 0 && x2 >= 0;
}

bool AffineSemigroup::in_saturation(const ExponentVector& v) const {
  require_same_dim(v, s_->dim);
  const auto& s = *s_;
  if (s.dim == 3) return v.nonnegative();
  if (s.dim == 1) return v[0] >= 0 && s.apery[static_cast<std::size_t>(pmod(v[0], s.det))] >= 0;
  auto [x1, x2] = s.coords(v);
  return x1 >= 0 && x2 >= 0 && s.coset_reached(x1, x2);
}

std::optional<std::size_t> AffineSemigroup::extreme_ray_of(const ExponentVector& v) const {
  require_same_dim(v, s_->dim);
  if (v.is_zero() || !in_cone(v)) return std::nullopt;
  if (s_->dim == 1) return 0;
  if (s_->dim == 3) {
    std::optional<std::size_t> axis;
    for (std::size_t i = 0; i < 3; ++i) {
      if (v[i] != 0) {
        if (axis) return std::nullopt;
        axis = i;
      }
    }
    return axis;
  }
  auto [x1, x2] = s_->coords(v);
  if (x2 == 0) return 0;
  if (x1 == 0) return 1;
  return std::nullopt;
}

std::vector<ExponentVector> AffineSemigroup::parallelepiped_points() const {
  const auto& s = *s_;
  std::vector<ExponentVector> pts;
  if (s.dim == 3) return {ExponentVector(3)};
  if (s.dim == 1) {
    for (std::int64_t r = 0; r < s.det; ++r) {
      if (s.apery[static_cast<std::size_t>(r)] >= 0) pts.push_back(ExponentVector{r});
    }
    return pts;
  }
  for (std::int64_t x1 = 0; x1 < s.det; ++x1) {
    for (std::int64_t x2 = 0; x2 < s.det; ++x2) {
      if (s.coset_reached(x1, x2)) pts.push_back(s.from_coords(x1, x2));
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool AffineSemigroup::is_conductor(const ExponentVector& c) const {
  require_same_dim(c, s_->dim);
  for (const auto& p : parallelepiped_points()) {
    if (!s_->contains(c + p)) return false;
  }
  return true;
}

SaturationReport AffineSemigroup::saturation() const {
  const auto& s = *s_;
  SaturationReport rep;
  const auto pts = parallelepiped_points();
  auto conductor_ok = [&](const ExponentVector& c) {
    return std::all_of(pts.begin(), pts.end(), [&](const ExponentVector& p) { return s.contains(c + p); });
  };

  if (s.dim == 3 || s.free) {
    rep.conductor = ExponentVector(s.dim);
    return rep;
  }

  if (s.dim == 1) {
    for (std::int64_t r = 0; r < s.det; ++r) {
      std::int64_t m = s.apery[static_cast<std::size_t>(r)];
      for (std::int64_t v = r; m >= 0 && v < m; v += s.det) rep.finite_gaps.push_back(ExponentVector{v});
    }
    std::sort(rep.finite_gaps.begin(), rep.finite_gaps.end());
    for (std::int64_t c = 0;; ++c) {
      ExponentVector cv{c};
      if (s.contains(cv) && conductor_ok(cv)) {
        rep.conductor = cv;
        return rep;
      }
    }
  }

  const std::int64_t det = s.det;
  const auto [t1, t2] = s.threshold;
  std::vector<std::pair<std::int64_t, std::int64_t>> ray2_classes;  // (X1, X2 mod det)
  for (std::int64_t x1 = 0; x1 < t1; ++x1) {
    for (std::int64_t r = 0; r < det; ++r) {
      if (!s.coset_reached(x1, r)) continue;
      std::int64_t m = s.strip2[static_cast<std::size_t>(x1 * det + r)];
      if (m < 0) {
        rep.gap_rays.push_back({s.from_coords(x1, r), s.rays[1]});
        ray2_classes.emplace_back(x1, r);
        continue;
      }
      std::int64_t start = r;
      while (start < t2) start += det;
      for (std::int64_t x2 = start; x2 < m; x2 += det) rep.finite_gaps.push_back(s.from_coords(x1, x2));
    }
  }
  auto on_ray2 = [&](std::int64_t x1, std::int64_t x2) {
    return std::find(ray2_classes.begin(), ray2_classes.end(), std::pair{x1, pmod(x2, det)}) !=
           ray2_classes.end();
  };
  for (std::int64_t x2 = 0; x2 < t2; ++x2) {
    for (std::int64_t r = 0; r < det; ++r) {
      if (!s.coset_reached(r, x2)) continue;
      std::int64_t m = s.strip1[static_cast<std::size_t>(x2 * det + r)];
      if (m < 0) {
        rep.gap_rays.push_back({s.from_coords(r, x2), s.rays[0]});
        continue;
      }
      for (std::int64_t x1 = r; x1 < m; x1 += det) {
        if (!on_ray2(x1, x2)) rep.finite_gaps.push_back(s.from_coords(x1, x2));
      }
    }
  }
  sort_unique(rep.finite_gaps);
  std::sort(rep.gap_rays.begin(), rep.gap_rays.end(), [](const GapRay& a, const GapRay& b) {
    return std::tie(a.base, a.direction) < std::tie(b.base, b.direction);
  });

  for (std::int64_t deg = 0;; ++deg) {
    for (std::int64_t a = 0; a <= deg; ++a) {
      ExponentVector c{a, deg - a};
      if (s.contains(c) && conductor_ok(c)) {
        rep.conductor = c;
        return rep;
      }
    }
  }
}

bool AffineSemigroup::frees_on_inversion(const ExponentVector& c) const {
  require_same_dim(c, s_->dim);
  const auto& s = *s_;
  if (c.is_zero() || !s.contains(c)) return false;
  if (s.dim != 2) return true;
  auto [c1, c2] = s.coords(c);
  if (c1 > 0 && c2 > 0) return true;
  // c on an extreme ray: S + Zc must fill the half-plane, i.e. every lattice
  // class of the strip along that ray meets S after shifting by multiples of c.
  const bool along_first = c2 == 0;
  const std::int64_t step = along_first ? c1 : c2;
  const std::int64_t levels = along_first ? s.threshold[1] : s.threshold[0];
  const auto& table = along_first ? s.strip1 : s.strip2;
  for (std::int64_t lvl = 0; lvl < levels; ++lvl) {
    for (std::int64_t r = 0; r < s.det; ++r) {
      bool lattice = along_first ? s.coset_reached(r, lvl) : s.coset_reached(lvl, r);
      if (!lattice) continue;
      bool hit = false;
      for (std::int64_t k = 0; k < s.det && !hit; ++k) {
        hit = table[static_cast<std::size_t>(lvl * s.det + pmod(r + k * step, s.det))] >= 0;
      }
      if (!hit) return false;
    }
  }
  return true;
}

bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
  return a.s_ == b.s_ || (a.dim() == b.dim() && a.atoms() == b.atoms());
}

void require_same_ring(const AffineSemigroup& a, const AffineSemigroup& b) {
  if (!(a == b)) throw Error(ErrorCode::RingMismatch, "ideals live over different semigroups");
}

}  // namespace monoclose
