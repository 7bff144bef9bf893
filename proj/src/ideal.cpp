#include "monoclose/ideal.hpp"

#include <algorithm>

namespace monoclose {

namespace {

constexpr std::int64_t kDegreeCap = 100000;

void sort_unique(std::vector<ExponentVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class F>
void for_each_of_degree(std::size_t dim, std::int64_t deg, F&& f) {
  if (dim == 1) {
    f(ExponentVector{deg});
  } else if (dim == 2) {
    for (std::int64_t a = 0; a <= deg; ++a) f(ExponentVector{a, deg - a});
  } else {
    for (std::int64_t a = 0; a <= deg; ++a) {
      for (std::int64_t b = 0; a + b <= deg; ++b) f(ExponentVector{a, b, deg - a - b});
    }
  }
}

// Scan degree levels until a full window of levels lies inside the up-set.
ComplementWitness scan_complement(const AffineSemigroup& ring,
                                  const std::function<bool(const ExponentVector&)>& member) {
  const std::int64_t window = ring.max_atom_degree();
  ComplementWitness w;
  std::int64_t run = 0;
  for (std::int64_t deg = 0; deg < kDegreeCap; ++deg) {
    bool all_in = true;
    for_each_of_degree(ring.dim(), deg, [&](const ExponentVector& v) {
      if (ring.contains(v) && !member(v)) {
        w.points.push_back(v);
        all_in = false;
      }
    });
    run = all_in ? run + 1 : 0;
    if (run == window) {
      w.certified_degree = deg - window + 1;
      std::sort(w.points.begin(), w.points.end());
      return w;
    }
  }
  throw Error(ErrorCode::Uncertified, "complement not closed below degree " + std::to_string(kDegreeCap));
}

std::vector<ExponentVector> generators_from_complement(const AffineSemigroup& ring,
                                                       const ComplementWitness& w) {
  if (w.points.empty()) return {ExponentVector(ring.dim())};
  std::vector<ExponentVector> gens;
  for (const auto& c : w.points) {
    for (const auto& h : ring.atoms()) {
      ExponentVector v = c + h;
      if (w.contains(v)) continue;
      bool minimal = std::all_of(ring.atoms().begin(), ring.atoms().end(), [&](const ExponentVector& a) {
        ExponentVector u = v - a;
        return !ring.contains(u) || w.contains(u);
      });
      if (minimal) gens.push_back(v);
    }
  }
  sort_unique(gens);
  return gens;
}

}  // namespace

bool ComplementWitness::contains(const ExponentVector& v) const {
  return std::binary_search(points.begin(), points.end(), v);
}

std::vector<ExponentVector> minimalize(const AffineSemigroup& ring, std::vector<ExponentVector> gens) {
  sort_unique(gens);
  std::vector<ExponentVector> out;
  for (const auto& g : gens) {
    bool divisible = std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& h) {
      return h != g && ring.contains(g - h);
    });
    if (!divisible) out.push_back(g);
  }
  return out;
}

bool generates_m_primary(const AffineSemigroup& ring, std::span<const ExponentVector> gens) {
  if (std::any_of(gens.begin(), gens.end(), [](const ExponentVector& g) { return g.is_zero(); })) return true;
  for (std::size_t r = 0; r < ring.ray_generators().size(); ++r) {
    bool hit = std::any_of(gens.begin(), gens.end(),
                           [&](const ExponentVector& g) { return ring.extreme_ray_of(g) == r; });
    if (!hit) return false;
  }
  return true;
}

MonomialIdeal::MonomialIdeal(AffineSemigroup ring, std::vector<ExponentVector> generators)
    : ring_(std::move(ring)) {
  if (generators.empty()) throw Error(ErrorCode::InvalidInput, "an ideal needs at least one generator");
  for (const auto& g : generators) {
    require_same_dim(g, ring_.dim());
    if (!ring_.contains(g)) throw Error(ErrorCode::InvalidInput, "generator " + g.to_string() + " is not in S");
  }
  generators_ = minimalize(ring_, std::move(generators));
  if (generates_m_primary(ring_, generators_)) {
    witness_ = scan_complement(ring_, [this](const ExponentVector& v) {
      return std::any_of(generators_.begin(), generators_.end(),
                         [&](const ExponentVector& g) { return ring_.contains(v - g); });
    });
  }
}

MonomialIdeal MonomialIdeal::from_complement(AffineSemigroup ring, std::vector<ExponentVector> complement,
                                             std::int64_t certified_degree) {
  MonomialIdeal out(std::move(ring));
  sort_unique(complement);
  out.witness_ = ComplementWitness{std::move(complement), certified_degree};
  out.generators_ = generators_from_complement(out.ring_, *out.witness_);
  return out;
}

MonomialIdeal MonomialIdeal::from_predicate(const MonomialIdeal& floor,
                                            const std::function<bool(const ExponentVector&)>& member) {
  const auto& base = floor.complement();
  std::vector<ExponentVector> comp;
  for (const auto& c : base.points) {
    if (!member(c)) comp.push_back(c);
  }
  return from_complement(floor.ring_, std::move(comp), base.certified_degree);
}

const ComplementWitness& MonomialIdeal::complement() const {
  if (!witness_) throw Error(ErrorCode::NotMPrimary, "ideal is not primary to the maximal ideal");
  return *witness_;
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
  require_same_dim(v, ring_.dim());
  if (witness_) return ring_.contains(v) && !witness_->contains(v);
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return ring_.contains(v - g); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const ExponentVector& g) { return contains(g); });
}

ParameterIdeal::ParameterIdeal(AffineSemigroup ring, std::vector<ExponentVector> ordered_generators)
    : ordered_(ordered_generators), ideal_(ring, std::move(ordered_generators)) {
  if (ordered_.size() != ring.dim()) {
    throw Error(ErrorCode::InvalidInput, "a parameter ideal needs exactly dim(S) generators");
  }
  if (!ideal_.is_m_primary()) throw Error(ErrorCode::NotMPrimary, "parameter generators do not span the cone");
  if (ideal_.generators().size() != ordered_.size() ||
      std::any_of(ordered_.begin(), ordered_.end(), [](const ExponentVector& g) { return g.is_zero(); })) {
    throw Error(ErrorCode::InvalidInput, "parameter generators are not minimal");
  }
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g + h);
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative ideal power");
  if (n == 0) return MonomialIdeal(a.ring(), {ExponentVector(a.ring().dim())});
  MonomialIdeal r = a;
  for (int i = 1; i < n; ++i) r = ideal_product(r, a);
  return r;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  if (!a.is_m_primary() || !b.is_m_primary()) {
    throw Error(ErrorCode::Uncertified, "intersection is only certified for m-primary ideals");
  }
  auto pts = a.complement().points;
  pts.insert(pts.end(), b.complement().points.begin(), b.complement().points.end());
  return MonomialIdeal::from_complement(
      a.ring(), std::move(pts), std::max(a.complement().certified_degree, b.complement().certified_degree));
}

MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const ExponentVector& f) {
  require_same_dim(f, ideal.ring().dim());
  if (!ideal.ring().contains(f)) throw Error(ErrorCode::InvalidInput, "colon by a non-monomial " + f.to_string());
  if (!ideal.is_m_primary()) throw Error(ErrorCode::Uncertified, "colon is only certified for m-primary ideals");
  const auto& w = ideal.complement();
  return MonomialIdeal::from_predicate(ideal, [&](const ExponentVector& s) { return !w.contains(s + f); });
}

MonomialIdeal ideal_colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.ring(), by.ring());
  std::optional<MonomialIdeal> acc;
  for (const auto& f : by.generators()) {
    MonomialIdeal c = ideal_colon(ideal, f);
    acc = acc ? ideal_intersection(*acc, c) : c;
  }
  return *acc;
}

bool is_parameter_ideal(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  return g.size() == ideal.ring().dim() && ideal.is_m_primary() &&
         std::none_of(g.begin(), g.end(), [](const ExponentVector& v) { return v.is_zero(); });
}

int nu_m_mod_q(const ParameterIdeal& q) {
  const auto& atoms = q.ring().atoms();
  return static_cast<int>(std::count_if(atoms.begin(), atoms.end(),
                                        [&](const ExponentVector& h) { return !q.ideal().contains(h); }));
}

}  // namespace monoclose
