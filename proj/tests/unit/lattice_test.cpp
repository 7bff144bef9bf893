#include <doctest.h>

#include <random>
#include <sstream>

#include "monoclose/errors.hpp"
#include "monoclose/polyhedron.hpp"
#include "monoclose/semigroup.hpp"
#include "support/errors.hpp"
#include "support/oracle.hpp"

using namespace monoclose;

namespace {

AffineSemigroup remark_ring() { return AffineSemigroup(2, {{1, 0}, {1, 1}, {0, 2}, {0, 3}}); }

std::vector<oracle::Point> points_of(const AffineSemigroup& s) {
  std::vector<oracle::Point> out;
  for (const auto& g : s.generators()) out.push_back(oracle::to_point(g));
  return out;
}

void expect_matches_oracle(const AffineSemigroup& s, std::int64_t bound) {
  oracle::Semigroup ref(s.dim(), points_of(s), bound);
  std::size_t checked = 0;
  for (std::int64_t a = 0; a <= bound; ++a) {
    for (std::int64_t b = 0; a + b <= bound; ++b) {
      ExponentVector v{a, b};
      CHECK_MESSAGE(s.contains(v) == ref.contains({a, b}), "v = ", v);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

}  // namespace

TEST_SUITE("exponent") {
  TEST_CASE("arithmetic and order") {
    ExponentVector a{1, 2}, b{3, 0};
    CHECK(a + b == ExponentVector{4, 2});
    CHECK(b - a == ExponentVector{2, -2});
    CHECK(!(b - a).nonnegative());
    CHECK(3 * a == ExponentVector{3, 6});
    CHECK(a < b);
    CHECK(a.degree() == 3);
    CHECK(ExponentVector{1, 1}.leq(ExponentVector{1, 2}));
    CHECK(!ExponentVector{2, 1}.leq(ExponentVector{1, 2}));
    CHECK(ExponentVector(2).is_zero());
    std::ostringstream os;
    os << a;
    CHECK(os.str() == "(1,2)");
  }

  TEST_CASE("overflow and dimension errors are reported") {
    const ExponentVector big{std::numeric_limits<std::int64_t>::max(), 0};
    CHECK(error_code_of([&] { (void)(big + ExponentVector{1, 0}); }) == ErrorCode::Overflow);
    CHECK(error_code_of([] { ExponentVector v{1, 2, 3, 4}; }) == ErrorCode::DimensionMismatch);
    CHECK(error_code_of([] { (void)(ExponentVector{1, 2} + ExponentVector{1, 2, 3}); }) ==
          ErrorCode::DimensionMismatch);
  }
}

TEST_SUITE("semigroup") {
  TEST_CASE("membership on the non-normal example ring") {
    const auto s = remark_ring();
    CHECK_FALSE(s.contains({0, 1}));
    CHECK(s.contains({1, 1}));
    CHECK(s.contains({2, 3}));
    CHECK(s.contains({0, 0}));
    CHECK(s.contains({0, 5}));
    CHECK_FALSE(s.contains({-1, 2}));
    CHECK(s.atoms().size() == 4);
    CHECK(s.max_atom_degree() == 3);
  }

  TEST_CASE("membership rejects a wrong dimension") {
    const auto s = remark_ring();
    CHECK(error_code_of([&] { (void)s.contains(ExponentVector{1, 0, 0}); }) == ErrorCode::DimensionMismatch);
  }

  TEST_CASE("invalid generator sets") {
    auto code_of = [](auto&& f) { return error_code_of(f); };
    CHECK(code_of([] { AffineSemigroup(2, {{0, 0}, {1, 0}}); }) == ErrorCode::InvalidSemigroup);
    CHECK(code_of([] { AffineSemigroup(2, {{1, 1}, {2, 2}}); }) == ErrorCode::InvalidSemigroup);
    CHECK(code_of([] { AffineSemigroup(2, {}); }) == ErrorCode::InvalidSemigroup);
    CHECK(code_of([] { AffineSemigroup(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}); }) == ErrorCode::InvalidSemigroup);
  }

  TEST_CASE("atoms drop redundant generators") {
    AffineSemigroup s(2, {{1, 0}, {0, 1}, {1, 1}, {2, 3}});
    CHECK(s.atoms() == std::vector<ExponentVector>{{0, 1}, {1, 0}});
    CHECK(s.is_free());
    CHECK(s == AffineSemigroup::free(2));
  }

  TEST_CASE("agrees with exhaustive search for |v| <= 20") {
    expect_matches_oracle(remark_ring(), 20);
    expect_matches_oracle(AffineSemigroup(2, {{2, 0}, {3, 0}, {0, 1}}), 20);
    expect_matches_oracle(AffineSemigroup(2, {{1, 4}, {2, 5}, {5, 1}}), 20);
    expect_matches_oracle(AffineSemigroup(2, {{3, 1}, {1, 3}, {2, 2}}), 20);
    expect_matches_oracle(AffineSemigroup(2, {{4, 0}, {4, 1}, {4, 2}, {6, 1}}), 20);
  }

  TEST_CASE("one-dimensional numerical semigroup") {
    AffineSemigroup s(1, {{3}, {5}});
    for (std::int64_t n : {1, 2, 4, 7}) CHECK_FALSE(s.contains(ExponentVector{n}));
    for (std::int64_t n : {0, 3, 5, 6, 8, 9, 10, 11, 1000}) CHECK(s.contains(ExponentVector{n}));
    const auto sat = s.saturation();
    CHECK(sat.finite_gaps.size() == 4);
    CHECK(sat.conductor == ExponentVector{8});
  }

  TEST_CASE("free monoid in dimension three") {
    const auto s = AffineSemigroup::free(3);
    CHECK(s.contains({4, 0, 9}));
    CHECK_FALSE(s.contains({-1, 0, 0}));
    CHECK(s.saturation().gaps_empty());
  }

  TEST_CASE("saturation of the non-normal example ring") {
    const auto s = remark_ring();
    const auto sat = s.saturation();
    CHECK(sat.finite_gaps == std::vector<ExponentVector>{{0, 1}});
    CHECK(sat.gap_rays.empty());
    CHECK(s.is_conductor({0, 2}));
    CHECK(s.is_conductor(sat.conductor));
    CHECK_FALSE(s.is_conductor({0, 0}));
    CHECK(s.in_saturation({0, 1}));
  }

  TEST_CASE("saturation of a normal ring is empty") {
    const auto sat = AffineSemigroup::free(2).saturation();
    CHECK(sat.gaps_empty());
    CHECK(sat.conductor == ExponentVector{0, 0});
  }

  TEST_CASE("ray-periodic gaps") {
    AffineSemigroup s(2, {{2, 0}, {3, 0}, {0, 1}});
    const auto sat = s.saturation();
    CHECK(sat.finite_gaps.empty());
    REQUIRE(sat.gap_rays.size() == 1);
    CHECK(sat.gap_rays[0] == GapRay{{1, 0}, {0, 1}});
    CHECK(sat.conductor == ExponentVector{2, 0});
  }

  TEST_CASE("conductor soundness on random saturation points") {
    for (const auto& s : {remark_ring(), AffineSemigroup(2, {{2, 0}, {3, 0}, {0, 1}}),
                          AffineSemigroup(2, {{3, 1}, {1, 3}, {2, 2}})}) {
      const auto c = s.saturation().conductor;
      std::mt19937_64 rng(7);
      int hits = 0;
      while (hits < 100) {
        ExponentVector v{static_cast<std::int64_t>(rng() % 40), static_cast<std::int64_t>(rng() % 40)};
        if (!s.in_saturation(v)) continue;
        ++hits;
        CHECK_MESSAGE(s.contains(c + v), "c + v with v = ", v);
      }
    }
  }

  TEST_CASE("localization test") {
    const auto s = remark_ring();
    CHECK(s.frees_on_inversion({1, 0}));
    CHECK(s.frees_on_inversion({0, 2}));
    CHECK(s.frees_on_inversion({1, 1}));
    AffineSemigroup cusp(2, {{2, 0}, {3, 0}, {0, 1}});
    CHECK(cusp.frees_on_inversion({2, 0}));
    CHECK_FALSE(cusp.frees_on_inversion({0, 1}));
  }
}

TEST_SUITE("polyhedron") {
  auto hs = [](std::int64_t a, std::int64_t b, std::int64_t off) { return Halfspace{{a, b}, Rational(off)}; };

  TEST_CASE("diagonal Newton polyhedron") {
    std::vector<ExponentVector> pts{{2, 0}, {0, 2}};
    auto np = newton_polyhedron(pts, AffineSemigroup::free(2));
    CHECK(np == RationalPolyhedron(2, {hs(1, 0, 0), hs(0, 1, 0), hs(1, 1, 2)}));
    CHECK(np.contains({1, 1}));
    CHECK_FALSE(np.contains({1, 0}));
  }

  TEST_CASE("two-point hull") {
    std::vector<ExponentVector> pts{{2, 0}, {0, 3}};
    auto np = newton_polyhedron(pts, AffineSemigroup::free(2));
    CHECK(np == RationalPolyhedron(2, {hs(1, 0, 0), hs(0, 1, 0), hs(3, 2, 6)}));
  }

  TEST_CASE("Newton polyhedron over the example ring") {
    std::vector<ExponentVector> pts{{1, 0}, {0, 2}};
    auto np = newton_polyhedron(pts, remark_ring());
    CHECK(np == RationalPolyhedron(2, {hs(1, 0, 0), hs(0, 1, 0), hs(2, 1, 2)}));
  }

  TEST_CASE("interior points do not add facets") {
    std::vector<ExponentVector> pts{{4, 0}, {0, 4}, {2, 2}, {3, 3}};
    auto np = newton_polyhedron(pts, AffineSemigroup::free(2));
    CHECK(np.halfspaces().size() == 3);
  }

  TEST_CASE("scaling law against Minkowski sums") {
    std::mt19937_64 rng(11);
    const auto free2 = AffineSemigroup::free(2);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<ExponentVector> pts;
      for (int i = 0; i < 3; ++i) {
        pts.push_back({static_cast<std::int64_t>(rng() % 6), static_cast<std::int64_t>(rng() % 6)});
      }
      pts.push_back({static_cast<std::int64_t>(1 + rng() % 5), 0});
      pts.push_back({0, static_cast<std::int64_t>(1 + rng() % 5)});
      for (int n = 1; n <= 3; ++n) {
        std::vector<ExponentVector> sum;
        for (const auto& p : oracle::power_gens([&] {
               std::vector<oracle::Point> v;
               for (const auto& q : pts) v.push_back(oracle::to_point(q));
               return v;
             }(), n)) {
          sum.push_back(ExponentVector(std::span<const std::int64_t>(p)));
        }
        CHECK(newton_polyhedron(sum, free2) == newton_polyhedron(pts, free2).scaled(n));
      }
    }
  }

  TEST_CASE("membership matches the segment oracle") {
    const auto s = AffineSemigroup(2, {{1, 4}, {2, 5}, {5, 1}});
    std::vector<ExponentVector> pts{{5, 1}, {1, 4}, {4, 6}};
    std::vector<oracle::Point> ref;
    for (const auto& p : pts) ref.push_back(oracle::to_point(p));
    const auto rays = oracle::rays2(points_of(s));
    const auto np = newton_polyhedron(pts, s);
    for (std::int64_t a = 0; a <= 15; ++a) {
      for (std::int64_t b = 0; b <= 15; ++b) {
        if (!s.in_cone({a, b})) continue;
        CHECK_MESSAGE(np.contains({a, b}) == oracle::in_newton2(ref, rays, {a, b}), "v = (", a, ",", b, ")");
      }
    }
  }

  TEST_CASE("compact facets of a free-ring polyhedron") {
    std::vector<ExponentVector> pts{{4, 0}, {1, 1}, {0, 3}};
    auto facets = compact_facets(pts, newton_polyhedron(pts, AffineSemigroup::free(2)));
    CHECK(facets.size() == 2);
  }
}
