#include <doctest.h>

#include <random>

#include "monoclose/theorems.hpp"
#include "support/oracle.hpp"

using namespace monoclose;

namespace {

std::vector<oracle::Point> pts(const std::vector<ExponentVector>& g) {
  std::vector<oracle::Point> out;
  for (const auto& v : g) out.push_back(oracle::to_point(v));
  return out;
}

const std::vector<Instance>& corpus() {
  static const auto c = fuzz_corpus(42, 100);
  return c;
}

/// A random m-primary ideal: Q plus up to two extra members of S.
MonomialIdeal random_ideal(const Instance& inst, std::mt19937_64& rng) {
  auto gens = inst.q.ordered();
  for (int i = 0; i < 2; ++i) {
    ExponentVector v{static_cast<std::int64_t>(rng() % 7), static_cast<std::int64_t>(rng() % 7)};
    if (!v.is_zero() && inst.ring().contains(v)) gens.push_back(v);
  }
  return MonomialIdeal(inst.ring(), gens);
}

}  // namespace

TEST_CASE("membership equals exhaustive search for |v| <= 20") {
  for (const auto& inst : corpus()) {
    const auto& s = inst.ring();
    oracle::Semigroup ref(2, pts(s.generators()), 20);
    for (std::int64_t a = 0; a <= 20; ++a) {
      for (std::int64_t b = 0; a + b <= 20; ++b) {
        if (s.contains(ExponentVector{a, b}) != ref.contains({a, b})) {
          FAIL_CHECK(inst.id, ": membership of (", a, ",", b, ")");
        }
      }
    }
  }
}

TEST_CASE("closure of a power via scaling equals the closure of the formed power") {
  for (const auto& inst : corpus()) {
    const auto& q = inst.q.ideal();
    for (int n = 1; n <= 4; ++n) {
      CHECK_MESSAGE(integral_closure_power(q, n) == integral_closure(ideal_power(q, n)), inst.id, " n=", n);
    }
  }
}

TEST_CASE("closure membership equals the segment oracle") {
  std::mt19937_64 rng(17);
  for (std::size_t k = 0; k < corpus().size(); k += 4) {
    const auto& inst = corpus()[k];
    const auto I = random_ideal(inst, rng);
    const auto bar = integral_closure(I);
    const auto rays = oracle::rays2(pts(inst.ring().generators()));
    oracle::Semigroup ref(2, pts(inst.ring().generators()), 20);
    for (const auto& p : ref.points()) {
      CHECK_MESSAGE(bar.contains(ExponentVector{p[0], p[1]}) == oracle::in_newton2(pts(I.generators()), rays, p),
                    inst.id, " at (", p[0], ",", p[1], ")");
    }
  }
}

TEST_CASE("power additivity") {
  std::mt19937_64 rng(19);
  for (std::size_t k = 0; k < corpus().size(); k += 5) {
    const auto I = random_ideal(corpus()[k], rng);
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        CHECK(ideal_product(ideal_power(I, a), ideal_power(I, b)) == ideal_power(I, a + b));
      }
    }
  }
}

TEST_CASE("colon adjunction") {
  std::mt19937_64 rng(23);
  for (std::size_t k = 0; k < corpus().size(); k += 5) {
    const auto& inst = corpus()[k];
    const auto I = ideal_power(random_ideal(inst, rng), 2);
    const auto J = random_ideal(inst, rng);
    const auto c = ideal_colon_ideal(I, J);
    CHECK(I.contains(ideal_product(c, J)));
    CHECK(c.contains(I));
    // maximality: every complement point of the colon fails against some generator of J
    for (const auto& v : c.complement().points) {
      bool escapes = false;
      for (const auto& g : J.generators()) escapes = escapes || !I.contains(v + g);
      CHECK_MESSAGE(escapes, inst.id, " v=", v);
    }
  }
}

TEST_CASE("sandwich of powers, intersections and closures") {
  for (std::size_t k = 0; k < corpus().size(); k += 3) {
    const auto& q = corpus()[k].q;
    for (int n = 1; n <= 4; ++n) {
      const auto mid = lim_intersection(q, n);
      CHECK_MESSAGE(mid.contains(ideal_power(q.ideal(), n)), corpus()[k].id, " n=", n);
      CHECK_MESSAGE(integral_closure_power(q.ideal(), n).contains(mid), corpus()[k].id, " n=", n);
    }
  }
}

TEST_CASE("closures are idempotent and form a graded family") {
  std::mt19937_64 rng(29);
  for (std::size_t k = 0; k < corpus().size(); k += 7) {
    const auto I = random_ideal(corpus()[k], rng);
    const auto bar = integral_closure(I);
    CHECK(integral_closure(bar) == bar);
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) {
        CHECK(integral_closure_power(I, a + b).contains(
            ideal_product(integral_closure_power(I, a), integral_closure_power(I, b))));
      }
    }
  }
}

TEST_CASE("tight candidates sit between the ideal and its closure") {
  std::mt19937_64 rng(31);
  for (std::size_t k = 0; k < corpus().size(); k += 10) {
    const auto& inst = corpus()[k];
    const auto I = random_ideal(inst, rng);
    for (std::int64_t p : {2, 3}) {
      const auto ctx = FrobeniusContext::for_ring(inst.ring(), p, 3);
      const auto cand = tight_closure_candidate(I, ctx).ideal;
      CHECK(cand.contains(I));
      CHECK_MESSAGE(integral_closure(I).contains(cand), inst.id, " p=", p);
    }
  }
}

TEST_CASE("length comparison implies coefficient comparison") {
  for (std::size_t k = 0; k < corpus().size(); k += 6) {
    const auto rep = coefficient_report(corpus()[k].q, FitOptions{8, 14, 3});
    const auto& a = rep.ordinary.lengths;
    const auto& b = rep.lim_intersect.lengths;
    const auto& c = rep.integral.lengths;
    const auto m = std::min({a.size(), b.size(), c.size()});
    for (std::size_t n = 0; n < m; ++n) {
      CHECK(a[n] >= b[n]);
      CHECK(b[n] >= c[n]);
    }
    const auto e1 = rep.ordinary.coefficient(1), e1l = rep.lim_intersect.coefficient(1),
               e1b = rep.integral.coefficient(1);
    if (e1 && e1l) CHECK(*e1 <= *e1l);
    if (e1l && e1b) CHECK(*e1l <= *e1b);
  }
}
