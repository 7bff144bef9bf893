#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoclose/closure.hpp"
#include "monoclose/ideal.hpp"

namespace monoclose {

enum class FiltrationKind { Ordinary, Integral, LimIntersect, TightCandidate };

std::string_view to_string(FiltrationKind kind);

/// n -> F_n, a descending family of m-primary monomial ideals built from a
/// base ideal: I^n, overline(I^n), the limit-closure intersection over
/// Lambda_n, or the tight-closure candidate of I^n.
class Filtration {
 public:
  Filtration(FiltrationKind kind, ParameterIdeal base, std::optional<FrobeniusContext> ctx = std::nullopt,
             LimitOptions limit = {});
  /// Ordinary and integral kinds accept any m-primary ideal.
  Filtration(FiltrationKind kind, MonomialIdeal base);

  FiltrationKind kind() const noexcept { return kind_; }
  const MonomialIdeal& base() const noexcept { return base_; }
  const std::optional<FrobeniusContext>& frobenius() const noexcept { return ctx_; }

  /// F_n for n >= 1.
  MonomialIdeal member(int n) const;

 private:
  friend class LengthSequencer;
  FiltrationKind kind_;
  MonomialIdeal base_;
  std::optional<ParameterIdeal> param_;
  std::optional<FrobeniusContext> ctx_;
  LimitOptions limit_;
};

/// l(R / F_{n+1}) for n = 0..n_max (n_max >= d + 3).
std::vector<std::int64_t> length_sequence(const Filtration& f, int n_max);

/// Coefficients of l(n) = sum_i (-1)^i e_i C(n + d - i, d - i) and the first
/// index n0 from which the polynomial reproduces every supplied length.
struct HilbertFit {
  std::vector<std::int64_t> coefficients;  // e_0 .. e_d
  int n0 = 0;
};

HilbertFit fit_polynomial(std::span<const std::int64_t> lengths, std::size_t d, int window = 3);

/// Value of the fitted polynomial at n.
std::int64_t hilbert_polynomial_value(std::span<const std::int64_t> coefficients, std::int64_t n);

/// d! times the volume of the region below the Newton polyhedron; free
/// rings only.
std::int64_t multiplicity_volume(const MonomialIdeal& ideal);

struct FitOptions {
  int n_max = 10;
  int n_cap = 14;
  int window = 3;
};

enum class FitStatus { Ok, NotStabilized, Failed };
std::string_view to_string(FitStatus status);

struct HilbertReport {
  FiltrationKind kind;
  std::vector<std::int64_t> lengths;
  std::optional<HilbertFit> fit;
  FitStatus status = FitStatus::Ok;
  std::string message;
  std::optional<int> e_max;

  std::optional<std::int64_t> coefficient(std::size_t i) const {
    if (!fit || i >= fit->coefficients.size()) return std::nullopt;
    return fit->coefficients[i];
  }
};

/// Lengths up to opts.n_max, then a fit; the sequence is extended one term
/// at a time up to opts.n_cap while the fit has not stabilized. Failures of
/// the filtration itself are recorded, never thrown.
HilbertReport hilbert_report(const Filtration& f, const FitOptions& opts = {});

struct Bracket {
  std::int64_t lower;
  std::int64_t upper;
};

struct CoefficientReport {
  HilbertReport ordinary;
  HilbertReport integral;
  HilbertReport lim_intersect;
  std::optional<HilbertReport> tight;
  /// e_1^B lies in [e_1^lim, ē_1].
  std::optional<Bracket> e1_bcm;
  /// e_1^* lies in [e_1^lim, e_1 of the tight candidate].
  std::optional<Bracket> e1_tight;
};

CoefficientReport coefficient_report(const ParameterIdeal& q, const FitOptions& opts = {},
                                     std::optional<FrobeniusContext> ctx = std::nullopt,
                                     const LimitOptions& limit = {});

}  // namespace monoclose
