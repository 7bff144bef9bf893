#include "monoclose/hilbert.hpp"

#include <algorithm>
#include <cstdlib>

namespace monoclose {

namespace {

BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::string_view to_string(FiltrationKind kind) {
  switch (kind) {
    case FiltrationKind::Ordinary: return "ordinary";
    case FiltrationKind::Integral: return "integral";
    case FiltrationKind::LimIntersect: return "lim_intersect";
    case FiltrationKind::TightCandidate: return "tight_candidate";
  }
  return "?";
}

std::string_view to_string(FitStatus status) {
  switch (status) {
    case FitStatus::Ok: return "ok";
    case FitStatus::NotStabilized: return "not_stabilized";
    case FitStatus::Failed: return "failed";
  }
  return "?";
}

Filtration::Filtration(FiltrationKind kind, ParameterIdeal base, std::optional<FrobeniusContext> ctx,
                       LimitOptions limit)
    : kind_(kind), base_(base.ideal()), param_(std::move(base)), ctx_(std::move(ctx)), limit_(limit) {
  if (kind_ == FiltrationKind::TightCandidate) {
    if (!ctx_) throw Error(ErrorCode::InvalidInput, "tight-candidate filtration needs a Frobenius context");
    ctx_->validate(base_.ring());
  }
}

Filtration::Filtration(FiltrationKind kind, MonomialIdeal base) : kind_(kind), base_(std::move(base)) {
  if (kind_ != FiltrationKind::Ordinary && kind_ != FiltrationKind::Integral) {
    throw Error(ErrorCode::InvalidInput, "this filtration kind needs a parameter ideal");
  }
  base_.complement();
}

MonomialIdeal Filtration::member(int n) const {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "filtration members start at n = 1");
  switch (kind_) {
    case FiltrationKind::Ordinary: return ideal_power(base_, n);
    case FiltrationKind::Integral: return integral_closure_power(base_, n);
    case FiltrationKind::LimIntersect: return lim_intersection(*param_, n, limit_);
    case FiltrationKind::TightCandidate: return tight_closure_candidate(ideal_power(base_, n), *ctx_).ideal;
  }
  throw Error(ErrorCode::InvalidInput, "unknown filtration kind");
}

/// Walks F_1, F_2, ... reusing the running power of the base ideal.
class LengthSequencer {
 public:
  explicit LengthSequencer(const Filtration& f) : f_(f) {}

  std::int64_t next() {
    const int n = ++n_;
    switch (f_.kind_) {
      case FiltrationKind::Ordinary:
        advance_power();
        return power_->colength();
      case FiltrationKind::TightCandidate:
        advance_power();
        return tight_closure_candidate(*power_, *f_.ctx_).ideal.colength();
      case FiltrationKind::Integral:
        return integral_closure_power(f_.base_, n).colength();
      case FiltrationKind::LimIntersect:
        return lim_intersection(*f_.param_, n, f_.limit_).colength();
    }
    return 0;
  }

 private:
  void advance_power() { power_ = power_ ? ideal_product(*power_, f_.base_) : f_.base_; }

  const Filtration& f_;
  int n_ = 0;
  std::optional<MonomialIdeal> power_;
};

std::vector<std::int64_t> length_sequence(const Filtration& f, int n_max) {
  const auto d = static_cast<int>(f.base().ring().dim());
  if (n_max < d + 3) throw Error(ErrorCode::InvalidInput, "n_max must be at least d + 3");
  LengthSequencer seq(f);
  std::vector<std::int64_t> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(seq.next());
  return out;
}

std::int64_t hilbert_polynomial_value(std::span<const std::int64_t> coefficients, std::int64_t n) {
  const auto d = static_cast<std::int64_t>(coefficients.size()) - 1;
  BigInt v = 0;
  for (std::int64_t i = 0; i <= d; ++i) {
    BigInt term = coefficients[static_cast<std::size_t>(i)] * binom(n + d - i, d - i);
    v += (i % 2 == 0) ? term : BigInt(-term);
  }
  return to_int64(v);
}

HilbertFit fit_polynomial(std::span<const std::int64_t> lengths, std::size_t d, int window) {
  const auto len = static_cast<std::int64_t>(lengths.size());
  const auto dd = static_cast<std::int64_t>(d);
  if (window < 1 || len < dd + 1 + window) {
    throw Error(ErrorCode::InvalidInput, "need at least d + 1 + window lengths to fit");
  }
  std::vector<BigInt> diff(lengths.begin(), lengths.end());
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  for (int k = 1; k < window; ++k) {
    if (diff[diff.size() - 1 - static_cast<std::size_t>(k)] != diff.back()) {
      throw Error(ErrorCode::NotStabilized, "d-th differences not constant over the trailing window");
    }
  }

  // Exact solve on the last d + 1 terms.
  const std::size_t m = d + 1;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    const std::int64_t n = len - static_cast<std::int64_t>(m) + static_cast<std::int64_t>(r);
    for (std::size_t i = 0; i < m; ++i) {
      BigInt b = binom(n + dd - static_cast<std::int64_t>(i), dd - static_cast<std::int64_t>(i));
      a[r][i] = Rational(i % 2 == 0 ? b : BigInt(-b));
    }
    a[r][m] = Rational(lengths[static_cast<std::size_t>(n)]);
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  HilbertFit fit;
  for (std::size_t i = 0; i < m; ++i) {
    Rational e = a[i][m] / a[i][i];
    if (boost::multiprecision::denominator(e) != 1) {
      throw Error(ErrorCode::NonIntegralCoefficient, "fitted Hilbert coefficient is not an integer");
    }
    fit.coefficients.push_back(to_int64(boost::multiprecision::numerator(e)));
  }

  std::int64_t n0 = len;
  while (n0 > 0 && hilbert_polynomial_value(fit.coefficients, n0 - 1) == lengths[static_cast<std::size_t>(n0 - 1)]) {
    --n0;
  }
  if (n0 > len - dd - window) {
    throw Error(ErrorCode::NotStabilized, "fitted polynomial does not reproduce the trailing window");
  }
  fit.n0 = static_cast<int>(n0);
  return fit;
}

std::int64_t multiplicity_volume(const MonomialIdeal& ideal) {
  const auto& ring = ideal.ring();
  if (!ring.is_free()) throw Error(ErrorCode::UnsupportedRing, "volume formula needs a free semigroup");
  ideal.complement();
  const auto& gens = ideal.generators();
  if (gens.size() == 1 && gens[0].is_zero()) return 0;
  const auto np = newton_polyhedron(gens, ring);
  BigInt total = 0;
  for (const auto& face : compact_facets(gens, np)) {
    if (ring.dim() == 1) {
      total += face[0][0];
    } else if (ring.dim() == 2) {
      if (face.size() == 2) total += abs(BigInt(face[0][0]) * face[1][1] - BigInt(face[0][1]) * face[1][0]);
    } else {
      for (std::size_t i = 1; i + 1 < face.size(); ++i) {
        const auto &a = face[0], &b = face[i], &c = face[i + 1];
        BigInt det = BigInt(a[0]) * (BigInt(b[1]) * c[2] - BigInt(b[2]) * c[1]) -
                     BigInt(a[1]) * (BigInt(b[0]) * c[2] - BigInt(b[2]) * c[0]) +
                     BigInt(a[2]) * (BigInt(b[0]) * c[1] - BigInt(b[1]) * c[0]);
        total += abs(det);
      }
    }
  }
  return to_int64(total);
}

HilbertReport hilbert_report(const Filtration& f, const FitOptions& opts) {
  HilbertReport rep{f.kind(), {}, std::nullopt, FitStatus::Ok, {}, std::nullopt};
  if (f.frobenius()) rep.e_max = f.frobenius()->e_max;
  const auto d = f.base().ring().dim();
  try {
    LengthSequencer seq(f);
    const int first = std::max(opts.n_max, static_cast<int>(d) + opts.window);
    for (int n = 0; n <= first; ++n) rep.lengths.push_back(seq.next());
    for (;;) {
      try {
        rep.fit = fit_polynomial(rep.lengths, d, opts.window);
        return rep;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotStabilized) throw;
        if (static_cast<int>(rep.lengths.size()) - 1 >= opts.n_cap) {
          rep.status = FitStatus::NotStabilized;
          rep.message = e.what();
          return rep;
        }
        rep.lengths.push_back(seq.next());
      }
    }
  } catch (const Error& e) {
    rep.status = e.code() == ErrorCode::NotStabilized ? FitStatus::NotStabilized : FitStatus::Failed;
    rep.message = e.what();
    rep.fit.reset();
  }
  return rep;
}

CoefficientReport coefficient_report(const ParameterIdeal& q, const FitOptions& opts,
                                     std::optional<FrobeniusContext> ctx, const LimitOptions& limit) {
  CoefficientReport rep{
      hilbert_report(Filtration(FiltrationKind::Ordinary, q), opts),
      hilbert_report(Filtration(FiltrationKind::Integral, q), opts),
      hilbert_report(Filtration(FiltrationKind::LimIntersect, q, std::nullopt, limit), opts),
      std::nullopt, std::nullopt, std::nullopt};
  if (ctx) rep.tight = hilbert_report(Filtration(FiltrationKind::TightCandidate, q, ctx, limit), opts);
  auto e1 = [](const HilbertReport& r) { return r.coefficient(1); };
  if (auto lo = e1(rep.lim_intersect), hi = e1(rep.integral); lo && hi) rep.e1_bcm = Bracket{*lo, *hi};
  if (rep.tight) {
    if (auto lo = e1(rep.lim_intersect), hi = e1(*rep.tight); lo && hi) rep.e1_tight = Bracket{*lo, *hi};
  }
  return rep;
}

}  // namespace monoclose
