#include "monoclose/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monoclose/errors.hpp"
#include "monoclose/io.hpp"
#include "monoclose/theorems.hpp"

namespace monoclose {

namespace {

struct RunConfig {
  std::string ring_path;
  std::string ideal_path;
  std::string corpus_path;
  int n_max = 10;
  int corpus_n_max = 8;
  std::optional<std::int64_t> characteristic;
  std::optional<int> e_max;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::int64_t max_coord = 6;
  int max_generators = 4;
  std::string report = "json";
  std::string out_path;
  std::string reproducer_path = "monoclose-reproducer.json";
  bool inject_fault = false;
  std::string example;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    io::write_text_file(cfg.out_path, text);
  }
}

std::optional<FrobeniusContext> frobenius_for(const RunConfig& cfg, const AffineSemigroup& ring) {
  if (!cfg.characteristic) {
    if (cfg.e_max) throw Error(ErrorCode::InvalidInput, "--e-max requires --char");
    return std::nullopt;
  }
  if (!is_prime(*cfg.characteristic)) {
    throw Error(ErrorCode::InvalidInput, "--char must be prime, got " + std::to_string(*cfg.characteristic));
  }
  return FrobeniusContext::for_ring(ring, *cfg.characteristic, cfg.e_max.value_or(4));
}

int run_analyze(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_max < 5) throw Error(ErrorCode::InvalidInput, "--n-max must be at least 5");
  const auto ring = io::parse_ring(io::read_json_file(cfg.ring_path));
  const auto rec = io::parse_ideal(io::read_json_file(cfg.ideal_path), ring.dim());
  const auto ctx = frobenius_for(cfg, ring);
  const FitOptions fit{cfg.n_max, std::max(cfg.n_max, FitOptions{}.n_cap), FitOptions{}.window};

  std::vector<HilbertReport> reports;
  std::optional<RingProfile> profile;
  std::optional<CoefficientReport> coeffs;
  if (rec.generators.size() == ring.dim()) {
    const auto q = io::make_parameter_ideal(ring, rec);
    coeffs = coefficient_report(q, fit, ctx);
    reports = {coeffs->ordinary, coeffs->integral, coeffs->lim_intersect};
    if (coeffs->tight) reports.push_back(*coeffs->tight);
    if (coeffs->ordinary.fit || coeffs->integral.fit) profile = ring_profile(q, coeffs->ordinary);
  } else {
    MonomialIdeal ideal(ring, rec.generators);
    if (!ideal.is_m_primary()) throw Error(ErrorCode::NotMPrimary, "ideal is not primary to the maximal ideal");
    reports.push_back(hilbert_report(Filtration(FiltrationKind::Ordinary, ideal), fit));
    reports.push_back(hilbert_report(Filtration(FiltrationKind::Integral, ideal), fit));
  }

  io::AnalyzeContext actx{cfg.characteristic, ctx ? std::optional<int>(ctx->e_max) : std::nullopt, cfg.n_max};
  if (cfg.report == "json") {
    emit(cfg, out, io::analysis_to_json(ring, rec, reports, profile, coeffs, actx).dump(2) + "\n");
  } else if (cfg.report == "csv") {
    emit(cfg, out, io::analysis_to_csv(reports));
  } else {
    emit(cfg, out, io::analysis_to_table(reports, profile, coeffs));
  }
  const bool partial =
      std::any_of(reports.begin(), reports.end(), [](const HilbertReport& r) { return r.status != FitStatus::Ok; });
  return partial ? kExitPartial : kExitOk;
}

int finish_corpus(const RunConfig& cfg, const std::vector<Instance>& corpus, io::json header, std::ostream& out,
                  std::ostream& err) {
  ChainOptions opts;
  opts.fit = FitOptions{cfg.n_max, std::max(cfg.n_max, FitOptions{}.n_cap), FitOptions{}.window};
  auto summary = verify_corpus(corpus, opts);
  if (cfg.inject_fault && !summary.verdicts.empty() && summary.verdicts.front().pass()) {
    summary.verdicts.front().inclusions_ok = false;
    summary.verdicts.front().details.push_back("injected fault");
    --summary.passes;
    ++summary.violations;
  }

  io::json verdicts = io::json::array();
  for (const auto& v : summary.verdicts) verdicts.push_back(io::verdict_to_json(v));
  header["summary"] = io::summary_to_json(summary);
  header["verdicts"] = verdicts;
  emit(cfg, out, header.dump(2) + "\n");

  err << "instances " << summary.instances << ", passes " << summary.passes << ", violations " << summary.violations
      << ", hypothesis-violating witnesses " << summary.witnesses << ", conjecture-relevant specimens "
      << summary.specimens << ", unstabilized fits " << summary.unstabilized << "\n";
  if (summary.violations == 0) return kExitOk;

  for (const auto& v : summary.verdicts) {
    if (v.pass()) continue;
    const auto it = std::find_if(corpus.begin(), corpus.end(), [&](const Instance& i) { return i.id == v.id; });
    io::write_text_file(cfg.reproducer_path, io::reproducer_to_json(*it, v).dump(2) + "\n");
    err << "theorem violation on " << v.id << "; reproducer written to " << cfg.reproducer_path << "\n";
    break;
  }
  return kExitViolation;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto corpus = io::parse_corpus(io::read_json_file(cfg.corpus_path));
  io::json header;
  header["corpus"] = cfg.corpus_path;
  header["n_max"] = io::int_value(cfg.n_max);
  return finish_corpus(cfg, corpus, std::move(header), out, err);
}

int run_fuzz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FuzzBounds bounds{cfg.max_coord, cfg.max_generators, 2};
  const auto corpus = fuzz_corpus(cfg.seed, cfg.count, bounds);
  io::json header;
  header["seed"] = std::to_string(cfg.seed);
  header["count"] = io::int_value(static_cast<std::int64_t>(cfg.count));
  header["bounds"] = {{"max_coord", io::int_value(cfg.max_coord)},
                      {"max_generators", io::int_value(cfg.max_generators)},
                      {"dim", "2"}};
  header["n_max"] = io::int_value(cfg.n_max);
  header["corpus"] = io::corpus_to_json(corpus)["instances"];
  return finish_corpus(cfg, corpus, std::move(header), out, err);
}

struct Row {
  std::string quantity;
  std::string expected;
  std::string computed;
  bool match() const { return expected == computed; }
};

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
  return os.str();
}

std::string show(const std::optional<HilbertFit>& fit) {
  return fit ? join(fit->coefficients) : std::string("not stabilized");
}

std::vector<std::int64_t> head(const std::vector<std::int64_t>& xs, std::size_t n) {
  return {xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(std::min(n, xs.size()))};
}

int run_example(const std::string& name, std::ostream& out, std::ostream& err) {
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    err << "error: unknown example '" << name << "'; available:";
    for (const auto& n : names) err << " " << n;
    err << "\n";
    return kExitInput;
  }
  const auto inst = builtin_instance(name);
  const auto v = verify_instance(inst, ChainOptions{FitOptions{10, 14, 3}, {}, std::nullopt, 6});
  const auto& rep = *v.coefficients;
  const auto& prof = *v.profile;

  std::vector<std::int64_t> want_int, want_ord;
  std::vector<Row> rows;
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  if (name == "remark-s2") {
    for (std::int64_t n = 0; n <= 10; ++n) want_int.push_back((n + 2) * (n + 1) - 1);
    rows.push_back({"integral lengths n=0..10", join(want_int), join(head(rep.integral.lengths, 11))});
    rows.push_back({"integral fit (e0,e1,e2)", "[2,0,-1]", show(rep.integral.fit)});
    rows.push_back({"ordinary fit (e0,e1,e2)", "[2,-1,0]", show(rep.ordinary.fit)});
    rows.push_back({"regular", "no", yes(prof.is_regular)});
    rows.push_back({"S2", "no", yes(prof.is_S2)});
    rows.push_back({"vanishing check", "witness", std::string(to_string(v.vanishing.verdict))});
  } else if (name == "free-x2y3") {
    for (std::int64_t n = 0; n <= 10; ++n) want_int.push_back((n + 1) * (3 * n + 5));
    rows.push_back({"integral lengths n=0..10", join(want_int), join(head(rep.integral.lengths, 11))});
    rows.push_back({"integral fit (e0,e1,e2)", "[6,1,0]", show(rep.integral.fit)});
    rows.push_back({"ordinary fit (e0,e1,e2)", "[6,0,0]", show(rep.ordinary.fit)});
    rows.push_back({"vanishing check", "vacuous", std::string(to_string(v.vanishing.verdict))});
  } else {
    for (std::int64_t n = 0; n <= 10; ++n) want_ord.push_back((n + 2) * (n + 1) / 2);
    rows.push_back({"ordinary lengths n=0..10", join(want_ord), join(head(rep.ordinary.lengths, 11))});
    rows.push_back({"integral lengths n=0..10", join(want_ord), join(head(rep.integral.lengths, 11))});
    rows.push_back({"lim lengths n=0..10", join(want_ord), join(head(rep.lim_intersect.lengths, 11))});
    rows.push_back({"integral fit (e0,e1,e2)", "[1,0,0]", show(rep.integral.fit)});
    rows.push_back({"vanishing check", "pass", std::string(to_string(v.vanishing.verdict))});
  }
  rows.push_back({"theorem checks", "pass", v.pass() ? "pass" : "fail"});

  bool all = true;
  out << "example " << name << "\n";
  out << std::left << std::setw(28) << "quantity" << std::setw(44) << "expected" << std::setw(44) << "computed"
      << "match\n";
  for (const auto& r : rows) {
    out << std::setw(28) << r.quantity << std::setw(44) << r.expected << std::setw(44) << r.computed
        << (r.match() ? "yes" : "NO") << "\n";
    all = all && r.match();
  }
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert coefficients and closure operations for monomial ideals of affine semigroup rings",
               "monoclose"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "Hilbert reports of every applicable filtration");
  analyze->add_option("--ring", cfg.ring_path, "ring JSON file")->required();
  analyze->add_option("--ideal", cfg.ideal_path, "ideal JSON file")->required();
  analyze->add_option("--n-max", cfg.n_max, "largest n of the length sequence")->capture_default_str();
  analyze->add_option("--char", cfg.characteristic, "characteristic p for the tight candidate");
  analyze->add_option("--e-max", cfg.e_max, "largest Frobenius exponent e");
  analyze->add_option("--report", cfg.report, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  analyze->add_option("--out", cfg.out_path, "write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "theorem checks over a corpus file");
  verify->add_option("--corpus", cfg.corpus_path, "corpus JSON file")->required();
  verify->add_option("--n-max", cfg.corpus_n_max, "largest n checked")->capture_default_str();
  verify->add_option("--out", cfg.out_path, "write the verdict stream here instead of stdout");
  verify->add_option("--reproducer", cfg.reproducer_path, "reproducer path on violation")->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");

  auto* fuzz = app.add_subcommand("fuzz", "theorem checks over a seeded random corpus");
  fuzz->add_option("--seed", cfg.seed, "generator seed")->required();
  fuzz->add_option("--count", cfg.count, "number of instances")->required();
  fuzz->add_option("--max-coord", cfg.max_coord, "largest generator coordinate")->capture_default_str();
  fuzz->add_option("--max-generators", cfg.max_generators, "largest generator count")->capture_default_str();
  fuzz->add_option("--n-max", cfg.corpus_n_max, "largest n checked")->capture_default_str();
  fuzz->add_option("--out", cfg.out_path, "write the verdict stream here instead of stdout");
  fuzz->add_option("--reproducer", cfg.reproducer_path, "reproducer path on violation")->capture_default_str();
  fuzz->add_flag("--inject-fault", cfg.inject_fault)->group("");

  auto* example = app.add_subcommand("example", "replay a built-in instance against its known values");
  example->add_option("name", cfg.example, "remark-s2, free-x2y3 or free-maximal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) return run_analyze(cfg, out);
    if (*example) return run_example(cfg.example, out, err);
    if (*fuzz || *verify) {
      cfg.n_max = cfg.corpus_n_max;
      if (cfg.n_max < 5) throw Error(ErrorCode::InvalidInput, "--n-max must be at least 5");
      return *fuzz ? run_fuzz(cfg, out, err) : run_verify(cfg, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace monoclose
