#include "monoclose/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "monoclose/errors.hpp"

namespace monoclose::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

ExponentVector parse_point(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of coordinates");
  if (j.size() != dim) bad(where, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
  ExponentVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = parse_int(j[i], where + "[" + std::to_string(i) + "]");
    if (v[i] < 0) bad(where + "[" + std::to_string(i) + "]", "coordinates must be nonnegative");
  }
  return v;
}

json point_to_json(const ExponentVector& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(int_value(v[i]));
  return a;
}

json points_to_json(const std::vector<ExponentVector>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_to_json(p));
  return a;
}

json ints_to_json(const std::vector<std::int64_t>& xs) {
  json a = json::array();
  for (auto x : xs) a.push_back(int_value(x));
  return a;
}

json opt_int(const std::optional<std::int64_t>& v) { return v ? int_value(*v) : json(nullptr); }

json bracket_to_json(const std::optional<Bracket>& b) {
  if (!b) return nullptr;
  return json::array({int_value(b->lower), int_value(b->upper)});
}

std::string short_kind(FiltrationKind k) {
  switch (k) {
    case FiltrationKind::Ordinary: return "ordinary";
    case FiltrationKind::Integral: return "integral";
    case FiltrationKind::LimIntersect: return "lim";
    case FiltrationKind::TightCandidate: return "tight";
  }
  return "?";
}

const char* const kSignConvention = "l(R/F_{n+1}) = sum_i (-1)^i e_i C(n+d-i, d-i); e_1 carries its defining sign";

}  // namespace

json int_value(std::int64_t v) { return std::to_string(v); }

std::int64_t parse_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos, 10);
    } catch (const std::exception&) {
      bad(where, "'" + s + "' is not a decimal integer");
    }
    if (pos != s.size() || s.empty()) bad(where, "'" + s + "' is not a decimal integer");
    return v;
  }
  bad(where, "expected an integer (number or decimal string)");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    const auto nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const auto col = nl == std::string::npos ? upto + 1 : upto - nl;
    throw Error(ErrorCode::InvalidInput,
                path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path.string() + "'");
  out << text;
}

AffineSemigroup parse_ring(const json& j, const std::string& where) {
  const auto& gens = field(j, "generators", where);
  if (!gens.is_array() || gens.empty()) bad(where + ".generators", "expected a nonempty array");
  std::int64_t dim = 0;
  if (j.contains("dim")) {
    dim = parse_int(j["dim"], where + ".dim");
  } else if (gens[0].is_array()) {
    dim = static_cast<std::int64_t>(gens[0].size());
  }
  if (dim < 1 || dim > 3) bad(where + ".dim", "dimension must be 1, 2 or 3");
  std::vector<ExponentVector> pts;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    pts.push_back(parse_point(gens[i], static_cast<std::size_t>(dim), where + ".generators[" + std::to_string(i) + "]"));
  }
  return AffineSemigroup(static_cast<std::size_t>(dim), std::move(pts));
}

json ring_to_json(const AffineSemigroup& ring) {
  json j;
  j["dim"] = int_value(static_cast<std::int64_t>(ring.dim()));
  j["generators"] = points_to_json(ring.generators());
  return j;
}

IdealRecord parse_ideal(const json& j, std::size_t dim, const std::string& where) {
  const auto& gens = field(j, "generators", where);
  if (!gens.is_array() || gens.empty()) bad(where + ".generators", "expected a nonempty array");
  IdealRecord rec;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    rec.generators.push_back(parse_point(gens[i], dim, where + ".generators[" + std::to_string(i) + "]"));
  }
  if (j.contains("ordered")) {
    if (!j["ordered"].is_boolean()) bad(where + ".ordered", "expected true or false");
    rec.ordered = j["ordered"].get<bool>();
  }
  return rec;
}

json ideal_to_json(const std::vector<ExponentVector>& generators, bool ordered) {
  json j;
  j["generators"] = points_to_json(generators);
  j["ordered"] = ordered;
  return j;
}

ParameterIdeal make_parameter_ideal(const AffineSemigroup& ring, const IdealRecord& rec) {
  auto gens = rec.generators;
  if (!rec.ordered) std::sort(gens.begin(), gens.end());
  return ParameterIdeal(ring, std::move(gens));
}

std::vector<Instance> parse_corpus(const json& j) {
  const json* list = &j;
  if (j.is_object()) list = &field(j, "instances", "corpus");
  if (!list->is_array()) bad("corpus", "expected an array of instance records");
  std::vector<Instance> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto& rec = (*list)[i];
    const std::string where = "corpus[" + std::to_string(i) + "]";
    std::ostringstream id;
    id << "instance-" << std::setw(4) << std::setfill('0') << i;
    std::string name = id.str();
    if (rec.is_object() && rec.contains("id")) {
      if (!rec["id"].is_string()) bad(where + ".id", "expected a string");
      name = rec["id"].get<std::string>();
    }
    auto ring = parse_ring(field(rec, "ring", where), where + ".ring");
    auto ideal = parse_ideal(field(rec, "ideal", where), ring.dim(), where + ".ideal");
    out.push_back(Instance{name, make_parameter_ideal(ring, ideal)});
  }
  return out;
}

json instance_to_json(const Instance& inst) {
  json j;
  j["id"] = inst.id;
  j["ring"] = ring_to_json(inst.ring());
  j["ideal"] = ideal_to_json(inst.q.ordered(), true);
  return j;
}

json corpus_to_json(const std::vector<Instance>& corpus) {
  json a = json::array();
  for (const auto& inst : corpus) a.push_back(instance_to_json(inst));
  return json{{"instances", a}};
}

json profile_to_json(const RingProfile& p) {
  json j;
  j["dim"] = int_value(static_cast<std::int64_t>(p.dim));
  j["embedding_dim"] = int_value(static_cast<std::int64_t>(p.embedding_dim));
  j["is_regular"] = p.is_regular;
  j["is_CM"] = p.is_CM;
  j["is_S2"] = p.is_S2;
  j["colength_q"] = int_value(p.colength_q);
  j["e0"] = int_value(p.e0);
  return j;
}

json hilbert_to_json(const HilbertReport& r) {
  json j;
  j["kind"] = std::string(to_string(r.kind));
  j["status"] = std::string(to_string(r.status));
  if (!r.message.empty()) j["message"] = r.message;
  if (r.e_max) j["e_max"] = int_value(*r.e_max);
  j["lengths"] = ints_to_json(r.lengths);
  if (r.fit) {
    j["coefficients"] = ints_to_json(r.fit->coefficients);
    j["n0"] = int_value(r.fit->n0);
  } else {
    j["coefficients"] = nullptr;
  }
  return j;
}

json analysis_to_json(const AffineSemigroup& ring, const IdealRecord& ideal, const std::vector<HilbertReport>& reports,
                      const std::optional<RingProfile>& profile, const std::optional<CoefficientReport>& coeffs,
                      const AnalyzeContext& ctx) {
  json j;
  j["ring"] = ring_to_json(ring);
  j["ideal"] = ideal_to_json(ideal.generators, ideal.ordered);
  j["n_max"] = int_value(ctx.n_max);
  if (ctx.characteristic) j["char"] = int_value(*ctx.characteristic);
  if (ctx.e_max) j["e_max"] = int_value(*ctx.e_max);
  j["sign_convention"] = kSignConvention;
  for (const auto& r : reports) {
    const auto k = short_kind(r.kind);
    const std::size_t terms = ring.dim() + 1;
    for (std::size_t i = 0; i < terms; ++i) j["e" + std::to_string(i) + "_" + k] = opt_int(r.coefficient(i));
  }
  if (coeffs) {
    j["e1_bcm_bracket"] = bracket_to_json(coeffs->e1_bcm);
    if (coeffs->tight) j["e1_tight_bracket"] = bracket_to_json(coeffs->e1_tight);
  }
  if (profile) j["profile"] = profile_to_json(*profile);
  json fs = json::array();
  for (const auto& r : reports) fs.push_back(hilbert_to_json(r));
  j["filtrations"] = fs;
  return j;
}

std::string analysis_to_csv(const std::vector<HilbertReport>& reports) {
  std::ostringstream os;
  os << "n";
  std::size_t rows = 0;
  for (const auto& r : reports) {
    os << "," << to_string(r.kind);
    rows = std::max(rows, r.lengths.size());
  }
  os << "\n";
  for (std::size_t n = 0; n < rows; ++n) {
    os << n;
    for (const auto& r : reports) {
      os << ",";
      if (n < r.lengths.size()) os << r.lengths[n];
    }
    os << "\n";
  }
  return os.str();
}

std::string analysis_to_table(const std::vector<HilbertReport>& reports, const std::optional<RingProfile>& profile,
                              const std::optional<CoefficientReport>& coeffs) {
  std::ostringstream os;
  os << "sign convention: " << kSignConvention << "\n";
  if (profile) {
    os << "ring: dim " << profile->dim << ", embedding dim " << profile->embedding_dim
       << ", regular " << (profile->is_regular ? "yes" : "no") << ", CM " << (profile->is_CM ? "yes" : "no")
       << ", S2 " << (profile->is_S2 ? "yes" : "no") << ", colength(Q) " << profile->colength_q << ", e0(Q) "
       << profile->e0 << "\n";
  }
  os << "\n" << std::left << std::setw(16) << "filtration" << std::setw(16) << "status" << "coefficients e0..ed\n";
  for (const auto& r : reports) {
    os << std::setw(16) << to_string(r.kind) << std::setw(16) << to_string(r.status);
    if (r.fit) {
      for (std::size_t i = 0; i < r.fit->coefficients.size(); ++i) {
        os << (i ? " " : "") << "e" << i << "=" << r.fit->coefficients[i];
      }
      os << "  (n0=" << r.fit->n0 << ")";
    } else {
      os << "-";
    }
    os << "\n";
  }
  if (coeffs && coeffs->e1_bcm) os << "\ne1^B in [" << coeffs->e1_bcm->lower << ", " << coeffs->e1_bcm->upper << "]\n";
  if (coeffs && coeffs->e1_tight) {
    os << "e1* in [" << coeffs->e1_tight->lower << ", " << coeffs->e1_tight->upper << "]\n";
  }
  os << "\n" << std::right << std::setw(4) << "n";
  for (const auto& r : reports) os << std::setw(18) << to_string(r.kind);
  os << "\n";
  std::size_t rows = 0;
  for (const auto& r : reports) rows = std::max(rows, r.lengths.size());
  for (std::size_t n = 0; n < rows; ++n) {
    os << std::setw(4) << n;
    for (const auto& r : reports) {
      if (n < r.lengths.size()) {
        os << std::setw(18) << r.lengths[n];
      } else {
        os << std::setw(18) << "";
      }
    }
    os << "\n";
  }
  return os.str();
}

json verdict_to_json(const ChainVerdict& v) {
  json j;
  j["id"] = v.id;
  j["pass"] = v.pass();
  j["inclusions_ok"] = v.inclusions_ok;
  j["claim_bound_ok"] = v.claim_ok();
  json claim = json::array();
  for (const auto& row : v.claim) {
    claim.push_back({{"n", int_value(row.n)}, {"lhs", int_value(row.lhs)}, {"rhs", int_value(row.rhs)}, {"ok", row.ok}});
  }
  j["claim"] = claim;
  j["coefficient_chain"] = std::string(to_string(v.coefficient_chain));
  j["e0"] = opt_int(v.e0);
  j["e1"] = opt_int(v.e1);
  j["e1_lim"] = opt_int(v.e1_lim);
  j["e1_bar"] = opt_int(v.e1_bar);
  if (v.tight_checked) {
    j["tight_inclusions_ok"] = v.tight_inclusions_ok;
    j["e1_tight_bracket"] = bracket_to_json(v.e1_tight);
    j["tight_bracket"] = std::string(to_string(v.tight_bracket));
  }
  j["vanishing"] = {{"verdict", std::string(to_string(v.vanishing.verdict))}, {"detail", v.vanishing.detail}};
  j["e1_zero_implies_cm"] = {{"verdict", std::string(to_string(v.e1_zero.verdict))}, {"detail", v.e1_zero.detail}};
  j["conjecture_specimen"] = v.conjecture_specimen;
  if (v.profile) j["profile"] = profile_to_json(*v.profile);
  j["details"] = v.details;
  return j;
}

json summary_to_json(const CorpusSummary& s) {
  json j;
  j["instances"] = int_value(static_cast<std::int64_t>(s.instances));
  j["passes"] = int_value(static_cast<std::int64_t>(s.passes));
  j["violations"] = int_value(static_cast<std::int64_t>(s.violations));
  j["witnesses"] = int_value(static_cast<std::int64_t>(s.witnesses));
  j["specimens"] = int_value(static_cast<std::int64_t>(s.specimens));
  j["unstabilized"] = int_value(static_cast<std::int64_t>(s.unstabilized));
  return j;
}

json reproducer_to_json(const Instance& inst, const ChainVerdict& v) {
  json j;
  j["instances"] = json::array({instance_to_json(inst)});
  j["verdict"] = verdict_to_json(v);
  return j;
}

}  // namespace monoclose::io
