#include "pbf/report.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "pbf/bands.hpp"
#include "pbf/contfrac.hpp"
#include "pbf/gauss_borel.hpp"
#include "pbf/pbf.hpp"
#include "pbf/tn.hpp"
#include "pbf/toeplitz.hpp"
#include "pbf/transforms.hpp"

namespace pbf {

namespace {

enum class SpecKind { Bands, Toeplitz, Alphas };

struct SpecData {
  SpecKind kind = SpecKind::Bands;
  bool exact = true;
  std::vector<std::string> c, b, a, alphas;
  std::string ta, tb, tc;
};

std::string num_to_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw parse_error("expected a number or numeric string, got " + v.dump());
}

std::vector<std::string> num_array(const Json& spec, const char* field) {
  if (!spec.contains(field) || !spec.at(field).is_array())
    throw parse_error(std::string("field '") + field + "' must be an array");
  std::vector<std::string> out;
  for (const Json& v : spec.at(field)) out.push_back(num_to_string(v));
  return out;
}

SpecData read_spec(const Json& spec, const std::optional<std::string>& arithmetic_override) {
  if (!spec.is_object()) throw parse_error("matrix spec must be a JSON object");
  SpecData sd;
  std::string arith = spec.value("arithmetic", std::string("exact"));
  if (arithmetic_override) arith = *arithmetic_override;
  if (arith == "exact")
    sd.exact = true;
  else if (arith == "float64")
    sd.exact = false;
  else
    throw parse_error("field 'arithmetic' must be \"exact\" or \"float64\", got \"" + arith +
                      "\"");

  std::string kind = spec.value("kind", std::string());
  if (kind == "bands") {
    sd.kind = SpecKind::Bands;
    sd.c = num_array(spec, "c");
    sd.b = num_array(spec, "b");
    sd.a = num_array(spec, "a");
  } else if (kind == "toeplitz") {
    sd.kind = SpecKind::Toeplitz;
    for (const char* f : {"a", "b", "c"})
      if (!spec.contains(f)) throw parse_error(std::string("toeplitz spec lacks field '") + f + "'");
    sd.ta = num_to_string(spec.at("a"));
    sd.tb = num_to_string(spec.at("b"));
    sd.tc = num_to_string(spec.at("c"));
  } else if (kind == "alphas") {
    sd.kind = SpecKind::Alphas;
    sd.alphas = num_array(spec, "alphas");
    if (sd.alphas.empty() || (sd.alphas.size() - 1) % 3 != 0)
      throw parse_error("field 'alphas' must hold 3N+1 entries");
  } else {
    throw parse_error("field 'kind' must be \"bands\", \"toeplitz\" or \"alphas\", got \"" +
                      kind + "\"");
  }
  return sd;
}

template <class S>
std::vector<S> parse_all(const std::vector<std::string>& xs) {
  std::vector<S> out;
  out.reserve(xs.size());
  for (const std::string& x : xs) out.push_back(scalar_from_string<S>(x));
  return out;
}

template <class S>
BidiagonalFactorization<S> alphas_factorization(const SpecData& sd) {
  BidiagonalFactorization<S> fac;
  fac.alphas = parse_all<S>(sd.alphas);
  fac.N = (fac.alphas.size() - 1) / 3;
  fac.alpha2 = fac.N >= 1 ? fac.alphas[1] : S(0);
  fac.all_positive =
      std::all_of(fac.alphas.begin(), fac.alphas.end(), [](const S& v) { return v > S(0); });
  return fac;
}

template <class S>
BandSpec<S> build_bands(const SpecData& sd) {
  switch (sd.kind) {
    case SpecKind::Bands:
      return BandSpec<S>::from_bands(parse_all<S>(sd.c), parse_all<S>(sd.b), parse_all<S>(sd.a));
    case SpecKind::Toeplitz:
      return BandSpec<S>::toeplitz(scalar_from_string<S>(sd.ta), scalar_from_string<S>(sd.tb),
                                   scalar_from_string<S>(sd.tc));
    default:
      return reconstruct_bands(alphas_factorization<S>(sd));
  }
}

template <class S>
Json scalar_array(const std::vector<S>& xs) {
  Json out = Json::array();
  for (const S& x : xs) out.push_back(scalar_to_string(x));
  return out;
}

const char* arithmetic_name(bool exact) { return exact ? "exact" : "float64"; }

/// Positivity criterion used past the brute-force minor limit: positive
/// leading principal minors, positive l, and an oscillatory auxiliary Jacobi
/// matrix.
template <class S>
bool criterion_oscillatory(const BandSpec<S>& bands, std::size_t N) {
  DeterminantLadder<S> d = delta_ladder(bands, N + 1);
  for (std::size_t n = 1; n <= N + 1; ++n)
    if (!(d.at(n) > S(0))) return false;
  if (N == 0) return true;
  GaussBorelFactors<S> f = gauss_borel(bands, N);
  return is_jacobi_oscillatory(f.jacobi(0));
}

template <class S>
Json witness_json(const TNVerdict& v) {
  Json w;
  w["rows"] = v.witness->first;
  w["cols"] = v.witness->second;
  return w;
}

template <class S>
Json analyze_impl(const BandSpec<S>& bands, std::size_t depth) {
  std::size_t limit = default_minor_limit();
  Json report;
  report["command"] = "analyze";
  report["arithmetic"] = arithmetic_name(is_exact_v<S>);
  report["depth"] = depth;

  Json per_depth = Json::array();
  bool final_oscillatory = false;
  for (std::size_t N = 0; N <= depth; ++N) {
    if (!bands.available(N)) break;
    Json entry;
    entry["N"] = N;
    if (N + 1 <= limit) {
      TNVerdict v = is_oscillatory_hessenberg(bands, N, limit);
      entry["method"] = "minors";
      entry["is_tn"] = v.is_tn;
      entry["is_nonsingular"] = v.is_nonsingular;
      entry["is_oscillatory"] = v.is_oscillatory;
      if (v.witness) entry["negative_minor_witness"] = witness_json<S>(v);
      if (N == depth) final_oscillatory = v.is_oscillatory;
    } else {
      bool osc = false;
      try {
        osc = criterion_oscillatory(bands, N);
      } catch (const singular_minor&) {
        osc = false;
      }
      entry["method"] = "criterion";
      entry["is_oscillatory"] = osc;
      if (N == depth) final_oscillatory = osc;
    }
    per_depth.push_back(std::move(entry));
  }
  report["oscillatory"] = final_oscillatory;
  report["per_depth"] = std::move(per_depth);

  try {
    GaussBorelFactors<S> f = gauss_borel(bands, depth);
    Json gb;
    gb["m"] = scalar_array(f.m);
    gb["l"] = scalar_array(f.l);
    gb["alpha_u"] = scalar_array(f.alpha_u);
    report["gauss_borel"] = std::move(gb);

    if (depth >= 1) {
      S tol = scalar_from_string<S>("1e-9");
      CFEvaluation<S> ev = cf_convergents(f.jacobi(0), 1, tol, depth + 1);
      Json cf;
      cf["k"] = ev.k;
      cf["convergents"] = scalar_array(ev.convergents);
      cf["monotone"] = ev.monotone_ok;
      cf["limit_estimate"] = scalar_to_string(ev.limit_estimate);
      cf["gap"] = scalar_to_string(ev.gap);
      if (ev.aitken) cf["aitken"] = scalar_to_string(*ev.aitken);
      cf["status"] = to_string(ev.status);
      report["continued_fraction"] = std::move(cf);
    }
  } catch (const singular_minor& e) {
    report["gauss_borel"] = Json{{"error", e.what()}};
  }
  return report;
}

template <class S>
Json bands_as_spec(const BandSpec<S>& bands, std::size_t top) {
  Json bj;
  bj["kind"] = "bands";
  bj["arithmetic"] = arithmetic_name(is_exact_v<S>);
  Json c = Json::array(), b = Json::array(), a = Json::array();
  for (std::size_t n = 0; n <= top; ++n) c.push_back(scalar_to_string(bands.c(n)));
  for (std::size_t n = 1; n <= top; ++n) b.push_back(scalar_to_string(bands.b(n)));
  for (std::size_t n = 2; n <= top; ++n) a.push_back(scalar_to_string(bands.a(n)));
  bj["c"] = std::move(c);
  bj["b"] = std::move(b);
  bj["a"] = std::move(a);
  return bj;
}

template <class S>
Json factorize_impl(const SpecData& sd, const std::optional<std::string>& alpha2,
                    std::size_t depth) {
  Json report;
  report["command"] = "factorize";
  report["arithmetic"] = arithmetic_name(is_exact_v<S>);

  if (sd.kind == SpecKind::Alphas) {
    BidiagonalFactorization<S> fac = alphas_factorization<S>(sd);
    BandSpec<S> bands = reconstruct_bands(fac);
    std::size_t N = fac.N;
    report["N"] = N;
    report["all_positive"] = fac.all_positive;
    report["reconstructed_bands"] = bands_as_spec(bands, N);
    return report;
  }

  BandSpec<S> bands = build_bands<S>(sd);
  report["depth"] = depth;
  BidiagonalFactorization<S> fac =
      alpha2 ? pbf_factorize(bands, depth, scalar_from_string<S>(*alpha2))
             : pbf_factorize(bands, depth);
  report["alpha2"] = scalar_to_string(fac.alpha2);
  report["gate_upper"] = scalar_to_string(fac.gate_upper);
  report["gate_ok"] = fac.gate_ok;
  report["all_positive"] = fac.all_positive;
  report["alphas"] = scalar_array(fac.alphas);

  Matrix<S> product = assemble_l1(fac) * assemble_l2(fac) * assemble_u(fac);
  Matrix<S> expected = materialize_principal(bands, depth);
  if constexpr (is_exact_v<S>) {
    report["product_check"] = product == expected ? "exact" : "mismatch";
  } else {
    report["product_check"] =
        "max_rel_err " + scalar_to_string(max_relative_difference(product, expected));
  }
  return report;
}

template <class S>
Json transform_impl(const SpecData& sd, const std::string& kind,
                    const std::optional<std::string>& s, std::optional<std::size_t> k) {
  BandSpec<S> bands = build_bands<S>(sd);
  Json report;
  report["command"] = "transform";
  report["arithmetic"] = arithmetic_name(is_exact_v<S>);
  report["transform"] = kind;

  BandSpec<S> derived = bands;
  if (kind == "retract") {
    if (!s) throw parse_error("retract needs the parameter s");
    report["s"] = *s;
    derived = retract(bands, scalar_from_string<S>(*s));
  } else if (kind == "tail") {
    if (!k) throw parse_error("tail needs the start index k");
    report["k"] = *k;
    derived = tail_matrix(bands, *k);
  } else if (kind == "check") {
    derived = check_matrix(bands);
  } else if (kind == "check_shifted") {
    if (!k) throw parse_error("shifted check needs the start index k");
    report["k"] = *k;
    derived = check_matrix_shifted(bands, *k);
  } else {
    throw parse_error("unknown transform '" + kind + "'");
  }

  bool constant_head = sd.kind == SpecKind::Toeplitz && kind == "check";
  if (constant_head) {
    Json tj;
    tj["kind"] = "toeplitz";
    tj["arithmetic"] = arithmetic_name(is_exact_v<S>);
    tj["a"] = scalar_to_string(derived.a(2));
    tj["b"] = scalar_to_string(derived.b(1));
    tj["c"] = scalar_to_string(derived.c(0));
    report["result"] = std::move(tj);
  } else {
    std::size_t top = derived.finite() ? derived.max_index() : 7;
    if (!derived.finite()) report["truncated_to"] = top;
    report["result"] = bands_as_spec(derived, top);
  }
  return report;
}

template <class S>
std::pair<Json, std::string> convergents_impl(const BandSpec<S>& bands, std::size_t k,
                                              std::size_t maxN, const std::string& tol) {
  if (k < 1) throw parse_error("continued fraction index k must be at least 1");
  if (maxN < k + 1) throw parse_error("max-n must be at least k+1");
  CFEvaluation<S> ev;
  {
    std::size_t depth = maxN - 1;
    if (bands.finite()) depth = std::min(depth, bands.max_index());
    GaussBorelFactors<S> f = gauss_borel(bands, depth);
    ev = cf_convergents(f.jacobi(0), k, scalar_from_string<S>(tol), maxN);
  }

  Json doc;
  doc["command"] = "convergents";
  doc["arithmetic"] = arithmetic_name(is_exact_v<S>);
  doc["k"] = k;
  doc["status"] = to_string(ev.status);
  Json rows = Json::array();
  std::string csv = "n,convergent,gap\n";
  for (std::size_t i = 0; i < ev.convergents.size(); ++i) {
    std::size_t n = k + 1 + i;
    std::string conv = scalar_to_string(ev.convergents[i]);
    std::string gap =
        i == 0 ? std::string()
               : scalar_to_string(S(scalar_abs(S(ev.convergents[i] - ev.convergents[i - 1]))));
    Json row;
    row["n"] = n;
    row["convergent"] = conv;
    row["gap"] = i == 0 ? Json() : Json(gap);
    rows.push_back(std::move(row));
    csv += std::to_string(n) + "," + conv + "," + gap + "\n";
  }
  doc["rows"] = std::move(rows);
  return {std::move(doc), std::move(csv)};
}

}  // namespace

Json parse_spec_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Json run_analyze(const Json& input, std::size_t depth,
                 const std::optional<std::string>& arithmetic_override) {
  SpecData sd = read_spec(input, arithmetic_override);
  if (sd.exact) return analyze_impl(build_bands<Rational>(sd), depth);
  return analyze_impl(build_bands<double>(sd), depth);
}

Json run_factorize(const Json& input, const std::optional<std::string>& alpha2,
                   std::size_t depth) {
  SpecData sd = read_spec(input, std::nullopt);
  if (sd.exact) return factorize_impl<Rational>(sd, alpha2, depth);
  return factorize_impl<double>(sd, alpha2, depth);
}

Json run_transform(const Json& input, const std::string& kind,
                   const std::optional<std::string>& s, std::optional<std::size_t> k) {
  SpecData sd = read_spec(input, std::nullopt);
  if (sd.exact) return transform_impl<Rational>(sd, kind, s, k);
  return transform_impl<double>(sd, kind, s, k);
}

std::string run_convergents(const Json& input, std::size_t k, std::size_t maxN,
                            const std::string& tol, const std::string& format) {
  if (format != "json" && format != "csv")
    throw parse_error("format must be \"json\" or \"csv\", got \"" + format + "\"");
  SpecData sd = read_spec(input, std::nullopt);
  std::pair<Json, std::string> out =
      sd.exact ? convergents_impl(build_bands<Rational>(sd), k, maxN, tol)
               : convergents_impl(build_bands<double>(sd), k, maxN, tol);
  return format == "json" ? render_report(out.first) : out.second;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const parse_error*>(&e) || dynamic_cast<const length_mismatch*>(&e) ||
      dynamic_cast<const band_out_of_range*>(&e) ||
      dynamic_cast<const index_out_of_range*>(&e) || dynamic_cast<const size_exceeded*>(&e))
    return 1;
  if (dynamic_cast<const error*>(&e)) return 2;
  return 1;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace pbf
