#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "conesep/augdual.hpp"
#include "conesep/separation.hpp"

namespace conesep::io {

using Json = nlohmann::ordered_json;

/// Instance file contents beyond the problem itself.
struct Instance {
  SeparationProblem problem;
  std::optional<std::uint64_t> seed;
};

namespace detail {

[[noreturn]] inline void field_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "field '" + path + "': " + msg);
}

/// Re-raises a library error with the offending field prepended, keeping its code.
template <class Fn>
auto at_field(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.message().rfind("field '", 0) == 0) throw;
    throw Error(e.code(), "field '" + path + "': " + e.message());
  }
}

inline const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) field_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
inline std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace detail

/// Scalars are "p/q" strings or JSON integers. Floats are rejected.
inline Scalar parse_scalar(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return detail::at_field(path, [&] { return Scalar::parse(j.get<std::string>()); });
  if (j.is_number_float()) detail::field_error(path, "floating-point values are not accepted, use \"p/q\"");
  detail::field_error(path, "expected a rational string or an integer");
}

inline Vector parse_vector(const Json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array()) detail::field_error(path, "expected an array");
  if (j.size() != dim)
    detail::field_error(path, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = parse_scalar(j[i], detail::index(path, i));
  return v;
}

inline std::vector<Vector> parse_vectors(const Json& j, const std::string& path, std::size_t dim) {
  if (!j.is_array()) detail::field_error(path, "expected an array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_vector(j[i], detail::index(path, i), dim));
  return out;
}

inline std::size_t parse_dimension(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) detail::field_error(path, "expected an integer");
  const long d = j.get<long>();
  if (d < 1) detail::field_error(path, "dimension must be positive");
  if (d > static_cast<long>(kMaxDimension))
    throw Error(ErrorCode::DimensionTooLarge, "field '" + path + "': dimension exceeds 8");
  return static_cast<std::size_t>(d);
}

/// Builds a seminorm from its kind name and data. Shared by the JSON reader and
/// the "kind:order" flag syntax.
inline PolyhedralSeminorm make_seminorm(const std::string& kind, std::size_t dim, const std::vector<Vector>& gens,
                                        long order) {
  if (kind == "linf") return linf_norm(dim);
  if (kind == "l1") return l1_norm(dim);
  if (kind == "polygon") {
    if (dim != 2) throw Error(ErrorCode::DimensionMismatch, "polygon gauges are planar");
    return regular_polygon_norm(order);
  }
  if (gens.empty()) throw Error(ErrorCode::DegenerateInput, "'" + kind + "' needs generators");
  std::vector<Functional> fs;
  for (const auto& g : gens) fs.push_back(to_functional(g));
  if (kind == "abs") {
    if (gens.size() != 1) throw Error(ErrorCode::InvalidArgument, "abs takes exactly one functional");
    return abs_functional_seminorm(fs.front());
  }
  if (kind == "minkowski") return minkowski_norm_from_ball(gens);
  if (kind == "psi_max") return psi_max(SublinearFunction(fs, dim));
  if (kind == "custom") return PolyhedralSeminorm(fs, dim, SeminormKind::Custom);
  throw Error(ErrorCode::ParseError, "unknown seminorm kind '" + kind + "'");
}

/// "linf", "l1", "polygon:8".
inline PolyhedralSeminorm parse_seminorm_flag(const std::string& spec, std::size_t dim) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  long order = 0;
  if (colon != std::string::npos) {
    const std::string rest = spec.substr(colon + 1);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "malformed seminorm order in '" + spec + "'");
    order = std::stol(rest);
  }
  if (kind != "linf" && kind != "l1" && kind != "polygon")
    throw Error(ErrorCode::ParseError, "seminorm flag accepts linf, l1 or polygon:m, got '" + spec + "'");
  if (kind == "polygon" && colon == std::string::npos) order = 8;
  return make_seminorm(kind, dim, {}, order);
}

inline PolyhedralSeminorm parse_seminorm(const Json& j, const std::string& path, std::size_t dim) {
  const auto& kind_j = detail::member(j, path, "kind");
  if (!kind_j.is_string()) detail::field_error(detail::join(path, "kind"), "expected a string");
  const std::string kind = kind_j.get<std::string>();
  std::vector<Vector> gens;
  if (j.contains("generators")) gens = parse_vectors(j["generators"], detail::join(path, "generators"), dim);
  long order = 0;
  if (j.contains("order")) {
    if (!j["order"].is_number_integer()) detail::field_error(detail::join(path, "order"), "expected an integer");
    order = j["order"].get<long>();
  } else if (kind == "polygon") {
    detail::field_error(detail::join(path, "order"), "missing");
  }
  return detail::at_field(path, [&] { return make_seminorm(kind, dim, gens, order); });
}

inline ConeUnion parse_cone(const Json& j, const std::string& path, std::size_t dim, const std::string& fallback_name) {
  const auto& pieces = detail::member(j, path, "pieces");
  const std::string ppath = detail::join(path, "pieces");
  if (!pieces.is_array() || pieces.empty()) detail::field_error(ppath, "expected a nonempty array");
  std::vector<ConvexConePiece> ps;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string gpath = detail::join(detail::index(ppath, i), "generators");
    auto gens = parse_vectors(detail::member(pieces[i], detail::index(ppath, i), "generators"), gpath, dim);
    ps.push_back(detail::at_field(gpath, [&] { return ConvexConePiece::from_generators(gens, dim); }));
  }
  std::string name = fallback_name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) detail::field_error(detail::join(path, "name"), "expected a string");
    name = j["name"].get<std::string>();
  }
  return ConeUnion(std::move(ps), dim, std::move(name));
}

inline Instance parse_instance(const Json& j) {
  if (!j.is_object()) detail::field_error("$", "instance must be a JSON object");
  const std::size_t dim = parse_dimension(detail::member(j, "", "dimension"), "dimension");
  auto psi = parse_seminorm(detail::member(j, "", "seminorm"), "seminorm", dim);
  auto K = parse_cone(detail::member(j, "", "cone_K"), "cone_K", dim, "K");
  auto A = parse_cone(detail::member(j, "", "cone_A"), "cone_A", dim, "A");
  SeparationVariant v = SeparationVariant::Strict;
  if (j.contains("variant")) {
    if (!j["variant"].is_string()) detail::field_error("variant", "expected a string");
    v = detail::at_field("variant", [&] { return parse_variant(j["variant"].get<std::string>()); });
  }
  Instance in{{std::move(K), std::move(A), std::move(psi), v}, std::nullopt};
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) detail::field_error("seed", "expected a nonnegative integer");
    in.seed = j["seed"].get<std::uint64_t>();
  }
  return in;
}

/// Parses JSON text; syntax errors carry the byte offset reported by the parser.
inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline Instance parse_instance_text(std::string_view text) { return parse_instance(parse_text(text)); }

// Serialization.

inline Json to_json(const Scalar& s) { return s.str(); }

template <class Tag>
Json to_json(const BasicVector<Tag>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

template <class T>
Json to_json(const std::vector<T>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

template <class T>
Json to_json(const std::optional<T>& o) {
  return o ? to_json(*o) : Json(nullptr);
}

/// The instance form: enough to rebuild the seminorm.
inline Json seminorm_json(const PolyhedralSeminorm& psi) {
  Json j;
  j["kind"] = seminorm_kind_name(psi.kind());
  switch (psi.kind()) {
    case SeminormKind::Linf:
    case SeminormKind::L1: break;
    case SeminormKind::Polygon: j["order"] = psi.order(); break;
    case SeminormKind::Abs:
    case SeminormKind::Minkowski:
    case SeminormKind::PsiMax: j["generators"] = to_json(psi.source()); break;
    case SeminormKind::Custom: {
      Json g = Json::array();
      for (const auto& c : psi.generators()) g.push_back(to_json(c));
      j["generators"] = g;
      break;
    }
  }
  return j;
}

/// Instance form plus the explicit max-of-linear representation, for reports.
inline Json seminorm_report_json(const PolyhedralSeminorm& psi) {
  Json j = seminorm_json(psi);
  j["functionals"] = to_json(psi.generators());
  j["is_norm"] = psi.is_norm();
  return j;
}

inline Json cone_json(const ConeUnion& K) {
  Json j;
  if (!K.name().empty()) j["name"] = K.name();
  Json pieces = Json::array();
  for (const auto& p : K.pieces()) pieces.push_back({{"generators", to_json(p.generators())}});
  j["pieces"] = pieces;
  return j;
}

inline Json instance_json(const SeparationProblem& pr, std::optional<std::uint64_t> seed = std::nullopt) {
  Json j;
  j["dimension"] = pr.K.dim();
  j["seminorm"] = seminorm_json(pr.psi);
  j["cone_K"] = cone_json(pr.K);
  j["cone_A"] = cone_json(pr.A);
  j["variant"] = variant_name(pr.variant);
  if (seed) j["seed"] = *seed;
  return j;
}

inline Json hyperplane_json(const SeparatingHyperplane& h) {
  return {{"f", to_json(h.f)}, {"beta", to_json(h.beta)}, {"gamma", to_json(h.gamma)}};
}

inline Json witness_json(const IntersectionWitness& w) {
  return {{"point", to_json(w.point)}, {"weights_p", to_json(w.weights_p)}, {"weights_q", to_json(w.weights_q)}};
}

inline Json finding_json(const Finding& f) {
  Json j;
  j["disjoint"] = f.disjoint;
  j["hyperplane"] = f.hyperplane ? hyperplane_json(*f.hyperplane) : Json(nullptr);
  j["witness"] = f.witness ? witness_json(*f.witness) : Json(nullptr);
  return j;
}

inline Json hypotheses_json(const HypothesisReport& r) {
  Json j;
  j["variant"] = variant_name(r.variant);
  j["holds"] = r.holds;
  j["reason"] = r.reason;
  j["k_solid"] = r.k_solid;
  j["k_pointed"] = r.k_pointed;
  j["a_solid"] = r.a_solid;
  j["s_minus_k"] = to_json(r.s_minus_k);
  j["s_a0"] = to_json(r.s_a0);
  j["s_minus_k_solid"] = r.s_minus_k_solid;
  j["s_a0_solid"] = r.s_a0_solid;
  j["a0_vs_cor_minus_k"] = finding_json(r.a0_vs_cor_minus_k);
  j["cor_a0_vs_minus_k"] = finding_json(r.cor_a0_vs_minus_k);
  j["relint_vs_relint"] = finding_json(r.relint_vs_relint);
  j["closures"] = finding_json(r.closures);
  j["a_meets_minus_k_nonzero"] = r.a_meets_minus_k_nonzero;
  j["a_meets_cor_minus_k"] = verdict_name(r.a_meets_cor_minus_k);
  j["origin_in_s_minus_k"] = r.origin_in_s_minus_k;
  if (r.boundary) j["boundary_A"] = cone_json(*r.boundary);
  return j;
}

inline Json augmented_json(const AugmentedFunctional& a) {
  return {{"x_star", to_json(a.x_star)}, {"alpha", to_json(a.alpha)}};
}

inline Json aug_class_json(const AugDualClass& c) {
  return {{"a_plus", verdict_name(c.a_plus)},     {"a_sharp", verdict_name(c.a_sharp)},
          {"a_amp", verdict_name(c.a_amp)},       {"a_circ", verdict_name(c.a_circ)},
          {"vertex_minimum", to_json(c.vertex_minimum)}, {"argmin", to_json(c.argmin)}};
}

inline Json cones_verdict_json(const SeparationByConesVerdict& v) {
  return {{"achieved", separation_class_name(v.achieved)},
          {"omega1_in_closure", v.omega1_in_closure},
          {"omega2_misses_interior", v.omega2_misses_interior},
          {"point_off_boundary", v.point_off_boundary},
          {"omega1_in_interior", v.omega1_in_interior},
          {"omega2_outside_closure", v.omega2_outside_closure},
          {"witness", to_json(v.witness)}};
}

inline Json verification_json(const VerificationReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["failures"] = r.failures;
  j["a_min"] = to_json(r.a_min);
  j["a_argmin"] = to_json(r.a_argmin);
  j["k_max"] = to_json(r.k_max);
  j["k_argmax"] = to_json(r.k_argmax);
  j["hulls_disjoint"] = r.hulls_disjoint ? Json(*r.hulls_disjoint) : Json(nullptr);
  j["counterexample"] = to_json(r.counterexample);
  return j;
}

inline Json certificate_json(const SeparationCertificate& c) {
  Json j;
  j["variant"] = variant_name(c.variant);
  j["x_star"] = to_json(c.aug.x_star);
  j["alpha"] = to_json(c.aug.alpha);
  j["aug_class"] = aug_class_json(c.aug_class);
  j["delta"] = to_json(c.delta);
  j["beta"] = to_json(c.hyperplane.beta);
  j["gamma"] = to_json(c.hyperplane.gamma);
  j["hyperplane"] = to_json(c.hyperplane.f);
  j["linear"] = c.linear;
  j["strict_level_set_empty"] = c.strict_level_set_empty;
  j["achieved"] = separation_class_name(c.achieved);
  j["cones"] = cones_verdict_json(c.cones);
  j["verification"] = verification_json(c.verification);
  return j;
}

/// Reads back the data a verifier needs: variant, x_star and alpha. The
/// hyperplane fields are read when present.
inline SeparationCertificate parse_certificate(const Json& j, std::size_t dim, const std::string& path = "certificate") {
  SeparationCertificate c;
  const auto& v = detail::member(j, path, "variant");
  if (!v.is_string()) detail::field_error(detail::join(path, "variant"), "expected a string");
  c.variant = detail::at_field(detail::join(path, "variant"), [&] { return parse_variant(v.get<std::string>()); });
  c.aug = AugmentedFunctional(
      to_functional(parse_vector(detail::member(j, path, "x_star"), detail::join(path, "x_star"), dim)),
      parse_scalar(detail::member(j, path, "alpha"), detail::join(path, "alpha")));
  if (j.contains("hyperplane"))
    c.hyperplane.f = to_functional(parse_vector(j["hyperplane"], detail::join(path, "hyperplane"), dim));
  if (j.contains("beta")) c.hyperplane.beta = parse_scalar(j["beta"], detail::join(path, "beta"));
  if (j.contains("gamma")) c.hyperplane.gamma = parse_scalar(j["gamma"], detail::join(path, "gamma"));
  if (j.contains("delta")) c.delta = parse_scalar(j["delta"], detail::join(path, "delta"));
  c.linear = c.aug.alpha.is_zero();
  return c;
}

inline Json origin_exclusion_json(const OriginExclusionReport& r) {
  Json j;
  j["origin_in_hull"] = r.origin_in_hull;
  j["vertices"] = to_json(r.vertices);
  j["weights"] = to_json(r.weights);
  j["k_sharp_witness"] = to_json(r.k_sharp_witness);
  j["cor_aplus_witness"] = r.cor_aplus_witness ? augmented_json(*r.cor_aplus_witness) : Json(nullptr);
  return j;
}

inline Json assertions_json(const std::vector<Assertion>& as) {
  Json list = Json::array();
  for (const auto& a : as) list.push_back({{"name", a.name}, {"value", a.value}, {"exact", a.exact}});
  return {{"assertions", list}, {"implies", EquivalenceReport::matrix(as)}};
}

inline Json equivalence_json(const EquivalenceReport& r) {
  return {{"convex", r.convex}, {"interior", assertions_json(r.interior)}, {"strict", assertions_json(r.strict)}};
}

namespace detail {

inline bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_object() || (e.is_array() && !std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); })))
      return false;
  return true;
}

inline void dump_into(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (flat(j) || j.empty()) {
    out += j.dump();
    return;
  }
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    dump_into(*it, depth + 1, out);
  }
  out += "\n" + close + (obj ? "}" : "]");
}

}  // namespace detail

/// Indented JSON that keeps vectors and lists of vectors on one line.
inline std::string dump_readable(const Json& j) {
  std::string out;
  detail::dump_into(j, 0, out);
  return out;
}

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return s;
}

}  // namespace conesep::io
