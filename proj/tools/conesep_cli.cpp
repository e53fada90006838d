#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "conesep/conesep.hpp"

using namespace conesep;
using io::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kHypothesis = 2, kDefect = 3, kInput = 4, kRejection = 5 };

bool g_compact = false;

int emit(const Json& report, int code) {
  std::cout << (g_compact ? report.dump() : io::dump_readable(report)) << "\n";
  return code;
}

Json header(const std::string& command) { return {{"tool", "conesep"}, {"version", kVersion}, {"command", command}}; }

/// Exit status for an error raised while separating or classifying. Input-shaped errors stay 4.
int run_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::HypothesisFailed:
    case ErrorCode::NotPointed:
    case ErrorCode::NotSolid:
    case ErrorCode::NotNormlike:
    case ErrorCode::NontrivialityViolated:
    case ErrorCode::UnsupportedOverlap:
    case ErrorCode::NoPositiveInfimum: return kHypothesis;
    case ErrorCode::RejectionLimit: return kRejection;
    case ErrorCode::ParseError:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::DimensionTooLarge:
    case ErrorCode::InvalidArgument:
    case ErrorCode::BadOrder:
    case ErrorCode::ZeroFunctional:
    case ErrorCode::NotSymmetric:
    case ErrorCode::OriginNotInterior:
    case ErrorCode::DegenerateInput: return kInput;
    default: return kDefect;
  }
}

Json error_json(const Error& e) { return {{"code", error_code_name(e.code())}, {"message", e.message()}}; }

int fail(const std::string& command, const Error& e, int code) {
  Json r = header(command);
  r["status"] = "error";
  r["error"] = error_json(e);
  r["exit_code"] = code;
  return emit(r, code);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

struct Loaded {
  io::Instance instance;
  std::string hash;
};

Loaded load(const std::string& path, const std::string& seminorm, const std::string& variant) {
  const std::string text = read_file(path);
  Loaded l{io::parse_instance_text(text), "fnv1a64:" + io::hex64(io::fnv1a64(text))};
  auto& pr = l.instance.problem;
  if (!seminorm.empty()) pr.psi = io::parse_seminorm_flag(seminorm, pr.K.dim());
  if (!variant.empty()) pr.variant = parse_variant(variant);
  return l;
}

Functional parse_functional(const std::string& text, std::size_t dim) {
  std::vector<Scalar> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) xs.push_back(Scalar::parse(item));
  if (xs.size() != dim)
    throw Error(ErrorCode::DimensionMismatch,
                "--x-star has " + std::to_string(xs.size()) + " entries, instance dimension is " + std::to_string(dim));
  return Functional(std::move(xs));
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool at_least(SeparationClass achieved, SeparationClass requested) {
  return static_cast<int>(achieved) >= static_cast<int>(requested);
}

// Separation pipeline shared by `separate`, `render` and `paper-examples`.

struct SeparateOptions {
  bool round_trip = false;
};

struct SeparateOutcome {
  Json report;
  int code = kOk;
  std::optional<SeparationCertificate> certificate;
};

SeparateOutcome run_separate(const SeparationProblem& pr, const SeparateOptions& opt) {
  SeparateOutcome out;
  Json& r = out.report;
  r["requested"] = variant_name(pr.variant);
  try {
    r["hypotheses"] = io::hypotheses_json(check_hypotheses(pr));
  } catch (const Error& e) {
    r["hypotheses"] = nullptr;
    r["status"] = "precondition_failed";
    r["error"] = error_json(e);
    out.code = run_code(e);
    return out;
  }

  try {
    out.certificate = separate(pr);
  } catch (const Error& e) {
    r["certificate"] = nullptr;
    r["status"] = e.code() == ErrorCode::HypothesisFailed ? "hypothesis_failed" : "precondition_failed";
    r["error"] = error_json(e);
    out.code = run_code(e);
    if (out.code == kHypothesis && pr.variant != SeparationVariant::Weak) {
      try {
        auto weak = separate_weak(pr);
        Json fb = io::certificate_json(weak);
        fb["independent_verification"] = io::verification_json(verify_certificate(pr, weak));
        r["fallback_certificate"] = fb;
      } catch (const Error&) {
        r["fallback_certificate"] = nullptr;
      }
    }
    return out;
  }

  const auto& c = *out.certificate;
  r["certificate"] = io::certificate_json(c);
  const auto independent = verify_certificate(pr, c);
  r["verification"] = io::verification_json(independent);
  bool ok = independent.ok;
  if (opt.round_trip) {
    // Parse the emitted certificate back and verify the parsed copy.
    const Json emitted = Json::parse(r["certificate"].dump());
    const auto parsed = io::parse_certificate(emitted, pr.K.dim());
    const auto again = verify_certificate(pr, parsed);
    const bool same = parsed.aug == c.aug && parsed.variant == c.variant;
    r["round_trip"] = {{"identical", same}, {"verification", io::verification_json(again)}};
    ok = ok && same && again.ok;
  }
  const SeparationClass want = requested_class(pr.variant);
  if (!ok) {
    r["status"] = "verification_mismatch";
    out.code = kDefect;
  } else if (at_least(c.achieved, want)) {
    r["status"] = "achieved";
    out.code = kOk;
  } else if (c.strict_level_set_empty) {
    r["status"] = "level_set_empty";
    out.code = kHypothesis;
  } else {
    r["status"] = "class_mismatch";
    out.code = kDefect;
  }
  return out;
}

// Commands.

struct Common {
  std::string instance;
  std::string seminorm;
};

int cmd_analyze(const Common& in) {
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<Loaded> opt;
  try {
    opt = load(in.instance, in.seminorm, "");
  } catch (const Error& e) {
    return fail("analyze", e, e.code() == ErrorCode::RejectionLimit ? kRejection : kInput);
  }
  const Loaded& l = *opt;
  const auto& pr = l.instance.problem;
  Json r = header("analyze");
  r["input_hash"] = l.hash;
  r["instance"] = io::instance_json(pr, l.instance.seed);
  r["seminorm"] = io::seminorm_report_json(pr.psi);

  auto analyze_cone = [&](const ConeUnion& U) {
    Json j;
    j["name"] = U.name();
    j["convex"] = U.is_convex();
    Json pieces = Json::array();
    for (const auto& p : U.pieces())
      pieces.push_back({{"generators", io::to_json(p.generators())},
                        {"facets", io::to_json(p.facets())},
                        {"solid", p.is_solid()},
                        {"pointed", p.is_pointed()}});
    j["pieces"] = pieces;
    const auto lin = lineality(U);
    j["pointed"] = lin.pointed;
    j["solid"] = U.is_solid();
    auto lg = lin.cone.all_generators();
    sort_unique(lg);
    j["lineality_generators"] = io::to_json(lg);
    j["dual_generators"] = io::to_json(dual_cone(U).generators());
    const auto base = classify_base(U, pr.psi);
    Json b;
    b["kind"] = base_kind_name(base.kind);
    b["degenerate_part"] = base.degenerate_part ? io::cone_json(*base.degenerate_part) : Json(nullptr);
    if (base.normlike() && !U.is_zero()) {
      b["vertices"] = io::to_json(base_polytope(U, pr.psi, false).vertices);
      j["origin_exclusion"] = io::origin_exclusion_json(origin_exclusion_report(U, pr.psi));
    } else {
      b["vertices"] = nullptr;
      j["origin_exclusion"] = nullptr;
    }
    j["base"] = b;
    return j;
  };

  try {
    r["cones"] = {{"K", analyze_cone(pr.K)}, {"A", analyze_cone(pr.A)}};
  } catch (const Error& e) {
    return fail("analyze", e, run_code(e) == kInput ? kInput : kDefect);
  }
  try {
    r["equivalence"] = io::equivalence_json(equivalence_report(pr));
  } catch (const Error& e) {
    r["equivalence"] = {{"error", error_json(e)}};
  }
  r["exit_code"] = kOk;
  r["timing_ms"] = elapsed_ms(t0);
  return emit(r, kOk);
}

struct SeparateArgs {
  Common common;
  std::string variant;
  std::string svg;
  bool verify = false;
};

int cmd_separate(const SeparateArgs& a) {
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<Loaded> opt;
  try {
    opt = load(a.common.instance, a.common.seminorm, a.variant);
    if (!a.svg.empty() && opt->instance.problem.K.dim() != 2)
      throw Error(ErrorCode::InvalidArgument, "--emit-svg needs a planar instance");
  } catch (const Error& e) {
    return fail("separate", e, kInput);
  }
  const Loaded& l = *opt;
  const auto& pr = l.instance.problem;
  Json r = header("separate");
  r["input_hash"] = l.hash;
  r["instance"] = io::instance_json(pr, l.instance.seed);
  r["seminorm"] = io::seminorm_report_json(pr.psi);
  SeparateOutcome out;
  try {
    out = run_separate(pr, {a.verify});
  } catch (const Error& e) {
    return fail("separate", e, kDefect);
  }
  for (auto& [k, v] : out.report.items()) r[k] = v;
  if (!a.svg.empty()) {
    try {
      write_file(a.svg, render_svg(pr, out.certificate));
      r["svg"] = a.svg;
    } catch (const Error& e) {
      return fail("separate", e, run_code(e));
    }
  }
  r["exit_code"] = out.code;
  r["timing_ms"] = elapsed_ms(t0);
  return emit(r, out.code);
}

struct CheckArgs {
  Common common;
  std::string x_star;
  std::string alpha;
};

int cmd_augdual_check(const CheckArgs& a) {
  std::optional<Loaded> opt;
  AugmentedFunctional aug;
  try {
    opt = load(a.common.instance, a.common.seminorm, "");
    aug = AugmentedFunctional(parse_functional(a.x_star, opt->instance.problem.K.dim()), Scalar::parse(a.alpha));
  } catch (const Error& e) {
    return fail("augdual-check", e, kInput);
  }
  const Loaded& l = *opt;
  const auto& pr = l.instance.problem;
  Json r = header("augdual-check");
  r["input_hash"] = l.hash;
  r["functional"] = io::augmented_json(aug);
  try {
    r["K"] = io::aug_class_json(classify_augmented(pr.K, pr.psi, aug));
    const auto ls = level_set_cone(aug, pr.psi);
    r["level_set_cone"] = {{"generators", io::to_json(ls.cone.generators())}, {"facets", io::to_json(ls.raw_facets)}};
  } catch (const Error& e) {
    return fail("augdual-check", e, run_code(e));
  }
  r["exit_code"] = kOk;
  return emit(r, kOk);
}

int cmd_bp_check(const CheckArgs& a) {
  std::optional<Loaded> opt;
  Functional x;
  try {
    opt = load(a.common.instance, a.common.seminorm, "");
    x = parse_functional(a.x_star, opt->instance.problem.K.dim());
  } catch (const Error& e) {
    return fail("bp-check", e, kInput);
  }
  const Loaded& l = *opt;
  const auto& pr = l.instance.problem;
  Json r = header("bp-check");
  r["input_hash"] = l.hash;
  r["x_star"] = io::to_json(x);
  try {
    const auto c = bp_class(pr.K, pr.psi, x);
    r["K"] = {{"plus", verdict_name(c.plus)},
              {"sharp", verdict_name(c.sharp)},
              {"amp", verdict_name(c.amp)},
              {"circ", verdict_name(c.circ)}};
    r["dilating"] = is_pointed(pr.K) ? Json(is_dilating(pr.K, pr.psi, x)) : Json(nullptr);
    const auto bp = bp_cone(x, pr.psi);
    r["bp_cone"] = {{"generators", io::to_json(bp.cone.generators())}, {"facets", io::to_json(bp.raw_facets)}};
  } catch (const Error& e) {
    return fail("bp-check", e, run_code(e));
  }
  r["exit_code"] = kOk;
  return emit(r, kOk);
}

struct RandomArgs {
  std::size_t n = 2;
  std::size_t pieces = 1;
  std::size_t generators = 3;
  std::uint64_t seed = 1;
  std::string variant;
  std::string seminorm = "linf";
  std::string out;
};

int cmd_random(const RandomArgs& a) {
  RandomInstanceSpec spec;
  spec.n = a.n;
  spec.pieces = a.pieces;
  spec.generators = a.generators;
  spec.seed = a.seed;
  std::optional<PolyhedralSeminorm> psi;
  try {
    check_random_spec(spec);
    if (!a.variant.empty()) spec.request = parse_variant(a.variant);
    psi = io::parse_seminorm_flag(a.seminorm, a.n);
  } catch (const Error& e) {
    return fail("random", e, kInput);
  }
  SeparationProblem pr{ConeUnion(), ConeUnion(), *psi};
  try {
    pr = random_instance(spec, *psi);
  } catch (const Error& e) {
    return fail("random", e, run_code(e));
  }
  const Json inst = io::instance_json(pr, a.seed);
  if (a.out.empty()) return emit(inst, kOk);
  const std::string text = io::dump_readable(inst) + "\n";
  try {
    write_file(a.out, text);
  } catch (const Error& e) {
    return fail("random", e, kInput);
  }
  Json r = header("random");
  r["written"] = a.out;
  r["instance_hash"] = "fnv1a64:" + io::hex64(io::fnv1a64(text));
  r["instance"] = inst;
  r["exit_code"] = kOk;
  return emit(r, kOk);
}

struct RenderArgs {
  Common common;
  std::string out;
};

int cmd_render(const RenderArgs& a) {
  std::optional<Loaded> opt;
  try {
    opt = load(a.common.instance, a.common.seminorm, "");
    if (opt->instance.problem.K.dim() != 2) throw Error(ErrorCode::InvalidArgument, "render needs a planar instance");
  } catch (const Error& e) {
    return fail("render", e, kInput);
  }
  const Loaded& l = *opt;
  const auto& pr = l.instance.problem;
  Json r = header("render");
  r["input_hash"] = l.hash;
  std::optional<SeparationCertificate> cert;
  try {
    cert = separate(pr);
  } catch (const Error& e) {
    if (run_code(e) != kHypothesis) return fail("render", e, kDefect);
    r["certificate_error"] = error_json(e);
  }
  try {
    write_file(a.out, render_svg(pr, cert));
  } catch (const Error& e) {
    return fail("render", e, run_code(e));
  }
  r["svg"] = a.out;
  r["level_curve"] = cert.has_value();
  r["exit_code"] = kOk;
  return emit(r, kOk);
}

// Bundled examples and their expected verdicts.

/// Interior test against the facets of conv(points) from the lifted points (x, 1).
bool in_hull_interior(const std::vector<Vector>& points, const Vector& x) {
  const std::size_t d = x.dim();
  auto lift = [d](const Vector& p) {
    Vector w(d + 1);
    for (std::size_t i = 0; i < d; ++i) w[i] = p[i];
    w[d] = 1;
    return w;
  };
  std::vector<Vector> lifted;
  for (const auto& p : points) lifted.push_back(lift(p));
  for (const auto& h : double_description(lifted, d + 1))
    if (h(lift(x)).sign() <= 0) return false;
  return true;
}

struct CaseResult {
  Json checks = Json::array();
  bool pass = true;

  void expect(const std::string& what, const Json& expected, const Json& actual) {
    const bool ok = expected == actual;
    pass = pass && ok;
    checks.push_back({{"what", what}, {"expected", expected}, {"actual", actual}, {"pass", ok}});
  }
};

int cmd_paper_examples(const std::string& seminorm, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<PolyhedralSeminorm> psi;
  try {
    psi = seminorm.empty() ? regular_polygon_norm(8) : io::parse_seminorm_flag(seminorm, 2);
    std::filesystem::create_directories(out_dir);
  } catch (const Error& e) {
    return fail("paper-examples", e, kInput);
  } catch (const std::filesystem::filesystem_error& e) {
    return fail("paper-examples", Error(ErrorCode::InvalidArgument, e.what()), kInput);
  }
  // The l1 diamond puts every base point of a planar sector on a line.
  const bool degenerate = psi->generators() == l1_norm(2).generators();

  Json r = header("paper-examples");
  r["seminorm"] = io::seminorm_report_json(*psi);
  r["degenerate_gauge"] = degenerate;
  Json cases = Json::array();
  Json diff = Json::array();
  bool all = true;

  auto run_case = [&](const std::string& name, const SeparationProblem& pr, auto&& body) {
    Json c;
    c["name"] = name;
    const std::string file = (std::filesystem::path(out_dir) / (name + ".json")).string();
    CaseResult res;
    try {
      write_file(file, io::dump_readable(io::instance_json(pr)) + "\n");
      c["file"] = file;
      body(pr, res);
    } catch (const Error& e) {
      res.expect("no error", nullptr, error_json(e));
    }
    if (degenerate) c["note"] = "degenerate gauge: solidity hypothesis fails";
    c["checks"] = res.checks;
    c["pass"] = res.pass;
    for (const auto& ch : res.checks)
      if (!ch["pass"].get<bool>()) diff.push_back({{"case", name}, {"check", ch}});
    all = all && res.pass;
    cases.push_back(c);
  };

  run_case("nonconvex-k", instances::nonconvex_k(*psi), [&](const SeparationProblem& pr, CaseResult& res) {
    res.expect("K convex", false, pr.K.is_convex());
    res.expect("K pointed", true, is_pointed(pr.K));
    res.expect("K solid", true, pr.K.is_solid());
    res.expect("A convex", true, pr.A.is_convex());
    const auto h = check_hypotheses(pr);
    res.expect("A cap cor(-K)", "no", verdict_name(h.a_meets_cor_minus_k));
    if (degenerate) {
      res.expect("S_-K solid", false, h.s_minus_k_solid);
    } else {
      res.expect("S_-K solid", true, h.s_minus_k_solid);
      res.expect("S_A^0 meets cor S_-K", true, h.a0_vs_cor_minus_k.witness.has_value());
      if (h.a0_vs_cor_minus_k.witness) {
        const auto& w = h.a0_vs_cor_minus_k.witness->point;
        res.expect("witness in S_A^0", true, std::holds_alternative<HullMember>(point_in_hull(h.s_a0, w)));
        res.expect("witness interior to S_-K", true, in_hull_interior(h.s_minus_k, w));
      }
    }
    res.expect("strict exit code", kHypothesis, run_separate(pr, {true}).code);
  });

  run_case("nonconvex-a", instances::nonconvex_a(*psi), [&](const SeparationProblem& pr, CaseResult& res) {
    res.expect("K convex", true, pr.K.is_convex());
    res.expect("A convex", false, pr.A.is_convex());
    const auto out = run_separate(pr, {true});
    if (degenerate) {
      res.expect("S_-K solid", false, check_hypotheses(pr).s_minus_k_solid);
      res.expect("strict exit code", kHypothesis, out.code);
      return;
    }
    res.expect("strict exit code", kOk, out.code);
    if (out.certificate) {
      res.expect("alpha positive", true, out.certificate->aug.alpha.sign() > 0);
      res.expect("a_sharp", "yes", verdict_name(out.certificate->aug_class.a_sharp));
      res.expect("verified", true, verify_certificate(pr, *out.certificate).ok);
    }
  });

  // The orthant fixtures stay on l_inf whatever the gauge flag says.
  run_case("orthant-strict", instances::orthant_strict(), [&](const SeparationProblem& pr, CaseResult& res) {
    const auto out = run_separate(pr, {true});
    res.expect("strict exit code", kOk, out.code);
    if (out.certificate) res.expect("achieved", "strict", separation_class_name(out.certificate->achieved));
  });

  run_case("orthant-weak", instances::orthant_weak(), [&](const SeparationProblem& pr, CaseResult& res) {
    res.expect("weak exit code", kOk, run_separate(pr, {true}).code);
  });

  run_case("boundary-only", instances::boundary_only(), [&](const SeparationProblem& pr, CaseResult& res) {
    res.expect("strict-boundary exit code", kOk, run_separate(pr, {true}).code);
    auto full = pr;
    full.variant = SeparationVariant::Strict;
    res.expect("strict exit code on all of A", kHypothesis, run_separate(full, {false}).code);
  });

  r["cases"] = cases;
  r["diff"] = diff;
  r["all_pass"] = all;
  const int code = all ? kOk : kDefect;
  r["exit_code"] = code;
  r["timing_ms"] = elapsed_ms(t0);
  return emit(r, code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact separation of polyhedral cones by Bishop-Phelps-type functions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_compact, "Compact single-line JSON output");
  app.set_version_flag("--version", kVersion);

  auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_option("instance", c.instance, "Instance JSON file")->required();
    sub->add_option("--seminorm", c.seminorm, "Override the gauge: linf, l1 or polygon:m");
  };

  Common analyze;
  auto* s_analyze = app.add_subcommand("analyze", "Cone analysis report");
  add_common(s_analyze, analyze);

  SeparateArgs sep;
  auto* s_sep = app.add_subcommand("separate", "Run the separation driver and verify the certificate");
  add_common(s_sep, sep.common);
  s_sep->add_option("--variant", sep.variant, "weak, proper, strict or strict-boundary");
  s_sep->add_option("--emit-svg", sep.svg, "Write a planar picture to this path");
  s_sep->add_flag("--verify", sep.verify, "Re-verify the certificate after a JSON round trip");

  CheckArgs aug;
  auto* s_aug = app.add_subcommand("augdual-check", "Classify (x*, alpha) against the augmented dual cones of K");
  add_common(s_aug, aug.common);
  s_aug->add_option("--x-star", aug.x_star, "Comma-separated rationals")->required();
  s_aug->add_option("--alpha", aug.alpha, "Rational alpha")->required();

  CheckArgs bp;
  auto* s_bp = app.add_subcommand("bp-check", "Classify x* against the Bishop-Phelps sets of K");
  add_common(s_bp, bp.common);
  s_bp->add_option("--x-star", bp.x_star, "Comma-separated rationals")->required();

  RandomArgs rnd;
  auto* s_rnd = app.add_subcommand("random", "Generate a reproducible random instance");
  s_rnd->add_option("--n", rnd.n, "Dimension");
  s_rnd->add_option("--pieces", rnd.pieces, "Pieces of K");
  s_rnd->add_option("--generators", rnd.generators, "Generators per piece");
  s_rnd->add_option("--seed", rnd.seed, "Seed");
  s_rnd->add_option("--variant", rnd.variant, "Rejection-sample until this hypothesis holds");
  s_rnd->add_option("--seminorm", rnd.seminorm, "Gauge: linf, l1 or polygon:m");
  s_rnd->add_option("--out", rnd.out, "Write the instance here instead of standard output");

  std::string pe_seminorm;
  std::string pe_dir = "paper-examples";
  auto* s_pe = app.add_subcommand("paper-examples", "Write the bundled instances and check their expected verdicts");
  s_pe->add_option("--seminorm", pe_seminorm, "Gauge for the nonconvex fixtures (default polygon:8)");
  s_pe->add_option("--out-dir", pe_dir, "Directory for the instance files");

  RenderArgs ren;
  auto* s_ren = app.add_subcommand("render", "Write an SVG picture of a planar instance");
  add_common(s_ren, ren.common);
  s_ren->add_option("--out", ren.out, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", Error(ErrorCode::InvalidArgument, e.what()), kInput);
  }

  try {
    if (s_analyze->parsed()) return cmd_analyze(analyze);
    if (s_sep->parsed()) return cmd_separate(sep);
    if (s_aug->parsed()) return cmd_augdual_check(aug);
    if (s_bp->parsed()) return cmd_bp_check(bp);
    if (s_rnd->parsed()) return cmd_random(rnd);
    if (s_pe->parsed()) return cmd_paper_examples(pe_seminorm, pe_dir);
    if (s_ren->parsed()) return cmd_render(ren);
  } catch (const Error& e) {
    return fail("internal", e, kDefect);
  } catch (const std::exception& e) {
    return fail("internal", Error(ErrorCode::InternalError, e.what()), kDefect);
  }
  return kDefect;
}
