#include "qexcess_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qexcess/error.hpp"
#include "qexcess/excess.hpp"
#include "qexcess/fixtures.hpp"
#include "qexcess/graphdual.hpp"
#include "qexcess/harmonic.hpp"
#include "qexcess/io.hpp"
#include "qexcess/orthopoly.hpp"
#include "qexcess/pointset.hpp"
#include "qexcess/scheme.hpp"

namespace qexcess::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string json_out;
  std::optional<double> tol_cluster;
  double tol_rank = ToleranceConfig{}.rank_tol;
  double tol_cert = ToleranceConfig{}.cert_tol;
  bool dump_matrices = false;
  int idempotent = -1;

  ToleranceConfig config() const {
    ToleranceConfig cfg;
    cfg.cluster_tol = tol_cluster;
    cfg.rank_tol = tol_rank;
    cfg.cert_tol = tol_cert;
    cfg.validate();
    return cfg;
  }
};

struct Outcome {
  json stages = json::object();
  std::string verdict;
  int exit_code = kSuccess;
  double scale = 1.0;
  // When set, printed instead of a run report (embed).
  std::optional<json> payload;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
const T& expect(const io::Instance& inst, const char* type) {
  if (const T* v = std::get_if<T>(&inst)) return *v;
  throw Error(ErrorKind::InvalidInput, std::string("expected an instance of type \"") + type + "\"");
}

double max_radius_residual(const PointSet& ps) {
  const Vector r2 = ps.coords.rowwise().squaredNorm();
  return (r2.array() - static_cast<double>(ps.m())).abs().maxCoeff();
}

// TD1 and TD2 hold by construction once load_pointset returns.
json design_stage(const PointSet& ps, const InnerProductProfile& prof, const TwoDesignCertificate& cert) {
  const double sep = prof.s() > 0 ? static_cast<double>(ps.m()) - prof.values[1] : 0.0;
  return {{"n", ps.n()},
          {"m", ps.m()},
          {"TD1_radius_residual", max_radius_residual(ps)},
          {"TD2_min_separation", sep},
          {"TD3_row_sum_residual", cert.row_sum_residual},
          {"TD4_idempotency_residual", cert.idempotency_residual},
          {"rank_of_G", cert.rank_of_G},
          {"passed", cert.passed}};
}

Outcome check_design(const Options& opt, const io::Instance& inst) {
  const auto& in = expect<io::PointSetInput>(inst, "pointset");
  const ToleranceConfig cfg = opt.config();
  const PointSet ps = load_pointset(in.points, cfg, in.normalize);
  const InnerProductProfile prof = inner_product_profile(ps, cfg);
  const TwoDesignCertificate cert = check_two_design(ps, cfg);
  Outcome out;
  out.scale = ps.m();
  out.stages["design"] = design_stage(ps, prof, cert);
  out.stages["profile"] = io::to_json(prof);
  out.verdict = cert.passed ? "design-verified" : "design-refuted";
  out.exit_code = cert.passed ? kSuccess : kRefuted;
  return out;
}

Outcome excess(const Options& opt, const io::Instance& inst) {
  const auto& in = expect<io::PointSetInput>(inst, "pointset");
  const ToleranceConfig cfg = opt.config();
  const PointSet ps = load_pointset(in.points, cfg, in.normalize);
  const InnerProductProfile prof = inner_product_profile(ps, cfg);
  const TwoDesignCertificate cert = check_two_design(ps, cfg);
  Outcome out;
  out.scale = ps.m();
  out.stages["design"] = design_stage(ps, prof, cert);
  out.stages["profile"] = io::to_json(prof);
  if (!cert.passed) {
    out.verdict = "design-refuted";
    out.exit_code = kRefuted;
    return out;
  }

  const NormalizedGram G = normalized_gram(ps, prof);
  const PredegreeSequence seq = predegree_sequence(prof, ps.m(), cfg);
  out.stages["predegree"] = io::to_json(seq, profile_measure(prof));
  out.stages["sum_identity"] = io::to_json(hoffman_sum_check(seq, prof, ps.n(), ps.m(), &G));

  const HarmonicDecomposition hd = harmonic_decomposition(ps, G, cfg);
  out.stages["harmonic"] = io::to_json(hd, opt.dump_matrices);
  out.stages["projection_identities"] = io::to_json(verify_projection_identities(hd, G));

  const ExcessReport rep = excess_report(ps, prof, G, seq, hd, cfg);
  out.stages["excess"] = io::to_json(rep);
  if (!rep.hypothesis_met) {
    out.verdict = "hypothesis-unmet";
    out.exit_code = kRefuted;
    return out;
  }

  const QPolyCertificate qc = qpoly_certificate(hd, seq, G, ps.n(), cfg);
  out.stages["qpoly_certificate"] = io::to_json(qc);

  json scheme_stage;
  bool scheme_detector = false;
  const SchemeVerdict sv = verify_scheme(prof.class_of);
  scheme_stage["verified"] = sv.verified();
  if (sv.verified()) {
    const EigenStructure es = eigen_structure(*sv.scheme, cfg);
    const auto match = match_idempotents(es, hd.F, cfg.cert_tol);
    scheme_stage["eigenstructure"] = io::to_json(es, opt.dump_matrices);
    scheme_stage["layers_match_idempotents"] = match.has_value();
    if (match) scheme_stage["matching"] = *match;
    scheme_detector = match.has_value() && es.d() == hd.S;
  } else {
    scheme_stage["refutation"] = io::to_json(*sv.refutation);
  }
  scheme_stage["q_polynomial"] = scheme_detector;
  out.stages["scheme"] = std::move(scheme_stage);

  out.stages["detectors"] = {
      {"gap", rep.equality}, {"projection_lemma", qc.certified}, {"scheme", scheme_detector}};
  if (rep.equality && qc.certified && scheme_detector) {
    out.verdict = "equality-certified";
    out.exit_code = kSuccess;
  } else if (!rep.equality && !qc.certified && !scheme_detector) {
    out.verdict = "inequality-strict";
    out.exit_code = kRefuted;
  } else {
    out.stages["detectors"]["disagreement"] = true;
    out.verdict = "error";
    out.exit_code = kInputError;
  }
  return out;
}

Outcome scheme(const Options& opt, const io::Instance& inst) {
  const auto& in = expect<io::SchemeInput>(inst, "scheme");
  const ToleranceConfig cfg = opt.config();
  Outcome out;
  const SchemeVerdict sv = verify_scheme(in.classes);
  if (!sv.verified()) {
    out.stages["refutation"] = io::to_json(*sv.refutation);
    out.verdict = "scheme-refuted";
    out.exit_code = kRefuted;
    return out;
  }
  const AssociationScheme& sch = *sv.scheme;
  out.scale = sch.n;
  out.stages["scheme"] = io::to_json(sch);
  const EigenStructure es = eigen_structure(sch, cfg);
  out.stages["eigenstructure"] = io::to_json(es, opt.dump_matrices);
  json orderings = json::array();
  for (int e1 = 1; e1 <= es.d(); ++e1) {
    if (auto ord = qpoly_ordering(es, sch, e1, cfg)) {
      json o = io::to_json(*ord);
      o["E1"] = e1;
      orderings.push_back(std::move(o));
    }
  }
  out.stages["q_polynomial"] = {{"cometric", !orderings.empty()}, {"orderings", std::move(orderings)}};
  out.verdict = "scheme-verified";
  out.exit_code = kSuccess;
  return out;
}

Outcome embed(const Options& opt, const io::Instance& inst) {
  const auto& in = expect<io::SchemeInput>(inst, "scheme");
  const ToleranceConfig cfg = opt.config();
  Outcome out;
  const SchemeVerdict sv = verify_scheme(in.classes);
  if (!sv.verified()) {
    out.stages["refutation"] = io::to_json(*sv.refutation);
    out.verdict = "scheme-refuted";
    out.exit_code = kRefuted;
    return out;
  }
  const EigenStructure es = eigen_structure(*sv.scheme, cfg);
  if (opt.idempotent < 1 || opt.idempotent > es.d())
    throw Error(ErrorKind::InvalidInput,
                "--idempotent must lie in 1.." + std::to_string(es.d()) + " for this scheme");
  const PointSet ps = spherical_embedding(*sv.scheme, es, opt.idempotent, cfg);
  out.payload = io::pointset_json(ps.coords, false);
  out.verdict = "scheme-verified";
  out.exit_code = kSuccess;
  return out;
}

Outcome graph_excess(const Options& opt, const io::Instance& inst) {
  const auto& in = expect<io::GraphInput>(inst, "graph");
  const ToleranceConfig cfg = opt.config();
  const Graph g = Graph::from_adjacency(in.adjacency);
  const SpectralExcessReport rep = spectral_excess_report(g, cfg);
  Outcome out;
  out.scale = rep.spectrum.regular_degree.value_or(1);
  out.stages["spectral_excess"] = io::to_json(rep);
  if (!rep.hypothesis_met) {
    out.verdict = "hypothesis-unmet";
    out.exit_code = kRefuted;
  } else if (rep.equality && rep.drg) {
    out.verdict = "equality-certified";
    out.exit_code = kSuccess;
  } else if (!rep.equality && !rep.drg) {
    out.verdict = "inequality-strict";
    out.exit_code = kRefuted;
  } else {
    out.stages["detectors_disagree"] = true;
    out.verdict = "error";
    out.exit_code = kInputError;
  }
  return out;
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write \"" + path.string() + "\"");
  f << doc.dump(2) << '\n';
}

std::vector<std::pair<std::string, json>> bundled_instances() {
  std::vector<std::pair<std::string, json>> all;
  for (const auto& f : fixtures::design_fixtures()) all.emplace_back(f.name, io::pointset_json(f.coords, false));
  all.emplace_back("octahedron", io::pointset_json(fixtures::octahedron(), false));
  all.emplace_back("cuboid", io::pointset_json(fixtures::cuboid(), false));
  all.emplace_back("d5_roots", io::pointset_json(fixtures::d_roots(5), false));
  all.emplace_back("petersen", io::graph_json(fixtures::petersen()));
  all.emplace_back("cycle6", io::graph_json(fixtures::cycle(6)));
  const ToleranceConfig cfg;
  for (const auto& [name, coords] : {std::pair<std::string, Matrix>{"octahedron_scheme", fixtures::octahedron()},
                                     {"cube_scheme", fixtures::cube()}}) {
    const PointSet ps = load_pointset(coords, cfg, false);
    all.emplace_back(name, io::scheme_json(inner_product_profile(ps, cfg).class_of));
  }
  return all;
}

int write_fixtures(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  json written = json::array();
  for (const auto& [name, doc] : bundled_instances()) {
    const auto path = std::filesystem::path(dir) / (name + ".json");
    write_json(path, doc);
    written.push_back(path.filename().string());
  }
  json report = {{"command", "fixtures"}, {"directory", dir}, {"written", std::move(written)}, {"exit_code", 0}};
  out << report.dump(2) << '\n';
  return kSuccess;
}

void add_tolerance_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--tol-cluster", opt.tol_cluster, "absolute clustering gap (default 1e-8*scale)");
  sub->add_option("--tol-rank", opt.tol_rank, "relative singular-value cutoff");
  sub->add_option("--tol-cert", opt.tol_cert, "certification tolerance");
  sub->add_option("--json", opt.json_out, "also write the report to this file");
  sub->add_flag("--dump-matrices", opt.dump_matrices, "include full projector matrices");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical 2-design excess and association scheme toolkit", "qexcess"};
  app.require_subcommand(1);
  Options opt;
  std::string fixture_dir;

  using Stage = std::function<Outcome(const Options&, const io::Instance&)>;
  std::vector<std::pair<CLI::App*, Stage>> commands;
  auto add = [&](const char* name, const char* help, Stage stage) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.input, "instance JSON")->required();
    add_tolerance_flags(sub, opt);
    commands.emplace_back(sub, std::move(stage));
    return sub;
  };
  add("check-design", "verify the 2-design conditions", check_design);
  add("excess", "excess inequality pipeline with equality certification", excess);
  add("scheme", "association scheme axioms, eigenstructure and Q-polynomial orderings", scheme);
  add("embed", "spherical embedding of a scheme through one idempotent", embed)
      ->add_option("--idempotent", opt.idempotent, "index of the primitive idempotent")
      ->required();
  add("graph-excess", "spectral excess theorem check for a regular graph", graph_excess);
  CLI::App* fx = app.add_subcommand("fixtures", "write the bundled instances to a directory");
  fx->add_option("dir", fixture_dir, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "qexcess: " << e.what() << '\n';
    return kInputError;
  }

  if (fx->parsed()) {
    try {
      return write_fixtures(fixture_dir, out);
    } catch (const std::exception& e) {
      err << "qexcess: " << e.what() << '\n';
      return kInputError;
    }
  }

  for (auto& [sub, stage] : commands) {
    if (!sub->parsed()) continue;
    json report = {{"command", sub->get_name()}};
    Outcome result;
    try {
      const std::string bytes = read_file(opt.input);
      report["input_digest"] = io::digest(bytes);
      result = stage(opt, io::parse_instance_text(bytes));
    } catch (const Error& e) {
      result = Outcome{};
      result.verdict = "error";
      result.exit_code = kInputError;
      result.stages["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    } catch (const std::exception& e) {
      result = Outcome{};
      result.verdict = "error";
      result.exit_code = kInputError;
      result.stages["error"] = {{"kind", "InvalidInput"}, {"message", e.what()}};
    }
    ToleranceConfig echo;
    echo.cluster_tol = opt.tol_cluster;
    echo.rank_tol = opt.tol_rank;
    echo.cert_tol = opt.tol_cert;
    report["tolerances"] = io::tolerance_json(echo, result.scale);
    report["stages"] = std::move(result.stages);
    report["verdict"] = result.verdict;
    report["exit_code"] = result.exit_code;
    if (result.exit_code == kInputError && report["stages"].contains("error"))
      err << "qexcess: " << report["stages"]["error"]["message"].get<std::string>() << '\n';

    const json& emitted = result.payload ? *result.payload : report;
    out << emitted.dump(2) << '\n';
    if (!opt.json_out.empty()) {
      try {
        write_json(opt.json_out, emitted);
      } catch (const Error& e) {
        err << "qexcess: " << e.what() << '\n';
        return kInputError;
      }
    }
    return result.exit_code;
  }
  return kInputError;
}

}  // namespace qexcess::cli
