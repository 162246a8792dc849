#include "qexcess/io.hpp"

#include <cstdint>
#include <cstdio>

#include "qexcess/error.hpp"

namespace qexcess::io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) invalid(std::string("missing field \"") + key + "\"");
  return *it;
}

int integer_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) invalid(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

IndexMatrix integer_matrix(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) invalid(std::string(what) + " must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto cols = rows.front().is_array() ? static_cast<Eigen::Index>(rows.front().size()) : 0;
  IndexMatrix out(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      invalid(std::string(what) + " rows must be arrays of equal length");
    for (Eigen::Index j = 0; j < cols; ++j) {
      const json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number_integer()) invalid(std::string(what) + " entries must be integers");
      out(i, j) = v.get<int>();
    }
  }
  return out;
}

}  // namespace

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) invalid("instance must be a JSON object");
  const json& type = field(doc, "type");
  if (!type.is_string()) invalid("field \"type\" must be a string");
  const std::string kind = type.get<std::string>();

  if (kind == "pointset") {
    PointSetInput in;
    in.dimension = integer_field(doc, "dimension");
    if (in.dimension < 1) invalid("dimension must be at least 1");
    const json& pts = field(doc, "points");
    if (!pts.is_array() || pts.empty()) invalid("\"points\" must be a nonempty array");
    for (const auto& row : pts) {
      if (!row.is_array()) invalid("each point must be an array of numbers");
      std::vector<double> coords;
      for (const auto& v : row) {
        if (!v.is_number()) invalid("coordinates must be numbers");
        coords.push_back(v.get<double>());
      }
      if (static_cast<int>(coords.size()) != in.dimension)
        throw Error(ErrorKind::NonRectangular, "point of length " + std::to_string(coords.size()) +
                                                   " in dimension " + std::to_string(in.dimension));
      in.points.push_back(std::move(coords));
    }
    if (auto it = doc.find("normalize"); it != doc.end()) {
      if (!it->is_boolean()) invalid("\"normalize\" must be a boolean");
      in.normalize = it->get<bool>();
    }
    return in;
  }
  if (kind == "scheme") {
    SchemeInput in;
    const int n = integer_field(doc, "n");
    in.classes = integer_matrix(field(doc, "relations"), "relations");
    if (in.classes.rows() != n || in.classes.cols() != n) invalid("relations must be an n x n matrix");
    return in;
  }
  if (kind == "graph") {
    GraphInput in;
    const int n = integer_field(doc, "n");
    if (n < 1) invalid("graph needs n >= 1");
    if (auto it = doc.find("adjacency"); it != doc.end()) {
      in.adjacency = integer_matrix(*it, "adjacency");
      if (in.adjacency.rows() != n || in.adjacency.cols() != n) invalid("adjacency must be n x n");
      return in;
    }
    const json& edges = field(doc, "edges");
    if (!edges.is_array()) invalid("\"edges\" must be an array");
    std::vector<std::pair<int, int>> list;
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        invalid("each edge must be a pair of integers");
      list.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    in.adjacency = Graph::from_edges(n, list).adjacency();
    return in;
  }
  invalid("unknown instance type \"" + kind + "\"");
}

Instance parse_instance_text(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) invalid("input is not valid JSON");
  return parse_instance(doc);
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json index_matrix_json(const IndexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json pointset_json(const Matrix& coords, bool normalize) {
  return {{"type", "pointset"},
          {"dimension", coords.cols()},
          {"points", matrix_json(coords)},
          {"normalize", normalize}};
}

json scheme_json(const IndexMatrix& classes) {
  return {{"type", "scheme"}, {"n", classes.rows()}, {"relations", index_matrix_json(classes)}};
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"type", "graph"}, {"n", g.n()}, {"edges", std::move(edges)}};
}

json polynomial_json(const Polynomial& p) {
  return {{"coefficients", p.coefficients()}, {"text", p.to_string(10)}};
}

json tolerance_json(const ToleranceConfig& cfg, double scale) {
  return {{"cluster_tol", cfg.cluster_tolerance(scale)},
          {"rank_tol", cfg.rank_tol},
          {"cert_tol", cfg.cert_tol},
          {"rank_ambiguity_factor", kRankAmbiguityFactor},
          {"note", "all thresholds are floating-point decisions; the identities they judge are exact"}};
}

json to_json(const TwoDesignCertificate& c) {
  return {{"passed", c.passed},
          {"row_sum_residual", c.row_sum_residual},
          {"idempotency_residual", c.idempotency_residual},
          {"rank_of_G", c.rank_of_G}};
}

json to_json(const InnerProductProfile& p) {
  return {{"values", p.values},
          {"counts", p.counts},
          {"s", p.s()},
          {"min_gap", p.min_gap},
          {"max_spread", p.max_spread},
          {"cluster_tol", p.cluster_tol}};
}

json to_json(const PredegreeSequence& seq, const DiscreteMeasure& measure) {
  json polys = json::array();
  for (const auto& q : seq.q) polys.push_back(polynomial_json(q));
  return {{"polynomials", std::move(polys)},
          {"values_at_anchor", seq.values_at_anchor},
          {"anchor", seq.anchor},
          {"recurrence", {{"b", seq.lower}, {"a", seq.diag}, {"c", seq.upper}}},
          {"orthogonality_residual", orthogonality_residual(seq, measure)},
          {"recurrence_residual", recurrence_residual(seq, measure)}};
}

json to_json(const SumIdentityReport& r) {
  json out = {{"H", polynomial_json(r.H)},
              {"sum_of_predegree", polynomial_json(r.sum_q)},
              {"coefficient_residual", r.coefficient_residual}};
  out["gram_residual"] = r.gram_residual ? json(*r.gram_residual) : json(nullptr);
  return out;
}

json to_json(const HarmonicDecomposition& hd, bool dump_matrices) {
  json out = {{"S", hd.S},
              {"dims", hd.dims},
              {"weakest_accepted_over_cutoff", hd.weakest_accepted},
              {"strongest_rejected_over_cutoff", hd.strongest_rejected}};
  if (dump_matrices) {
    json mats = json::array();
    for (const auto& f : hd.F) mats.push_back(matrix_json(f));
    out["F"] = std::move(mats);
  }
  return out;
}

json to_json(const ProjectionIdentityReport& r) {
  json vanishing = json::array();
  for (const auto& v : r.vanishing) vanishing.push_back({{"j", v.j}, {"i", v.i}, {"residual", v.residual}});
  return {{"F0_minus_J_over_n", r.f0_residual},
          {"F1_minus_G", r.f1_residual},
          {"Fj_hadamard_powers", std::move(vanishing)},
          {"sum_F_minus_I", r.completeness_residual},
          {"FiFj_minus_delta", r.orthogonality_residual},
          {"trace_F0", r.trace_f0},
          {"max_residual", r.max_residual()}};
}

json to_json(const ExcessReport& r) {
  return {{"s", r.s},
          {"S", r.S},
          {"hypothesis_met", r.hypothesis_met},
          {"comparison", r.hypothesis_met ? "theorem applies" : "outside theorem hypotheses"},
          {"per_point_excess", r.per_point_excess},
          {"mu", r.mu},
          {"bound", r.bound},
          {"gap", r.gap},
          {"equality", r.equality},
          {"projection_residual", r.projection_residual},
          {"pythagoras_residual", r.pythagoras_residual}};
}

json to_json(const QPolyCertificate& c) {
  return {{"per_index_residuals", c.per_index_residuals},
          {"certified", c.certified},
          {"lemma_consistent", c.lemma_consistent}};
}

json to_json(const SchemeRefutation& r) {
  const char* axiom = r.axiom == SchemeRefutation::Axiom::DiagonalRelation ? "diagonal-relation"
                      : r.axiom == SchemeRefutation::Axiom::Symmetry       ? "symmetry"
                                                                           : "intersection-numbers";
  return {{"axiom", axiom},
          {"i", r.i},
          {"j", r.j},
          {"k", r.k},
          {"first_pair", {r.first.x, r.first.y}},
          {"second_pair", {r.second.x, r.second.y}},
          {"first_count", r.first_count},
          {"second_count", r.second_count},
          {"description", r.description}};
}

json to_json(const AssociationScheme& s) {
  const int w = s.d + 1;
  json p = json::array();
  for (int k = 0; k < w; ++k) {
    json slab = json::array();
    for (int i = 0; i < w; ++i) {
      json row = json::array();
      for (int j = 0; j < w; ++j) row.push_back(s.p(k, i, j));
      slab.push_back(std::move(row));
    }
    p.push_back(std::move(slab));
  }
  return {{"n", s.n}, {"d", s.d}, {"valencies", s.valencies}, {"intersection_numbers", std::move(p)}};
}

json to_json(const EigenStructure& es, bool dump_matrices) {
  const int w = es.d() + 1;
  json krein = json::array();
  for (int k = 0; k < w; ++k) {
    json slab = json::array();
    for (int i = 0; i < w; ++i) {
      json row = json::array();
      for (int j = 0; j < w; ++j) row.push_back(es.krein_parameter(k, i, j));
      slab.push_back(std::move(row));
    }
    krein.push_back(std::move(slab));
  }
  json out = {{"ranks", es.ranks},
              {"P", matrix_json(es.P)},
              {"Q", matrix_json(es.Q)},
              {"krein", std::move(krein)},
              {"PQ_minus_nI", es.pq_residual},
              {"idempotent_residual", es.idempotent_residual},
              {"reconstruction_residual", es.reconstruction_residual},
              {"krein_residual", es.krein_residual}};
  if (dump_matrices) {
    json mats = json::array();
    for (const auto& e : es.idempotents) mats.push_back(matrix_json(e));
    out["E"] = std::move(mats);
  }
  return out;
}

json to_json(const QPolyOrdering& o) {
  json polys = json::array();
  for (const auto& v : o.v) polys.push_back(polynomial_json(v));
  return {{"order", o.order}, {"v", std::move(polys)}, {"reconstruction_residual", o.reconstruction_residual}};
}

json to_json(const Spectrum& s) {
  return {{"eigenvalues", s.eigenvalues}, {"multiplicities", s.multiplicities}, {"d", s.d()}};
}

json to_json(const SpectralExcessReport& r) {
  return {{"D", r.D},
          {"d", r.d},
          {"hypothesis_met", r.hypothesis_met},
          {"spectrum", to_json(r.spectrum)},
          {"predistance", to_json(r.predistance, spectral_measure(r.spectrum, static_cast<int>(r.excess.size())))},
          {"excess", r.excess},
          {"mean_excess", r.mean_excess},
          {"bound", r.bound},
          {"gap", r.gap},
          {"equality", r.equality},
          {"drg", r.drg},
          {"polynomial_residual", r.polynomial_residual},
          {"predistance_sum", r.predistance_sum}};
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace qexcess::io
