#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "qexcess/excess.hpp"
#include "qexcess/graphdual.hpp"
#include "qexcess/harmonic.hpp"
#include "qexcess/orthopoly.hpp"
#include "qexcess/pointset.hpp"
#include "qexcess/scheme.hpp"

namespace qexcess::io {

using nlohmann::json;

struct PointSetInput {
  int dimension = 0;
  CoordinateTable points;
  bool normalize = false;
};

struct SchemeInput {
  IndexMatrix classes;
};

struct GraphInput {
  IndexMatrix adjacency;
};

using Instance = std::variant<PointSetInput, SchemeInput, GraphInput>;

/// Throws Error(InvalidInput) on any schema violation.
Instance parse_instance(const json& doc);
Instance parse_instance_text(std::string_view text);

json pointset_json(const Matrix& coords, bool normalize);
json scheme_json(const IndexMatrix& classes);
json graph_json(const Graph& g);

json matrix_json(const Matrix& m);
json index_matrix_json(const IndexMatrix& m);
json polynomial_json(const Polynomial& p);

json tolerance_json(const ToleranceConfig& cfg, double scale);
json to_json(const TwoDesignCertificate& c);
json to_json(const InnerProductProfile& p);
json to_json(const PredegreeSequence& seq, const DiscreteMeasure& measure);
json to_json(const SumIdentityReport& r);
json to_json(const HarmonicDecomposition& hd, bool dump_matrices);
json to_json(const ProjectionIdentityReport& r);
json to_json(const ExcessReport& r);
json to_json(const QPolyCertificate& c);
json to_json(const SchemeRefutation& r);
json to_json(const AssociationScheme& s);
json to_json(const EigenStructure& es, bool dump_matrices);
json to_json(const QPolyOrdering& o);
json to_json(const Spectrum& s);
json to_json(const SpectralExcessReport& r);

/// "fnv1a64:" followed by 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace qexcess::io
