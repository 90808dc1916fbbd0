#pragma once

#include "clusterlab/exchange_graph.hpp"
#include "clusterlab/folding.hpp"
#include "clusterlab/int_matrix.hpp"
#include "clusterlab/laurent.hpp"
#include "clusterlab/report.hpp"

#include <json.hpp>

#include <string>

namespace clusterlab {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become ParseError with line and column.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// {"n": n, "rows": [[...]]}; a bare array of rows is also accepted. Entries
/// are JSON integers or decimal strings.
IntMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const std::string& where);

/// 1-based array.
Json path_to_json(const Path& p);

/// {"vars": [...], "terms": [{"exp": [...], "coef": c}, ...]}
Json laurent_to_json(const LaurentPoly& p);

/// {"n", "matrix", "frozen": [1-based], "action_generators": [[1-based]]}
ActedQuiver quiver_from_json(const Json& j);
Json quiver_to_json(const ActedQuiver& q);

Json check_to_json(const CheckResult& r);

/// Input matrix, limits, nodes (path, cluster, B, C, G) and edges, 1-based.
Json graph_to_json(const ExchangeGraph& g);
/// DOT text from graph_to_json output.
std::string dot_from_graph_json(const Json& j);

}  // namespace clusterlab
