#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "pvar/grid_function.hpp"
#include "pvar/report.hpp"
#include "pvar/variation.hpp"

namespace pvar {

// Grid input, format by extension:
//   .csv  — first row: <corner>, s-axis points; each further row:
//           t-axis point, values (row j holds f(xs[i], ys[j])).
//   .json — {"xs":[...], "ys":[...], "values":[[...]]} with
//           values[j][i] = f(xs[i], ys[j]).
// Throws ParseError with line/column where applicable.
GridFunction load_grid_function(const std::string& path);
void save_grid_function(const std::string& path, const GridFunction& f);

// JSON partition file: {"target":[a,b,c,d], "rects":[[a,b,c,d], ...]}.
RectPartition load_partition(const std::string& path);

nlohmann::json to_json(const Rect& r);
nlohmann::json to_json(const Dissection& d);
nlohmann::json to_json(const RectPartition& p);
nlohmann::json to_json(const CheckWitness& w);
nlohmann::json to_json(const CheckRecord& c);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const VariationResult& r);

}  // namespace pvar
