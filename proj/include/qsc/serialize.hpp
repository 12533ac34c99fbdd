#pragma once

#include <json.hpp>
#include <string>

#include "qsc/centrality.hpp"
#include "qsc/coloring.hpp"
#include "qsc/lp.hpp"
#include "qsc/reduce.hpp"

namespace qsc {

using json = nlohmann::json;

/// {"k", "color_of", "max_q", "mean_q"}
json coloring_to_json(const Coloring& coloring, const ErrorReport& report);
/// Reads "color_of"; "k" is checked when present.
Coloring coloring_from_json(const json& j);

/// {"row_color_of", "col_color_of"}, border entries included.
json bipartite_to_json(const BipartiteColoring& bc);
BipartiteColoring bipartite_from_json(const json& j);

/// {"m", "n", "A": [[i, j, value]], "b", "c"}
json lp_to_json(const LinearProgram& lp);
LinearProgram lp_from_json(const json& j);

/// {"status", "objective", "x"}; the objective is null unless optimal.
json solution_to_json(const LPSolution& solution);

/// {"scores", "convention": "ordered-pairs"}
json scores_to_json(const CentralityVector& scores);

json read_json_file(const std::string& path);

struct LoadedLP {
  LinearProgram lp;
  bool objective_negated = false;
};

/// `.mps` files go through the MPS reader, everything else is LP JSON.
LoadedLP load_lp_file(const std::string& path);

}  // namespace qsc
