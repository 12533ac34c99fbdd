#include "qsc/serialize.hpp"

#include <cctype>
#include <cmath>
#include <fstream>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <typename T>
std::vector<T> read_array(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  try {
    return j.at(key).get<std::vector<T>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad \"") + key + "\": " + e.what());
  }
}

}  // namespace

json coloring_to_json(const Coloring& coloring, const ErrorReport& report) {
  return {{"k", coloring.num_colors()},
          {"color_of", coloring.color_of()},
          {"max_q", finite_or_null(report.max_q)},
          {"mean_q", finite_or_null(report.mean_q)}};
}

Coloring coloring_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("coloring must be a JSON object");
  auto colors = read_array<Color>(j, "color_of");
  Coloring c;
  try {
    c = Coloring(std::move(colors));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  if (j.contains("k") && j.at("k") != c.num_colors()) throw ParseError("\"k\" does not match \"color_of\"");
  return c;
}

json bipartite_to_json(const BipartiteColoring& bc) {
  return {{"row_color_of", bc.row_color}, {"col_color_of", bc.col_color}};
}

BipartiteColoring bipartite_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("bipartite coloring must be a JSON object");
  try {
    return BipartiteColoring::from_assignment(read_array<Color>(j, "row_color_of"),
                                              read_array<Color>(j, "col_color_of"));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

json lp_to_json(const LinearProgram& lp) {
  json a = json::array();
  const Eigen::SparseMatrix<double> m = lp.matrix();
  for (Eigen::Index col = 0; col < m.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, col); it; ++it)
      if (it.value() != 0.0) a.push_back({it.row(), it.col(), it.value()});
  std::vector<double> b(lp.b.data(), lp.b.data() + lp.b.size());
  std::vector<double> c(lp.c.data(), lp.c.data() + lp.c.size());
  return {{"m", lp.rows}, {"n", lp.cols}, {"A", std::move(a)}, {"b", b}, {"c", c}};
}

LinearProgram lp_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("LP must be a JSON object");
  LinearProgram lp;
  try {
    lp.rows = j.at("m").get<Eigen::Index>();
    lp.cols = j.at("n").get<Eigen::Index>();
    for (const auto& t : j.at("A")) {
      if (!t.is_array() || t.size() != 3) throw ParseError("\"A\" entries must be [i, j, value]");
      lp.entries.emplace_back(t[0].get<Eigen::Index>(), t[1].get<Eigen::Index>(), t[2].get<double>());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad LP JSON: ") + e.what());
  }
  const auto b = read_array<double>(j, "b");
  const auto c = read_array<double>(j, "c");
  lp.b = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
  lp.c = Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
  try {
    lp.check();
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  return lp;
}

json solution_to_json(const LPSolution& solution) {
  const bool optimal = solution.status == LPStatus::optimal;
  json x = json::array();
  if (optimal)
    for (Eigen::Index i = 0; i < solution.x.size(); ++i) x.push_back(solution.x(i));
  return {{"status", to_string(solution.status)},
          {"objective", optimal ? json(solution.objective) : json(nullptr)},
          {"x", std::move(x)}};
}

json scores_to_json(const CentralityVector& scores) {
  return {{"scores", scores}, {"convention", "ordered-pairs"}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

LoadedLP load_lp_file(const std::string& path) {
  const auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (ext == "mps") {
    MpsModel model = read_mps_file(path);
    return {std::move(model.lp), model.objective_negated};
  }
  try {
    return {lp_from_json(read_json_file(path)), false};
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + what);
  }
}

}  // namespace qsc
