#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "qsc/lp.hpp"
#include "text_util.hpp"

namespace qsc {

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

std::string row_name(Eigen::Index i) { return "R" + std::to_string(i + 1); }
std::string col_name(Eigen::Index j) { return "X" + std::to_string(j + 1); }

// Fixed fields: 2-3, 5-12, 15-22, 25-36. Longer values spill past column 36.
void entry(std::ostream& out, const std::string& field2, const std::string& field3, double value) {
  out << "    " << std::left << std::setw(8) << field2 << "  " << std::setw(8) << field3 << "  "
      << detail::format_double(value) << '\n';
}

}  // namespace

void write_mps(std::ostream& out, const LinearProgram& lp, const std::string& name) {
  lp.check();
  const Eigen::SparseMatrix<double> a = lp.matrix();
  out << "NAME          " << name << '\n';
  out << "OBJSENSE\n    MAX\n";
  out << "ROWS\n N  COST\n";
  for (Eigen::Index i = 0; i < lp.rows; ++i) out << " L  " << row_name(i) << '\n';
  out << "COLUMNS\n";
  for (Eigen::Index j = 0; j < lp.cols; ++j) {
    const std::string col = col_name(j);
    bool any = false;
    if (lp.c(j) != 0.0) {
      entry(out, col, "COST", lp.c(j));
      any = true;
    }
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, j); it; ++it) {
      if (it.value() == 0.0) continue;
      entry(out, col, row_name(it.row()), it.value());
      any = true;
    }
    // Keeps empty columns visible to the reader.
    if (!any) entry(out, col, "COST", 0.0);
  }
  out << "RHS\n";
  for (Eigen::Index i = 0; i < lp.rows; ++i)
    if (lp.b(i) != 0.0) entry(out, "RHS", row_name(i), lp.b(i));
  out << "ENDATA\n";
}

void export_mps(const LinearProgram& lp, const std::string& path, const std::string& name) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  write_mps(out, lp, name);
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

MpsModel read_mps(std::istream& in) {
  enum class Section { none, name, objsense, rows, columns, rhs, bounds, done };
  enum class RowKind { objective, free_row, le, ge, eq };

  struct RowInfo {
    RowKind kind;
    Eigen::Index index;  // constraint index for L/G/E rows
  };

  MpsModel model;
  Section section = Section::none;
  std::map<std::string, RowInfo> rows;
  std::vector<RowKind> kinds;
  std::map<std::string, Eigen::Index> cols;
  std::vector<std::string> col_order;
  std::vector<Eigen::Triplet<double>> entries;
  std::vector<double> rhs;
  std::map<Eigen::Index, double> objective;
  std::map<Eigen::Index, double> upper;
  bool have_objective = false;
  bool minimize = true;

  auto number = [](const std::string& token, std::size_t line) {
    auto v = detail::parse_double(token);
    if (!v || !std::isfinite(*v)) throw ParseError("invalid number '" + token + "'", line);
    return *v;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.empty() || raw[0] == '*') continue;
    const auto tok = detail::split_ws(raw);
    if (tok.empty()) continue;
    const bool header = raw[0] != ' ' && raw[0] != '\t';

    if (header) {
      const std::string& key = tok[0];
      if (key == "NAME") {
        section = Section::name;
        if (tok.size() > 1) model.name = tok[1];
      } else if (key == "OBJSENSE") {
        section = Section::objsense;
        if (tok.size() > 1) {
          if (tok[1] == "MAX" || tok[1] == "MAXIMIZE") minimize = false;
          else if (tok[1] == "MIN" || tok[1] == "MINIMIZE") minimize = true;
          else throw ParseError("unknown objective sense '" + tok[1] + "'", line_no);
        }
      } else if (key == "ROWS") {
        section = Section::rows;
      } else if (key == "COLUMNS") {
        section = Section::columns;
      } else if (key == "RHS") {
        section = Section::rhs;
      } else if (key == "BOUNDS") {
        section = Section::bounds;
      } else if (key == "RANGES") {
        throw ParseError("RANGES section is not supported", line_no);
      } else if (key == "ENDATA") {
        section = Section::done;
        break;
      } else {
        throw ParseError("unknown section '" + key + "'", line_no);
      }
      continue;
    }

    switch (section) {
      case Section::objsense:
        if (tok[0] == "MAX" || tok[0] == "MAXIMIZE") minimize = false;
        else if (tok[0] == "MIN" || tok[0] == "MINIMIZE") minimize = true;
        else throw ParseError("unknown objective sense '" + tok[0] + "'", line_no);
        break;
      case Section::rows: {
        if (tok.size() != 2) throw ParseError("ROWS entry needs a type and a name", line_no);
        RowKind kind;
        if (tok[0] == "N") kind = have_objective ? RowKind::free_row : RowKind::objective;
        else if (tok[0] == "L") kind = RowKind::le;
        else if (tok[0] == "G") kind = RowKind::ge;
        else if (tok[0] == "E") kind = RowKind::eq;
        else throw ParseError("unknown row type '" + tok[0] + "'", line_no);
        if (kind == RowKind::objective) have_objective = true;
        Eigen::Index index = -1;
        if (kind == RowKind::le || kind == RowKind::ge || kind == RowKind::eq) {
          index = static_cast<Eigen::Index>(kinds.size());
          kinds.push_back(kind);
          rhs.push_back(0.0);
        }
        if (!rows.emplace(tok[1], RowInfo{kind, index}).second)
          throw ParseError("duplicate row '" + tok[1] + "'", line_no);
        break;
      }
      case Section::columns: {
        if (tok.size() >= 2 && tok[1] == "'MARKER'") throw ParseError("integer markers are not supported", line_no);
        if (tok.size() != 3 && tok.size() != 5) throw ParseError("COLUMNS entry has a wrong field count", line_no);
        auto [it, inserted] = cols.emplace(tok[0], static_cast<Eigen::Index>(col_order.size()));
        if (inserted) col_order.push_back(tok[0]);
        const Eigen::Index j = it->second;
        for (std::size_t f = 1; f + 1 < tok.size(); f += 2) {
          auto row = rows.find(tok[f]);
          if (row == rows.end()) throw ParseError("unknown row '" + tok[f] + "'", line_no);
          const double v = number(tok[f + 1], line_no);
          if (row->second.kind == RowKind::objective) objective[j] += v;
          else if (row->second.kind != RowKind::free_row) entries.emplace_back(row->second.index, j, v);
        }
        break;
      }
      case Section::rhs: {
        if (tok.size() != 3 && tok.size() != 5 && tok.size() != 2 && tok.size() != 4)
          throw ParseError("RHS entry has a wrong field count", line_no);
        // The set name is optional.
        const std::size_t first = tok.size() % 2 == 1 ? 1 : 0;
        for (std::size_t f = first; f + 1 < tok.size(); f += 2) {
          auto row = rows.find(tok[f]);
          if (row == rows.end()) throw ParseError("unknown row '" + tok[f] + "'", line_no);
          const double v = number(tok[f + 1], line_no);
          if (row->second.kind == RowKind::objective) {
            if (v != 0.0) throw ParseError("objective constants are not supported", line_no);
          } else if (row->second.kind != RowKind::free_row) {
            rhs[row->second.index] = v;
          }
        }
        break;
      }
      case Section::bounds: {
        const std::string& type = tok[0];
        // PL carries no value; the bound set name is optional either way.
        const std::size_t fields = type == "PL" ? 2 : 3;
        if (tok.size() != fields && tok.size() != fields + 1)
          throw ParseError("BOUNDS entry has a wrong field count", line_no);
        const std::string& col = tok.size() == fields + 1 ? tok[2] : tok[1];
        auto it = cols.find(col);
        if (it == cols.end()) throw ParseError("unknown column '" + col + "'", line_no);
        if (type == "PL") break;
        const double v = number(tok.back(), line_no);
        if (type == "UP") {
          if (v < 0.0) throw ParseError("negative upper bounds are not supported", line_no);
          upper[it->second] = v;
        } else if (type == "LO") {
          if (v != 0.0) throw ParseError("nonzero lower bounds are not supported", line_no);
        } else {
          throw ParseError("bound type '" + type + "' is not supported", line_no);
        }
        break;
      }
      case Section::name:
      case Section::none:
      case Section::done:
        throw ParseError("data line outside a section", line_no);
    }
  }
  if (section != Section::done) throw ParseError("missing ENDATA", line_no);
  if (!have_objective) throw ParseError("missing objective row", line_no);

  // Assemble A x <= b.
  const auto n = static_cast<Eigen::Index>(col_order.size());
  std::vector<Eigen::Index> first_row(kinds.size());
  std::vector<double> sign(kinds.size(), 1.0);
  Eigen::Index m = 0;
  for (std::size_t r = 0; r < kinds.size(); ++r) {
    first_row[r] = m;
    if (kinds[r] == RowKind::ge) sign[r] = -1.0;
    m += kinds[r] == RowKind::eq ? 2 : 1;
  }
  LinearProgram& lp = model.lp;
  lp.cols = n;
  lp.c = Eigen::VectorXd::Zero(n);
  for (auto [j, v] : objective) lp.c(j) = minimize ? -v : v;
  model.objective_negated = minimize;

  std::vector<double> b;
  b.reserve(static_cast<std::size_t>(m) + upper.size());
  for (std::size_t r = 0; r < kinds.size(); ++r) {
    b.push_back(sign[r] * rhs[r]);
    if (kinds[r] == RowKind::eq) b.push_back(-rhs[r]);
  }
  for (const auto& t : entries) {
    const auto r = static_cast<std::size_t>(t.row());
    lp.entries.emplace_back(first_row[r], t.col(), sign[r] * t.value());
    if (kinds[r] == RowKind::eq) lp.entries.emplace_back(first_row[r] + 1, t.col(), -t.value());
  }
  for (auto [j, v] : upper) {
    lp.entries.emplace_back(m, j, 1.0);
    b.push_back(v);
    ++m;
  }
  lp.rows = m;
  lp.b = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
  lp.check();
  return model;
}

MpsModel read_mps_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  try {
    return read_mps(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace qsc
