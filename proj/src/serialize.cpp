#include "bcwork/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bcwork {

using nlohmann::json;

json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(int_to_json(v(i)));
  return out;
}

json cyclo_to_json(const Cyclo& x) {
  json out = json::array();
  for (int i = 0; i < 4; ++i) out.push_back({int_to_json(numerator(x[i])), int_to_json(denominator(x[i]))});
  return out;
}

Cyclo cyclo_from_json(const json& j) {
  if (j.is_number_integer()) return Cyclo(Rational(j.get<long long>()));
  if (j.is_string()) return Cyclo(parse_rational(j.get<std::string>()));
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("cyclotomic value must be four [num, den] pairs");
  std::array<Rational, 4> c;
  for (int i = 0; i < 4; ++i) {
    const json& p = j.at(i);
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("cyclotomic coefficient must be [num, den]");
    const Int den = int_from_json(p[1]);
    if (den == 0) throw std::invalid_argument("zero denominator");
    c[i] = Rational(int_from_json(p[0]), den);
  }
  return Cyclo(c);
}

json matrix_to_json(const std::string& name, const IntMatrix& M, const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(int_to_json(M(i, j)));
    entries.push_back(std::move(row));
  }
  json out{{"name", name}, {"rows", M.rows()}, {"cols", M.cols()}, {"entries", std::move(entries)}};
  if (!row_labels.empty()) out["row_labels"] = row_labels;
  if (!col_labels.empty()) out["col_labels"] = col_labels;
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const json& e = j.at("entries");
  if (static_cast<Eigen::Index>(e.size()) != rows) throw std::invalid_argument("entries do not match rows");
  IntMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(e[i].size()) != cols) throw std::invalid_argument("entries do not match cols");
    for (Eigen::Index k = 0; k < cols; ++k) M(i, k) = int_from_json(e[i][k]);
  }
  return M;
}

std::string matrix_to_text(const std::string& name, const IntMatrix& M, const std::vector<std::string>& row_labels,
                           const std::vector<std::string>& col_labels) {
  std::vector<std::vector<std::string>> cells(M.rows(), std::vector<std::string>(M.cols()));
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      cells[i][j] = M(i, j).str();
      width = std::max(width, cells[i][j].size());
    }
  for (const auto& c : col_labels) width = std::max(width, c.size());
  std::size_t label_width = 0;
  for (const auto& r : row_labels) label_width = std::max(label_width, r.size());

  std::ostringstream os;
  os << name << " (" << M.rows() << "x" << M.cols() << ")\n";
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  if (!col_labels.empty()) {
    os << std::string(label_width + (label_width ? 2 : 0), ' ');
    for (const auto& c : col_labels) os << ' ' << pad(c, width);
    os << '\n';
  }
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    if (label_width) os << pad(i < static_cast<Eigen::Index>(row_labels.size()) ? row_labels[i] : "", label_width) << " |";
    for (Eigen::Index j = 0; j < M.cols(); ++j) os << ' ' << pad(cells[i][j], width);
    os << '\n';
  }
  return os.str();
}

json algebra_to_json(const GroupAlgElem& x) {
  json out = json::array();
  for (const auto& [g, c] : x.support())
    out.push_back({{"t", {g.t(0), g.t(1)}},
                   {"A", {{g.A(0, 0), g.A(0, 1)}, {g.A(1, 0), g.A(1, 1)}}},
                   {"coeff", cyclo_to_json(c)}});
  return out;
}

json sequence_to_json(const SequenceResult& r) {
  auto group = [](const KGroup& k) {
    const AbelianGroupShape s = k.shape();
    json torsion = json::array();
    for (const Int& t : s.torsion) torsion.push_back(int_to_json(t));
    return json{{"rank", s.free_rank}, {"torsion", torsion}, {"basis", k.basis}};
  };
  json kernel = json::array();
  for (const IntVector& v : r.kernel) kernel.push_back(vector_to_json(v));
  return json{{"k0", group(r.k0)}, {"k1", group(r.k1)}, {"kernel", kernel}, {"provenance", r.provenance}};
}

json character_table_to_json(const CharacterTable& table) {
  const FiniteMatrixGroup& G = table.group;
  json classes = json::array();
  for (const auto& cls : table.conjugacy_classes) {
    const Mat2& A = G.elements[cls.front()];
    classes.push_back({{"representative", {{A(0, 0), A(0, 1)}, {A(1, 0), A(1, 1)}}}, {"size", cls.size()}});
  }
  json irreps = json::array();
  for (const Irrep& rho : table.irreps) {
    const Character chi = rho.character();
    json values = json::array();
    for (const auto& cls : table.conjugacy_classes) values.push_back(cyclo_to_json(chi[cls.front()]));
    irreps.push_back({{"index", rho.index}, {"label", rho.label}, {"degree", rho.degree}, {"values", values}});
  }
  return json{{"group", G.name}, {"type", table.structure.label()}, {"order", G.order()},
              {"classes", classes}, {"irreps", irreps}};
}

std::string character_table_to_text(const CharacterTable& table) {
  std::ostringstream os;
  const FiniteMatrixGroup& G = table.group;
  os << G.name << " (" << table.structure.label() << ", order " << G.order() << ")\n";
  os << "classes:";
  for (const auto& cls : table.conjugacy_classes) {
    const Mat2& A = G.elements[cls.front()];
    os << " [" << A(0, 0) << "," << A(0, 1) << ";" << A(1, 0) << "," << A(1, 1) << "]x" << cls.size();
  }
  os << '\n';
  for (const Irrep& rho : table.irreps) {
    const Character chi = rho.character();
    os << rho.index << " " << rho.label << " (deg " << rho.degree << "):";
    for (const auto& cls : table.conjugacy_classes) os << "  " << to_string(chi[cls.front()]);
    os << '\n';
  }
  return os.str();
}

std::string shape_to_string(const AbelianGroupShape& s) {
  std::string out;
  if (s.free_rank == 1) out = "Z";
  else if (s.free_rank > 1) out = "Z^" + std::to_string(s.free_rank);
  for (const Int& t : s.torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.str();
  return out.empty() ? "0" : out;
}

std::string list_to_string(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

}  // namespace bcwork
