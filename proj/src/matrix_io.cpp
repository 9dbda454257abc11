#include "braidrep/matrix_io.hpp"

#include <algorithm>
#include <sstream>

namespace braidrep {

nlohmann::json matrix_to_json(const RepMatrix& m, int g, int n, int k) {
  nlohmann::json j;
  j["g"] = g;
  j["n"] = n;
  j["k"] = k;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& l : m.col_labels()) basis.push_back(l.name);
  j["basis"] = basis;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [h, coeff] : m.at(i, c).terms())
        terms.push_back({{"coeff", coeff.get_str()}, {"mono", h_format(h)}});
      row.push_back(terms);
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

std::string matrix_pretty(const RepMatrix& m) {
  std::vector<std::string> cells(static_cast<std::size_t>(m.rows() * m.cols()));
  std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::string s = m.at(i, j).format();
      width[static_cast<std::size_t>(j)] =
          std::max(width[static_cast<std::size_t>(j)], s.size());
      cells[static_cast<std::size_t>(i * m.cols() + j)] = std::move(s);
    }
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "[ ";
    for (int j = 0; j < m.cols(); ++j) {
      const std::string& s = cells[static_cast<std::size_t>(i * m.cols() + j)];
      os << s << std::string(width[static_cast<std::size_t>(j)] - s.size(), ' ');
      os << (j + 1 < m.cols() ? ", " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

std::string rational_matrix_pretty(const std::vector<std::vector<mpq_class>>& m) {
  std::vector<std::vector<std::string>> cells;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : m) {
    cells.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string s = row[j].get_str();
      width[j] = std::max(width[j], s.size());
      cells.back().push_back(std::move(s));
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    os << "[ ";
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << row[j] << std::string(width[j] - row[j].size(), ' ')
         << (j + 1 < row.size() ? ", " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

nlohmann::json rational_matrix_to_json(const std::vector<std::vector<mpq_class>>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace braidrep
