#include "locsyn/ratfun/serialize.hpp"

#include "locsyn/error.hpp"

namespace locsyn::ratfun {

void to_json(nlohmann::json& j, const RationalFn& g) {
  j = nlohmann::json{{"num", g.is_zero() ? std::vector<double>{0.0} : g.num().coeffs()}, {"den", g.den().coeffs()}};
}

void from_json(const nlohmann::json& j, RationalFn& g) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(ErrorCode::ConfigError, "rational function needs num and den");
  Poly num(j.at("num").get<std::vector<double>>());
  Poly den(j.at("den").get<std::vector<double>>());
  g = RationalFn::unreduced(num, den);
}

void to_json(nlohmann::json& j, const RatMatrix& m) {
  j = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(row);
  }
}

void from_json(const nlohmann::json& j, RatMatrix& m) {
  if (!j.is_array()) fail(ErrorCode::ConfigError, "matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  m = RatMatrix(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j.at(r).size()) != cols) fail(ErrorCode::ShapeError, "ragged matrix");
    for (int c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<RationalFn>();
  }
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<double> row(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index c = 0; c < m.cols(); ++c) row[static_cast<std::size_t>(c)] = m(r, c);
    j.push_back(row);
  }
  return j;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::ConfigError, "matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j.at(r).size()) != cols) fail(ErrorCode::ShapeError, "ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  }
  return m;
}

void to_json(nlohmann::json& j, const StateSpace& sys) {
  j = nlohmann::json{{"A", matrix_to_json(sys.A)},
                     {"B", matrix_to_json(sys.B)},
                     {"C", matrix_to_json(sys.C)},
                     {"D", matrix_to_json(sys.D)}};
}

}  // namespace locsyn::ratfun
