#include "diamclust/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>

namespace diamclust {

PointSet point_set_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("point set must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InvalidInput("point set needs an integer \"dim\"");
  if (!j.contains("points") || !j["points"].is_array())
    throw InvalidInput("point set needs a \"points\" array");
  const auto dim = j["dim"].get<long long>();
  if (dim < 1) throw InvalidInput("\"dim\" must be positive");

  const auto& rows = j["points"];
  Eigen::MatrixXd coords(dim, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t c = 0; c < rows.size(); ++c) {
    const auto& row = rows[c];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      throw InvalidInput("point " + std::to_string(c) + " does not have " + std::to_string(dim) +
                         " coordinates");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_number()) throw InvalidInput("point " + std::to_string(c) + " has a non-numeric coordinate");
      const double v = row[i].get<double>();
      if (!std::isfinite(v)) throw InvalidInput("point " + std::to_string(c) + " has a non-finite coordinate");
      coords(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return PointSet(std::move(coords));
}

nlohmann::json to_json(const Point& p) {
  nlohmann::json row = nlohmann::json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) row.push_back(p(i));
  return row;
}

nlohmann::json to_json(const PointSet& points) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t c = 0; c < points.size(); ++c) rows.push_back(to_json(Point(points[c])));
  return {{"dim", points.dim()}, {"points", rows}};
}

PointSet read_point_set(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed point set JSON: ") + e.what());
  }
  return point_set_from_json(j);
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open point set file: " + path);
  try {
    return read_point_set(in);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_point_set_file(const std::string& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write point set file: " + path);
  out << to_json(points).dump() << '\n';
}

}  // namespace diamclust
