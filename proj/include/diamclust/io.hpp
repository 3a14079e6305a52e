#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "diamclust/geometry.hpp"

namespace diamclust {

/// {"dim": d, "points": [[c1, ..., cd], ...]}. Rejects ragged rows and non-finite values.
PointSet point_set_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PointSet& points);

PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);
void write_point_set_file(const std::string& path, const PointSet& points);

nlohmann::json to_json(const Point& p);

}  // namespace diamclust
