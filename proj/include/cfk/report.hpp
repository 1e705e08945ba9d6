#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cfk/homology.hpp"
#include "cfk/pretzel.hpp"

namespace cfk {

nlohmann::json to_json(const GradedModule& m);
nlohmann::json to_json(const HfkTable& t);
nlohmann::json to_json(const AlexanderPoly& p);
/// {generators: [{id, maslov, i, j}], arrows: [{source, target, upower}]}
nlohmann::json to_json(const FilteredComplex& c);
/// [{source, image: [{id, upower}]}] for a (target, source) map on c.
nlohmann::json map_json(const FilteredComplex& c, const LaurentMatrix& m);
/// {basis: [{label, grading}], differential: [{source, target, coefficient}]}
nlohmann::json complex_json(const std::vector<std::string>& labels, const std::vector<int>& gradings,
                            const PolyMatrix& diff);

namespace pretzel {

/// Flat summary of a Report, the unit of JSON output.
struct ReportRecord {
  int m = 0;
  int n = 0;
  bool mirrored = false;
  std::string family;
  int v = 0;
  int n_of_k = 0;
  std::vector<std::pair<int, int>> boxes;  // (diagonal, count), ascending diagonal
  Triple computed;
  Triple expected;
  std::vector<int> tower_gradings;
  std::vector<std::pair<int, int>> torsion_summands;  // (grading, order)
  Checks checks;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord make_record(const Report& r, const Checks& c);

nlohmann::json to_json(const ReportRecord& r);
/// Inverse of to_json; throws InvalidArgument on missing or mistyped keys.
ReportRecord record_from_json(const nlohmann::json& j);

}  // namespace pretzel
}  // namespace cfk
