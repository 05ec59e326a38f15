#pragma once

#include <string>
#include <vector>

#include "rsphoton/dynamics.hpp"
#include "rsphoton/modes.hpp"

#include "json.hpp"

namespace rsph {

// Binary field snapshot. Layout (little-endian):
//   char[4]  magic "RSPH"
//   u32      version (1)
//   u32      field kind (1 = scalar, 3 = vec3)
//   u32      n (points per axis)
//   f64      L (box edge)
//   f64      t (time stamp)
//   payload  row-major complex doubles (re, im); vec3 fields store the three
//            components as consecutive full blocks.
void writeField(const std::string& path, const ScalarField& f);
void writeField(const std::string& path, const Vec3Field& f);
ScalarField readScalarField(const std::string& path);
Vec3Field readVec3Field(const std::string& path);

// CSV with a header row; each row joined with commas.
void writeCsv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows);

// ModeExpansion <-> JSON: {"L": ..., "modes": [{"k":[i,j,l],"eps":±1,
// "lam":±1,"re":...,"im":...}]}.
nlohmann::ordered_json modeExpansionToJson(const ModeExpansion& exp);
ModeExpansion modeExpansionFromJson(const nlohmann::ordered_json& j);

nlohmann::ordered_json causalityReportToJson(const CausalityReport& r);

}  // namespace rsph
