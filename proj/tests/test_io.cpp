#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rsphoton/io.hpp"

using namespace rsph;

namespace {

const GridSpec g(8, 2.0 * 3.14159265358979323846);

std::string tmpPath(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("scalar field snapshots round-trip") {
  ScalarField f(g, 1.25);
  for (std::size_t i = 0; i < f.v.size(); ++i)
    f.v[i] = {0.5 * double(i), -1.0 / (1.0 + double(i))};
  const std::string path = tmpPath("rsph_scalar.bin");
  writeField(path, f);
  const ScalarField back = readScalarField(path);
  CHECK(back.grid == g);
  CHECK(back.t == f.t);
  CHECK((back - f).maxAbs() == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("vector field snapshots round-trip") {
  Vec3Field f(g, -0.5);
  for (std::size_t i = 0; i < f.comp[0].size(); ++i)
    f.set(i, {Complex{double(i), 1.0}, Complex{-2.0, double(i)}, Complex{0.25}});
  const std::string path = tmpPath("rsph_vec3.bin");
  writeField(path, f);
  const Vec3Field back = readVec3Field(path);
  CHECK(back.grid == g);
  CHECK((back - f).maxAbs() == 0.0);
  // Kind mismatch is an error.
  CHECK_THROWS_AS(readScalarField(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("malformed snapshots are rejected with diagnostics") {
  const std::string path = tmpPath("rsph_bad.bin");
  {
    std::ofstream out(path, std::ios::binary);
    out << "not a snapshot at all";
  }
  CHECK_THROWS_AS(readScalarField(path), std::runtime_error);
  CHECK_THROWS_AS(readVec3Field(tmpPath("rsph_nonexistent.bin")), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("mode expansions round-trip through json") {
  ModeExpansion exp(g.L);
  exp.add({{1, -2, 3}, +1, -1}, Complex{0.25, -0.75});
  exp.add({{0, 0, 1}, -1, +1}, Complex{1.5, 0.0});
  const nlohmann::ordered_json j = modeExpansionToJson(exp);
  const ModeExpansion back = modeExpansionFromJson(j);
  CHECK(back.L() == exp.L());
  REQUIRE(back.size() == exp.size());
  for (const auto& [key, a] : exp.amplitudes()) CHECK(back.amplitude(key) == a);
  // Serialization is stable: same expansion, same bytes.
  CHECK(modeExpansionToJson(back).dump() == j.dump());
}

TEST_CASE("csv export writes header and rows") {
  const std::string path = tmpPath("rsph_rows.csv");
  writeCsv(path, {"t", "value"}, {{0.0, 1.0}, {0.5, -2.25}});
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,value");
  std::getline(in, line);
  CHECK(line.substr(0, 2) == "0,");
  std::remove(path.c_str());
}
