#include "rsphoton/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace rsph {

namespace {

constexpr char kMagic[4] = {'R', 'S', 'P', 'H'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kKindScalar = 1;
constexpr std::uint32_t kKindVec3 = 3;

void writeHeader(std::ofstream& out, std::uint32_t kind, const GridSpec& g, double t) {
  out.write(kMagic, 4);
  auto put32 = [&](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
  auto put64 = [&](double v) { out.write(reinterpret_cast<const char*>(&v), 8); };
  put32(kVersion);
  put32(kind);
  put32(static_cast<std::uint32_t>(g.n));
  put64(g.L);
  put64(t);
}

struct Header {
  std::uint32_t kind;
  GridSpec grid;
  double t;
};

Header readHeader(std::ifstream& in, const std::string& path) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("not a field snapshot: " + path);
  auto get32 = [&]() {
    std::uint32_t v;
    in.read(reinterpret_cast<char*>(&v), 4);
    return v;
  };
  auto get64 = [&]() {
    double v;
    in.read(reinterpret_cast<char*>(&v), 8);
    return v;
  };
  const std::uint32_t version = get32();
  if (version != kVersion) throw std::runtime_error("unsupported snapshot version");
  Header h{};
  h.kind = get32();
  const int n = static_cast<int>(get32());
  const double L = get64();
  h.t = get64();
  h.grid = GridSpec(n, L);
  if (!in) throw std::runtime_error("truncated snapshot header: " + path);
  return h;
}

void writeBlock(std::ofstream& out, const std::vector<Complex>& v) {
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(Complex)));
}

void readBlock(std::ifstream& in, std::vector<Complex>& v, const std::string& path) {
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(v.size() * sizeof(Complex)));
  if (!in) throw std::runtime_error("truncated snapshot payload: " + path);
}

std::ofstream openOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream openIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

}  // namespace

void writeField(const std::string& path, const ScalarField& f) {
  auto out = openOut(path);
  writeHeader(out, kKindScalar, f.grid, f.t);
  writeBlock(out, f.v);
}

void writeField(const std::string& path, const Vec3Field& f) {
  auto out = openOut(path);
  writeHeader(out, kKindVec3, f.grid, f.t);
  for (const auto& c : f.comp) writeBlock(out, c);
}

ScalarField readScalarField(const std::string& path) {
  auto in = openIn(path);
  const Header h = readHeader(in, path);
  if (h.kind != kKindScalar) throw std::runtime_error("snapshot is not a scalar field");
  ScalarField f(h.grid, h.t);
  readBlock(in, f.v, path);
  return f;
}

Vec3Field readVec3Field(const std::string& path) {
  auto in = openIn(path);
  const Header h = readHeader(in, path);
  if (h.kind != kKindVec3) throw std::runtime_error("snapshot is not a vec3 field");
  Vec3Field f(h.grid, h.t);
  for (auto& c : f.comp) readBlock(in, c, path);
  return f;
}

void writeCsv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  out.precision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

nlohmann::ordered_json modeExpansionToJson(const ModeExpansion& exp) {
  nlohmann::ordered_json j;
  j["L"] = exp.L();
  auto& modes = j["modes"] = nlohmann::ordered_json::array();
  for (const auto& [key, a] : exp.amplitudes()) {
    nlohmann::ordered_json m;
    m["k"] = {key.m[0], key.m[1], key.m[2]};
    m["eps"] = key.eps;
    m["lam"] = key.lam;
    m["re"] = a.real();
    m["im"] = a.imag();
    modes.push_back(std::move(m));
  }
  return j;
}

ModeExpansion modeExpansionFromJson(const nlohmann::ordered_json& j) {
  ModeExpansion exp(j.at("L").get<double>());
  for (const auto& m : j.at("modes")) {
    const auto& kk = m.at("k");
    ModeKey key{{kk.at(0).get<int>(), kk.at(1).get<int>(), kk.at(2).get<int>()},
                m.at("eps").get<int>(), m.at("lam").get<int>()};
    exp.add(key, {m.at("re").get<double>(), m.at("im").get<double>()});
  }
  return exp;
}

nlohmann::ordered_json causalityReportToJson(const CausalityReport& r) {
  nlohmann::ordered_json j;
  j["r0"] = r.r0;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  auto& rows = j["snapshots"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json rj;
    rj["t"] = row.t;
    rj["radius"] = row.radius;
    rj["interior_fraction"] = row.interiorFraction;
    rj["exterior_fraction"] = row.exteriorFraction;
    rj["cone_contact"] = row.coneContact;
    rows.push_back(std::move(rj));
  }
  return j;
}

}  // namespace rsph
