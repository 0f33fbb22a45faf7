#include "hcdirac/field_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcdirac {

static_assert(std::endian::native == std::endian::little, "binary field format assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'H', 'C', 'D', 'S', 'P', 'F', '0', '1'};

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("field csv: bad number '" + s + "'");
  return v;
}

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!is) throw std::runtime_error("field binary: truncated input");
  return v;
}

SpinorField allocate(const GridSpec& spec, int m, std::optional<Annulus> support) {
  auto grid = SpectralGrid::make(spec);
  if (m < 1) throw std::runtime_error("field: spinor dimension must be >= 1");
  return {grid, m, Eigen::MatrixXcd::Zero(grid->size(), m), support};
}

}  // namespace

void write_field_csv(std::ostream& os, const SpinorField& u) {
  const auto& g = *u.grid;
  const auto& spec = g.spec();
  os << "# hcdirac spinor field\n";
  os << "# n=" << spec.n << " points_per_axis=" << spec.points_per_axis << " box_halfwidth=" << fmt(spec.box_halfwidth)
     << " m=" << u.m << " r_min=" << (u.support ? fmt(u.support->r_min) : "none")
     << " r_max=" << (u.support ? fmt(u.support->r_max) : "none") << "\n";
  os << "index";
  for (int j = 0; j < spec.n; ++j) os << ",x" << (j + 1);
  for (int c = 0; c < u.m; ++c) os << ",re" << c << ",im" << c;
  os << "\n";
  for (Eigen::Index p = 0; p < g.size(); ++p) {
    os << p;
    for (int j = 0; j < spec.n; ++j) os << ',' << fmt(g.coordinate(j)[p]);
    for (int c = 0; c < u.m; ++c) os << ',' << fmt(u.values(p, c).real()) << ',' << fmt(u.values(p, c).imag());
    os << '\n';
  }
}

SpinorField read_field_csv(std::istream& is) {
  std::string line;
  std::getline(is, line);
  if (line != "# hcdirac spinor field") throw std::runtime_error("field csv: missing signature line");
  std::getline(is, line);
  if (line.rfind("# ", 0) != 0) throw std::runtime_error("field csv: missing metadata line");
  std::map<std::string, std::string> meta;
  std::istringstream ms(line.substr(2));
  for (std::string tok; ms >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::runtime_error("field csv: bad metadata token '" + tok + "'");
    meta[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"n", "points_per_axis", "box_halfwidth", "m", "r_min", "r_max"})
    if (!meta.count(key)) throw std::runtime_error(std::string("field csv: metadata lacks ") + key);
  GridSpec spec{std::stoi(meta["n"]), std::stoi(meta["points_per_axis"]), parse_double(meta["box_halfwidth"])};
  std::optional<Annulus> support;
  if (meta["r_min"] != "none") support = Annulus{parse_double(meta["r_min"]), parse_double(meta["r_max"])};
  SpinorField u = allocate(spec, std::stoi(meta["m"]), support);

  std::getline(is, line);  // column header
  const std::size_t expected = 1 + static_cast<std::size_t>(spec.n) + 2 * static_cast<std::size_t>(u.m);
  std::vector<std::string> cells;
  for (Eigen::Index p = 0; p < u.grid->size(); ++p) {
    if (!std::getline(is, line)) throw std::runtime_error("field csv: truncated input");
    cells.clear();
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    if (cells.size() != expected) throw std::runtime_error("field csv: wrong column count");
    const std::size_t base = 1 + static_cast<std::size_t>(spec.n);
    for (int c = 0; c < u.m; ++c)
      u.values(p, c) = Complex(parse_double(cells[base + 2 * c]), parse_double(cells[base + 2 * c + 1]));
  }
  return u;
}

void write_field_binary(std::ostream& os, const SpinorField& u) {
  const auto& spec = u.grid->spec();
  os.write(kMagic, sizeof kMagic);
  put<std::int32_t>(os, spec.n);
  put<std::int32_t>(os, spec.points_per_axis);
  put<std::int32_t>(os, u.m);
  put<std::int32_t>(os, u.support ? 1 : 0);
  put<double>(os, spec.box_halfwidth);
  put<double>(os, u.support ? u.support->r_min : 0.0);
  put<double>(os, u.support ? u.support->r_max : 0.0);
  for (Eigen::Index p = 0; p < u.values.rows(); ++p)
    for (int c = 0; c < u.m; ++c) {
      put<double>(os, u.values(p, c).real());
      put<double>(os, u.values(p, c).imag());
    }
}

SpinorField read_field_binary(std::istream& is) {
  char magic[8];
  is.read(magic, sizeof magic);
  if (!is || std::memcmp(magic, kMagic, sizeof kMagic) != 0) throw std::runtime_error("field binary: bad magic");
  GridSpec spec;
  spec.n = get<std::int32_t>(is);
  spec.points_per_axis = get<std::int32_t>(is);
  const int m = get<std::int32_t>(is);
  const bool has_support = get<std::int32_t>(is) != 0;
  spec.box_halfwidth = get<double>(is);
  const double r_min = get<double>(is);
  const double r_max = get<double>(is);
  std::optional<Annulus> support;
  if (has_support) support = Annulus{r_min, r_max};
  SpinorField u = allocate(spec, m, support);
  for (Eigen::Index p = 0; p < u.values.rows(); ++p)
    for (int c = 0; c < m; ++c) {
      const double re = get<double>(is);
      const double im = get<double>(is);
      u.values(p, c) = Complex(re, im);
    }
  return u;
}

void save_field(const std::string& path, const SpinorField& u) {
  const bool binary = path.size() >= 4 && path.compare(path.size() - 4, 4, ".bin") == 0;
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (binary)
    write_field_binary(os, u);
  else
    write_field_csv(os, u);
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

SpinorField load_field(const std::string& path) {
  const bool binary = path.size() >= 4 && path.compare(path.size() - 4, 4, ".bin") == 0;
  std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return binary ? read_field_binary(is) : read_field_csv(is);
}

}  // namespace hcdirac
