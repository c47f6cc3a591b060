#include "indicatrix/plane_incidence.hpp"

#include "indicatrix/bounds.hpp"
#include "indicatrix/constructions.hpp"
#include "indicatrix/parallel.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

namespace indicatrix {

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::ptrdiff_t wrap_index(std::ptrdiff_t i, std::ptrdiff_t n) {
  const std::ptrdiff_t r = i % n;
  return r < 0 ? r + n : r;
}

// Squared distance transform of a sampled function on a periodic 1-D
// domain (Felzenszwalb-Huttenlocher lower envelope over three periods).
void periodic_transform(const double* f, double* out, std::ptrdiff_t n, std::ptrdiff_t stride,
                        std::vector<double>& g, std::vector<std::ptrdiff_t>& v, std::vector<double>& z) {
  const std::ptrdiff_t m = 3 * n;
  g.resize(static_cast<std::size_t>(m));
  v.resize(static_cast<std::size_t>(m));
  z.resize(static_cast<std::size_t>(m + 1));
  for (std::ptrdiff_t q = 0; q < m; ++q) g[static_cast<std::size_t>(q)] = f[(q % n) * stride];
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::ptrdiff_t k = 0;
  v[0] = 0;
  z[0] = -inf;
  z[1] = inf;
  auto at = [&](std::ptrdiff_t q) { return g[static_cast<std::size_t>(q)] + static_cast<double>(q * q); };
  for (std::ptrdiff_t q = 1; q < m; ++q) {
    double s = 0;
    for (;;) {
      const std::ptrdiff_t p = v[static_cast<std::size_t>(k)];
      s = (at(q) - at(p)) / static_cast<double>(2 * (q - p));
      if (s <= z[static_cast<std::size_t>(k)] && k > 0) {
        --k;
        continue;
      }
      break;
    }
    if (s <= z[static_cast<std::size_t>(k)]) {
      v[static_cast<std::size_t>(k)] = q;  // k == 0 and q dominates
      continue;
    }
    ++k;
    v[static_cast<std::size_t>(k)] = q;
    z[static_cast<std::size_t>(k)] = s;
    z[static_cast<std::size_t>(k + 1)] = inf;
  }
  k = 0;
  for (std::ptrdiff_t q = n; q < 2 * n; ++q) {
    while (z[static_cast<std::size_t>(k + 1)] < static_cast<double>(q)) ++k;
    const std::ptrdiff_t p = v[static_cast<std::size_t>(k)];
    out[(q - n) * stride] = static_cast<double>((q - p) * (q - p)) + g[static_cast<std::size_t>(p)];
  }
}

double radius_cells(const RasterSet& set, double h) { return h * static_cast<double>(set.resolution()); }

}  // namespace

RasterSet::RasterSet(Grid cells) : cells_(std::move(cells)) {
  const auto n = static_cast<std::size_t>(cells_.rows());
  if (cells_.rows() != cells_.cols() || n < 16 || !power_of_two(n))
    throw InvalidInput("raster must be square with side a power of two >= 16");
}

double RasterSet::area() const { return static_cast<double>((cells_ != 0).count()) * cell_area(); }

RasterSet rasterize(const std::function<bool(double, double)>& indicator, std::size_t resolution) {
  if (resolution < 16 || !power_of_two(resolution))
    throw InvalidInput("rasterize: resolution must be a power of two >= 16");
  const auto n = static_cast<Eigen::Index>(resolution);
  RasterSet::Grid grid(n, n);
  const double step = 1.0 / static_cast<double>(resolution);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      grid(j, i) = indicator((static_cast<double>(i) + 0.5) * step, (static_cast<double>(j) + 0.5) * step) ? 1 : 0;
  return RasterSet(std::move(grid));
}

Eigen::Vector2i cell_shift(std::size_t resolution, double h, const Eigen::Vector2d& v) {
  const double norm = v.norm();
  if (!(norm > 0)) throw InvalidInput("direction must be non-zero");
  const Eigen::Vector2d d = v / norm * h * static_cast<double>(resolution);
  return {static_cast<int>(std::lround(d.x())), static_cast<int>(std::lround(d.y()))};
}

RasterSet::Grid disagreement_cells(const RasterSet& set, double h, const Eigen::Vector2d& v) {
  if (h < 0) throw InvalidInput("h must be >= 0");
  const Eigen::Vector2i s = cell_shift(set.resolution(), h, v);
  const auto n = static_cast<std::ptrdiff_t>(set.resolution());
  const auto& c = set.cells();
  RasterSet::Grid out(n, n);
  for (std::ptrdiff_t j = 0; j < n; ++j)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      out(j, i) = c(j, i) != c(wrap_index(j + s.y(), n), wrap_index(i + s.x(), n)) ? 1 : 0;
  return out;
}

double tau_directional(const RasterSet& set, double h, const Eigen::Vector2d& v) {
  return static_cast<double>((disagreement_cells(set, h, v) != 0).count()) * set.cell_area();
}

RasterSet::Grid escape_cells(const RasterSet& set, double h, const Eigen::Vector2d& v) {
  const Eigen::Vector2i s = cell_shift(set.resolution(), h, v);
  const auto n = static_cast<std::ptrdiff_t>(set.resolution());
  const auto& c = set.cells();
  RasterSet::Grid out = RasterSet::Grid::Zero(n, n);
  for (std::ptrdiff_t j = 0; j < n; ++j)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (!c(j, i)) continue;
      const bool fwd = !c(wrap_index(j + s.y(), n), wrap_index(i + s.x(), n));
      const bool back = !c(wrap_index(j - s.y(), n), wrap_index(i - s.x(), n));
      out(j, i) = (fwd || back) ? 1 : 0;
    }
  return out;
}

Eigen::ArrayXXd squared_distance_to(const RasterSet::Grid& mask) {
  const Eigen::Index n = mask.rows();
  constexpr double far = 1e20;
  Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> f(n, n), rows(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) f(j, i) = mask(j, i) ? 0.0 : far;

  parallel_for(static_cast<std::size_t>(n), [&](std::size_t j) {
    std::vector<double> g, z;
    std::vector<std::ptrdiff_t> v;
    const auto r = static_cast<Eigen::Index>(j);
    periodic_transform(&f(r, 0), &rows(r, 0), n, 1, g, v, z);
  });
  Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out(n, n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    std::vector<double> g, z;
    std::vector<std::ptrdiff_t> v;
    const auto col = static_cast<Eigen::Index>(i);
    periodic_transform(&rows(0, col), &out(0, col), n, n, g, v, z);
  });
  return out;
}

RasterSet::Grid kh_cells(const RasterSet& set, double h) {
  const auto& c = set.cells();
  const double r = radius_cells(set, h);
  const RasterSet::Grid complement = (c == 0).cast<std::uint8_t>();
  const auto d2 = squared_distance_to(complement);
  return ((c != 0) && (d2 <= r * r)).cast<std::uint8_t>();
}

RasterSet::Grid gamma_cells(const RasterSet& set, double h) {
  const auto& c = set.cells();
  const double r = radius_cells(set, h);
  const RasterSet::Grid complement = (c == 0).cast<std::uint8_t>();
  const auto to_k = squared_distance_to(complement);
  const auto to_e = squared_distance_to(c);
  return (((c != 0) && (to_k <= r * r)) || ((c == 0) && (to_e <= r * r))).cast<std::uint8_t>();
}

NeighborhoodMeasures neighborhood_measures(const RasterSet& set, double h) {
  if (h < 0) throw InvalidInput("neighborhood_measures: h must be >= 0");
  const double area = set.cell_area();
  return {static_cast<double>((kh_cells(set, h) != 0).count()) * area,
          static_cast<double>((gamma_cells(set, h) != 0).count()) * area};
}

bool is_subset(const RasterSet::Grid& inner, const RasterSet::Grid& outer) {
  return ((inner != 0) && (outer == 0)).count() == 0;
}

DimensionEstimates dimension_estimates(const RasterSet& set, const std::vector<double>& h_list) {
  if (h_list.size() < 4) throw InvalidInput("dimension_estimates: need at least 4 values of h");
  const double floor_h = 2.0 / static_cast<double>(set.resolution());
  std::vector<std::pair<double, double>> kh, gamma;
  for (double h : h_list) {
    if (h < floor_h * (1 - 1e-12)) throw InvalidInput("dimension_estimates: h below the grid scale 2/R");
    const auto m = neighborhood_measures(set, h);
    kh.emplace_back(h, m.kh_deficit);
    gamma.emplace_back(h, m.gamma_h);
  }
  const auto fx = scaling_exponent(kh);
  const auto fb = scaling_exponent(gamma);
  return {2.0 - fx.slope, 2.0 - fb.slope, fx.r2, fb.r2};
}

RasterSet raster_shape(std::string_view literal, std::size_t resolution) {
  const auto colon = literal.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'kind:parameters'", 0);
  const std::string kind(literal.substr(0, colon));
  const std::string args(literal.substr(colon + 1));
  auto real = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw ParseError("trailing characters", colon + 1 + used);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("expected a real number", colon + 1);
    }
  };
  if (kind == "disk") {
    const double r = real(args);
    return rasterize([r](double x, double y) { return std::hypot(x - 0.5, y - 0.5) < r; }, resolution);
  }
  if (kind == "square") {
    const double half = real(args) / 2;
    return rasterize(
        [half](double x, double y) { return std::abs(x - 0.5) < half && std::abs(y - 0.5) < half; }, resolution);
  }
  if (kind == "cantor") {
    const auto comma = args.find(',');
    const Rational lambda = parse_rational(args.substr(0, comma), colon + 1);
    const std::size_t stage = comma == std::string::npos ? 12 : static_cast<std::size_t>(real(args.substr(comma + 1)));
    const auto pieces = fat_cantor_complement({lambda, stage}).set.cast<double>().pieces();
    return rasterize(
        [&pieces](double x, double) {
          auto it = std::upper_bound(pieces.begin(), pieces.end(), x,
                                     [](double v, const Piece<double>& p) { return v < p.lo; });
          return it != pieces.begin() && x < std::prev(it)->hi;
        },
        resolution);
  }
  if (kind == "pgm") {
    RasterSet set = read_pgm(args);
    if (set.resolution() != resolution) throw InvalidInput("pgm resolution differs from the requested one");
    return set;
  }
  throw ParseError("unknown shape kind", 0);
}

void write_pgm(const RasterSet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  const auto n = set.resolution();
  out << "P5\n" << n << ' ' << n << "\n1\n";
  const auto& c = set.cells();
  for (Eigen::Index j = 0; j < c.rows(); ++j)
    for (Eigen::Index i = 0; i < c.cols(); ++i) out.put(static_cast<char>(c(j, i) ? 1 : 0));
  std::ofstream side(path.string() + ".json");
  side << nlohmann::json{{"resolution", n}}.dump() << "\n";
}

RasterSet read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::string magic;
  std::size_t width = 0, height = 0, maxval = 0;
  in >> magic >> width >> height >> maxval;
  if (magic != "P5" || maxval != 1 || width != height) throw ParseError("expected square P5 with maxval 1", 0);
  in.get();  // single whitespace after the header
  const auto n = static_cast<Eigen::Index>(width);
  RasterSet::Grid grid(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const int byte = in.get();
      if (byte == EOF) throw ParseError("truncated PGM data", static_cast<std::size_t>(j * n + i));
      grid(j, i) = byte ? 1 : 0;
    }
  std::ifstream side(path.string() + ".json");
  if (side) {
    const auto meta = nlohmann::json::parse(side);
    if (meta.at("resolution").get<std::size_t>() != width) throw ParseError("sidecar resolution mismatch", 0);
  }
  return RasterSet(std::move(grid));
}

}  // namespace indicatrix
