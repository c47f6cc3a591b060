#ifndef INDICATRIX_PLANE_INCIDENCE_HPP
#define INDICATRIX_PLANE_INCIDENCE_HPP

#include "indicatrix/scalar.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string_view>
#include <vector>

namespace indicatrix {

/**
 * Open subset of the unit torus [0,1)^2 as a union of open grid cells.
 *
 * cells(j, i) is the cell with lower-left corner (i/R, j/R): rows follow y,
 * columns follow x. Shifts wrap around, mirroring the circle convention.
 */
class RasterSet {
 public:
  using Grid = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  /// Throws InvalidInput unless the grid is square with side a power of two >= 16.
  explicit RasterSet(Grid cells);

  std::size_t resolution() const noexcept { return static_cast<std::size_t>(cells_.rows()); }
  double cell_area() const noexcept { return 1.0 / static_cast<double>(cells_.size()); }
  const Grid& cells() const noexcept { return cells_; }
  double area() const;

 private:
  Grid cells_;
};

/// Marks every cell whose center satisfies the predicate.
RasterSet rasterize(const std::function<bool(double, double)>& indicator, std::size_t resolution);

/// Nearest whole-cell shift for the displacement h*v.
Eigen::Vector2i cell_shift(std::size_t resolution, double h, const Eigen::Vector2d& v);

/// Cell measure of {x : chi_E(x + h v) != chi_E(x)}; v is normalized first.
double tau_directional(const RasterSet& set, double h, const Eigen::Vector2d& v);

/// Cells where chi_E(x + hv) != chi_E(x); tau_directional is its measure.
RasterSet::Grid disagreement_cells(const RasterSet& set, double h, const Eigen::Vector2d& v);

/// {x in E : x + hv in K} cup {x in E : x - hv in K}, the E-side of the
/// disagreement set; tau_directional counts each half once.
RasterSet::Grid escape_cells(const RasterSet& set, double h, const Eigen::Vector2d& v);

/// Squared Euclidean distance (in cell units, center to center, on the
/// torus) from every cell to the nearest marked cell of `mask`.
Eigen::ArrayXXd squared_distance_to(const RasterSet::Grid& mask);

/// Cells of E within distance h of the complement: K(h) \ K.
RasterSet::Grid kh_cells(const RasterSet& set, double h);

/// Cells within distance h of the boundary: E-cells within h of K plus
/// K-cells within h of E. Empty at h = 0.
RasterSet::Grid gamma_cells(const RasterSet& set, double h);

struct NeighborhoodMeasures {
  double kh_deficit = 0;  // |K(h) \ K|
  double gamma_h = 0;     // |Gamma(h)|
};

NeighborhoodMeasures neighborhood_measures(const RasterSet& set, double h);

bool is_subset(const RasterSet::Grid& inner, const RasterSet::Grid& outer);

struct DimensionEstimates {
  double d_X = 0;
  double d_B = 0;
  double r2_X = 0;
  double r2_B = 0;
};

/// d - slope of log|K(h)\K| and of log|Gamma(h)| against log h (d = 2).
DimensionEstimates dimension_estimates(const RasterSet& set, const std::vector<double>& h_list);

/// `disk:r`, `square:s` (centered), `cantor:lambda[,stage]` (fat Cantor
/// complement times the full circle), or `pgm:path`.
RasterSet raster_shape(std::string_view literal, std::size_t resolution);

/// P5 with maxval 1, first row is y index 0; writes `<path>.json` holding {"resolution": R}.
void write_pgm(const RasterSet& set, const std::filesystem::path& path);
RasterSet read_pgm(const std::filesystem::path& path);

}  // namespace indicatrix

#endif  // INDICATRIX_PLANE_INCIDENCE_HPP
