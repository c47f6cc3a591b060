#include "indicatrix/plane_incidence.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>

using namespace indicatrix;

TEST_CASE("rasterize") {
  const auto disk = raster_shape("disk:0.25", 512);
  CHECK(disk.area() == doctest::Approx(M_PI / 16).epsilon(0.01));
  CHECK(rasterize([](double, double) { return false; }, 16).area() == 0);
  CHECK(rasterize([](double, double) { return true; }, 16).area() == 1);
  CHECK_THROWS_AS(rasterize([](double, double) { return true; }, 24), InvalidInput);
  CHECK_THROWS_AS(rasterize([](double, double) { return true; }, 8), InvalidInput);
}

TEST_CASE("directional tau on a disk and a square") {
  const auto disk = raster_shape("disk:0.25", 1024);
  const double expected = oracle::disk_shift_area(0.25, 0.125);
  CHECK(expected == doctest::Approx(0.1237).epsilon(1e-3));
  CHECK(tau_directional(disk, 0.125, {1, 0}) == doctest::Approx(expected).epsilon(0.02));
  CHECK(tau_directional(disk, 0.125, {1, 1}) == doctest::Approx(expected).epsilon(0.02));
  CHECK(tau_directional(disk, 0, {0, 1}) == 0);

  const auto square = raster_shape("square:0.5", 512);
  const double cell_row = 0.5 / 512;
  CHECK(std::abs(tau_directional(square, 1.0 / 16, {1, 0}) - 1.0 / 16) <= 2 * cell_row);
  CHECK_THROWS_AS(tau_directional(square, 0.1, {0, 0}), InvalidInput);
}

TEST_CASE("directional tau is invariant under grid translations") {
  const auto disk = raster_shape("disk:0.2", 128);
  RasterSet::Grid moved(128, 128);
  for (Eigen::Index j = 0; j < 128; ++j)
    for (Eigen::Index i = 0; i < 128; ++i) moved((j + 37) % 128, (i + 90) % 128) = disk.cells()(j, i);
  const RasterSet shifted(moved);
  for (double h : {0.05, 0.1, 0.3})
    CHECK(tau_directional(shifted, h, {3, 4}) == tau_directional(disk, h, {3, 4}));
}

TEST_CASE("distance transform matches brute force on the torus") {
  std::uint64_t state = 12345;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int trial = 0; trial < 5; ++trial) {
    RasterSet::Grid mask = RasterSet::Grid::Zero(16, 16);
    for (int k = 0; k < 6; ++k) mask(next() % 16, next() % 16) = 1;
    const auto fast = squared_distance_to(mask);
    const auto slow = oracle::distance_bruteforce(mask);
    for (Eigen::Index j = 0; j < 16; ++j)
      for (Eigen::Index i = 0; i < 16; ++i) CHECK(fast(j, i) == slow(j, i));
  }
}

TEST_CASE("neighborhood measures") {
  const auto square = raster_shape("square:0.5", 512);
  const auto m0 = neighborhood_measures(square, 0);
  CHECK(m0.kh_deficit == 0);
  CHECK(m0.gamma_h == 0);
  const double h = 1.0 / 16;
  const auto m = neighborhood_measures(square, h);
  // inner band 4sh - 4h^2 and outer sausage 4sh + pi h^2
  CHECK(m.kh_deficit == doctest::Approx(4 * 0.5 * h - 4 * h * h).epsilon(0.01));
  CHECK(m.gamma_h == doctest::Approx(8 * 0.5 * h - 4 * h * h + M_PI * h * h).epsilon(0.01));

  const auto disk = raster_shape("disk:0.25", 1024);
  const auto d = neighborhood_measures(disk, h);
  CHECK(d.kh_deficit == doctest::Approx(2 * M_PI * 0.25 * h - M_PI * h * h).epsilon(0.02));
}

TEST_CASE("inclusion chain on rasters") {
  for (const char* shape : {"disk:0.25", "square:0.5", "cantor:1/4"}) {
    const auto set = raster_shape(shape, 256);
    const double slack = 1.0 / 256;
    for (double h : {1.0 / 32, 1.0 / 8}) {
      const auto kh = kh_cells(set, h + slack);
      const auto gamma = gamma_cells(set, h + slack);
      CHECK(is_subset(kh, gamma));
      for (const Eigen::Vector2d v : {Eigen::Vector2d(1, 0), Eigen::Vector2d(2, 1)}) {
        CHECK(is_subset(escape_cells(set, h, v), kh));
        CHECK(is_subset(disagreement_cells(set, h, v), gamma));
        const double escape_area = static_cast<double>((escape_cells(set, h, v) != 0).count()) * set.cell_area();
        CHECK(tau_directional(set, h, v) <= 2 * escape_area + 1e-12);
      }
    }
  }
}

TEST_CASE("disagreement cells need not lie in K(h) \\ K") {
  // A thin strip moved by more than its width: the K-side of the disagreement is far from E's interior.
  const auto strip = rasterize([](double x, double) { return x > 0.5 && x < 0.52; }, 64);
  const double h = 0.1;
  const auto dis = disagreement_cells(strip, h, {1, 0});
  const auto kh = kh_cells(strip, h + 1.0 / 64);
  CHECK_FALSE(is_subset(dis, kh));
  CHECK(is_subset(escape_cells(strip, h, {1, 0}), kh));
}

TEST_CASE("dimension estimates") {
  const std::vector<double> hs{1.0 / 32, 1.0 / 64, 1.0 / 128, 1.0 / 256};
  const auto square = dimension_estimates(raster_shape("square:0.5", 512), hs);
  CHECK(square.d_X == doctest::Approx(1.0).epsilon(0.05));
  CHECK(square.d_B == doctest::Approx(1.0).epsilon(0.05));
  const auto disk = dimension_estimates(raster_shape("disk:0.25", 512), hs);
  CHECK(std::abs(disk.d_X - 1) < 0.1);
  CHECK(std::abs(disk.d_B - 1) < 0.1);
  CHECK_THROWS_AS(dimension_estimates(raster_shape("disk:0.25", 64), hs), InvalidInput);
  CHECK_THROWS_AS(dimension_estimates(raster_shape("disk:0.25", 512), {0.1, 0.05, 0.02}), InvalidInput);
}

TEST_CASE("shape literals") {
  CHECK_THROWS_AS(raster_shape("hexagon:1", 64), ParseError);
  CHECK_THROWS_AS(raster_shape("disk", 64), ParseError);
  CHECK_THROWS_AS(raster_shape("disk:abc", 64), ParseError);
  const auto c = raster_shape("cantor:1/4,3", 256);
  CHECK(c.area() == doctest::Approx(1.0 / 4 + 2.0 / 16 + 4.0 / 64).epsilon(0.03));
}

TEST_CASE("PGM round trip with sidecar") {
  const auto dir = std::filesystem::temp_directory_path() / "indicatrix_pgm_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "disk.pgm";
  const auto disk = raster_shape("disk:0.3", 64);
  write_pgm(disk, path);
  CHECK(std::filesystem::exists(path.string() + ".json"));
  const auto back = read_pgm(path);
  CHECK((back.cells() == disk.cells()).all());
  const auto again = raster_shape("pgm:" + path.string(), 64);
  CHECK((again.cells() == disk.cells()).all());
  CHECK_THROWS_AS(raster_shape("pgm:" + path.string(), 128), InvalidInput);
  std::filesystem::remove_all(dir);
}
