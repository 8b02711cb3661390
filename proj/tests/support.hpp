#pragma once

#include <random>
#include <string>
#include <vector>

#include "agrolattice/concepts.hpp"
#include "agrolattice/cube.hpp"
#include "agrolattice/io.hpp"

namespace agro::testing {

inline std::string data_path(const std::string& name) { return std::string(AGRO_DATA_DIR) + "/" + name; }

inline DataCube toy_cube(Orientation o = Orientation::by_time) {
  return reorient(ingest(data_path("toy.wide.csv"), InputFormat::wide_csv), o);
}

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline DataCube random_cube(std::mt19937_64& rng, std::size_t nl, std::size_t nd, std::size_t nt, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Cell> cells;
  for (std::size_t l = 0; l < nl; ++l)
    for (std::size_t d = 0; d < nd; ++d)
      for (std::size_t t = 0; t < nt; ++t)
        if (coin(rng)) cells.push_back({l, d, t});
  return DataCube(AxisLabels(numbered("L", nl), numbered("J", nd), numbered("T", nt)), cells);
}

/// Random axes in [1, max_axis] each and a random density in [0.2, 0.8].
inline DataCube random_cube(std::mt19937_64& rng, std::size_t max_axis) {
  std::uniform_int_distribution<std::size_t> axis(1, max_axis);
  std::uniform_real_distribution<double> dens(0.2, 0.8);
  const std::size_t nl = axis(rng);
  const std::size_t nd = axis(rng);
  const std::size_t nt = axis(rng);
  return random_cube(rng, nl, nd, nt, dens(rng));
}

inline IndexSet random_subset(std::mt19937_64& rng, std::size_t universe, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  IndexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

inline AgroTriple named_triple(const DataCube& cube, const std::vector<std::string>& locs,
                               const std::vector<std::string>& dims, const std::vector<std::string>& times) {
  const auto& lb = cube.labels();
  return {make_set(lb, Axis::location, locs), make_set(lb, Axis::dimension, dims), make_set(lb, Axis::timestamp, times)};
}

/// The two-location cube A:{x,y}, B:{y} at a single timestamp t1.
inline DataCube tiny_cube() {
  return build_cube(AxisLabels({"A", "B"}, {"x", "y"}, {"t1"}),
                    {{"A", "x", "t1"}, {"A", "y", "t1"}, {"B", "y", "t1"}});
}

}  // namespace agro::testing
