// Copyright 2026 The WBC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WBC_SIM_TERRAIN_H_
#define WBC_SIM_TERRAIN_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wbc/sim/config.h"

namespace wbc::sim {

// Periodic heightfield tile. Queries outside the tile wrap around.
struct Terrain {
  int cells_x = 0;
  int cells_y = 0;
  double cell_size = 0.0;
  uint64_t seed = 0;
  std::vector<float> heights;  // row-major: index = iy * cells_x + ix

  double extent_x() const { return cells_x * cell_size; }
  double extent_y() const { return cells_y * cell_size; }
  float at(int ix, int iy) const;
  // Bilinear interpolation between grid samples.
  double HeightAt(double x, double y) const;
  double MaxAbsHeight() const;
};

// Multi-octave value noise, rescaled so max |height| equals the amplitude.
Terrain GenerateTerrain(uint64_t seed, const TerrainConfig& config);

inline constexpr char kTerrainMagic[8] = {'W', 'B', 'C', 'T', 'E', 'R', 'R', '\0'};
inline constexpr uint32_t kTerrainVersion = 1;

// Binary grid: magic, version, cells_x, cells_y, cell size, seed, then
// row-major float32 heights.
void WriteTerrain(const Terrain& terrain, std::ostream& out);
Terrain ReadTerrain(std::istream& in);
void SaveTerrain(const Terrain& terrain, const std::string& path);
Terrain LoadTerrain(const std::string& path);

}  // namespace wbc::sim

#endif  // WBC_SIM_TERRAIN_H_
