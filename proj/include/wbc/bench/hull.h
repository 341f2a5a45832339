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

#ifndef WBC_BENCH_HULL_H_
#define WBC_BENCH_HULL_H_

#include <array>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace wbc::bench {

struct Hull {
  std::vector<std::array<int, 3>> faces;  // outward-oriented triangles (point indices)
  double volume = 0.0;
  bool degenerate = false;  // fewer than 4 points or all (nearly) coplanar
};

// Incremental 3-D convex hull.
Hull ConvexHull(std::span<const Eigen::Vector3d> points);

inline double ConvexHullVolume(std::span<const Eigen::Vector3d> points) {
  return ConvexHull(points).volume;
}

}  // namespace wbc::bench

#endif  // WBC_BENCH_HULL_H_
