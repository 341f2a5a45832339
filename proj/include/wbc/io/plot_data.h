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

#ifndef WBC_IO_PLOT_DATA_H_
#define WBC_IO_PLOT_DATA_H_

#include <string>
#include <vector>

namespace wbc::io {

// One labeled x/y series. File form: the label on the first line, then an
// `x,y` header and one `x,y` row per point.
struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

std::string FormatSeries(const Series& s);
Series ParseSeries(const std::string& text);
// Writes `<dir>/<stem>.txt` per series and returns the paths.
std::vector<std::string> WriteSeriesFiles(const std::string& dir,
                                          const std::vector<std::pair<std::string, Series>>& series);

}  // namespace wbc::io

#endif  // WBC_IO_PLOT_DATA_H_
