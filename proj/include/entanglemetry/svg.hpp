// Copyright 2026 The Entanglemetry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "entanglemetry/geometry.hpp"

namespace entanglemetry {

// Self-contained SVG with the quadrilaterals side by side, sides labelled by
// their cut names and the diagonal drawn dashed.
std::string render_quadrilaterals_svg(std::span<const QuadrilateralGeometry> quads,
                                      std::string_view caption);

}  // namespace entanglemetry
