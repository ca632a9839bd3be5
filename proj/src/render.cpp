// Copyright 2026 The trimesh Authors
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

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "trimesh/errors.hpp"
#include "trimesh/mesh.hpp"

namespace trimesh {

namespace {

int arity_label(const Coupler &c) { return c.arity == Arity::full3 ? 3 : 2; }

std::string rtrim(std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
}

// Rails carry '-' with "+-+" where a box touches them; the gap row between
// modes m and m+1 carries "|k|" for a box on that pair.
std::string render_ascii(const MeshPlan &plan, const std::vector<int> &layers, int num_layers) {
    const int label_width = static_cast<int>(std::to_string(plan.n).size());
    constexpr int kCell = 4;
    const std::size_t width = static_cast<std::size_t>(num_layers * kCell + 1);

    std::vector<std::string> rails(static_cast<std::size_t>(plan.n), std::string(width, '-'));
    std::vector<std::string> gaps(static_cast<std::size_t>(std::max(plan.n - 1, 0)),
                                  std::string(width, ' '));
    for (std::size_t k = 0; k < plan.couplers.size(); ++k) {
        const Coupler &c = plan.couplers[k];
        const std::size_t col = static_cast<std::size_t>((layers[k] - 1) * kCell + 1);
        rails[static_cast<std::size_t>(c.i - 1)].replace(col, 3, "+-+");
        rails[static_cast<std::size_t>(c.j - 1)].replace(col, 3, "+-+");
        gaps[static_cast<std::size_t>(c.i - 1)].replace(col, 3,
                                                        "|" + std::to_string(arity_label(c)) + "|");
    }

    std::ostringstream out;
    for (int m = 1; m <= plan.n; ++m) {
        std::string label = std::to_string(m);
        label.insert(0, static_cast<std::size_t>(label_width) - label.size(), ' ');
        out << label << ' ' << rails[static_cast<std::size_t>(m - 1)] << '\n';
        if (m < plan.n) {
            std::string gap = rtrim(gaps[static_cast<std::size_t>(m - 1)]);
            if (!gap.empty()) {
                out << std::string(static_cast<std::size_t>(label_width) + 1, ' ') << gap << '\n';
            }
        }
    }
    return out.str();
}

std::string render_svg(const MeshPlan &plan, const std::vector<int> &layers, int num_layers) {
    constexpr int kMargin = 40;
    constexpr int kLayerWidth = 60;
    constexpr int kModeGap = 40;
    constexpr int kBoxWidth = 36;
    const int width = 2 * kMargin + std::max(num_layers, 1) * kLayerWidth;
    const int height = 2 * kMargin + (plan.n - 1) * kModeGap;
    auto mode_y = [&](int m) { return kMargin + (m - 1) * kModeGap; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<title>mesh: " << plan.n << " modes, " << plan.couplers.size() << " couplers, depth "
        << num_layers << "</title>\n"
        << "<style>line.mode{stroke:#222;stroke-width:2}"
        << "rect.coupler{stroke:#222;stroke-width:1.5}"
        << "rect.arity-3{fill:#f4a261}rect.arity-2{fill:#8ecae6}"
        << "text{font-family:sans-serif;font-size:14px;text-anchor:middle}</style>\n";
    for (int m = 1; m <= plan.n; ++m) {
        const int y = mode_y(m);
        out << "<text x=\"" << kMargin / 2 << "\" y=\"" << y + 5 << "\">" << m << "</text>\n"
            << "<line class=\"mode\" x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\""
            << width - kMargin / 2 << "\" y2=\"" << y << "\"/>\n";
    }
    for (std::size_t k = 0; k < plan.couplers.size(); ++k) {
        const Coupler &c = plan.couplers[k];
        const int label = arity_label(c);
        const int x = kMargin + (layers[k] - 1) * kLayerWidth + (kLayerWidth - kBoxWidth) / 2;
        const int top = mode_y(c.i) - 12;
        const int h = mode_y(c.j) - mode_y(c.i) + 24;
        out << "<rect class=\"coupler arity-" << label << "\" x=\"" << x << "\" y=\"" << top
            << "\" width=\"" << kBoxWidth << "\" height=\"" << h << "\" rx=\"4\"/>\n"
            << "<text x=\"" << x + kBoxWidth / 2 << "\" y=\"" << top + h / 2 + 5 << "\">" << label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render(const MeshPlan &plan, RenderFormat format) {
    validate_plan(plan);
    require_adjacent(plan, "render");
    const std::vector<int> layers = schedule_layers(plan);
    const int num_layers = layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
    return format == RenderFormat::ascii ? render_ascii(plan, layers, num_layers)
                                         : render_svg(plan, layers, num_layers);
}

}  // namespace trimesh
