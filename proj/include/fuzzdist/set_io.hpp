// Copyright 2026 The fuzzdist Authors
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

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzdist/errors.hpp"
#include "fuzzdist/fuzzy_set.hpp"

namespace fuzzdist {

// Plain-text set format: one "x<TAB>mu" pair per line, ascending x.
// '#' starts a comment; "# label: NAME" names the set.

inline FuzzySet parse_set_text(std::istream& in, std::string label = "") {
    std::vector<MembershipPoint> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            constexpr std::string_view key = "label:";
            auto pos = line.find(key, first);
            if (pos != std::string::npos) {
                auto value = line.substr(pos + key.size());
                const auto b = value.find_first_not_of(" \t");
                const auto e = value.find_last_not_of(" \t");
                if (b != std::string::npos) label = value.substr(b, e - b + 1);
            }
            continue;
        }
        std::istringstream fields(line);
        double x = 0.0, mu = 0.0;
        if (!(fields >> x >> mu))
            throw ParseError("expected \"x<TAB>mu\"", line_no);
        std::string extra;
        if (fields >> extra)
            throw ParseError("trailing content after \"x<TAB>mu\"", line_no);
        pts.push_back({x, mu});
    }
    return FuzzySet(std::move(pts), std::move(label));
}

inline FuzzySet read_set_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open set file " + path.string());
    return parse_set_text(in, path.stem().string());
}

inline void write_set_text(std::ostream& out, const FuzzySet& set) {
    if (!set.label().empty()) out << "# label: " << set.label() << "\n";
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (const auto& p : set.points()) out << p.x << "\t" << p.mu << "\n";
}

inline void write_set_file(const std::filesystem::path& path, const FuzzySet& set) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write set file " + path.string());
    write_set_text(out, set);
}

}  // namespace fuzzdist
