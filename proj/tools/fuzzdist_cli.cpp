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

// Command-line surface: distances and distance matrices between fuzzy sets
// loaded from plain-text files or built from the MovieLens 100k ratings,
// plus regeneration of the bundled film-comparison tables.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 measure
// precondition violation.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzdist/measures.hpp"
#include "fuzzdist/movielens.hpp"
#include "fuzzdist/set_io.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace fuzzdist;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string measure = "crf";
    bool unsigned_kernel = false;
    std::size_t alpha_cuts = 51;
    std::string levels;
    double epsilon = 1.0;
    std::size_t x_points = 51;
    std::size_t cut_samples = 101;
    std::string normalization = "none";
    std::string data_dir;
    std::string format = "csv";
    std::string x_range;
    std::string out_dir = "reproduction";
    std::vector<std::string> operands;
};

void add_measure_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--measure", opt.measure,
                    "vertical|alphacut|rr|cr|cr-nonnormal|crf (default crf)");
    cmd->add_flag("--unsigned,!--signed", opt.unsigned_kernel,
                  "use the unsigned kernel (default signed)");
    cmd->add_option("--alpha-cuts", opt.alpha_cuts, "number of alpha levels spanning [0,1]");
    cmd->add_option("--levels", opt.levels, "explicit alpha grid start:stop:step");
    cmd->add_option("--epsilon", opt.epsilon, "weight of the membership-mass term");
    cmd->add_option("--x-points", opt.x_points, "x-axis grid size for membership sums");
    cmd->add_option("--cut-samples", opt.cut_samples,
                    "x-scan points per set for cut endpoints (0 = exact crossings)");
    cmd->add_option("--normalization", opt.normalization, "peak|proportion|none");
    cmd->add_option("--data", opt.data_dir, "MovieLens 100k directory");
    cmd->add_option("--format", opt.format, "csv|json");
    cmd->add_option("--x-range", opt.x_range, "explicit a:b range for the vertical measure");
}

std::vector<double> parse_doubles(const std::string& text, char sep, std::size_t count,
                                  const std::string& what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(sep, pos);
        const std::string field =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            out.push_back(std::stod(field));
        } catch (const std::exception&) {
            throw UsageError("cannot parse " + what + " \"" + text + "\"");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.size() != count)
        throw UsageError(what + " \"" + text + "\" needs " + std::to_string(count) + " fields");
    return out;
}

MeasureParams build_params(const Options& opt) {
    MeasureParams params;
    if (!opt.levels.empty()) {
        const auto v = parse_doubles(opt.levels, ':', 3, "--levels");
        params.grid = AlphaGrid::range(v[0], v[1], v[2]);
    } else {
        if (opt.alpha_cuts < 2) throw UsageError("--alpha-cuts must be at least 2");
        params.grid = AlphaGrid::uniform(opt.alpha_cuts);
    }
    params.epsilon = opt.epsilon;
    params.x_grid_count = opt.x_points;
    params.signed_kernel = !opt.unsigned_kernel;
    params.cut_samples = opt.cut_samples;
    return params;
}

Measure parse_measure(const Options& opt) {
    const auto m = measure_from_name(opt.measure);
    if (!m) throw UsageError("unknown measure \"" + opt.measure + "\"");
    if (requires_normal_operands(*m) && opt.normalization == "proportion")
        throw UsageError("measure " + opt.measure +
                         " needs normal operands; use --normalization peak");
    return *m;
}

fs::path dataset_dir(const Options& opt) {
    if (!opt.data_dir.empty()) return opt.data_dir;
    if (const char* env = std::getenv("FUZZDIST_DATA")) return env;
    return "data/ml-100k";
}

// Loads the dataset at most once per invocation.
class OperandLoader {
public:
    explicit OperandLoader(const Options& opt) : opt_(opt) {}

    FuzzySet resolve(const std::string& name) {
        if (fs::exists(name)) {
            FuzzySet set = read_set_file(name);
            if (opt_.normalization == "peak") return peak_normalize(set);
            if (opt_.normalization == "proportion")
                throw UsageError("proportion scaling applies to dataset histograms; \"" +
                                 name + "\" is a set file");
            return set;
        }
        if (opt_.normalization != "peak" && opt_.normalization != "proportion")
            throw UsageError("dataset operand \"" + name +
                             "\" needs --normalization peak or proportion");
        if (!data_) data_ = load_movielens(dataset_dir(opt_));
        const RatingHistogram hist = histogram_for_title(*data_, name);
        return fuzzify(hist, opt_.normalization == "peak" ? FuzzifyMode::peak
                                                          : FuzzifyMode::proportion);
    }

private:
    const Options& opt_;
    std::optional<MovieLens> data_;
};

std::string fmt3(double v) {
    if (std::abs(v) < 5e-4) v = 0.0;  // avoid "-0.000"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

json params_json(const Options& opt, const MeasureParams& params) {
    return json{{"alpha_levels", params.grid.size()},
                {"levels", opt.levels.empty() ? json() : json(opt.levels)},
                {"epsilon", params.epsilon},
                {"x_points", params.x_grid_count},
                {"cut_samples", params.cut_samples},
                {"signed", params.signed_kernel},
                {"normalization", opt.normalization}};
}

double run_measure(Measure m, const FuzzySet& a, const FuzzySet& b, const Options& opt,
                   const MeasureParams& params) {
    if (m == Measure::vertical && !opt.x_range.empty()) {
        const auto v = parse_doubles(opt.x_range, ':', 2, "--x-range");
        return vertical_slice_distance(a, b, params, Interval(v[0], v[1]));
    }
    return evaluate(m, a, b, params);
}

int cmd_distance(const Options& opt) {
    if (opt.operands.size() != 2)
        throw UsageError("distance needs exactly two operands");
    const Measure m = parse_measure(opt);
    const MeasureParams params = build_params(opt);
    OperandLoader loader(opt);
    const FuzzySet a = loader.resolve(opt.operands[0]);
    const FuzzySet b = loader.resolve(opt.operands[1]);
    const DistanceReport report{m, run_measure(m, a, b, opt, params), params, a.label(),
                                b.label()};

    if (opt.format == "json") {
        json out{{"measure", measure_name(report.measure)},
                 {"from", report.from},
                 {"to", report.to},
                 {"value", report.value},
                 {"params", params_json(opt, report.params)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "measure,from,to,value\n"
                  << measure_name(report.measure) << "," << report.from << "," << report.to
                  << "," << fmt3(report.value) << "\n";
    }
    return 0;
}

int cmd_matrix(const Options& opt) {
    if (opt.operands.size() < 2)
        throw UsageError("matrix needs at least two operands");
    const Measure m = parse_measure(opt);
    const MeasureParams params = build_params(opt);
    OperandLoader loader(opt);
    std::vector<FuzzySet> sets;
    sets.reserve(opt.operands.size());
    for (const auto& name : opt.operands) sets.push_back(loader.resolve(name));

    const std::size_t n = sets.size();
    std::vector<std::vector<double>> values(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            values[i][j] = i == j ? 0.0 : run_measure(m, sets[i], sets[j], opt, params);

    if (opt.format == "json") {
        json labels = json::array();
        for (const auto& s : sets) labels.push_back(s.label());
        std::cout << json{{"measure", measure_name(m)},
                          {"labels", labels},
                          {"values", values},
                          {"params", params_json(opt, params)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "label";
        for (const auto& s : sets) std::cout << "," << s.label();
        std::cout << "\n";
        for (std::size_t i = 0; i < n; ++i) {
            std::cout << sets[i].label();
            for (std::size_t j = 0; j < n; ++j) std::cout << "," << fmt3(values[i][j]);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_rank(const Options& opt) {
    if (opt.operands.size() < 2)
        throw UsageError("rank needs a reference operand plus at least one comparison operand");
    const Measure m = parse_measure(opt);
    const MeasureParams params = build_params(opt);
    OperandLoader loader(opt);
    const FuzzySet ref = loader.resolve(opt.operands[0]);

    std::vector<std::pair<std::string, double>> rows;
    for (std::size_t i = 1; i < opt.operands.size(); ++i) {
        const FuzzySet s = loader.resolve(opt.operands[i]);
        rows.emplace_back(s.label(), run_measure(m, ref, s, opt, params));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });

    if (opt.format == "json") {
        json out = json::array();
        for (const auto& [label, value] : rows) out.push_back({{"label", label}, {"value", value}});
        std::cout << json{{"measure", measure_name(m)}, {"reference", ref.label()}, {"ranking", out}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "label,value\n";
        for (const auto& [label, value] : rows)
            std::cout << label << "," << fmt3(value) << "\n";
    }
    return 0;
}

int cmd_reproduce(const Options& opt) {
    const MovieLens data = load_movielens(dataset_dir(opt));
    const std::vector<std::pair<std::string, std::string>> films = {
        {"SMB", "Super Mario Bros."}, {"MA", "Mars Attacks!"}, {"SW", "Star Wars (1977)"}};

    std::vector<FuzzySet> peak, proportion;
    for (const auto& [label, query] : films) {
        const RatingHistogram hist = histogram_for_title(data, query);
        peak.push_back(fuzzify(hist, FuzzifyMode::peak).with_label(label));
        proportion.push_back(fuzzify(hist, FuzzifyMode::proportion).with_label(label));
    }
    const std::vector<std::pair<std::size_t, std::size_t>> pairs = {
        {0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}};
    auto pair_header = [&](std::ostream& os) {
        for (const auto& [i, j] : pairs) os << "," << peak[i].label() << "-" << peak[j].label();
        os << "\n";
    };

    fs::create_directories(opt.out_dir);
    MeasureParams params;
    params.epsilon = 1.0;

    // peak-normalized table: both kernel variants of the two level measures
    const fs::path film_path = fs::path(opt.out_dir) / "film_results.csv";
    {
        std::ofstream out(film_path);
        out << "measure,kernel";
        pair_header(out);
        for (const char* name : {"rr", "cr"}) {
            for (bool signed_kernel : {false, true}) {
                MeasureParams p = params;
                p.signed_kernel = signed_kernel;
                out << name << "," << (signed_kernel ? "signed" : "unsigned");
                for (const auto& [i, j] : pairs) {
                    const double v = std::string(name) == "rr" ? d_rr(peak[i], peak[j], p)
                                                               : d_cr(peak[i], peak[j], p);
                    out << "," << fmt3(v);
                }
                out << "\n";
            }
        }
    }

    // proportion-scaled table: the two non-normal measures, signed kernel
    const fs::path nonnormal_path = fs::path(opt.out_dir) / "nonnormal_results.csv";
    {
        std::ofstream out(nonnormal_path);
        out << "measure,kernel";
        pair_header(out);
        out << "cr-nonnormal,signed";
        for (const auto& [i, j] : pairs)
            out << "," << fmt3(d_cr_nonnormal(proportion[i], proportion[j], params));
        out << "\ncrf,signed";
        for (const auto& [i, j] : pairs)
            out << "," << fmt3(d_crf(proportion[i], proportion[j], params));
        out << "\n";
    }

    // five-level kernel trace of the flattest-vs-tallest film pair
    const fs::path trace_path = fs::path(opt.out_dir) / "trace_smb_sw.csv";
    MeasureParams coarse = params;
    coarse.grid = AlphaGrid::range(0.1, 0.5, 0.1);
    const CrfTrace trace = d_crf_trace(proportion[0], proportion[2], coarse);
    {
        std::ofstream out(trace_path);
        out << "level,kernel,substituted\n";
        for (const auto& lk : trace.kernels)
            out << fmt3(lk.level) << "," << fmt3(lk.value) << ","
                << (lk.substituted ? "yes" : "no") << "\n";
        out << "total," << fmt3(trace.value) << ",\n";
    }

    std::cout << "wrote " << film_path.string() << "\n"
              << "wrote " << nonnormal_path.string() << "\n"
              << "wrote " << trace_path.string() << " (total " << fmt3(trace.value) << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directional distances between fuzzy sets"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* distance = app.add_subcommand("distance", "distance between two sets");
    distance->add_option("operands", opt.operands, "set files or film titles");
    add_measure_options(distance, opt);

    CLI::App* matrix = app.add_subcommand("matrix", "all ordered pairwise distances");
    matrix->add_option("operands", opt.operands, "set files or film titles");
    add_measure_options(matrix, opt);

    CLI::App* rank = app.add_subcommand("rank", "order operands by signed distance from the first");
    rank->add_option("operands", opt.operands, "reference, then comparison operands");
    add_measure_options(rank, opt);

    CLI::App* reproduce = app.add_subcommand("reproduce", "regenerate the film-comparison tables");
    reproduce->add_option("--data", opt.data_dir, "MovieLens 100k directory");
    reproduce->add_option("--out", opt.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (distance->parsed()) return cmd_distance(opt);
        if (matrix->parsed()) return cmd_matrix(opt);
        if (rank->parsed()) return cmd_rank(opt);
        if (reproduce->parsed()) return cmd_reproduce(opt);
        throw UsageError("no command given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const MeasureError& e) {
        std::cerr << "measure error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
