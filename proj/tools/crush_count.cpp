// crush_count: estimates, exact counts, uniformity checks and tractability
// scans for stable (weak proper) colourings of candy-crush grid hypergraphs.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include "crush/estimator.hpp"
#include "crush/grid.hpp"
#include "crush/lll.hpp"
#include "crush/oracle.hpp"
#include "crush/sampler.hpp"
#include "crush/serialize.hpp"

namespace {

using crush::Json;

struct InstanceOpts {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    int k = 3;
    std::string input;
};

void add_instance_options(CLI::App* cmd, InstanceOpts& o) {
    auto* rows = cmd->add_option("--rows,-m", o.rows, "Grid rows");
    auto* cols = cmd->add_option("--cols,-n", o.cols, "Grid columns");
    cmd->add_option("--k", o.k, "Run length (uniform edge size)")->capture_default_str();
    auto* input = cmd->add_option("--input,-i", o.input, "Hypergraph file (V/E line format)")
                      ->check(CLI::ExistingFile);
    rows->needs(cols);
    cols->needs(rows);
    input->excludes(rows)->excludes(cols);
}

crush::Hypergraph load_instance(const InstanceOpts& o, Json& meta) {
    crush::Hypergraph h;
    if (!o.input.empty()) {
        std::ifstream f(o.input);
        if (!f) throw std::invalid_argument("cannot open input file: " + o.input);
        h = crush::parse_hypergraph(f);
        meta = Json{{"source", "file"}, {"path", o.input}};
    } else {
        if (o.rows == 0 || o.cols == 0)
            throw std::invalid_argument("provide --rows/--cols or --input");
        h = crush::build_candy_grid({o.rows, o.cols, o.k});
        meta = Json{{"source", "grid"}, {"rows", o.rows}, {"cols", o.cols}};
    }
    meta["k"] = h.k();
    meta["vertexCount"] = h.vertex_count();
    meta["edgeCount"] = h.edge_count();
    meta["digest"] = crush::hypergraph_digest(h);
    return h;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
    try {
        const auto pos = s.find(':');
        if (pos == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw std::invalid_argument(std::string(what) + ": expected A or A:B, got '" + s + "'");
}

struct EstimateOpts {
    InstanceOpts inst;
    std::int32_t c = 0;
    double epsilon = 0.5;
    double delta = 0.1;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> resampleBudget;
    std::uint64_t seed = 1;
    int workers = 1;
    bool strict = false;
    std::string format = "json";
    std::string output;
};

int run_estimate(const EstimateOpts& o) {
    Json meta;
    const crush::Hypergraph h = load_instance(o.inst, meta);
    Json feasibility = nullptr;
    if (h.edge_count() > 0 && o.c >= 2) {
        const auto verdict = crush::check_fpras_condition(o.c, h.k());
        feasibility = crush::to_json(verdict);
        if (!verdict.feasible) {
            if (o.strict) {
                std::fprintf(stderr,
                             "error: (c=%d, k=%d) is outside the certified tractability region "
                             "and --strict is set; refusing to run\n",
                             int(o.c), h.k());
                return 2;
            }
            std::fprintf(stderr,
                         "warning: (c=%d, k=%d) is outside the certified tractability region; "
                         "the estimate carries no accuracy guarantee and sampling may stall\n",
                         int(o.c), h.k());
        }
    }
    crush::EstimateParams params;
    params.c = o.c;
    params.epsilon = o.epsilon;
    params.delta = o.delta;
    params.masterSeed = o.seed;
    params.workerCount = o.workers;
    crush::SplitOverrides overrides;
    overrides.samplesPerLevel = o.samples;
    overrides.resampleBudget = o.resampleBudget;
    const crush::EstimateReport report = crush::splitting_estimate(h, params, overrides);
    if (o.format == "csv") {
        write_output(o.output, crush::csv_levels(report));
    } else {
        const Json out{{"command", "estimate"},
                       {"instance", meta},
                       {"feasibility", feasibility},
                       {"report", crush::to_json(report)}};
        write_output(o.output, out.dump(2) + "\n");
    }
    return 0;
}

struct McOpts {
    InstanceOpts inst;
    std::int32_t c = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string output;
};

int run_mc(const McOpts& o) {
    Json meta;
    const crush::Hypergraph h = load_instance(o.inst, meta);
    const auto start = std::chrono::steady_clock::now();
    const crush::McReport report = crush::monte_carlo_estimate(h, o.c, o.samples, o.seed, o.workers);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Json out{{"command", "mc"},
                   {"instance", meta},
                   {"report", crush::to_json(report)},
                   {"wallTime", wall}};
    write_output(o.output, out.dump(2) + "\n");
    return 0;
}

struct ExactOpts {
    InstanceOpts inst;
    std::vector<std::int32_t> colors;
    std::uint64_t budget = crush::oracle::kDefaultEnumerationBudget;
    bool levels = false;
    std::string output;
};

int run_exact(const ExactOpts& o) {
    Json meta;
    const crush::Hypergraph h = load_instance(o.inst, meta);
    Json points = Json::array();
    for (std::int32_t c : o.colors) {
        const auto pt = crush::oracle::exact_count(h, c, o.budget);
        Json p{{"c", c}};
        p.update(crush::to_json(pt));
        if (o.levels) p["levelProbabilities"] = crush::exact_level_probabilities(h, c, o.budget);
        points.push_back(std::move(p));
    }
    const Json out{
        {"command", "exact"}, {"instance", meta}, {"budget", o.budget}, {"points", points}};
    write_output(o.output, out.dump(2) + "\n");
    return 0;
}

struct RegionOpts {
    std::string cRange;
    std::string kRange;
    std::string format = "json";
    std::string output;
};

int run_region(const RegionOpts& o) {
    const auto [cMin, cMax] = parse_range(o.cRange, "--colors");
    const auto [kMin, kMax] = parse_range(o.kRange, "--k");
    const crush::RegionReport report = crush::scan_region(cMin, cMax, kMin, kMax);
    if (o.format == "csv") {
        write_output(o.output, crush::csv_region(report));
    } else {
        const Json out{{"command", "region"}, {"report", crush::to_json(report)}};
        write_output(o.output, out.dump(2) + "\n");
    }
    return 0;
}

struct UniformityOpts {
    InstanceOpts inst;
    std::int32_t c = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget = crush::oracle::kDefaultEnumerationBudget;
    std::string output;
};

// Draws repeatedly from the sampler and chi-square-tests the empirical
// distribution over the enumerated stable set against uniform.
int run_uniformity(const UniformityOpts& o) {
    Json meta;
    const crush::Hypergraph h = load_instance(o.inst, meta);
    const auto stable = crush::oracle::enumerate_stable(h, o.c, o.budget);
    Json out{{"command", "uniformity"},
             {"instance", meta},
             {"c", o.c},
             {"samples", o.samples},
             {"stableCount", stable.size()}};
    if (stable.empty()) {
        out["chiSquare"] = nullptr;
        out["degreesOfFreedom"] = 0;
        out["pValue"] = nullptr;
        write_output(o.output, out.dump(2) + "\n");
        return 0;
    }
    std::vector<std::uint64_t> counts(stable.size(), 0);
    for (std::uint64_t i = 0; i < o.samples; ++i) {
        crush::RngStream rng(o.seed, crush::StreamPurpose::uniformity, 0, i);
        const auto res = crush::mt_sample(h, o.c, rng);
        if (!res.coloring)
            throw std::runtime_error("uniformity: resample budget exceeded while sampling");
        const auto it = std::lower_bound(stable.begin(), stable.end(), *res.coloring);
        ++counts[std::size_t(it - stable.begin())];
    }
    const double expected = double(o.samples) / double(stable.size());
    double chi = 0.0;
    std::uint64_t minCount = counts[0], maxCount = counts[0];
    for (std::uint64_t n : counts) {
        const double d = double(n) - expected;
        chi += d * d / expected;
        minCount = std::min(minCount, n);
        maxCount = std::max(maxCount, n);
    }
    const std::size_t df = stable.size() - 1;
    out["expectedPerColouring"] = expected;
    out["observed"] = counts;
    out["chiSquare"] = chi;
    out["degreesOfFreedom"] = df;
    if (df > 0) {
        const boost::math::chi_squared dist{double(df)};
        out["pValue"] = boost::math::cdf(boost::math::complement(dist, chi));
    } else {
        out["pValue"] = nullptr;
    }
    out["minCount"] = minCount;
    out["maxCount"] = maxCount;
    write_output(o.output, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable-colouring estimation and analysis for candy-crush grid hypergraphs"};
    app.set_version_flag("--version", "crush_count 0.1.0");
    app.require_subcommand(1);

    EstimateOpts eo;
    auto* est = app.add_subcommand(
        "estimate", "Multilevel-splitting estimate of the stable fraction and count");
    add_instance_options(est, eo.inst);
    est->add_option("--colors,-c", eo.c, "Number of colours")->required()->check(CLI::Range(1, 100000000));
    est->add_option("--epsilon", eo.epsilon, "Relative accuracy target")->capture_default_str();
    est->add_option("--delta", eo.delta, "Failure probability")->capture_default_str();
    est->add_option("--samples", eo.samples,
                    "Samples per level (overrides the (epsilon, delta) schedule)")
        ->check(CLI::PositiveNumber);
    est->add_option("--resample-budget", eo.resampleBudget, "Resample step cap per drawn sample")
        ->check(CLI::PositiveNumber);
    est->add_option("--seed", eo.seed, "Master seed")
        ->envname("CRUSH_COUNT_SEED")
        ->capture_default_str();
    est->add_option("--workers", eo.workers, "Worker threads")
        ->check(CLI::Range(1, 4096))
        ->capture_default_str();
    est->add_flag("--strict", eo.strict,
                  "Exit with status 2 outside the certified tractability region");
    est->add_option("--format", eo.format, "json, or csv for the level table")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    est->add_option("--output,-o", eo.output, "Write to a file instead of stdout");

    McOpts mo;
    auto* mc = app.add_subcommand("mc", "Direct Monte Carlo estimate of the stable fraction");
    add_instance_options(mc, mo.inst);
    mc->add_option("--colors,-c", mo.c, "Number of colours")->required()->check(CLI::Range(1, 100000000));
    mc->add_option("--samples", mo.samples, "Sample count")->required()->check(CLI::PositiveNumber);
    mc->add_option("--seed", mo.seed, "Master seed")
        ->envname("CRUSH_COUNT_SEED")
        ->capture_default_str();
    mc->add_option("--workers", mo.workers, "Worker threads")
        ->check(CLI::Range(1, 4096))
        ->capture_default_str();
    mc->add_option("--output,-o", mo.output, "Write to a file instead of stdout");

    ExactOpts xo;
    auto* exact = app.add_subcommand("exact", "Exact stable-colouring counts by enumeration");
    add_instance_options(exact, xo.inst);
    exact->add_option("--colors,-c", xo.colors, "Colour counts (repeatable or comma separated)")
        ->required()
        ->delimiter(',');
    exact->add_option("--budget", xo.budget, "Refuse instances with more colourings than this")
        ->capture_default_str();
    exact->add_flag("--levels", xo.levels, "Include exact per-level conditional probabilities");
    exact->add_option("--output,-o", xo.output, "Write to a file instead of stdout");

    RegionOpts ro;
    auto* region =
        app.add_subcommand("region", "Certified tractability region over (c, k) ranges");
    region->add_option("--colors,-c", ro.cRange, "Colour range A:B (or a single value)")->required();
    region->add_option("--k", ro.kRange, "Run-length range A:B (or a single value)")->required();
    region->add_option("--format", ro.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    region->add_option("--output,-o", ro.output, "Write to a file instead of stdout");

    UniformityOpts uo;
    auto* uniformity = app.add_subcommand(
        "uniformity", "Chi-square check of the sampler against the enumerated stable set");
    add_instance_options(uniformity, uo.inst);
    uniformity->add_option("--colors,-c", uo.c, "Number of colours")
        ->required()
        ->check(CLI::Range(1, 100000000));
    uniformity->add_option("--samples", uo.samples, "Sample count")
        ->required()
        ->check(CLI::PositiveNumber);
    uniformity->add_option("--seed", uo.seed, "Master seed")
        ->envname("CRUSH_COUNT_SEED")
        ->capture_default_str();
    uniformity->add_option("--budget", uo.budget, "Enumeration budget for the stable set")
        ->capture_default_str();
    uniformity->add_option("--output,-o", uo.output, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (est->parsed()) return run_estimate(eo);
        if (mc->parsed()) return run_mc(mo);
        if (exact->parsed()) return run_exact(xo);
        if (region->parsed()) return run_region(ro);
        if (uniformity->parsed()) return run_uniformity(uo);
        return 2;
    } catch (const crush::oracle::OracleBudgetExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const crush::LevelBudgetExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const crush::HypergraphParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
