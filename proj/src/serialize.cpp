#include "crush/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace crush {

namespace {

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

Json to_json(const FeasibilityVerdict& v) {
    return Json{{"c", v.c},
                {"k", v.k},
                {"feasible", v.feasible},
                {"rhs", v.rhs},
                {"oneOverC", 1.0 / double(v.c)},
                {"dependencyDegree", v.dependencyDegree},
                {"optimalX", v.optimalX},
                {"perEdgeResampleBound", v.perEdgeResampleBound}};
}

Json to_json(const RegionReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.feasible) {
        Json cells = Json::array();
        for (bool f : row) cells.push_back(f ? 1 : 0);
        rows.push_back(std::move(cells));
    }
    return Json{{"cMin", r.cMin},         {"cMax", r.cMax},
                {"kMin", r.kMin},         {"kMax", r.kMax},
                {"feasible", std::move(rows)},
                {"minColorsPerK", r.minColorsPerK}};
}

Json to_json(const MantissaExp& m) {
    return Json{{"mantissa", m.mantissa}, {"exponent", m.exponent}};
}

Json to_json(const LevelEstimate& level) {
    return Json{{"t", level.t},
                {"cHat", level.cHat},
                {"samples", level.samples},
                {"hits", level.hits},
                {"skippedExact", level.skippedExact},
                {"meanResamples", level.meanResamples}};
}

Json to_json(const EstimateReport& r) {
    Json levels = Json::array();
    for (const auto& level : r.levels) levels.push_back(to_json(level));
    return Json{{"params",
                 Json{{"digest", r.instanceDigest},
                      {"k", r.k},
                      {"c", r.params.c},
                      {"epsilon", r.params.epsilon},
                      {"delta", r.params.delta},
                      {"masterSeed", r.params.masterSeed},
                      {"workerCount", r.params.workerCount}}},
                {"vertexCount", r.vertexCount},
                {"edgeCount", r.edgeCount},
                {"samplesPerLevel", r.samplesPerLevel},
                {"levels", std::move(levels)},
                {"ellHat", r.ellHat},
                {"logEll", finite_or_null(r.logEll)},
                {"ellMantissaExp", to_json(r.ellMantissaExp)},
                {"logCount", finite_or_null(r.logCount)},
                {"countMantissaExp", to_json(r.countMantissaExp)},
                {"totalSamples", r.totalSamples},
                {"totalResamples", r.totalResamples},
                {"wallTime", r.wallTime}};
}

Json to_json(const McReport& r) {
    return Json{{"c", r.c},
                {"samples", r.samples},
                {"hits", r.hits},
                {"ellHat", r.ellHat},
                {"relativeErrorEstimate",
                 r.relativeErrorEstimate ? Json(*r.relativeErrorEstimate) : Json(nullptr)}};
}

Json to_json(const oracle::ExactCount& r) {
    return Json{{"stableCount", r.stableCount.str()},
                {"totalCount", r.totalCount.str()},
                {"ell", r.ell}};
}

std::string csv_levels(const EstimateReport& r) {
    std::string out = "t,cHat,samples,hits,meanResamples,skipped\n";
    for (const auto& level : r.levels) {
        out += std::to_string(level.t);
        out += ',';
        out += fmt_double(level.cHat);
        out += ',';
        out += std::to_string(level.samples);
        out += ',';
        out += std::to_string(level.hits);
        out += ',';
        out += fmt_double(level.meanResamples);
        out += ',';
        out += level.skippedExact ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string format_coloring(const Coloring& col) {
    std::string out;
    for (std::size_t i = 0; i < col.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(col[i]);
    }
    return out;
}

std::string csv_region(const RegionReport& r) {
    std::string out = "c\\k";
    for (int k = r.kMin; k <= r.kMax; ++k) out += ',' + std::to_string(k);
    out += '\n';
    for (std::int32_t c = r.cMin; c <= r.cMax; ++c) {
        out += std::to_string(c);
        const auto& row = r.feasible[std::size_t(c - r.cMin)];
        for (bool f : row) out += f ? ",1" : ",0";
        out += '\n';
    }
    out += "\nk,minColors\n";
    for (int k = r.kMin; k <= r.kMax; ++k) {
        out += std::to_string(k);
        out += ',';
        out += std::to_string(r.minColorsPerK[std::size_t(k - r.kMin)]);
        out += '\n';
    }
    return out;
}

}  // namespace crush
