#pragma once

#include <string>

#include <json.hpp>

#include "crush/estimator.hpp"
#include "crush/lll.hpp"
#include "crush/oracle.hpp"

namespace crush {

// Key order is fixed so byte comparison of dumped reports is meaningful.
using Json = nlohmann::ordered_json;

// Non-finite doubles render as null; exact counts render as decimal strings.
Json to_json(const MantissaExp& m);
Json to_json(const FeasibilityVerdict& v);
Json to_json(const RegionReport& r);
Json to_json(const LevelEstimate& level);
Json to_json(const EstimateReport& r);
Json to_json(const McReport& r);
Json to_json(const oracle::ExactCount& r);

// t,cHat,samples,hits,meanResamples,skipped with one line per level.
std::string csv_levels(const EstimateReport& r);

// Feasibility grid: header "c\k,<kMin>,...", one row per c of 0/1 cells,
// then a blank line and "k,minColors" pairs.
std::string csv_region(const RegionReport& r);

// Flat comma-separated colour row, for debugging dumps.
std::string format_coloring(const Coloring& col);

}  // namespace crush
