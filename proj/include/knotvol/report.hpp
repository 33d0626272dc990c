#pragma once

#include <string>

#include "knotvol/volume.hpp"

namespace knotvol {

// Provenance carried into serialized reports.
struct ReportMeta {
    std::string command;      // "twist" or "fixture"
    std::string input;        // the n value or the fixture path as given
    std::string solver_path;  // "exact-twist" or "generic"
    SolverConfig config;
};

// Fixed-field-order JSON document with every float printed to 17 significant
// digits; byte-identical for identical inputs and seed.
std::string report_json(const VolumeReport& report, const ReportMeta& meta);

// Human-readable table carrying the same data.
std::string report_table(const VolumeReport& report, const ReportMeta& meta);

// 17-significant-digit, locale-independent float formatting used by both.
std::string format_double(double x);

}  // namespace knotvol
