#pragma once

#include "pgamma/cmcheck.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace pgamma {

/// Shortest-width decimal with 17 significant digits; round-trips any double.
std::string format_real(double v);

/// One record per (n, x) sample. Header: n,x,value,method
void write_samples_csv(std::ostream& out, const CMScanReport& report);

/// Summary document: family, grid, max_order, tolerance, verdict, minima, witness.
nlohmann::ordered_json summary_json(const CMScanReport& report);

void write_summary_human(std::ostream& out, const CMScanReport& report);

} // namespace pgamma
