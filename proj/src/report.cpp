#include "pgamma/report.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <ostream>

namespace pgamma {

std::string format_real(double v)
{
    return fmt::format("{:.17g}", v);
}

void write_samples_csv(std::ostream& out, const CMScanReport& report)
{
    out << "n,x,value,method\n";
    for (const DerivSample& s : report.samples)
        out << s.n << ',' << format_real(s.x) << ',' << format_real(s.value) << ','
            << to_string(s.method) << '\n';
}

nlohmann::ordered_json summary_json(const CMScanReport& report)
{
    nlohmann::ordered_json j;
    j["family"] = report.family;
    j["grid"] = {{"lo", report.grid.lo}, {"hi", report.grid.hi}, {"points", report.grid.points}};
    j["max_order"] = report.max_order;
    j["tolerance"] = report.tolerance;
    j["verdict"] = std::string(to_string(report.verdict));
    auto minima = nlohmann::ordered_json::array();
    for (const OrderMinimum& m : report.minima)
        minima.push_back({{"n", m.n}, {"min_value", m.min_value}, {"argmin_x", m.argmin_x}});
    j["minima"] = std::move(minima);
    if (report.witness)
        j["witness"] = {{"n", report.witness->n},
                        {"x", report.witness->x},
                        {"value", report.witness->value}};
    else
        j["witness"] = nullptr;
    return j;
}

void write_summary_human(std::ostream& out, const CMScanReport& report)
{
    fmt::print(out, "family     {}\n", report.family);
    fmt::print(out, "grid       [{}, {}] x {} log points\n", report.grid.lo, report.grid.hi,
               report.grid.points);
    fmt::print(out, "orders     0..{}\n", report.max_order);
    fmt::print(out, "tolerance  {}\n", report.tolerance);
    fmt::print(out, "verdict    {}\n", to_string(report.verdict));
    fmt::print(out, "{:>4}  {:>24}  {:>24}\n", "n", "min (-1)^n f^(n)", "at x");
    for (const OrderMinimum& m : report.minima)
        fmt::print(out, "{:>4}  {:>24.17g}  {:>24.17g}\n", m.n, m.min_value, m.argmin_x);
    if (report.witness)
        fmt::print(out, "witness    n={} x={:.17g} value={:.17g}\n", report.witness->n,
                   report.witness->x, report.witness->value);
}

} // namespace pgamma
