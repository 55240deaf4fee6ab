#ifndef DIGDOM_REPORT_HPP
#define DIGDOM_REPORT_HPP

#include "digdom/analysis.hpp"
#include "digdom/families.hpp"
#include "digdom/solvers.hpp"

#include <string>
#include <string_view>

namespace digdom {

/// text: one record per line as space-separated key=value pairs (values
/// containing spaces are double-quoted). json: one document with the same
/// fields; witnesses are sorted index lists in both.
enum class ReportFormat { text, json };

ReportFormat parse_report_format(std::string_view name);

std::string render(const SolveResult& result, ReportFormat format);
std::string render(const SolveMap& results, ReportFormat format);
std::string render(const BoundReport& report, ReportFormat format);
std::string render(const SearchReport& report, ReportFormat format);

/// Inverse of the json renderings. Throws Error(parse).
SolveResult solve_result_from_json(std::string_view json);
SolveMap solve_map_from_json(std::string_view json);
BoundReport bound_report_from_json(std::string_view json);
SearchReport search_report_from_json(std::string_view json);

/// Metadata written next to a constructed instance: family, params,
/// seed_vertices, added_vertices, extremal_set and the certified parameter.
std::string render_sidecar(const FamilyInstance& instance);

} // namespace digdom

#endif // DIGDOM_REPORT_HPP
