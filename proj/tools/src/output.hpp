#pragma once

// Rendering of library results for the command line: JSON fragments, the
// envelope, fixed-column tables (human and CSV) and plot triples.

#include <string>
#include <vector>

#include "json.hpp"

#include "hcn/champions.hpp"
#include "hcn/criteria.hpp"
#include "hcn/ga.hpp"

namespace hcn::cli {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv, PlotData };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct PlotRow {
  std::string x;
  std::string lo;
  std::string hi;
};

// Decimal strings rounded outward: lower ends down, upper ends up.
std::string lower_string(const Interval& x);
std::string upper_string(const Interval& x);

Json interval_json(const Interval& x);
Json optional_interval_json(const std::optional<Interval>& x);
Json verdict_json(const CriterionVerdict& v);
Json observation_json(const Observation& o);
Json report_json(const RangeCheckReport& report);
Json breakpoint_json(const std::optional<Breakpoint>& bp);
Json record_json(const ChampionRecord& record);
Json ga_verdict_json(const GaVerdict& v);
Json probe_json(const LimsupProbe& probe);

Table report_table(const RangeCheckReport& report);
Table records_table(const std::vector<ChampionRecord>& records);
Table ga_table(const std::vector<GaVerdict>& verdicts);

void print_table(std::ostream& out, const Table& table);
void print_csv(std::ostream& out, const Table& table);
void print_plot(std::ostream& out, const std::vector<PlotRow>& rows);

}  // namespace hcn::cli
