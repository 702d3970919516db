#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hcn::cli {

namespace {

int digits_for(const Interval& x) { return static_cast<int>(std::ceil(x.precision() * 0.30103)) + 2; }

std::string value_string(const FactoredNumber& n) { return n.value().get_str(); }

std::string join_values(const std::vector<Observation>& obs) {
  std::string out;
  for (const auto& o : obs) {
    if (!out.empty()) out += ';';
    out += value_string(o.n);
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string lower_string(const Interval& x) { return x.lo().to_string(digits_for(x), MPFR_RNDD); }
std::string upper_string(const Interval& x) { return x.hi().to_string(digits_for(x), MPFR_RNDU); }

Json interval_json(const Interval& x) {
  return Json{{"lo", lower_string(x)}, {"hi", upper_string(x)}, {"precision", x.precision()}};
}

Json optional_interval_json(const std::optional<Interval>& x) { return x ? interval_json(*x) : Json(nullptr); }

Json verdict_json(const CriterionVerdict& v) {
  return Json{{"state", to_string(v.state)},
              {"precision_used", std::to_string(v.precision_used)},
              {"margin", optional_interval_json(v.margin)}};
}

Json observation_json(const Observation& o) {
  return Json{{"n", value_string(o.n)},
              {"factorization", o.n.to_string()},
              {"value", interval_json(o.value)},
              {"state", to_string(o.state)}};
}

Json report_json(const RangeCheckReport& report) {
  Json obs = Json::array();
  Json und = Json::array();
  Json deg = Json::array();
  for (const auto& o : report.counterexamples) obs.push_back(observation_json(o));
  for (const auto& o : report.undecided) und.push_back(observation_json(o));
  for (const auto& o : report.degenerate) deg.push_back(observation_json(o));
  Json out{{"criterion", report.criterion},
           {"statement", report.statement},
           {"lo", report.lo.get_str()},
           {"hi", report.hi.get_str()},
           {"checked_count", std::to_string(report.checked_count)},
           {"verdict", verdict_json(report.verdict)},
           {"counterexamples", obs},
           {"undecided", und},
           {"degenerate", deg}};
  if (report.horizon) {
    out["horizon"] = Json{{"n", value_string(*report.horizon)}, {"factorization", report.horizon->to_string()}};
  }
  if (report.horizon_log) out["horizon_log"] = interval_json(*report.horizon_log);
  return out;
}

Json breakpoint_json(const std::optional<Breakpoint>& bp) {
  if (!bp) return nullptr;
  return Json{{"prime", std::to_string(bp->prime)},
              {"exponent", std::to_string(bp->exponent)},
              {"epsilon", interval_json(bp->epsilon)},
              {"tied_with_next", bp->tied_with_next}};
}

Json record_json(const ChampionRecord& record) {
  Json cutoffs = Json::array();
  for (std::uint64_t c : record.x_cutoffs) cutoffs.push_back(std::to_string(c));
  return Json{{"n", value_string(record.n)},
              {"factorization", record.n.to_string()},
              {"kind", to_string(record.kind)},
              {"s", record.s.get_str()},
              {"largest_prime", std::to_string(record.largest_prime)},
              {"eps_lo", breakpoint_json(record.eps_lo)},
              {"eps_hi", breakpoint_json(record.eps_hi)},
              {"g", optional_interval_json(record.g)},
              {"x_cutoffs", cutoffs},
              {"tie", record.tie}};
}

Json ga_verdict_json(const GaVerdict& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    witnesses.push_back(Json{{"other", value_string(w.other)},
                             {"factor", std::to_string(w.factor)},
                             {"g_n", interval_json(w.g_n)},
                             {"g_other", interval_json(w.g_other)},
                             {"state", to_string(w.state)}});
  }
  return Json{{"n", value_string(v.n)},
              {"factorization", v.n.to_string()},
              {"is_ga1", v.is_ga1},
              {"ga1_state", to_string(v.ga1_state)},
              {"ga2_status", to_string(v.ga2_status)},
              {"ga2_bound", std::to_string(v.ga2_bound)},
              {"ga2_witness", v.ga2_witness ? Json(std::to_string(*v.ga2_witness)) : Json(nullptr)},
              {"witnesses", witnesses}};
}

Json probe_json(const LimsupProbe& probe) {
  Json points = Json::array();
  for (const auto& p : probe.points) {
    points.push_back(Json{{"n", value_string(p.n)},
                          {"factorization", p.n.to_string()},
                          {"log_n", interval_json(p.log_n)},
                          {"quantity", interval_json(p.quantity)}});
  }
  return Json{{"name", probe.name}, {"target", interval_json(probe.target)}, {"points", points}};
}

Table report_table(const RangeCheckReport& report) {
  Table t;
  t.columns = {"criterion", "lo", "hi", "checked", "verdict", "precision", "margin_lo", "margin_hi",
               "counterexamples", "undecided", "degenerate"};
  t.rows.push_back({report.criterion, report.lo.get_str(), report.hi.get_str(), std::to_string(report.checked_count),
                    to_string(report.verdict.state), std::to_string(report.verdict.precision_used),
                    report.verdict.margin ? lower_string(*report.verdict.margin) : "",
                    report.verdict.margin ? upper_string(*report.verdict.margin) : "",
                    join_values(report.counterexamples), join_values(report.undecided),
                    join_values(report.degenerate)});
  return t;
}

Table records_table(const std::vector<ChampionRecord>& records) {
  Table t;
  t.columns = {"index", "n", "factorization", "largest_prime", "g_lo", "g_hi", "tie"};
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    t.rows.push_back({std::to_string(i + 1), value_string(r.n), r.n.to_string(), std::to_string(r.largest_prime),
                      r.g ? lower_string(*r.g) : "", r.g ? upper_string(*r.g) : "", r.tie ? "1" : "0"});
  }
  return t;
}

Table ga_table(const std::vector<GaVerdict>& verdicts) {
  Table t;
  t.columns = {"n", "factorization", "is_ga1", "ga1_state", "ga2_status", "ga2_bound", "ga2_witness"};
  for (const auto& v : verdicts) {
    t.rows.push_back({value_string(v.n), v.n.to_string(), v.is_ga1 ? "1" : "0", to_string(v.ga1_state),
                      to_string(v.ga2_status), std::to_string(v.ga2_bound),
                      v.ga2_witness ? std::to_string(*v.ga2_witness) : ""});
  }
  return t;
}

void print_table(std::ostream& out, const Table& table) {
  if (table.rows.size() == 1) {
    std::size_t width = 0;
    for (const auto& c : table.columns) width = std::max(width, c.size());
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << table.columns[i] << std::string(width - table.columns[i].size() + 2, ' ') << table.rows[0][i] << '\n';
    }
    return;
  }
  std::vector<std::size_t> widths;
  for (const auto& c : table.columns) widths.push_back(c.size());
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << cells[i];
      if (i + 1 < cells.size()) out << std::string(widths[i] - cells[i].size() + 2, ' ');
    }
    out << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
}

void print_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
    out << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
}

void print_plot(std::ostream& out, const std::vector<PlotRow>& rows) {
  out << "x,lo,hi\n";
  for (const auto& r : rows) out << r.x << ',' << r.lo << ',' << r.hi << '\n';
}

}  // namespace hcn::cli
