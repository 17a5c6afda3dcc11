#include "cfhom_cli/report.hpp"

#include <algorithm>
#include <ostream>

#include <nlohmann/json.hpp>

#include "cfhom/error.hpp"

namespace cfhom::cli {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

void Report::add_row(std::vector<std::string> cells, std::optional<Status> status) {
  rows.push_back(std::move(cells));
  row_status.push_back(status);
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& st : row_status)
    if (st == s) ++n;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error("unknown format '" + name + "' (expected json, csv or table)");
}

namespace {

bool any_status(const Report& r) {
  return std::any_of(r.row_status.begin(), r.row_status.end(), [](const auto& s) { return s.has_value(); });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_json(const Report& r, std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["references"] = r.references;
  const bool statuses = any_status(r);
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    nlohmann::ordered_json row;
    for (std::size_t c = 0; c < r.columns.size() && c < r.rows[i].size(); ++c) row[r.columns[c]] = r.rows[i][c];
    if (statuses) row["status"] = r.row_status[i] ? status_name(*r.row_status[i]) : "";
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  j["summary"] = {{"pass", r.count(Status::pass)},
                  {"fail", r.count(Status::fail)},
                  {"skipped", r.count(Status::skipped)},
                  {"ok", r.ok()}};
  out << j.dump(2) << "\n";
}

void render_csv(const Report& r, std::ostream& out) {
  const bool statuses = any_status(r);
  for (std::size_t c = 0; c < r.columns.size(); ++c) out << (c ? "," : "") << csv_field(r.columns[c]);
  if (statuses) out << ",status";
  out << "\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    for (std::size_t c = 0; c < r.rows[i].size(); ++c) out << (c ? "," : "") << csv_field(r.rows[i][c]);
    if (statuses) out << "," << (r.row_status[i] ? status_name(*r.row_status[i]) : "");
    out << "\n";
  }
}

void render_table(const Report& r, std::ostream& out) {
  const bool statuses = any_status(r);
  std::vector<std::string> header = r.columns;
  if (statuses) header.push_back("status");
  std::vector<std::vector<std::string>> body;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    auto row = r.rows[i];
    if (statuses) row.push_back(r.row_status[i] ? status_name(*r.row_status[i]) : "");
    body.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : body)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
    }
    out << s << "\n";
  };
  out << "# " << r.command << "\n";
  for (const auto& ref : r.references) out << "# " << ref << "\n";
  if (!header.empty()) {
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& row : body) line(row);
  }
  for (const auto& c : r.checks)
    out << "check " << c.name << ": " << status_name(c.status) << (c.detail.empty() ? "" : " (" + c.detail + ")")
        << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  if (!any_status(r) && r.checks.empty()) return;
  out << "summary: pass " << r.count(Status::pass) << ", fail " << r.count(Status::fail) << ", skipped "
      << r.count(Status::skipped) << "\n";
}

}  // namespace

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: render_json(report, out); break;
    case Format::csv: render_csv(report, out); break;
    case Format::table: render_table(report, out); break;
  }
}

}  // namespace cfhom::cli
