#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cfhom::cli {

enum class Status { pass, fail, skipped };

const char* status_name(Status s);

struct NamedCheck {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

/// Tabular result of one command plus pass/fail bookkeeping.
struct Report {
  std::string command;                  ///< echo of the invocation
  std::vector<std::string> references;  ///< statements being checked
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::optional<Status>> row_status;  ///< parallel to rows
  std::vector<NamedCheck> checks;
  std::vector<std::string> notes;

  void add_row(std::vector<std::string> cells, std::optional<Status> status = std::nullopt);
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
};

enum class Format { table, json, csv };

Format parse_format(const std::string& name);
void render(const Report& report, Format format, std::ostream& out);

}  // namespace cfhom::cli
