#include "rbt/report.hpp"

#include <sstream>
#include <stdexcept>

#include "rbt/serialize.hpp"
#include "rbt/version.hpp"

namespace rbt {

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json")
    return Format::json;
  if (name == "markdown" || name == "md")
    return Format::markdown;
  if (name == "csv")
    return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string torus_action(int rank) { return rank == 1 ? "S^1-action" : "T^" + std::to_string(rank) + "-action"; }

std::vector<ReportRow> report_rows(const Partition& p, const LabelTable& labels) {
  std::vector<ReportRow> rows;
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    const PartitionClass& c = p.classes[k];
    ReportRow r{class_name(k), c.orientable, c.torus_rank, {}};
    for (const auto& a : c.members)
      r.labels.push_back(labels.name(a));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string write_report(const Partition& p, Format format, const LabelTable& labels) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << to_json(p, labels).dump(2) << "\n";
      break;
    case Format::markdown:
      os << "<!-- bott " << version() << ", n=" << p.n << ", " << p.space.str() << " -->\n";
      os << "| class | orientability | maximal torus action | matrices |\n";
      os << "|---|---|---|---|\n";
      for (const ReportRow& r : report_rows(p, labels))
        os << "| " << r.name << " | " << (r.orientable ? "orientable" : "nonorientable") << " | "
           << torus_action(r.torus_rank) << " | " << join(r.labels, ", ") << " |\n";
      break;
    case Format::csv:
      os << "class,orientable,torus_rank,labels\n";
      for (const ReportRow& r : report_rows(p, labels))
        os << r.name << "," << (r.orientable ? "true" : "false") << "," << r.torus_rank << ","
           << join(r.labels, " ") << "\n";
      break;
  }
  return os.str();
}

std::vector<ReportRow> parse_csv_report(std::string_view text) {
  std::vector<ReportRow> rows;
  auto lines = split(text, '\n');
  if (lines.empty() || lines[0] != "class,orientable,torus_rank,labels")
    throw std::invalid_argument("CSV report: unexpected header");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty())
      continue;
    auto cells = split(lines[i], ',');
    if (cells.size() != 4)
      throw std::invalid_argument("CSV report: expected 4 cells in line " + std::to_string(i + 1));
    ReportRow r{cells[0], cells[1] == "true", std::stoi(cells[2]), split(cells[3], ' ')};
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ReportRow> parse_json_report(std::string_view text) {
  std::vector<ReportRow> rows;
  auto j = Json::parse(text);
  for (const auto& c : j.at("classes"))
    rows.push_back({c.at("class").get<std::string>(), c.at("orientable").get<bool>(), c.at("torus_rank").get<int>(),
                    c.at("labels").get<std::vector<std::string>>()});
  return rows;
}

}  // namespace rbt
