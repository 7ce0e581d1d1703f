// Human and machine readable renderings of a partition.

#ifndef RBT_REPORT_HPP_
#define RBT_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rbt/classify.hpp"

namespace rbt {

enum class Format { json, markdown, csv };

Format parse_format(std::string_view name);

// "T^3-action", or "S^1-action" for rank one.
std::string torus_action(int rank);

std::string write_report(const Partition& p, Format format, const LabelTable& labels);

// The content shared by every format, used to check that they agree.
struct ReportRow {
  std::string name;
  bool orientable = true;
  int torus_rank = 0;
  std::vector<std::string> labels;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

std::vector<ReportRow> report_rows(const Partition& p, const LabelTable& labels);
std::vector<ReportRow> parse_csv_report(std::string_view text);
std::vector<ReportRow> parse_json_report(std::string_view text);

}  // namespace rbt

#endif
