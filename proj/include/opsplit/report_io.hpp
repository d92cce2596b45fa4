#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "opsplit/closed_forms.hpp"
#include "opsplit/suites.hpp"

namespace opsplit {

// 17 significant digits; non-finite values become "null".
std::string format_number(double v);

// JSON with a fixed key order and no timestamps, so equal reports serialize
// to equal bytes.
std::string report_json(const SuiteReport& report);

std::filesystem::path report_path(const std::filesystem::path& dir, SuiteId id);
void write_reports(const std::vector<SuiteReport>& reports, const std::filesystem::path& dir);

struct TableRow {
  std::string form;
  Point closed_form;
  Point compositional;
  double gap = 0.0;  // |closed_form - compositional|
};

// One row per ClosedFormId at `probe`, then two rows for the claimed
// non-commutations holding (left - right) of the displayed forms against the
// same difference evaluated compositionally.
std::vector<TableRow> closed_form_table(const ModelInstance& inst, const Point& probe);
std::string table_tsv(const std::vector<TableRow>& rows);

}  // namespace opsplit
