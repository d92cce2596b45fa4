#include "opsplit/report_io.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "opsplit/errors.hpp"

namespace opsplit {

namespace {

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string number_list(const Point& x) {
  std::string out = "[";
  for (Index i = 0; i < x.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(x[i]);
  }
  return out + "]";
}

std::string member_json(const EqualityReport& m) {
  std::string out = "    {\n";
  out += fmt::format("      \"member\": {},\n", json_string(m.member));
  out += fmt::format("      \"expect\": {},\n", json_string(to_string(m.expect)));
  out += fmt::format("      \"samples\": {},\n", m.samples);
  out += fmt::format("      \"max_gap\": {},\n", format_number(m.max_gap));
  out += fmt::format("      \"tolerance\": {},\n", format_number(m.tolerance));
  out += fmt::format("      \"verdict\": {}", json_string(to_string(m.verdict)));
  if (m.witness) {
    out += ",\n      \"witness\": {\n";
    out += fmt::format("        \"instance\": {},\n", m.witness->instance);
    out += fmt::format("        \"gap\": {},\n", format_number(m.witness->gap));
    out += fmt::format("        \"x\": {}\n", number_list(m.witness->x));
    out += "      }";
  }
  return out + "\n    }";
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt::format("{:.17g}", v);
}

std::string report_json(const SuiteReport& report) {
  std::string out = "{\n";
  out += fmt::format("  \"suite\": {},\n", json_string(to_string(report.id)));
  out += fmt::format("  \"verdict\": {},\n", json_string(to_string(report.verdict)));
  out += "  \"notes\": [";
  for (std::size_t i = 0; i < report.notes.size(); ++i)
    out += (i ? ",\n    " : "\n    ") + json_string(report.notes[i]);
  out += report.notes.empty() ? "],\n" : "\n  ],\n";
  out += "  \"members\": [";
  for (std::size_t i = 0; i < report.members.size(); ++i)
    out += (i ? ",\n" : "\n") + member_json(report.members[i]);
  out += report.members.empty() ? "]\n" : "\n  ]\n";
  return out + "}\n";
}

std::filesystem::path report_path(const std::filesystem::path& dir, SuiteId id) {
  return dir / fmt::format("{}.report.json", to_string(id));
}

void write_reports(const std::vector<SuiteReport>& reports, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const SuiteReport& r : reports) {
    const auto path = report_path(dir, r.id);
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(fmt::format("cannot write '{}'", path.string()));
    os << report_json(r);
  }
}

std::vector<TableRow> closed_form_table(const ModelInstance& inst, const Point& probe) {
  validate(inst);
  require_dim(probe, inst.dim(), "probe point");
  const Splitting split(model_pair(inst));
  std::vector<TableRow> rows;
  const auto add = [&](std::string name, Point closed, Point comp) {
    const double gap = (closed - comp).norm();
    rows.push_back(TableRow{std::move(name), std::move(closed), std::move(comp), gap});
  };
  for (const ClosedFormId id : kBuildingBlockForms)
    add(std::string(to_string(id)), closed_form_eval(inst, id, probe),
        compositional_eval(split, id, probe));
  for (const ClosedFormId id : kReflectedCompositionForms)
    add(std::string(to_string(id)), closed_form_eval(inst, id, probe),
        compositional_eval(split, id, probe));

  // left/right pairs of the claimed non-commutations
  struct Pair {
    NonCommutation which;
    ClosedFormId left;
    ClosedFormId right;
  };
  for (const Pair p : {Pair{NonCommutation::kRBgT, ClosedFormId::kRBg_T_AgBg, ClosedFormId::kT_BgAg_RBg},
                       Pair{NonCommutation::kRBgTs, ClosedFormId::kRBg_T_BgAg, ClosedFormId::kT_AgBg_RBg}}) {
    const auto [lhs, rhs] = noncommutation_sides(split, p.which);
    add(std::string(to_string(p.which)),
        closed_form_eval(inst, p.left, probe) - closed_form_eval(inst, p.right, probe),
        lhs(probe) - rhs(probe));
  }
  return rows;
}

std::string table_tsv(const std::vector<TableRow>& rows) {
  std::string out = "form\tclosed_form\tcompositional\tgap\n";
  for (const TableRow& r : rows)
    out += fmt::format("{}\t{}\t{}\t{}\n", r.form, number_list(r.closed_form),
                       number_list(r.compositional), format_number(r.gap));
  return out;
}

}  // namespace opsplit
