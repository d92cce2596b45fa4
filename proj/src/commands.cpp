#include "opsplit/commands.hpp"

#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "opsplit/errors.hpp"
#include "opsplit/iteration.hpp"
#include "opsplit/report_io.hpp"

namespace opsplit {

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(fmt::format("cannot write '{}'", path.string()));
  os << body;
}

}  // namespace

int run_verify(const RunConfig& config, std::ostream& log) {
  check_run_config(config);
  const auto ids = config.selected_suites();
  const auto reports = run_suite(ids, config.suite);
  write_reports(reports, config.out);
  int failed = 0;
  for (const SuiteReport& r : reports) {
    log << fmt::format("{:<22} {}  ({} members)\n", to_string(r.id), to_string(r.verdict),
                       r.members.size());
    for (const EqualityReport& m : r.members)
      if (m.verdict == Verdict::kFail)
        log << fmt::format("    FAIL {}: gap {:.3e} (tol {:.1e})\n", m.member, m.max_gap,
                           m.tolerance);
    failed += r.verdict == Verdict::kFail;
  }
  log << fmt::format("{} of {} suites passed\n", reports.size() - failed, reports.size());
  return failed == 0 ? kExitOk : kExitFailed;
}

int run_iterate(const RunConfig& config, std::ostream& log) {
  const Splitting split(iteration_pair(config));
  const IterationTrace trace = iterate_aac(split, config.start(), config.max_iters, config.stop_tol);
  std::filesystem::create_directories(config.out);
  std::ofstream os(config.out / "trace.csv", std::ios::binary | std::ios::trunc);
  if (!os) throw Error("cannot write trace.csv");
  write_trace_csv(os, trace);
  const Point& last = trace.iterates.back();
  log << fmt::format("steps {}  converged {}  rate {}\n", trace.residuals.size(),
                     trace.converged ? "yes" : "no", format_number(trace.rate));
  log << "x =";
  for (Index i = 0; i < last.size(); ++i) log << ' ' << format_number(last[i]);
  log << '\n';
  if (!trace.converged) {
    log << fmt::format("not converged after {} iterations\n", config.max_iters);
    return kExitFailed;
  }
  return kExitOk;
}

int run_report(const RunConfig& config, std::ostream& log) {
  const auto rows = closed_form_table(config.model, config.probe_point());
  write_file(config.out / "closed_forms.tsv", table_tsv(rows));
  log << fmt::format("{} rows written to {}\n", rows.size(),
                     (config.out / "closed_forms.tsv").string());
  return kExitOk;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace opsplit
