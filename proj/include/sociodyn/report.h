#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sociodyn/config.h"

namespace sociodyn {

/// One row of a summary.csv as read back for reporting.
struct SummaryRow {
  std::string scenario;
  ResMode res_mode = ResMode::SugarSpices;
  bool fmar = false;
  bool fpro = false;
  bool division_of_labor = false;
  TeVariant te = TeVariant::TE0;
  int n_runs = 0;
  double tar = 0.0;
  double age = 0.0;
  double fpr = 0.0;
  double mpr = 0.0;
};

/// Reads every summary.csv under `dir`, recursively, in path order.
std::vector<SummaryRow> load_summaries(const std::filesystem::path& dir);

struct Report {
  std::string text;
  std::string csv;
  std::vector<std::string> warnings;  // missing cells
};

// Wealth/health and price tables keyed by (agents, Res, FMar, FPro) with
// columns TE0..TE4. TAR is shown in thousands. Rows appear only when at least
// one cell is present; TE2..TE4 under fixed prices render as n/a.
Report emit_report(const std::vector<SummaryRow>& rows);

}  // namespace sociodyn
