#include "sociodyn/report.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <span>
#include <tuple>

#include "sociodyn/csv.h"

namespace sociodyn {
namespace {

double to_double(const std::string& s) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
}

struct RowKey {
  bool division_of_labor;
  ResMode res;
  bool fmar;
  bool fpro;
  auto tie() const { return std::tuple(division_of_labor, res, fmar, fpro); }
  bool operator<(const RowKey& o) const { return tie() < o.tie(); }
  bool operator==(const RowKey& o) const { return tie() == o.tie(); }
};

// Fixed row order of the tables.
const std::vector<RowKey>& grid_rows() {
  static const std::vector<RowKey> rows = [] {
    std::vector<RowKey> r;
    for (bool dl : {false, true}) {
      for (ResMode res : {ResMode::SugarSpices, ResMode::FoodSecurity}) {
        r.push_back({dl, res, false, false});
        r.push_back({dl, res, true, false});
        r.push_back({dl, res, true, true});
      }
    }
    return r;
  }();
  return rows;
}

bool applicable(const RowKey& k, int te) { return k.fmar || te <= 1; }

std::string key_label(const RowKey& k) {
  std::string s = k.division_of_labor ? "division" : "omnipotent";
  s += k.res == ResMode::SugarSpices ? ",SS" : ",FS";
  s += k.fmar ? ",y" : ",n";
  s += k.fpro ? ",y" : ",n";
  return s;
}

std::string cell(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::vector<SummaryRow> load_summaries(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw ConfigError("'" + dir.string() + "' is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().filename() == "summary.csv") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<SummaryRow> out;
  for (const auto& f : files) {
    const auto t = csv::read(f);
    const auto c_scn = t.column("scenario"), c_te = t.column("te"), c_res = t.column("res_mode"),
               c_fmar = t.column("fmar"), c_fpro = t.column("fpro"),
               c_dl = t.column("division_of_labor"), c_n = t.column("n_runs"),
               c_metric = t.column("metric"), c_mean = t.column("mean");
    std::map<std::pair<std::string, int>, SummaryRow> by_key;
    std::vector<std::pair<std::string, int>> order;
    for (const auto& row : t.rows) {
      const auto key = std::pair(row[c_scn], std::stoi(row[c_te]));
      auto [it, inserted] = by_key.try_emplace(key);
      SummaryRow& s = it->second;
      if (inserted) {
        order.push_back(key);
        s.scenario = row[c_scn];
        s.te = static_cast<TeVariant>(key.second);
        s.res_mode = row[c_res] == "FS" ? ResMode::FoodSecurity : ResMode::SugarSpices;
        s.fmar = row[c_fmar] == "y";
        s.fpro = row[c_fpro] == "y";
        s.division_of_labor = row[c_dl] == "y";
        s.n_runs = std::stoi(row[c_n]);
      }
      const double v = to_double(row[c_mean]);
      const auto& m = row[c_metric];
      if (m == "final_tar") s.tar = v;
      else if (m == "final_mean_age") s.age = v;
      else if (m == "final_mean_fpr") s.fpr = v;
      else if (m == "final_mean_mpr") s.mpr = v;
    }
    for (const auto& k : order) out.push_back(by_key.at(k));
  }
  return out;
}

Report emit_report(const std::vector<SummaryRow>& rows) {
  Report rep;
  std::map<std::pair<RowKey, int>, SummaryRow> cells;
  std::map<RowKey, std::string> sim_name;
  for (const auto& r : rows) {
    const RowKey k{r.division_of_labor, r.res_mode, r.fmar, r.fpro};
    const int te = static_cast<int>(r.te);
    if (!cells.try_emplace({k, te}, r).second) {
      rep.warnings.push_back("duplicate cell " + key_label(k) + " TE" + std::to_string(te) +
                             " (" + r.scenario + "); keeping the first");
      continue;
    }
    sim_name.try_emplace(k, r.scenario);
  }

  auto present = [&](const RowKey& k) { return sim_name.count(k) > 0; };

  struct Column {
    const char* title;
    const char* csv_name;
    double (*get)(const SummaryRow&);
    int decimals;
  };
  const Column wealth[] = {
      {"TAR (thousands)", "tar_thousands", [](const SummaryRow& r) { return r.tar / 1000.0; }, 1},
      {"Age (steps)", "age", [](const SummaryRow& r) { return r.age; }, 1},
  };
  const Column prices[] = {
      {"FPr", "fpr", [](const SummaryRow& r) { return r.fpr; }, 2},
      {"MPr", "mpr", [](const SummaryRow& r) { return r.mpr; }, 2},
  };

  rep.csv = "table,agents,res,fmar,fpro,sim,TE0,TE1,TE2,TE3,TE4\n";

  auto render = [&](const std::string& heading, std::span<const Column> cols, bool flexible_only,
                    bool warn) {
    std::string& t = rep.text;
    t += heading + "\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-11s %-3s %-4s %-4s", "Agents", "Res", "FMar", "FPro");
    t += buf;
    for (const auto& c : cols) {
      std::snprintf(buf, sizeof buf, " | %-39s", c.title);
      t += buf;
    }
    t += " | Sim\n";
    std::snprintf(buf, sizeof buf, "%-11s %-3s %-4s %-4s", "", "", "", "");
    t += buf;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      t += " |";
      for (int te = 0; te <= 4; ++te) {
        std::snprintf(buf, sizeof buf, " %7s", ("TE" + std::to_string(te)).c_str());
        t += buf;
      }
    }
    t += " |\n";

    for (const auto& k : grid_rows()) {
      if (!present(k) || (flexible_only && !k.fmar)) continue;
      std::snprintf(buf, sizeof buf, "%-11s %-3s %-4s %-4s",
                    k.division_of_labor ? "division" : "omnipotent",
                    k.res == ResMode::SugarSpices ? "SS" : "FS", k.fmar ? "y" : "n",
                    k.fpro ? "y" : "n");
      t += buf;
      for (const auto& col : cols) {
        std::vector<std::string> csv_row = {col.csv_name,
                                            k.division_of_labor ? "division" : "omnipotent",
                                            k.res == ResMode::SugarSpices ? "SS" : "FS",
                                            k.fmar ? "y" : "n", k.fpro ? "y" : "n",
                                            sim_name.at(k)};
        t += " |";
        for (int te = 0; te <= 4; ++te) {
          std::string v;
          if (!applicable(k, te)) {
            v = "n/a";
          } else if (auto it = cells.find({k, te}); it != cells.end()) {
            v = cell(col.get(it->second), col.decimals);
          } else {
            v = "-";
            if (warn && &col == &cols.front()) {
              rep.warnings.push_back("missing cell " + key_label(k) + " TE" + std::to_string(te));
            }
          }
          std::snprintf(buf, sizeof buf, " %7s", v.c_str());
          t += buf;
          csv_row.push_back(v == "-" ? "" : v);
        }
        rep.csv += csv::join(csv_row) + "\n";
      }
      t += " | " + sim_name.at(k) + "\n";
    }
    t += "\n";
  };

  render("Wealth and health after the final step", wealth, false, true);
  render("Mean willing prices after the final step", prices, true, false);
  return rep;
}

}  // namespace sociodyn
