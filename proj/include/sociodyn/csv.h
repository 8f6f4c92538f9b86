#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sociodyn::csv {

/// Six significant digits, shortest %g form.
std::string num(double v);

std::string join(const std::vector<std::string>& fields);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of `name` in the header; throws ConfigError naming the column.
  std::size_t column(std::string_view name) const;
};

Table read(const std::filesystem::path& path);

}  // namespace sociodyn::csv
