#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tbc {

using ScoreRow = std::pair<std::int64_t, double>;

// 17 significant digits; reads back bit-identically.
std::string format_double(double x);

// "node_id,score" header then one row per node, 17 significant digits.
void write_scores_csv(std::ostream& out, std::span<const std::int64_t> ids,
                      std::span<const double> values);
std::vector<ScoreRow> read_scores_csv(std::istream& in);
std::vector<ScoreRow> read_scores_csv_file(const std::filesystem::path& path);

// Aligns two score tables on node id; throws std::invalid_argument when the
// id sets differ. Output order follows `a`.
std::pair<std::vector<double>, std::vector<double>> align_scores(const std::vector<ScoreRow>& a,
                                                                 const std::vector<ScoreRow>& b);

}  // namespace tbc
