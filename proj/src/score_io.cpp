#include "tbc/score_io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "tbc/temporal_graph.hpp"

namespace tbc {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_scores_csv(std::ostream& out, std::span<const std::int64_t> ids,
                      std::span<const double> values) {
  if (ids.size() != values.size()) throw std::invalid_argument("ids and values differ in length");
  out << "node_id,score\n";
  for (std::size_t i = 0; i < ids.size(); ++i) out << ids[i] << ',' << format_double(values[i]) << '\n';
}

std::vector<ScoreRow> read_scores_csv(std::istream& in) {
  std::vector<ScoreRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == "node_id,score") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError(line_no, "expected node_id,score");
    ScoreRow row;
    const auto* begin = line.data();
    const auto [p1, e1] = std::from_chars(begin, begin + comma, row.first);
    if (e1 != std::errc{} || p1 != begin + comma) throw ParseError(line_no, "bad node id");
    char* end = nullptr;
    const std::string rest = line.substr(comma + 1);
    row.second = std::strtod(rest.c_str(), &end);
    if (rest.empty() || *end != '\0') throw ParseError(line_no, "bad score");
    rows.push_back(row);
  }
  return rows;
}

std::vector<ScoreRow> read_scores_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return read_scores_csv(in);
}

std::pair<std::vector<double>, std::vector<double>> align_scores(const std::vector<ScoreRow>& a,
                                                                 const std::vector<ScoreRow>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("score files cover different node counts");
  std::unordered_map<std::int64_t, double> lookup;
  for (const auto& [id, value] : b) {
    if (!lookup.emplace(id, value).second) throw std::invalid_argument("duplicate node id in scores");
  }
  std::pair<std::vector<double>, std::vector<double>> out;
  for (const auto& [id, value] : a) {
    const auto it = lookup.find(id);
    if (it == lookup.end()) throw std::invalid_argument("node " + std::to_string(id) + " missing from scores");
    out.first.push_back(value);
    out.second.push_back(it->second);
  }
  return out;
}

}  // namespace tbc
