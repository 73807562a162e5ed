#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "tbc/types.hpp"

namespace tbc {

// Squared-norm multiset plus per-node running sums of the per-sample function
// values. Nodes never updated are implicit zero vectors.
class RademacherState {
 public:
  explicit RademacherState(std::size_t node_count);

  // Adds h in [0, 1] as node u's value for the current sample.
  void update(NodeId u, double h);

  std::size_t node_count() const noexcept { return sums_.size(); }
  // Squared norm -> number of touched nodes holding it.
  const std::map<double, std::uint64_t>& norms() const noexcept { return norms_; }
  double sum(NodeId u) const { return sums_[u]; }
  double squares(NodeId u) const { return squares_[u]; }
  const std::vector<double>& sums() const noexcept { return sums_; }
  std::uint64_t untouched() const noexcept { return sums_.size() - touched_count_; }

 private:
  std::map<double, std::uint64_t> norms_;
  std::vector<double> sums_;
  std::vector<double> squares_;
  std::vector<char> touched_;
  std::size_t touched_count_ = 0;
};

// w(s) = (1/s) ln( sum over vectors of exp(s^2 |v|^2 / (2 r^2)) ), with
// `zeros` additional zero vectors.
double rademacher_w(const std::map<double, std::uint64_t>& norms, std::uint64_t zeros,
                    std::uint64_t r, double s);

// Upper bound on the empirical Rademacher average: min of w over s in
// [1e-4, 1e6]. Exactly 0 when every vector is zero.
double rademacher_bound(const std::map<double, std::uint64_t>& norms, std::uint64_t zeros,
                        std::uint64_t r);
double rademacher_bound(const RademacherState& state, std::uint64_t r);

// Deviation bound for sample size r given an average bound R and confidence
// delta_i.
double stopping_xi(double R, std::uint64_t r, double delta_i);

}  // namespace tbc
