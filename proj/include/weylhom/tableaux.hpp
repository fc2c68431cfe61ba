#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weylhom {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;
// Nonnegative parts; trailing zeros are significant (they carry row indices).
using Composition = std::vector<int>;

bool is_partition(const std::vector<int>& parts);
bool is_composition(const std::vector<int>& parts);
long long parts_sum(const std::vector<int>& parts);
// Sorts a composition decreasingly and drops zeros.
Partition sorted_partition(const Composition& nu);
// Dominance order: equal sizes and all partial sums of a dominate those of b.
bool dominates(const std::vector<int>& a, const std::vector<int>& b);

// "7,5,3" -> {7,5,3}.  Throws std::invalid_argument on malformed input.
std::vector<int> parse_parts(const std::string& text);
std::string parts_to_string(const std::vector<int>& parts);

// The type obtained by converting t entries d+1 into d: nu_d += t, nu_{d+1} -= t.
// Requires 1 <= d < l(mu) and 1 <= t <= mu_{d+1}.
Composition shifted_type(const Composition& mu, int d, int t);

// A row-standard tableau of partition shape, stored as the matrix of counts
// T^i_j = #(entries equal to i in row j).  Values i and rows j are 1-based in
// the accessors.  The shape (row lengths) must form a partition; the type
// (value multiplicities) may be any composition.
class Tableau {
 public:
  // counts[i-1][j-1] = T^i_j; the matrix must be rectangular with nonnegative
  // entries and column sums forming a partition.
  explicit Tableau(std::vector<std::vector<int>> counts);

  int num_values() const { return static_cast<int>(counts_.size()); }
  int num_rows() const { return counts_.empty() ? 0 : static_cast<int>(counts_[0].size()); }
  int count(int value, int row) const;
  // T^{value}_{>row} = sum over rows strictly below.
  int count_in_rows_below(int value, int row) const;
  // T^{<value}_{row} = sum over values strictly smaller.
  int count_less_in_row(int value, int row) const;

  Partition shape() const;
  Composition type() const;
  bool is_semistandard() const;

  std::string to_text() const;
  static Tableau from_text(const std::string& text);
  // Same tableau with zero-count value rows appended up to num_values.
  Tableau padded_to_values(int num_values) const;

  bool operator==(const Tableau& other) const { return counts_ == other.counts_; }
  bool operator!=(const Tableau& other) const { return !(*this == other); }
  bool operator<(const Tableau& other) const;

  const std::vector<std::vector<int>>& counts() const { return counts_; }

 private:
  std::vector<std::vector<int>> counts_;
};

// Which cell of the semistandardness criterion to repair first.
enum class ViolationScan {
  top_smallest,    // topmost row, then smallest value
  bottom_largest,  // bottommost row, then largest value with T^d_{r+1} > 0
};

// A violated criterion cell as (row r, value d), meaning the column-strictness
// inequality fails between rows r and r+1 at value d.  nullopt when
// semistandard.  The bottom_largest scan skips values with T^d_{r+1} = 0
// (rewriting there cannot make progress).
std::optional<std::pair<int, int>> find_violation(const Tableau& t, ViolationScan scan);

// All row-standard tableaux of the given shape and type, ascending in the
// lexicographic order of their count matrices (rows of values listed value-
// major).  Throws if shape is not a partition, type is not a composition, or
// their sizes differ.
std::vector<Tableau> row_standard_tableaux(const Partition& shape, const Composition& type);

// The subset of semistandard ones, in the same order.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Composition& type);

}  // namespace weylhom
