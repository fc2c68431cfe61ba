#include "weylhom/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylhom {

bool is_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

bool is_composition(const std::vector<int>& parts) {
  return std::all_of(parts.begin(), parts.end(), [](int x) { return x >= 0; });
}

long long parts_sum(const std::vector<int>& parts) {
  return std::accumulate(parts.begin(), parts.end(), 0ll);
}

Partition sorted_partition(const Composition& nu) {
  Partition out;
  for (int x : nu) {
    if (x < 0) throw std::invalid_argument("sorted_partition: negative part");
    if (x > 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  if (parts_sum(a) != parts_sum(b)) return false;
  long long sa = 0, sb = 0;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (k < a.size()) sa += a[k];
    if (k < b.size()) sb += b[k];
    if (sa < sb) return false;
  }
  return true;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    std::size_t a = token.find_first_not_of(" \t");
    std::size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("partition parse: empty part in '" + text + "'");
    token = token.substr(a, b - a + 1);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9)
      throw std::invalid_argument("partition parse: bad part '" + token + "'");
    out.push_back(std::stoi(token));
  }
  if (out.empty()) throw std::invalid_argument("partition parse: no parts in '" + text + "'");
  return out;
}

std::string parts_to_string(const std::vector<int>& parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  return os.str();
}

Composition shifted_type(const Composition& mu, int d, int t) {
  if (!is_composition(mu)) throw std::invalid_argument("shifted_type: not a composition");
  if (d < 1 || d >= static_cast<int>(mu.size()))
    throw std::invalid_argument("shifted_type: d out of range");
  if (t < 1 || t > mu[static_cast<std::size_t>(d)])
    throw std::invalid_argument("shifted_type: t out of range");
  Composition nu = mu;
  nu[static_cast<std::size_t>(d - 1)] += t;
  nu[static_cast<std::size_t>(d)] -= t;
  return nu;
}

Tableau::Tableau(std::vector<std::vector<int>> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("tableau: no values");
  const std::size_t rows = counts_[0].size();
  if (rows == 0) throw std::invalid_argument("tableau: no rows");
  for (const auto& row : counts_) {
    if (row.size() != rows) throw std::invalid_argument("tableau: ragged count matrix");
    for (int x : row) {
      if (x < 0) throw std::invalid_argument("tableau: negative count");
    }
  }
  std::vector<int> lengths(rows, 0);
  for (const auto& row : counts_) {
    for (std::size_t j = 0; j < rows; ++j) lengths[j] += row[j];
  }
  if (!is_partition(lengths))
    throw std::invalid_argument("tableau: row lengths do not form a partition");
}

int Tableau::count(int value, int row) const {
  if (value < 1 || value > num_values() || row < 1 || row > num_rows())
    throw std::out_of_range("tableau: count index out of range");
  return counts_[static_cast<std::size_t>(value - 1)][static_cast<std::size_t>(row - 1)];
}

int Tableau::count_in_rows_below(int value, int row) const {
  int s = 0;
  for (int j = row + 1; j <= num_rows(); ++j) s += count(value, j);
  return s;
}

int Tableau::count_less_in_row(int value, int row) const {
  int s = 0;
  for (int i = 1; i < value; ++i) s += count(i, row);
  return s;
}

Partition Tableau::shape() const {
  Partition lengths(static_cast<std::size_t>(num_rows()), 0);
  for (const auto& row : counts_) {
    for (std::size_t j = 0; j < lengths.size(); ++j) lengths[j] += row[j];
  }
  return lengths;
}

Composition Tableau::type() const {
  Composition t;
  t.reserve(counts_.size());
  for (const auto& row : counts_) t.push_back(std::accumulate(row.begin(), row.end(), 0));
  return t;
}

bool Tableau::is_semistandard() const {
  const int rows = num_rows();
  const int values = num_values();
  for (int j = 1; j < rows; ++j) {
    int below = 0;       // #(entries <= i in row j+1)
    int above_prev = 0;  // #(entries <= i-1 in row j)
    for (int i = 1; i <= values; ++i) {
      below += count(i, j + 1);
      if (below > above_prev) return false;
      above_prev += count(i, j);
    }
  }
  return true;
}

std::optional<std::pair<int, int>> find_violation(const Tableau& t, ViolationScan scan) {
  const int rows = t.num_rows();
  const int values = t.num_values();
  auto violated = [&t](int r, int d) {
    int below = 0, above = 0;
    for (int i = 1; i <= d; ++i) below += t.count(i, r + 1);
    for (int i = 1; i <= d - 1; ++i) above += t.count(i, r);
    return below > above;
  };
  if (scan == ViolationScan::top_smallest) {
    for (int r = 1; r < rows; ++r) {
      for (int d = 1; d <= values; ++d) {
        if (violated(r, d)) return std::make_pair(r, d);
      }
    }
    return std::nullopt;
  }
  for (int r = rows - 1; r >= 1; --r) {
    for (int d = values; d >= 1; --d) {
      if (t.count(d, r + 1) == 0) continue;
      if (violated(r, d)) return std::make_pair(r, d);
    }
  }
  // A violated cell always has one with T^d_{r+1} > 0 in its row pair (the
  // smallest violating value is one), so the scans agree on semistandardness.
  return std::nullopt;
}

std::string Tableau::to_text() const {
  std::ostringstream os;
  for (int j = 1; j <= num_rows(); ++j) {
    if (j > 1) os << " / ";
    bool first = true;
    for (int i = 1; i <= num_values(); ++i) {
      int c = count(i, j);
      if (c == 0) continue;
      if (!first) os << " ";
      first = false;
      os << i;
      if (c > 1) os << "^" << c;
    }
    if (first) os << "-";  // unreachable for valid shapes; keeps rows visible
  }
  return os.str();
}

Tableau Tableau::from_text(const std::string& text) {
  std::vector<std::string> row_texts;
  std::string current;
  for (char c : text) {
    if (c == '/') {
      row_texts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  row_texts.push_back(current);
  const std::size_t rows = row_texts.size();
  std::vector<std::vector<int>> counts;  // grows as values appear
  auto bump = [&counts, rows](int value, std::size_t row, int by) {
    while (static_cast<int>(counts.size()) < value) counts.emplace_back(rows, 0);
    counts[static_cast<std::size_t>(value - 1)][row] += by;
  };
  for (std::size_t j = 0; j < rows; ++j) {
    std::istringstream is(row_texts[j]);
    std::string token;
    while (is >> token) {
      std::size_t caret = token.find('^');
      std::string value_part = caret == std::string::npos ? token : token.substr(0, caret);
      std::string count_part = caret == std::string::npos ? "1" : token.substr(caret + 1);
      for (const std::string* s : {&value_part, &count_part}) {
        if (s->empty() || s->size() > 6 || s->find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("tableau parse: bad token '" + token + "'");
      }
      int value = std::stoi(value_part);
      int mult = std::stoi(count_part);
      if (value < 1 || mult < 1)
        throw std::invalid_argument("tableau parse: bad token '" + token + "'");
      bump(value, j, mult);
    }
  }
  if (counts.empty()) throw std::invalid_argument("tableau parse: empty tableau");
  return Tableau(std::move(counts));
}

Tableau Tableau::padded_to_values(int num_values) const {
  if (num_values < this->num_values())
    throw std::invalid_argument("tableau: cannot pad below the present values");
  auto counts = counts_;
  counts.resize(static_cast<std::size_t>(num_values),
                std::vector<int>(static_cast<std::size_t>(num_rows()), 0));
  return Tableau(std::move(counts));
}

bool Tableau::operator<(const Tableau& other) const { return counts_ < other.counts_; }

std::vector<Tableau> row_standard_tableaux(const Partition& shape, const Composition& type) {
  if (shape.empty() || !is_partition(shape))
    throw std::invalid_argument("row_standard_tableaux: bad shape");
  if (!is_composition(type)) throw std::invalid_argument("row_standard_tableaux: bad type");
  if (parts_sum(shape) != parts_sum(type))
    throw std::invalid_argument("row_standard_tableaux: |shape| != |type|");
  if (type.empty()) throw std::invalid_argument("row_standard_tableaux: empty type");
  const int values = static_cast<int>(type.size());
  const int rows = static_cast<int>(shape.size());
  std::vector<int> room(shape.begin(), shape.end());  // free space left per row
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(values),
                                       std::vector<int>(static_cast<std::size_t>(rows), 0));
  std::vector<Tableau> out;
  // Fill value by value, row by row, choosing counts in ascending order; the
  // resulting list is ascending in the count-matrix lexicographic order.
  std::function<void(int, int, int)> place = [&](int i, int j, int quota) {
    if (j == rows) {
      if (quota != 0) return;
      if (i + 1 == values) {
        out.emplace_back(counts);
        return;
      }
      place(i + 1, 0, type[static_cast<std::size_t>(i + 1)]);
      return;
    }
    int tail_room = 0;
    for (int k = j + 1; k < rows; ++k) tail_room += room[static_cast<std::size_t>(k)];
    int lo = std::max(0, quota - tail_room);
    int hi = std::min(quota, room[static_cast<std::size_t>(j)]);
    for (int c = lo; c <= hi; ++c) {
      counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
      room[static_cast<std::size_t>(j)] -= c;
      place(i, j + 1, quota - c);
      room[static_cast<std::size_t>(j)] += c;
      counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    }
  };
  place(0, 0, type[0]);
  return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Composition& type) {
  std::vector<Tableau> all = row_standard_tableaux(shape, type);
  std::vector<Tableau> out;
  out.reserve(all.size());
  for (auto& t : all) {
    if (t.is_semistandard()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace weylhom
