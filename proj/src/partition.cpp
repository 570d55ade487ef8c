#include "khecke/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace khecke {

namespace {

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing: " +
                                  join_ints(parts_));
  }
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0" || text == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int i) const noexcept {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::column_length(int j) const noexcept {
  int count = 0;
  for (int p : parts_) {
    if (p < j) break;
    ++count;
  }
  return count;
}

bool Partition::has_cell(Cell c) const noexcept {
  return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.row_length(i) > row_length(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  int width = parts_.empty() ? 0 : parts_.front();
  for (int j = 1; j <= width; ++j) cols.push_back(column_length(j));
  return Partition(std::move(cols));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  return parts_.empty() ? std::string("0") : join_ints(parts_);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> partitions_between(int lo, int hi) {
  std::vector<Partition> out;
  for (int n = std::max(lo, 0); n <= hi; ++n) {
    auto block = partitions_of(n);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("skew shape inner " + inner_.to_string() +
                                " is not contained in outer " + outer_.to_string());
}

bool SkewShape::has_cell(Cell c) const noexcept {
  return outer_.has_cell(c) && !inner_.has_cell(c);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = first_col(i); j <= last_col(i); ++j) out.push_back({i, j});
  return out;
}

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

SkewShape direct_sum_shape(const Partition& lambda, const Partition& mu) {
  const int offset = lambda.row_length(1);
  std::vector<int> outer;
  std::vector<int> inner;
  for (int p : mu.parts()) {
    outer.push_back(offset + p);
    inner.push_back(offset);
  }
  for (int p : lambda.parts()) outer.push_back(p);
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::from_descent_set(const std::vector<int>& set, int n) {
  std::set<int> sorted(set.begin(), set.end());
  std::vector<int> parts;
  int prev = 0;
  for (int s : sorted) {
    if (s <= 0 || s >= n)
      throw std::invalid_argument("descent set element out of range [1, n-1]");
    parts.push_back(s - prev);
    prev = s;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

int Composition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Composition::descent_set() const {
  std::vector<int> out;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    out.push_back(sum);
  }
  return out;
}

std::string Composition::to_string() const { return "(" + join_ints(parts_) + ")"; }

}  // namespace khecke
