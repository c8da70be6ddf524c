#include "ceresa3/multilinear.hpp"

#include <stdexcept>

namespace ceresa3 {

BasedSpace::BasedSpace(std::vector<std::string> labels, ScalarField field)
    : labels_(std::move(labels)), field_(field) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("duplicate basis label '" + labels_[i] + "'");
    }
  }
}

std::size_t BasedSpace::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) throw std::out_of_range("unknown basis label '" + label + "'");
  return it->second;
}

namespace {

void extend(std::size_t n, std::size_t k, std::size_t start, bool strict, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    extend(n, k, strict ? i + 1 : i, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  extend(n, k, 0, false, cur, out);
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  extend(n, k, 0, true, cur, out);
  return out;
}

namespace {

// Number of nondecreasing (or strictly increasing) tuples of length k over [lo, n).
std::size_t count_tuples(std::size_t n, std::size_t lo, std::size_t k, bool strict) {
  if (k == 0) return 1;
  if (lo >= n) return 0;
  const std::size_t m = n - lo;
  // multisets: C(m + k - 1, k); subsets: C(m, k)
  const std::size_t top = strict ? m : m + k - 1;
  if (k > top) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (top - k + i) / i;
  return c;
}

std::size_t tuple_index(std::size_t n, const std::vector<std::size_t>& sorted, bool strict) {
  std::size_t index = 0;
  std::size_t lo = 0;
  const std::size_t k = sorted.size();
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (std::size_t v = lo; v < sorted[pos]; ++v) index += count_tuples(n, strict ? v + 1 : v, k - pos - 1, strict);
    lo = strict ? sorted[pos] + 1 : sorted[pos];
  }
  return index;
}

}  // namespace

std::size_t multiset_index(std::size_t n, const std::vector<std::size_t>& sorted) {
  return tuple_index(n, sorted, false);
}

std::size_t subset_index(std::size_t n, const std::vector<std::size_t>& sorted) {
  return tuple_index(n, sorted, true);
}

BasedSpace sym_power(const BasedSpace& space, std::size_t k) {
  if (k == 0) throw std::invalid_argument("symmetric power needs k >= 1");
  std::vector<std::string> labels;
  for (const auto& mono : multisets(space.dim(), k)) {
    std::string label;
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      if (!label.empty()) label += "*";
      label += space.label(mono[i]);
      if (j - i > 1) label += "^" + std::to_string(j - i);
      i = j;
    }
    labels.push_back(std::move(label));
  }
  return BasedSpace(std::move(labels), space.field());
}

BasedSpace ext_power(const BasedSpace& space, std::size_t k) {
  if (k == 0) throw std::invalid_argument("exterior power needs k >= 1");
  if (k > space.dim()) throw std::domain_error("exterior power vanishes");
  std::vector<std::string> labels;
  for (const auto& subset : subsets(space.dim(), k)) {
    std::string label;
    for (std::size_t i : subset) {
      if (!label.empty()) label += "∧";
      label += space.label(i);
    }
    labels.push_back(std::move(label));
  }
  return BasedSpace(std::move(labels), space.field());
}

BasedSpace dual_space(const BasedSpace& space) {
  std::vector<std::string> labels;
  for (const auto& l : space.labels()) labels.push_back(l + "^∨");
  return BasedSpace(std::move(labels), space.field());
}

BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b) {
  std::vector<std::string> labels;
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back("(" + la + ")⊗(" + lb + ")");
  return BasedSpace(std::move(labels), a.field());
}

BasedSpace direct_sum(const BasedSpace& a, const BasedSpace& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("L:" + l);
  for (const auto& l : b.labels()) labels.push_back("R:" + l);
  return BasedSpace(std::move(labels), a.field());
}

}  // namespace ceresa3
