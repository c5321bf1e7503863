#include "supermod/variable_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "supermod/kernels/bits.hpp"

namespace supermod {

VariableSet::VariableSet(std::vector<std::string> labels) {
  if (labels.empty() || labels.size() > static_cast<std::size_t>(kMaxSize)) {
    throw std::invalid_argument("variable set must have between 1 and 16 labels, got " +
                                std::to_string(labels.size()));
  }
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw std::invalid_argument("empty variable label");
    if (labels[i].find(',') != std::string::npos) {
      throw std::invalid_argument("variable label contains ',': '" + labels[i] + "'");
    }
    if (i > 0 && labels[i] == labels[i - 1]) {
      throw std::invalid_argument("duplicate variable label '" + labels[i] + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

VariableSet VariableSet::letters(int n) {
  if (n < 1 || n > kMaxSize) throw std::invalid_argument("letters: n out of range");
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return VariableSet(std::move(out));
}

std::optional<int> VariableSet::find(std::string_view label) const {
  const auto& v = *labels_;
  auto it = std::lower_bound(v.begin(), v.end(), label,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == v.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - v.begin());
}

int VariableSet::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(label) + "'");
  return *i;
}

SubsetMask VariableSet::mask_of(const std::vector<std::string>& labels) const {
  SubsetMask s;
  for (const auto& l : labels) {
    const int i = index_of(l);
    if (s.contains(i)) throw std::invalid_argument("repeated variable '" + l + "'");
    s = s.with(i);
  }
  return s;
}

SubsetMask VariableSet::parse_mask(std::string_view text) const {
  std::vector<std::string> parts;
  if (text.empty()) return SubsetMask{};
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.emplace_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return mask_of(parts);
}

SubsetMask VariableSet::parse_compact(std::string_view text) const {
  SubsetMask s;
  for (char c : text) {
    const int i = index_of(std::string_view(&c, 1));
    if (s.contains(i)) throw std::invalid_argument("repeated variable '" + std::string(1, c) + "'");
    s = s.with(i);
  }
  return s;
}

std::vector<std::string> VariableSet::labels_of(SubsetMask s) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (s.contains(i)) out.push_back(label(i));
  }
  return out;
}

std::string VariableSet::key(SubsetMask s) const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (!s.contains(i)) continue;
    if (!out.empty()) out += ',';
    out += label(i);
  }
  return out;
}

std::string VariableSet::pretty(SubsetMask s) const {
  if (s.empty()) return "∅";
  const bool short_labels =
      std::all_of(labels_->begin(), labels_->end(), [](const std::string& l) { return l.size() == 1; });
  if (short_labels) {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (s.contains(i)) out += label(i);
    }
    return out;
  }
  return "{" + key(s) + "}";
}

VariableSet VariableSet::subset(SubsetMask s) const { return VariableSet(labels_of(s)); }

bool VariableSet::is_subset_of(const VariableSet& other) const {
  return std::all_of(labels_->begin(), labels_->end(),
                     [&](const std::string& l) { return other.find(l).has_value(); });
}

SubsetMask VariableSet::image_in(const VariableSet& other) const {
  SubsetMask out;
  for (const auto& l : *labels_) out = out.with(other.index_of(l));
  return out;
}

SubsetMask VariableSet::embed(SubsetMask s, const VariableSet& other) const {
  // Sorted labels keep their relative order in any superset, so embedding is a deposit.
  return SubsetMask(kernels::deposit_bits(s.bits, image_in(other).bits));
}

std::vector<SubsetMask> subsets_of(SubsetMask within) {
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << within.size());
  std::uint32_t s = 0;
  while (true) {
    out.emplace_back(s);
    if (s == within.bits) break;
    s = (s - within.bits) & within.bits;
  }
  return out;
}

}  // namespace supermod
