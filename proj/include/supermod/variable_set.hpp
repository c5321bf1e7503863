#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace supermod {

/// A subset of a VariableSet: bit i set iff the i-th (sorted) label is present.
struct SubsetMask {
  std::uint32_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

  [[nodiscard]] constexpr bool contains(int i) const { return ((bits >> i) & 1u) != 0; }
  [[nodiscard]] constexpr bool contains(SubsetMask other) const {
    return (other.bits & ~bits) == 0;
  }
  [[nodiscard]] constexpr bool empty() const { return bits == 0; }
  [[nodiscard]] int size() const { return __builtin_popcount(bits); }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits | o.bits); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits & o.bits); }
  /// Set difference.
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits & ~o.bits); }
  constexpr SubsetMask with(int i) const { return SubsetMask(bits | (1u << i)); }
  constexpr SubsetMask without(int i) const { return SubsetMask(bits & ~(1u << i)); }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;
};

constexpr SubsetMask singleton(int i) { return SubsetMask(1u << i); }

/// Ordered, immutable set of variable labels. Cheap to copy (shared storage).
class VariableSet {
 public:
  static constexpr int kMaxSize = 16;

  /// Sorts the labels. Throws std::invalid_argument on empty/duplicate labels
  /// or a size outside [1, kMaxSize].
  explicit VariableSet(std::vector<std::string> labels);

  /// The first n lowercase letters: a, b, c, ...
  static VariableSet letters(int n);

  [[nodiscard]] int size() const { return static_cast<int>(labels_->size()); }
  [[nodiscard]] std::size_t power_size() const { return std::size_t{1} << size(); }
  [[nodiscard]] const std::string& label(int i) const { return (*labels_)[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return *labels_; }
  [[nodiscard]] SubsetMask full() const { return SubsetMask(static_cast<std::uint32_t>(power_size() - 1)); }
  [[nodiscard]] bool valid(SubsetMask s) const { return s.bits < power_size(); }

  [[nodiscard]] std::optional<int> find(std::string_view label) const;
  /// Throws std::invalid_argument for an unknown label.
  [[nodiscard]] int index_of(std::string_view label) const;

  /// Throws std::invalid_argument for unknown or repeated labels.
  [[nodiscard]] SubsetMask mask_of(const std::vector<std::string>& labels) const;
  /// Parses comma-separated labels ("" is the empty set).
  [[nodiscard]] SubsetMask parse_mask(std::string_view text) const;
  /// Parses juxtaposed single-character labels ("abc"); requires every label
  /// to be one character.
  [[nodiscard]] SubsetMask parse_compact(std::string_view text) const;
  [[nodiscard]] std::vector<std::string> labels_of(SubsetMask s) const;
  /// Comma-joined sorted labels; the empty set is "".
  [[nodiscard]] std::string key(SubsetMask s) const;
  /// Human-readable: concatenated labels when all are single characters
  /// ("abc"), braces otherwise; the empty set prints as "∅".
  [[nodiscard]] std::string pretty(SubsetMask s) const;

  /// The variable set restricted to the labels in s.
  [[nodiscard]] VariableSet subset(SubsetMask s) const;
  [[nodiscard]] bool is_subset_of(const VariableSet& other) const;
  /// Re-encodes s (a subset of *this) as a subset of a superset `other`.
  [[nodiscard]] SubsetMask embed(SubsetMask s, const VariableSet& other) const;
  /// Mask of *this's labels inside a superset `other`.
  [[nodiscard]] SubsetMask image_in(const VariableSet& other) const;

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Every subset of `within`, in increasing mask order.
std::vector<SubsetMask> subsets_of(SubsetMask within);

}  // namespace supermod
