#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace logcoh {

/// Subset of {0, ..., 31} stored as a bitmask. Component i of a pair is bit i;
/// file formats and reports use 1-based indices.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset of(const std::vector<int>& zero_based);
  static Subset from_one_based(const std::vector<long long>& one_based);
  static constexpr Subset full(int k) { return Subset(k >= 32 ? ~0u : ((1u << k) - 1)); }

  constexpr std::uint32_t bits() const { return bits_; }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  bool is_subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  Subset without(int i) const { return Subset(bits_ & ~(1u << i)); }
  Subset with(int i) const { return Subset(bits_ | (1u << i)); }

  std::vector<int> elements() const;
  std::vector<long long> one_based() const;
  /// "{1,3}" style label.
  std::string label() const;

  /// Orders by size, then lexicographically on the sorted elements.
  friend bool operator<(Subset a, Subset b);
  friend constexpr bool operator==(Subset a, Subset b) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Every subset of s, in the Subset order.
std::vector<Subset> subsets_of(Subset s);

}  // namespace logcoh
