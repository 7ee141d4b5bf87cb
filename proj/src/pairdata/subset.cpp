#include "logcoh/pairdata/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace logcoh {

Subset Subset::of(const std::vector<int>& zero_based) {
  std::uint32_t bits = 0;
  for (int i : zero_based) {
    if (i < 0 || i >= 32) throw std::out_of_range("subset element out of range");
    bits |= 1u << i;
  }
  return Subset(bits);
}

Subset Subset::from_one_based(const std::vector<long long>& one_based) {
  std::uint32_t bits = 0;
  for (long long i : one_based) {
    if (i < 1 || i > 32) throw std::out_of_range("subset element out of range");
    bits |= 1u << (i - 1);
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<long long> Subset::one_based() const {
  std::vector<long long> out;
  for (int i : elements()) out.push_back(i + 1);
  return out;
}

std::string Subset::label() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

bool operator<(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ea = a.elements(), eb = b.elements();
  return ea < eb;
}

std::vector<Subset> subsets_of(Subset s) {
  std::vector<Subset> out;
  const std::uint32_t b = s.bits();
  for (std::uint32_t m = b;; m = (m - 1) & b) {
    out.emplace_back(m);
    if (m == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace logcoh
