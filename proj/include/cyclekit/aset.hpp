#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cyclekit {

enum class AsetKind { even, odd, divisible, min_length, explicit_list };

// Tagged source of a cycle-length set. `complemented` models the `~` prefix,
// so taking the complement twice restores both the members and the tag.
struct AsetSpec {
  AsetKind kind = AsetKind::even;
  int param = 0;            // d for divisible, m for min_length
  std::vector<int> values;  // members for explicit_list
  bool complemented = false;
};

// The set A of allowed cycle lengths, stored truncated to [1..n_max].
// Every formula at size N only ever inspects lengths <= N, so callers
// construct with n_max at least as large as the biggest N they will query.
// Immutable after construction.
class CycleLengthSet {
 public:
  CycleLengthSet(const AsetSpec& spec, int n_max);

  int n_max() const { return n_max_; }

  bool contains(int r) const { return member_[static_cast<size_t>(r - 1)]; }

  const AsetSpec& spec() const { return spec_; }

  // Canonical CLI syntax, e.g. "even", "~div:3", "set:1,4".
  std::string describe() const;

  bool same_members(const CycleLengthSet& other) const {
    return n_max_ == other.n_max_ && member_ == other.member_;
  }

 private:
  friend CycleLengthSet complement_aset(const CycleLengthSet& a);
  CycleLengthSet() = default;

  int n_max_ = 0;
  std::vector<bool> member_;  // index r-1 for r in [1..n_max]
  AsetSpec spec_;
};

CycleLengthSet make_aset(const AsetSpec& spec, int n_max);
CycleLengthSet complement_aset(const CycleLengthSet& a);

// CLI syntax: `even`, `odd`, `div:<d>`, `min:<m>`, `set:<comma-list>`,
// with optional `~` prefix for the complement.
AsetSpec parse_aset_spec(std::string_view text);
std::string format_aset_spec(const AsetSpec& spec);

}  // namespace cyclekit
