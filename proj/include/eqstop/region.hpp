#ifndef EQSTOP_REGION_HPP
#define EQSTOP_REGION_HPP

#include <cstdint>
#include <vector>

namespace eqstop {

/// Subset of a chain's states marked for stopping. Membership is kept both as
/// a sorted index list and as a bitmask (chains used with region operations
/// are limited to 64 states).
class StoppingRegion {
 public:
  StoppingRegion() = default;
  StoppingRegion(std::vector<int> members, int n_states);
  static StoppingRegion from_mask(std::uint64_t mask, int n_states);
  static StoppingRegion all(int n_states);
  static StoppingRegion empty(int n_states);

  bool contains(int i) const { return i >= 0 && i < n_ && (mask_ >> i & 1u); }
  const std::vector<int>& members() const { return members_; }
  std::vector<int> complement() const;
  int n_states() const { return n_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool is_empty() const { return members_.empty(); }
  std::uint64_t mask() const { return mask_; }

  StoppingRegion with(int state) const;
  StoppingRegion without(int state) const;
  bool subset_of(const StoppingRegion& other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  friend bool operator==(const StoppingRegion& a, const StoppingRegion& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }

 private:
  std::vector<int> members_;
  std::uint64_t mask_ = 0;
  int n_ = 0;
};

}  // namespace eqstop

#endif
