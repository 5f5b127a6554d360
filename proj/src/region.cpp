#include "eqstop/region.hpp"

#include <algorithm>

#include "eqstop/errors.hpp"

namespace eqstop {

StoppingRegion::StoppingRegion(std::vector<int> members, int n_states)
    : n_(n_states) {
  if (n_states < 0 || n_states > 64)
    raise(Errc::InvalidArgument,
          "region operations support between 0 and 64 states, got " +
              std::to_string(n_states));
  for (int i : members) {
    if (i < 0 || i >= n_states)
      raise(Errc::InvalidArgument,
            "state index " + std::to_string(i) + " out of range");
    mask_ |= std::uint64_t{1} << i;
  }
  members_.clear();
  for (int i = 0; i < n_states; ++i)
    if (mask_ >> i & 1u) members_.push_back(i);
}

StoppingRegion StoppingRegion::from_mask(std::uint64_t mask, int n_states) {
  StoppingRegion r;
  r.n_ = n_states;
  if (n_states < 0 || n_states > 64)
    raise(Errc::InvalidArgument, "region mask limited to 64 states");
  if (n_states < 64 && (mask >> n_states) != 0)
    raise(Errc::InvalidArgument, "region mask has bits beyond state count");
  r.mask_ = mask;
  for (int i = 0; i < n_states; ++i)
    if (mask >> i & 1u) r.members_.push_back(i);
  return r;
}

StoppingRegion StoppingRegion::all(int n_states) {
  if (n_states <= 0 || n_states > 64)
    raise(Errc::InvalidArgument, "region mask limited to 64 states");
  std::uint64_t mask = n_states == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << n_states) - 1;
  return from_mask(mask, n_states);
}

StoppingRegion StoppingRegion::empty(int n_states) {
  return from_mask(0, n_states);
}

std::vector<int> StoppingRegion::complement() const {
  std::vector<int> out;
  out.reserve(n_ - size());
  for (int i = 0; i < n_; ++i)
    if (!(mask_ >> i & 1u)) out.push_back(i);
  return out;
}

StoppingRegion StoppingRegion::with(int state) const {
  if (state < 0 || state >= n_)
    raise(Errc::InvalidArgument, "state index out of range");
  return from_mask(mask_ | (std::uint64_t{1} << state), n_);
}

StoppingRegion StoppingRegion::without(int state) const {
  if (state < 0 || state >= n_)
    raise(Errc::InvalidArgument, "state index out of range");
  return from_mask(mask_ & ~(std::uint64_t{1} << state), n_);
}

}  // namespace eqstop
