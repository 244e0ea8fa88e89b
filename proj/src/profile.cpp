#include "rtlab/profile.hpp"

namespace rtlab::profile {

std::vector<Profile> all_profiles(int c, bool oriented_only) {
  std::vector<Profile> out;
  for (Profile p = 0; p < domain_size(c); ++p)
    if (!oriented_only || is_oriented(p, c)) out.push_back(p);
  return out;
}

}  // namespace rtlab::profile
