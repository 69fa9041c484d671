#pragma once

#include <string>
#include <vector>

namespace brt {

/// Edge activity letters. For quasi-trees "live"/"dead"; for spanning trees
/// the same letters mean Tutte-active/inactive.
enum class Activity : char {
  InternalLive = 'L',
  InternalDead = 'D',
  ExternalLive = 'l',
  ExternalDead = 'd',
};

inline bool is_live(Activity a) { return a == Activity::InternalLive || a == Activity::ExternalLive; }
inline bool is_internal(Activity a) { return a == Activity::InternalLive || a == Activity::InternalDead; }

inline Activity make_activity(bool internal, bool live) {
  if (internal) return live ? Activity::InternalLive : Activity::InternalDead;
  return live ? Activity::ExternalLive : Activity::ExternalDead;
}

inline std::string activity_string(const std::vector<Activity>& activities) {
  std::string out;
  out.reserve(activities.size());
  for (Activity a : activities) out.push_back(static_cast<char>(a));
  return out;
}

}  // namespace brt
