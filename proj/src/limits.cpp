#include "alttam/limits.hpp"

#include <cstdlib>
#include <string>

namespace alttam {
namespace {

int env_cap(int fallback) {
  const char* raw = std::getenv("ALT_TAMARI_MAX_N");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    int value = std::stoi(raw);
    return value > 0 ? value : fallback;
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace

int path_cap() { return env_cap(kDefaultPathCap); }
int poset_cap() { return env_cap(kDefaultPosetCap); }
int hasse_cap() { return env_cap(kDefaultHasseCap); }

}  // namespace alttam
