#include "rqit/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace rqit {

unsigned thread_limit() {
  if (const char* env = std::getenv("RQIT_THREADS")) {
    const std::string_view text(env);
    unsigned value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && end == text.data() + text.size() && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace rqit
