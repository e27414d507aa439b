#include "lvder/parallel.hpp"

#include "lvder/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace lvder {

std::size_t worker_count() {
    const char* raw = std::getenv(kThreadsEnv);
    if (raw == nullptr || *raw == '\0') return std::max(1u, std::thread::hardware_concurrency());
    const std::string_view text(raw);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0)
        throw ParseError(std::string(kThreadsEnv) + " must be a positive integer, got '" + std::string(text) + "'");
    return value;
}

}  // namespace lvder
