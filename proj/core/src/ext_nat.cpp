#include "igcob/ext_nat.hpp"

#include <charconv>

namespace igcob {

std::optional<ExtNat> ExtNat::parse(std::string_view text) {
  if (text == "omega") return ExtNat::omega();
  std::uint64_t n = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, n);
  if (text.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return ExtNat(n);
}

}  // namespace igcob
