#include "igcob/report.hpp"

#include <sstream>

namespace igcob {

const char* to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

Report& Report::set(std::string key, std::string value) {
  for (auto& [k, v] : fields) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string Report::get(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  return {};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "# " << property << ": " << to_string(verdict) << '\n';
  for (const auto& [k, v] : fields) os << "#   " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < witnesses.size(); ++i) os << "# witness " << i + 1 << "\n" << witnesses[i];
  return os.str();
}

std::string Report::to_lines() const {
  std::ostringstream os;
  os << "property=" << property << '\n' << "verdict=" << to_string(verdict) << '\n';
  for (const auto& [k, v] : fields) os << k << '=' << v << '\n';
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    os << "witness[" << i << "]\n";
    std::istringstream lines(witnesses[i]);
    for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
  }
  return os.str();
}

}  // namespace igcob
