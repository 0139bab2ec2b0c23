#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace igcob {

enum class Verdict : std::uint8_t { Pass, Fail };

const char* to_string(Verdict v);

/// Outcome of a checker or a campaign. Fields keep insertion order so the
/// serialized forms are deterministic.
struct Report {
  std::string property;
  Verdict verdict = Verdict::Pass;
  std::vector<std::pair<std::string, std::string>> fields;
  /// Replayable instances (file-format text) or other multi-line evidence.
  std::vector<std::string> witnesses;

  bool passed() const { return verdict == Verdict::Pass; }

  Report& set(std::string key, std::string value);
  Report& set(std::string key, std::uint64_t value) { return set(std::move(key), std::to_string(value)); }
  /// Empty string when absent.
  std::string get(std::string_view key) const;

  /// Human-readable block. Everything but the witnesses is a `#` comment, so
  /// the text parses as an instance file whose first blocks are witness 1.
  std::string to_text() const;
  /// One `key=value` record per line, prefixed by `property=` and `verdict=`;
  /// witnesses follow as `witness[i]` headers with the raw text indented by two spaces.
  std::string to_lines() const;
};

}  // namespace igcob
