#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pvc::cli {

// CRC-32 of the bytes, as eight lowercase hex digits.
std::string crc32_hex(std::string_view bytes);

// One run, rendered as a single `key=value` line or as a JSON object. Keys
// keep insertion order so records diff cleanly.
class RunRecord {
 public:
  RunRecord& add(std::string key, nlohmann::json value);

  std::string line() const;
  nlohmann::json json() const;
  const nlohmann::json* find(std::string_view key) const;

 private:
  std::vector<std::pair<std::string, nlohmann::json>> fields_;
};

std::string format_double(double x);

}  // namespace pvc::cli
