#include "record.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include <boost/crc.hpp>

namespace pvc::cli {

std::string crc32_hex(std::string_view bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
  return buf;
}

RunRecord& RunRecord::add(std::string key, nlohmann::json value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string RunRecord::line() const {
  std::string out;
  for (const auto& [key, value] : fields_) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    if (value.is_string()) {
      const auto& s = value.get_ref<const std::string&>();
      const bool plain = !s.empty() && s.find_first_of(" \t\n\"=") == std::string::npos;
      out += plain ? s : value.dump();
    } else {
      out += value.dump();
    }
  }
  return out;
}

nlohmann::json RunRecord::json() const {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [key, value] : fields_) obj[key] = value;
  return obj;
}

const nlohmann::json* RunRecord::find(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

}  // namespace pvc::cli
