#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gidx {

inline constexpr const char* kToolName = "gidx";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

// Canonical float formatting for reports: %.17g, with a trailing ".0" forced
// onto integral values so the token stays a JSON number of float type.
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view data);
std::string hash_hex(std::string_view data);  // 16 lowercase hex digits

// Minimal deterministic JSON emitter: insertion-ordered fields, canonical
// float formatting, no whitespace variation between runs.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long long v);
  JsonWriter& value(bool v);
  JsonWriter& null();

  // key + value in one call
  template <typename T>
  JsonWriter& field(std::string_view k, T v) {
    key(k);
    return value(v);
  }

  std::string str() const { return out_; }

 private:
  void comma_if_needed();
  void escape_into(std::string_view s);

  std::string out_;
  std::vector<bool> first_;  // per open container: next element is the first
  bool pending_key_ = false;
};

}  // namespace gidx
