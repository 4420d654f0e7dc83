#pragma once

// Flat `dotted.key = value` configuration files. Lines starting with '#'
// are comments. Command-line flags are applied on top with set().

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fairdiff {

class FlatConfig {
 public:
  static FlatConfig parse(const std::string& text, const std::string& source = "<config>");
  static FlatConfig load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  const std::map<std::string, std::string>& values() const { return values_; }
  /// Directory of the file this config was loaded from (empty for in-memory text).
  const std::filesystem::path& base_dir() const { return base_dir_; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  uint64_t get_u64(const std::string& key, uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<size_t> get_sizes(const std::string& key, const std::vector<size_t>& fallback) const;
  std::vector<std::string> get_list(const std::string& key) const;

  std::string dump() const;

 private:
  std::map<std::string, std::string> values_;
  std::filesystem::path base_dir_;
};

}  // namespace fairdiff
