#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace fairdiff::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

/// Appends the little-endian encoding of a trivially copyable value.
template <class T>
void put_le(std::string& out, T value) {
  unsigned char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    for (size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(buf[i], buf[sizeof(T) - 1 - i]);
  }
  out.append(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
T get_le(const std::string& in, size_t& pos);

std::string encode_floats(const float* data, size_t n);
std::vector<float> decode_floats(const std::string& bytes);

std::string hex64(uint64_t v);

}  // namespace fairdiff::io
