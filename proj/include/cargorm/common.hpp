#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cargorm {

// Configuration / input-file problems (CLI exit code 2).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or insufficient data (CLI exit code 2).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant (CLI exit code 3).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Independent per-flight RNG streams: every (phase, index) pair gets its own
// seed so flights can run in any order or thread without desynchronizing.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t phase, std::uint64_t index) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s ^= (phase + 1) * 0xD1342543DE82EF95ULL;
  std::uint64_t b = splitmix64(s);
  s ^= (index + 1) * 0xAF251AF3B0F025B5ULL;
  std::uint64_t c = splitmix64(s);
  return a ^ (b << 1) ^ c;
}

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Shortest round-trip decimal form; identical bytes on every run of the same
// binary, which the deterministic-CSV requirements rely on.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string version_string() { return "cargorm 0.1.0"; }

}  // namespace cargorm
