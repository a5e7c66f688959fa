#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace triage {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

// 64-bit FNV-1a over raw bytes. This is the one hash used for feature
// bucketing, fingerprints and seed derivation; it must stay bit-stable.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t h = kFnvOffset) {
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

// Lowercases ASCII letters in place; leaves multi-byte UTF-8 untouched.
std::string ascii_lower(std::string_view text);

// Lowercase + split on whitespace and ASCII punctuation. Empty tokens are
// dropped. This is the tokenizer used by the classifiers.
std::vector<std::string> tokenize(std::string_view text);

// Strips leading/trailing ASCII whitespace.
std::string_view trim(std::string_view text);

bool is_digits_only(std::string_view token);
// Mixed letters+digits, e.g. part numbers like "tpm48180".
bool is_code_like(std::string_view token);

}  // namespace triage
