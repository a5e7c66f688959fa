#include "triage/text.hpp"

#include <array>
#include <cctype>

#include "triage/rng.hpp"

namespace triage {

std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

namespace {

inline bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool is_ascii_punct(unsigned char c) {
  return c < 0x80 && std::ispunct(c) != 0;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char ch : text) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (is_ascii_space(c) || is_ascii_punct(c)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      continue;
    }
    char lc = ch;
    if (lc >= 'A' && lc <= 'Z') lc = static_cast<char>(lc - 'A' + 'a');
    current.push_back(lc);
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string_view trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_ascii_space(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin &&
         is_ascii_space(static_cast<unsigned char>(text[end - 1])))
    --end;
  return text.substr(begin, end - begin);
}

bool is_digits_only(std::string_view token) {
  if (token.empty()) return false;
  for (const char c : token) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool is_code_like(std::string_view token) {
  bool has_letter = false;
  bool has_digit = false;
  for (const char c : token) {
    if (c >= '0' && c <= '9')
      has_digit = true;
    else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))
      has_letter = true;
  }
  return has_letter && has_digit;
}

DiscreteSampler::DiscreteSampler(const std::vector<double>& weights) {
  cumulative_.reserve(weights.size());
  double total = 0.0;
  for (const double w : weights) total += w;
  double acc = 0.0;
  for (const double w : weights) {
    acc += w;
    cumulative_.push_back(total > 0.0 ? acc / total : 0.0);
  }
  if (!cumulative_.empty()) cumulative_.back() = 1.0;
}

std::size_t DiscreteSampler::sample(Rng& rng) const {
  const double u = rng.next_double();
  std::size_t lo = 0;
  std::size_t hi = cumulative_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cumulative_[mid] <= u)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < cumulative_.size() ? lo : cumulative_.size() - 1;
}

double DiscreteSampler::prob(std::size_t i) const {
  if (i >= cumulative_.size()) return 0.0;
  return i == 0 ? cumulative_[0] : cumulative_[i] - cumulative_[i - 1];
}

}  // namespace triage
