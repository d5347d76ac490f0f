#include "vlbias/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace vlbias {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

constexpr std::string_view kTerminators = ".!?;:,";

}  // namespace

bool is_ascii_punct(char c) {
  unsigned char uc = static_cast<unsigned char>(c);
  return uc < 0x80 && std::ispunct(uc) != 0;
}

bool is_punct_only(std::string_view s) {
  if (s.empty()) return true;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ascii_punct(c); });
}

bool Token::trailing_terminator() const {
  std::size_t core_end = core_offset - raw_offset + core.size();
  std::string_view tail = raw.substr(core_end);
  return std::any_of(tail.begin(), tail.end(), [](char c) {
    return kTerminators.find(c) != std::string_view::npos;
  });
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  int index = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    Token tok;
    tok.raw = text.substr(start, i - start);
    tok.raw_offset = start;
    tok.index = index++;
    std::size_t lo = 0;
    std::size_t hi = tok.raw.size();
    while (lo < hi && is_ascii_punct(tok.raw[lo])) ++lo;
    while (hi > lo && is_ascii_punct(tok.raw[hi - 1])) --hi;
    tok.core = tok.raw.substr(lo, hi - lo);
    tok.core_offset = start + lo;
    tokens.push_back(tok);
  }
  return tokens;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool is_all_upper(std::string_view s) {
  bool saw_alpha = false;
  for (char c : s) {
    if (c >= 'a' && c <= 'z') return false;
    if (c >= 'A' && c <= 'Z') saw_alpha = true;
  }
  return saw_alpha;
}

std::string match_case(std::string_view original, std::string_view replacement) {
  std::string out(replacement);
  if (original.empty() || out.empty()) return out;
  if (is_all_upper(original) && original.size() > 1) {
    for (char& c : out) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return out;
  }
  if (original[0] >= 'A' && original[0] <= 'Z' && out[0] >= 'a' && out[0] <= 'z') {
    out[0] = static_cast<char>(out[0] - 'a' + 'A');
  }
  return out;
}

std::optional<std::size_t> utf8_invalid_at(std::string_view s) {
  std::size_t i = 0;
  const auto n = s.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return i;
    }
    i += len;
  }
  return std::nullopt;
}

std::string utf8_sanitize(std::string_view s) {
  static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto bad = utf8_invalid_at(s.substr(i));
    if (!bad) {
      out.append(s.substr(i));
      break;
    }
    out.append(s.substr(i, *bad));
    out.append(kReplacement);
    i += *bad + 1;
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view s) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::uint64_t h = fnv1a64(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace vlbias
