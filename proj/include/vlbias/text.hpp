#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vlbias {

// One whitespace-delimited token. `core` is `raw` minus leading/trailing
// ASCII punctuation; offsets are byte positions into the source text.
struct Token {
  std::string_view raw;
  std::string_view core;
  std::size_t raw_offset = 0;
  std::size_t core_offset = 0;
  int index = 0;

  bool core_empty() const { return core.empty(); }
  // True when the characters stripped after `core` contain a clause or
  // sentence terminator (. ! ? ; : ,).
  bool trailing_terminator() const;
};

std::vector<Token> tokenize(std::string_view text);

bool is_ascii_punct(char c);
bool is_punct_only(std::string_view s);
std::string ascii_lower(std::string_view s);
bool is_all_upper(std::string_view s);

// Applies the casing pattern of `original` to `replacement`: all-caps input
// yields an all-caps result, a capitalized first letter is preserved,
// anything else is returned as-is (replacements are stored lowercase).
std::string match_case(std::string_view original, std::string_view replacement);

// Returns the byte offset of the first invalid UTF-8 sequence, or nullopt if
// the buffer is valid.
std::optional<std::size_t> utf8_invalid_at(std::string_view s);

// Replaces invalid UTF-8 sequences with U+FFFD.
std::string utf8_sanitize(std::string_view s);

// FNV-1a 64-bit, used to fingerprint data files in reports.
std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

}  // namespace vlbias
