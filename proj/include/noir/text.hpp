#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace noir {

// Decode the UTF-8 code point starting at `pos`; advances `pos` past it.
// Invalid bytes are passed through one at a time as their byte value.
char32_t next_codepoint(std::string_view s, std::size_t& pos);

// Unicode whitespace (ASCII space/tab/newlines plus the common space-like
// code points: NBSP, en/em spaces, ideographic space, ...).
bool is_unicode_space(char32_t cp);

std::size_t count_codepoints(std::string_view s);

// Collapse every whitespace run to a single ASCII space and trim the ends.
std::string collapse_whitespace(std::string_view s);

// Shortest decimal form that round-trips the exact double value.
std::string format_double(double v);
double parse_double(std::string_view s);

// Minimal CSV: fields containing comma, quote, or newline are quoted.
std::string csv_escape(std::string_view field);
std::vector<std::string> csv_split(std::string_view line);

std::string read_file(const std::string& path);

}  // namespace noir
