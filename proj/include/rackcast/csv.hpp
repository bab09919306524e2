#pragma once

#include <string>
#include <vector>

namespace rackcast::csv {

/// Split one CSV line on commas. Supports double-quoted fields with ""
/// escapes; surrounding whitespace of unquoted fields is trimmed.
std::vector<std::string> split_line(const std::string& line);

/// Quote a field if it contains a comma, quote, or newline.
std::string escape(const std::string& field);

/// Shortest decimal string that round-trips the exact double value.
std::string format_double(double v);

/// Strict full-string parses; return false on trailing garbage or overflow.
bool parse_double(const std::string& s, double& out);
bool parse_long(const std::string& s, long long& out);

} // namespace rackcast::csv
