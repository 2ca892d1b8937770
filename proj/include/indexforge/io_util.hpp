#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace indexforge {

// Shortest round-trip decimal form (std::to_chars); locale-free and
// deterministic, so repeated runs emit byte-identical files.
std::string format_double(double value);

// Strict full-string parse; throws UsageError on failure.
double parse_double_strict(std::string_view text, const std::string& what);

std::vector<std::string> split(std::string_view text, char sep);

std::string xml_escape(std::string_view text);

}  // namespace indexforge
