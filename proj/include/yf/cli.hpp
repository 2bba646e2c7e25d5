#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace yf {

enum class OutputFormat { plain, json, csv, dot };

/// Throws std::invalid_argument for unknown names.
OutputFormat parse_output_format(std::string_view name);

/// Hasse diagram of YF^K up to `max_rank` in Graphviz DOT. Nodes are
/// ordered by (rank, lexicographic) and grouped into one rank per level.
std::string hasse_dot(std::size_t max_rank, std::optional<std::size_t> max_twos);

/// Command-line entry point. `args` excludes the program name. Returns 0 on
/// success, 2 on invalid input and 1 on a runtime failure.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace yf
