#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rtlab {

/// Which rainbow triangle is forbidden.
///   Directed:   uv, vw, wu
///   Transitive: uv, vw, uw
enum class TriangleKind { Directed, Transitive };

std::string to_string(TriangleKind k);
std::optional<TriangleKind> parse_triangle_kind(std::string_view s);

}  // namespace rtlab
