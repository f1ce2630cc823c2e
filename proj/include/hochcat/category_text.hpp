#pragma once

#include "hochcat/finite_category.hpp"

#include <string>
#include <string_view>

namespace hochcat {

// Line-oriented category format, '#' starts a comment:
//
//   object <name>
//   morphism <name> : <src> -> <tgt> [identity]
//   compose <g> <f> = <h>          # g∘f = h
//
// Compositions involving an identity may be omitted.

/// Throws CategoryError(ParseError) with a `line` field on malformed input.
RawCategory parse_category_text(std::string_view text);

/// The canonical description of cat; parse_category_text inverts it.
std::string format_category(const FiniteCategory& cat);

/// Reads and validates a category file. Throws CategoryError(FileNotFound)
/// if the file cannot be read.
FiniteCategory load_category_file(const std::string& path);

} // namespace hochcat
