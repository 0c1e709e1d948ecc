#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "verl/group.hpp"

namespace verl {

/// A group loaded from a definition document plus its named subgroups.
struct GroupDefinition {
  FiniteGroup group;
  std::map<std::string, Subgroup> subgroups;
};

/**
 * Group definition documents are JSON:
 *
 *   { "group": <def>, "labels": [...], "subgroups": { "H": {"generators": [...]},
 *                                                      "K": {"members": [...]} } }
 *
 * where <def> is one of {"table": [[...]]}, {"cyclic": n}, {"dihedral": n},
 * {"symmetric": n} or {"product": [<def>, <def>, ...]}, optionally with its
 * own "labels". A bare <def> at top level is accepted too.
 *
 * Syntax errors raise ParseError with line and column; invalid groups or
 * unresolved labels raise ValidationError.
 */
GroupDefinition parse_group_text(std::string_view text);
GroupDefinition parse_group_file(const std::filesystem::path& path);

}  // namespace verl
