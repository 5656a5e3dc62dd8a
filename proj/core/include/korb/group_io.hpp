#pragma once

#include <iosfwd>
#include <string>

#include "korb/perm_group.hpp"

namespace korb {

// ".grp" file format:
//   line 1:            degree n
//   following lines:   one generator per line in disjoint cycle notation,
//                      e.g.  (1 2 3)(4 5)
//   '#' starts a comment; blank lines ignored; zero generator lines is the
//   identity group.
PermGroup read_group(std::istream& in, const std::string& name = "<stream>");
PermGroup read_group_file(const std::string& path);
PermGroup parse_group(const std::string& text, const std::string& name = "<string>");

std::string write_group(const PermGroup& g);
void write_group_file(const PermGroup& g, const std::string& path);

}  // namespace korb
