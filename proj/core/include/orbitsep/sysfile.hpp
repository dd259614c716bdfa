#pragma once

#include <map>
#include <optional>
#include <string>

#include "orbitsep/dynsys.hpp"

namespace orbitsep {

// Parsed system-definition file. Line-oriented grammar:
//   field: QQ            or   field: Fp 1000003
//   vars: x, y
//   monoid: true|false
//   gen: <expr>, <expr>, ...        (one line per generator)
//   point <name>: <rational>, ...   (rationals as a or a/b)
// '#' starts a comment; blank lines are ignored.
struct SystemFile {
  Field field;
  std::vector<std::string> vars;
  bool monoid = false;
  std::vector<SelfMap> generator_maps;
  std::map<std::string, Point> named_points;

  SemigroupSpec spec() const { return SemigroupSpec(generator_maps, monoid); }
};

SystemFile parse_system(std::string_view text);
SystemFile load_system(const std::string& path);

// "a" or "a/b" (signed) into the given field
FieldElem parse_coordinate(std::string_view text, Field f, int line_no);

}  // namespace orbitsep
