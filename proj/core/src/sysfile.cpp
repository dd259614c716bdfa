#include "orbitsep/sysfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "orbitsep/expr.hpp"

namespace orbitsep {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

FieldElem parse_coordinate(std::string_view text, Field f, int line_no) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty coordinate", line_no, 1);
  std::size_t slash = s.find('/');
  try {
    mpq_class q;
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s));
    } else {
      mpz_class num(trim(s.substr(0, slash)));
      mpz_class den(trim(s.substr(slash + 1)));
      if (den == 0)
        throw ParseError("zero literal denominator", line_no, 1);
      q = mpq_class(num, den);
      q.canonicalize();
    }
    FieldElem v = FieldElem::rational(q);
    return f.rational() ? v : v.to_field(f);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed coordinate '" + s + "'", line_no, 1);
  }
}

SystemFile parse_system(std::string_view text) {
  SystemFile sys;
  bool have_field = false, have_vars = false, have_monoid = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", line_no, 1);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));

    if (key == "field") {
      std::istringstream vs(value);
      std::string name;
      vs >> name;
      if (name == "QQ") {
        sys.field = kRationals;
      } else if (name == "Fp") {
        unsigned long p = 0;
        if (!(vs >> p))
          throw ParseError("Fp needs a modulus", line_no, 1);
        if (!is_prime_modulus(p))
          throw ParseError("modulus " + std::to_string(p) + " is not prime",
                           line_no, 1);
        sys.field = Field{p};
      } else {
        throw ParseError("field must be QQ or Fp <prime>", line_no, 1);
      }
      std::string rest;
      if (vs >> rest)
        throw ParseError("trailing input after field", line_no, 1);
      have_field = true;
    } else if (key == "vars") {
      sys.vars = split_commas(value);
      for (const std::string& v : sys.vars)
        if (!valid_identifier(v))
          throw ParseError("bad variable name '" + v + "'", line_no, 1);
      if (sys.vars.empty())
        throw ParseError("vars must list at least one variable", line_no, 1);
      have_vars = true;
    } else if (key == "monoid") {
      if (value == "true")
        sys.monoid = true;
      else if (value == "false")
        sys.monoid = false;
      else
        throw ParseError("monoid must be true or false", line_no, 1);
      have_monoid = true;
    } else if (key == "gen") {
      if (!have_field || !have_vars)
        throw ParseError("gen before field/vars", line_no, 1);
      std::vector<std::string> parts = split_commas(value);
      if (parts.size() != sys.vars.size())
        throw ParseError("generator needs " +
                             std::to_string(sys.vars.size()) + " components",
                         line_no, 1);
      std::vector<RatFunc> comps;
      comps.reserve(parts.size());
      for (const std::string& part : parts)
        comps.push_back(parse_expression(part, sys.vars, sys.field, line_no));
      sys.generator_maps.emplace_back(std::move(comps));
    } else if (key.rfind("point ", 0) == 0 || key == "point") {
      std::string name = trim(key.substr(5));
      if (!valid_identifier(name))
        throw ParseError("point needs a name", line_no, 1);
      if (!have_field || !have_vars)
        throw ParseError("point before field/vars", line_no, 1);
      std::vector<std::string> parts = split_commas(value);
      if (parts.size() != sys.vars.size())
        throw ParseError("point needs " + std::to_string(sys.vars.size()) +
                             " coordinates",
                         line_no, 1);
      Point pt;
      pt.reserve(parts.size());
      for (const std::string& part : parts)
        pt.push_back(parse_coordinate(part, sys.field, line_no));
      sys.named_points[name] = std::move(pt);
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
  }

  if (!have_field) throw ParseError("missing 'field:' line", line_no, 1);
  if (!have_vars) throw ParseError("missing 'vars:' line", line_no, 1);
  if (!have_monoid) throw ParseError("missing 'monoid:' line", line_no, 1);
  if (sys.generator_maps.empty())
    throw ParseError("system needs at least one 'gen:' line", line_no, 1);
  return sys;
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open system file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

}  // namespace orbitsep
