// Surface syntax: `def name : TYPE := TERM`, one declaration per def.

#ifndef FIBCAT_PARSER_HPP
#define FIBCAT_PARSER_HPP

#include <string>
#include <vector>

#include "fibcat/typecheck.hpp"

namespace fibcat {

struct parse_error : std::runtime_error {
  int line, col;
  parse_error(const std::string& m, int l, int c)
      : std::runtime_error(m + " at " + std::to_string(l) + ":" +
                           std::to_string(c)),
        line(l),
        col(c) {}
};

struct decl {
  std::string name;
  term type; // ascription (always present)
  term body;
};

// Parse a whole source file. References to earlier declarations are
// resolved by inlining their bodies; duplicates are an error.
std::vector<decl> parse_file(const std::string& source);

// Parse a single closed term (no declaration wrapper).
term parse_term(const std::string& source);

// Typecheck declarations in order.
void check_decls(const checker& ck, const std::vector<decl>& ds);

std::string print_decl(const decl& d);

} // namespace fibcat

#endif
