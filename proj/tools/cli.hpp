#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "flagchow/chow.hpp"
#include "flagchow/classifier.hpp"
#include "flagchow/flags.hpp"

namespace flagchow::cli {

// Literal grammars shared by the command-line options. Each throws ParseError
// with a 1-based line:column position.
//
//   context   P(m) | Fbar(d,n)
//   shape     F(d1,...,ds;n)
//   type      (a1,...,ar)
//   case      I | II
//   char      0 | p            (p prime)
//   grouping  (u1,r1),(u2,r2),...
ChowContext parse_context(std::string_view text);
FlagShape parse_shape(std::string_view text);
SplittingType parse_type(std::string_view text);
LineCase parse_case(std::string_view text);
FieldChar parse_char(std::string_view text);
std::vector<HnBlock> parse_grouping(std::string_view text);

// Runs one command. args excludes the program name. Returns the exit code:
// 0 on success, 1 when an audit fails or a verification is false, 2 on
// malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagchow::cli
