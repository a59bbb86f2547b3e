#pragma once

#include <map>
#include <string>

#include "potalg/ncpoly.hpp"

namespace potalg {

using ParamMap = std::map<std::string, Scalar>;

// Polynomial text format. Accepted grammar (whitespace ignored):
//   poly    = ["+"|"-"] term (("+"|"-") term)*
//   term    = factor (("*"|"/") factor)*        division only by scalars
//   factor  = ["-"] primary ["^" ["-"] int]     negative powers only for scalars
//   primary = int | name | "(" poly ")" | "cyc(" poly ")"
// Names: generators (x,y,z for n <= 3, else x1..xn), runs of generator letters
// such as "xzy" for n <= 3, constants theta, i, xi8, xi9, zeta72, and any
// parameter bound in `params`.
NcPoly parse_ncpoly(const std::string& text, int n, const FieldSpec& spec, const ParamMap& params = {});
Scalar parse_scalar(const std::string& text, const FieldSpec& spec, const ParamMap& params = {});

std::string print_word(int n, const Word& w);
std::string print_ncpoly(const NcPoly& p);

}  // namespace potalg
