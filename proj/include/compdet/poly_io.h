/* Copyright 2026 The compdet Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef COMPDET_POLY_IO_H_
#define COMPDET_POLY_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "compdet/factored.h"
#include "compdet/poly.h"

namespace compdet {

struct FormatOptions {
  // "x1+x2+1" instead of "x1 + x2 + 1".
  bool compact = false;
  // Print the single variable of a univariate polynomial as "x".
  bool bare_x = false;
};

// Monomials in graded lexicographic order, variables named x1..xv:
//   "x1^2 - 2*x1*x2 + 3"; the zero polynomial is "0".
std::string format(const MultiPoly& f, FormatOptions options = {});

// "c*(base)^e*..." with integer bases printed bare ("2^3") and exponent 1
// omitted, e.g. "2*(x1+x2+2)^3". A constant of -1 prints as a leading "-1*".
std::string format(const FactoredForm& f,
                   FormatOptions options = {.compact = true});

// Grammar: poly := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := integer | var ['^' integer]; var := 'x' index | 'x'.
// When nvars is omitted it is the largest variable index that occurs.
// Throws ParseError with the offending position.
MultiPoly parse_poly(std::string_view text, std::optional<int> nvars = {});

// Grammar: form := ['-'] item ('*' item)*;
// item := integer ['^' integer] | '(' poly ')' ['^' integer].
FactoredForm parse_factored(std::string_view text,
                            std::optional<int> nvars = {});

// {"nvars": v, "terms": [{"exps": [...], "coeff": "<decimal>"}]}
nlohmann::json to_json(const MultiPoly& f);
MultiPoly poly_from_json(const nlohmann::json& j);

// {"constant": "<decimal>", "factors": [{"base": <poly>, "exp": e}]}
nlohmann::json to_json(const FactoredForm& f);
FactoredForm factored_from_json(const nlohmann::json& j);

}  // namespace compdet

#endif  // COMPDET_POLY_IO_H_
