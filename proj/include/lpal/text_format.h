// Copyright 2026 The LPAL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-oriented text formats. `#` starts a comment; blank lines are ignored.
//
// Instance:
//   vertices <n>
//   dfix <rational>
//   cfix <rational>
//   edge <u> <v> <cost> <fmin> <fmax|inf>      (one per edge, in index order)
//
// Line concept:
//   line <frequency> <v0> <v1> ... <vk>
//
// Partial Latin square:
//   square <p>
//   row <c1> ... <cp>                          (p rows; 0 marks an empty cell)

#ifndef LPAL_TEXT_FORMAT_H_
#define LPAL_TEXT_FORMAT_H_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lpal/instance.h"
#include "lpal/line_concept.h"
#include "lpal/reductions.h"

namespace lpal {

// Parse failures throw Error(kParseError) with a "line N: ..." message;
// structurally invalid instances throw Error(kInvalidInstance).
Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);

struct ParsedConcept {
  LineConcept lines;
  // One message per duplicate line that was merged into an earlier entry.
  std::vector<std::string> warnings;
};
ParsedConcept parse_concept(std::istream& in);
ParsedConcept parse_concept(std::string_view text);

PartialLatinSquare parse_latin_square(std::istream& in);

void write_instance(std::ostream& out, const Instance& instance);
std::string to_text(const Instance& instance);

// Writes lines in canonical orientation, sorted by endpoint pair.
void write_concept(std::ostream& out, const LineConcept& lines);
std::string to_text(const LineConcept& lines);

std::string frequency_to_string(Frequency f);

}  // namespace lpal

#endif  // LPAL_TEXT_FORMAT_H_
