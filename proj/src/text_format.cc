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

#include "lpal/text_format.h"

#include <charconv>
#include <optional>
#include <sstream>

#include "lpal/error.h"

namespace lpal {
namespace {

// Splits the input into whitespace-separated tokens per line, dropping
// comments and blank lines, and remembers the 1-based line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.resize(hash);
      }
      tokens_.clear();
      std::istringstream split(raw);
      std::string token;
      while (split >> token) tokens_.push_back(token);
      if (!tokens_.empty()) return true;
    }
    return false;
  }

  const std::vector<std::string>& tokens() const { return tokens_; }
  int line_number() const { return line_number_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_number_) + ": " + message);
  }

  void expect_arity(std::size_t count) const {
    if (tokens_.size() != count) {
      fail("'" + tokens_[0] + "' expects " + std::to_string(count - 1) +
           " argument(s)");
    }
  }

  std::int64_t integer(std::size_t index) const {
    const std::string& token = tokens_[index];
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail("expected an integer, got '" + token + "'");
    }
    return value;
  }

  Rational rational(std::size_t index) const {
    try {
      return Rational::parse(tokens_[index]);
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  Frequency frequency_bound(std::size_t index) const {
    if (tokens_[index] == "inf") return kInfiniteFrequency;
    return integer(index);
  }

 private:
  std::istream& in_;
  std::vector<std::string> tokens_;
  int line_number_ = 0;
};

}  // namespace

std::string frequency_to_string(Frequency f) {
  return is_infinite(f) ? "inf" : std::to_string(f);
}

Instance parse_instance(std::istream& in) {
  LineReader reader(in);
  std::optional<std::int64_t> vertices;
  std::optional<Rational> dfix;
  std::optional<Rational> cfix;
  std::vector<EdgeSpec> edges;
  while (reader.next()) {
    const std::string& keyword = reader.tokens()[0];
    if (keyword == "vertices") {
      reader.expect_arity(2);
      if (vertices) reader.fail("duplicate 'vertices'");
      vertices = reader.integer(1);
      if (*vertices < 1 || *vertices > (std::int64_t{1} << 30)) {
        reader.fail("vertex count out of range");
      }
    } else if (keyword == "dfix" || keyword == "cfix") {
      reader.expect_arity(2);
      auto& slot = keyword == "dfix" ? dfix : cfix;
      if (slot) reader.fail("duplicate '" + keyword + "'");
      slot = reader.rational(1);
    } else if (keyword == "edge") {
      reader.expect_arity(6);
      EdgeSpec spec;
      spec.u = static_cast<Vertex>(reader.integer(1));
      spec.v = static_cast<Vertex>(reader.integer(2));
      spec.cost = reader.rational(3);
      spec.fmin = reader.integer(4);
      spec.fmax = reader.frequency_bound(5);
      if (vertices && (spec.u < 0 || spec.v < 0 || spec.u >= *vertices ||
                       spec.v >= *vertices)) {
        reader.fail("edge endpoint out of range");
      }
      edges.push_back(spec);
    } else {
      reader.fail("unknown directive '" + keyword + "'");
    }
  }
  if (!vertices) {
    throw Error(ErrorCode::kParseError, "missing 'vertices' directive");
  }
  return Instance(static_cast<int>(*vertices), dfix.value_or(0),
                  cfix.value_or(0), edges);
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

ParsedConcept parse_concept(std::istream& in) {
  LineReader reader(in);
  ParsedConcept parsed;
  while (reader.next()) {
    if (reader.tokens()[0] != "line") {
      reader.fail("unknown directive '" + reader.tokens()[0] + "'");
    }
    if (reader.tokens().size() < 3) {
      reader.fail("'line' expects a frequency and at least one vertex");
    }
    Frequency f = reader.integer(1);
    if (f < 1) reader.fail("line frequency must be positive");
    std::vector<Vertex> vertices;
    for (std::size_t i = 2; i < reader.tokens().size(); ++i) {
      vertices.push_back(static_cast<Vertex>(reader.integer(i)));
    }
    try {
      if (parsed.lines.add(Line(std::move(vertices)), f)) {
        parsed.warnings.push_back("line " +
                                  std::to_string(reader.line_number()) +
                                  ": duplicate line merged");
      }
    } catch (const Error& e) {
      reader.fail(e.what());
    }
  }
  return parsed;
}

ParsedConcept parse_concept(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_concept(in);
}

PartialLatinSquare parse_latin_square(std::istream& in) {
  LineReader reader(in);
  if (!reader.next() || reader.tokens()[0] != "square") {
    throw Error(ErrorCode::kParseError, "expected 'square <p>'");
  }
  reader.expect_arity(2);
  std::int64_t p = reader.integer(1);
  if (p < 1 || p > 64) reader.fail("square dimension out of range");
  std::vector<std::vector<int>> cells;
  while (reader.next()) {
    if (reader.tokens()[0] != "row") {
      reader.fail("unknown directive '" + reader.tokens()[0] + "'");
    }
    reader.expect_arity(static_cast<std::size_t>(p) + 1);
    std::vector<int> row;
    for (std::int64_t c = 0; c < p; ++c) {
      row.push_back(static_cast<int>(reader.integer(c + 1)));
    }
    cells.push_back(std::move(row));
  }
  if (cells.size() != static_cast<std::size_t>(p)) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(p) + " rows");
  }
  return PartialLatinSquare(std::move(cells));
}

void write_instance(std::ostream& out, const Instance& instance) {
  const Graph& g = instance.graph();
  out << "vertices " << g.vertex_count() << "\n";
  out << "dfix " << instance.dfix() << "\n";
  out << "cfix " << instance.cfix() << "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "edge " << g.edge(e).u << " " << g.edge(e).v << " "
        << instance.edge_cost(e) << " " << instance.fmin(e) << " "
        << frequency_to_string(instance.fmax(e)) << "\n";
  }
}

std::string to_text(const Instance& instance) {
  std::ostringstream out;
  write_instance(out, instance);
  return out.str();
}

void write_concept(std::ostream& out, const LineConcept& lines) {
  const LineConcept sorted = lines.sorted();
  for (const auto& entry : sorted.entries()) {
    out << "line " << entry.frequency;
    for (Vertex v : entry.line.vertices()) out << " " << v;
    out << "\n";
  }
}

std::string to_text(const LineConcept& lines) {
  std::ostringstream out;
  write_concept(out, lines);
  return out.str();
}

}  // namespace lpal
