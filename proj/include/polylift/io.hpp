// Copyright 2026 The polylift Authors
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

#ifndef POLYLIFT_IO_HPP_
#define POLYLIFT_IO_HPP_

// Plain-text serialization for polyhedra, matrices, slack matrices, and
// lifts.  Every number uses the canonical scalar syntax "p", "p/q", or
// "p/q+r/s*sqrt(d)" with optional signs and no internal whitespace, so the
// files stay auditable by hand.  Lines starting with '#' are comments and
// are ignored by every parser; blank lines are skipped.
//
// Polyhedron files: a header line "H <n>" or "V <n>" (the dimension may be
// omitted when data rows follow), a scalar domain line "Q" or "Q(sqrt d)",
// then one labeled row per line:
//   ineq a1 ... an | b        (H form)
//   eq   e1 ... en | f        (H form)
//   point x1 ... xn           (V form)
//   ray   r1 ... rn           (V form)
//   line  l1 ... ln           (V form)
// A V file with a dimension and no rows denotes the empty polyhedron.
//
// Matrix files: a "rows cols" line, an optional "domain Q(sqrt d)" line,
// then one line of whitespace-separated scalars per row.  Labeled slack
// output appends "# row i: block <b> rhs <r> normal <y>" and
// "# col j: point|ray <generator>" comments after the body.
//
// Lift files: a cone descriptor line "orthant m" or "psd k", an optional
// "domain" line, an optional "translation t1 ... tn" line, a
// "slice-offset z1 ... zm" line, zero or more "slice-dir" lines (one basis
// column each), one "projection" line per target coordinate, then
//   row <block> <rhs> | <normal> | <dual element>
//   line <line> | <pairing element>
//   witness point|ray <generator> | <cone element>
// lines in that order.  Cone elements appear flattened: orthant elements
// coordinatewise; symmetric matrices as the diagonal first, then the upper
// triangle row by row, with off-diagonal entries unscaled.

#include <string>

#include "polylift/lift.hpp"
#include "polylift/polyhedron.hpp"
#include "polylift/scalar.hpp"
#include "polylift/slack.hpp"

namespace polylift {

enum class PolyForm { h, v };

struct ParsedPolyhedron {
  PolyForm form = PolyForm::h;
  Polyhedron poly;
};

/// Parses a polyhedron file.  Throws ParseError on malformed input.
ParsedPolyhedron parse_polyhedron_text(const std::string& text);

/// Canonical text for a polyhedron: the irredundant inequality system for
/// PolyForm::h, the canonical generators for PolyForm::v.  The header
/// always carries the explicit dimension so the file round-trips even with
/// no rows.
std::string print_polyhedron_text(const Polyhedron& poly, PolyForm form);

/// Parses a matrix file.  Throws ParseError on malformed input.
Mat parse_matrix_text(const std::string& text);

/// Canonical text for a matrix (no labels).
std::string print_matrix_text(const Mat& m);

/// Matrix text followed by row/column label comments.
std::string print_slack_text(const SlackMatrix& s);

/// Parses a lift file.  Throws ParseError on malformed input.
Lift parse_lift_text(const std::string& text);

/// Canonical text for a lift.
std::string print_lift_text(const Lift& lift);

/// Whole-file helpers; throw IoError when the file cannot be read/written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace polylift

#endif  // POLYLIFT_IO_HPP_
