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

#include "polylift/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polylift/errors.hpp"

namespace polylift {

namespace {

struct ContentLine {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<ContentLine> content_lines(const std::string& text) {
  std::vector<ContentLine> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) {
      if (!tok.empty() && tok[0] == '#') break;
      tokens.push_back(tok);
    }
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

long parse_long(const ContentLine& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size()) fail(line.number, "bad integer '" + tok + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line.number, "bad integer '" + tok + "'");
  }
}

Scalar scalar_at(const ContentLine& line, const std::string& tok) {
  try {
    return parse_scalar(tok);
  } catch (const Error& e) {
    fail(line.number, e.what());
  }
}

// Recognizes "Q" and "Q(sqrt d)" domain lines; returns false when the line
// is not a domain line at all.
bool is_domain_line(const ContentLine& line) {
  if (line.tokens.empty()) return false;
  const std::string& t = line.tokens[0];
  return t == "Q" || t.rfind("Q(sqrt", 0) == 0;
}

void check_domain_line(const ContentLine& line) {
  std::string joined;
  for (const std::string& t : line.tokens) joined += t;
  if (joined == "Q") return;
  const std::string head = "Q(sqrt";
  if (joined.rfind(head, 0) == 0 && joined.size() > head.size() + 1 &&
      joined.back() == ')') {
    const std::string num =
        joined.substr(head.size(), joined.size() - head.size() - 1);
    for (char c : num) {
      if (c < '0' || c > '9') fail(line.number, "bad domain line");
    }
    return;
  }
  fail(line.number, "bad domain line");
}

std::int64_t radicand_of(const Scalar& s, std::int64_t current) {
  return current != 0 ? current : s.radicand();
}

std::string domain_text(std::int64_t radicand) {
  if (radicand == 0) return "Q";
  return "Q(sqrt " + std::to_string(radicand) + ")";
}

void append_scalars(std::string* out, const Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    *out += " ";
    *out += print_scalar(v(i));
  }
}

}  // namespace

ParsedPolyhedron parse_polyhedron_text(const std::string& text) {
  const std::vector<ContentLine> lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty polyhedron file");
  std::size_t at = 0;
  const ContentLine& head = lines[at];
  if (head.tokens[0] != "H" && head.tokens[0] != "V") {
    fail(head.number, "expected header 'H' or 'V'");
  }
  const bool is_h = head.tokens[0] == "H";
  Index n = -1;
  if (head.tokens.size() == 2) {
    n = parse_long(head, head.tokens[1]);
    if (n < 0) fail(head.number, "negative dimension");
  } else if (head.tokens.size() > 2) {
    fail(head.number, "malformed header");
  }
  ++at;
  if (at < lines.size() && is_domain_line(lines[at])) {
    check_domain_line(lines[at]);
    ++at;
  }
  std::vector<std::pair<Vec, Scalar>> ineqs;
  std::vector<std::pair<Vec, Scalar>> eqs;
  VRep v;
  for (; at < lines.size(); ++at) {
    const ContentLine& line = lines[at];
    const std::string& tag = line.tokens[0];
    const bool h_tag = tag == "ineq" || tag == "eq";
    const bool v_tag = tag == "point" || tag == "ray" || tag == "line";
    if (!h_tag && !v_tag) fail(line.number, "unknown row tag '" + tag + "'");
    if (h_tag != is_h) {
      fail(line.number, "row tag '" + tag + "' does not match the header");
    }
    if (is_h) {
      std::size_t bar = 0;
      for (bar = 1; bar < line.tokens.size(); ++bar) {
        if (line.tokens[bar] == "|") break;
      }
      if (bar + 2 != line.tokens.size()) {
        fail(line.number, "expected '<coefficients> | <rhs>'");
      }
      Vec coeff(static_cast<Index>(bar - 1));
      for (std::size_t j = 1; j < bar; ++j) {
        coeff(static_cast<Index>(j - 1)) = scalar_at(line, line.tokens[j]);
      }
      const Scalar rhs = scalar_at(line, line.tokens[bar + 1]);
      if (n < 0) n = coeff.size();
      if (coeff.size() != n) fail(line.number, "inconsistent dimension");
      if (tag == "ineq") {
        ineqs.emplace_back(std::move(coeff), rhs);
      } else {
        eqs.emplace_back(std::move(coeff), rhs);
      }
    } else {
      Vec g(static_cast<Index>(line.tokens.size() - 1));
      for (std::size_t j = 1; j < line.tokens.size(); ++j) {
        g(static_cast<Index>(j - 1)) = scalar_at(line, line.tokens[j]);
      }
      if (n < 0) n = g.size();
      if (g.size() != n) fail(line.number, "inconsistent dimension");
      if (tag == "point") {
        v.points.push_back(std::move(g));
      } else if (tag == "ray") {
        v.rays.push_back(std::move(g));
      } else {
        v.lines.push_back(std::move(g));
      }
    }
  }
  if (n < 0) {
    throw ParseError("cannot determine the ambient dimension (no rows and "
                     "no explicit dimension in the header)");
  }
  ParsedPolyhedron out;
  if (is_h) {
    HRep h;
    h.n = n;
    h.a = Mat(static_cast<Index>(ineqs.size()), n);
    h.b = Vec(static_cast<Index>(ineqs.size()));
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      for (Index j = 0; j < n; ++j) {
        h.a(static_cast<Index>(i), j) = ineqs[i].first(j);
      }
      h.b(static_cast<Index>(i)) = ineqs[i].second;
    }
    h.e = Mat(static_cast<Index>(eqs.size()), n);
    h.f = Vec(static_cast<Index>(eqs.size()));
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      for (Index j = 0; j < n; ++j) {
        h.e(static_cast<Index>(i), j) = eqs[i].first(j);
      }
      h.f(static_cast<Index>(i)) = eqs[i].second;
    }
    out.form = PolyForm::h;
    out.poly = Polyhedron::from_h(std::move(h));
  } else {
    v.n = n;
    out.form = PolyForm::v;
    out.poly = Polyhedron::from_v(std::move(v));
  }
  return out;
}

std::string print_polyhedron_text(const Polyhedron& poly, PolyForm form) {
  const Index n = poly.ambient_dim();
  std::string out;
  std::int64_t rad = 0;
  std::string body;
  if (form == PolyForm::h) {
    HRep h;
    if (poly.is_empty()) {
      h = Polyhedron::empty_set(n > 0 ? n : 1).hrep();
    } else {
      h = poly.minimal_h();
    }
    for (Index i = 0; i < h.a.rows(); ++i) {
      body += "ineq";
      for (Index j = 0; j < h.n; ++j) {
        body += " " + print_scalar(h.a(i, j));
        rad = radicand_of(h.a(i, j), rad);
      }
      body += " | " + print_scalar(h.b(i)) + "\n";
      rad = radicand_of(h.b(i), rad);
    }
    for (Index i = 0; i < h.e.rows(); ++i) {
      body += "eq";
      for (Index j = 0; j < h.n; ++j) {
        body += " " + print_scalar(h.e(i, j));
        rad = radicand_of(h.e(i, j), rad);
      }
      body += " | " + print_scalar(h.f(i)) + "\n";
      rad = radicand_of(h.f(i), rad);
    }
    out = "H " + std::to_string(h.n) + "\n";
  } else {
    out = "V " + std::to_string(n) + "\n";
    if (!poly.is_empty()) {
      const VRep& v = poly.vrep();
      const auto add = [&](const char* tag, const std::vector<Vec>& list) {
        for (const Vec& g : list) {
          body += tag;
          for (Index j = 0; j < g.size(); ++j) {
            body += " " + print_scalar(g(j));
            rad = radicand_of(g(j), rad);
          }
          body += "\n";
        }
      };
      add("point", v.points);
      add("ray", v.rays);
      add("line", v.lines);
    }
  }
  out += domain_text(rad) + "\n" + body;
  return out;
}

Mat parse_matrix_text(const std::string& text) {
  const std::vector<ContentLine> lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty matrix file");
  const ContentLine& head = lines[0];
  if (head.tokens.size() != 2) fail(head.number, "expected 'rows cols'");
  const long rows = parse_long(head, head.tokens[0]);
  const long cols = parse_long(head, head.tokens[1]);
  if (rows < 0 || cols < 0) fail(head.number, "negative matrix shape");
  std::size_t at = 1;
  if (at < lines.size() && (is_domain_line(lines[at]) ||
                            lines[at].tokens[0] == "domain")) {
    ContentLine dom = lines[at];
    if (dom.tokens[0] == "domain") dom.tokens.erase(dom.tokens.begin());
    check_domain_line(dom);
    ++at;
  }
  Mat m(rows, cols);
  Index r = 0;
  Index c = 0;
  for (; at < lines.size(); ++at) {
    for (const std::string& tok : lines[at].tokens) {
      if (r >= rows) fail(lines[at].number, "more entries than rows*cols");
      m(r, c) = scalar_at(lines[at], tok);
      if (++c == cols) {
        c = 0;
        ++r;
      }
    }
  }
  if (r != rows || c != 0) {
    throw ParseError("matrix body has fewer entries than rows*cols");
  }
  return m;
}

std::string print_matrix_text(const Mat& m) {
  std::int64_t rad = 0;
  std::string body;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      body += j == 0 ? "" : " ";
      body += print_scalar(m(i, j));
      rad = radicand_of(m(i, j), rad);
    }
    body += "\n";
  }
  std::string out =
      std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  if (rad != 0) out += "domain " + domain_text(rad) + "\n";
  out += body;
  return out;
}

std::string print_slack_text(const SlackMatrix& s) {
  std::string out = print_matrix_text(s.m);
  for (std::size_t i = 0; i < s.row_labels.size(); ++i) {
    const SlackRowLabel& label = s.row_labels[i];
    out += "# row " + std::to_string(i) + ": block " +
           std::to_string(label.block) + " rhs " + print_scalar(label.rhs) +
           " normal";
    append_scalars(&out, label.normal);
    out += "\n";
  }
  for (std::size_t j = 0; j < s.col_labels.size(); ++j) {
    const SlackColLabel& label = s.col_labels[j];
    out += "# col " + std::to_string(j) + ": ";
    out += label.is_ray ? "ray" : "point";
    append_scalars(&out, label.generator);
    out += "\n";
  }
  return out;
}

namespace {

// Reads scalars from tokens[from..] until the bar token or the end.
std::size_t read_scalars(const ContentLine& line, std::size_t from,
                         std::vector<Scalar>* out) {
  std::size_t at = from;
  for (; at < line.tokens.size(); ++at) {
    if (line.tokens[at] == "|") break;
    out->push_back(scalar_at(line, line.tokens[at]));
  }
  return at;
}

Vec to_vec(const std::vector<Scalar>& v) {
  Vec out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out(static_cast<Index>(i)) = v[i];
  }
  return out;
}

}  // namespace

Lift parse_lift_text(const std::string& text) {
  const std::vector<ContentLine> lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty lift file");
  const ContentLine& head = lines[0];
  if (head.tokens.size() != 2 ||
      (head.tokens[0] != "orthant" && head.tokens[0] != "psd")) {
    fail(head.number, "expected cone descriptor 'orthant m' or 'psd k'");
  }
  const long size = parse_long(head, head.tokens[1]);
  if (size <= 0) fail(head.number, "cone size must be positive");
  Lift lift;
  lift.cone = head.tokens[0] == "orthant" ? ConeKind::orthant(size)
                                          : ConeKind::psd(size);
  const Index m = lift.cone.ambient();
  bool have_offset = false;
  std::vector<Vec> dirs;
  std::vector<Vec> proj_rows;
  std::vector<Scalar> translation;
  bool have_translation = false;
  for (std::size_t at = 1; at < lines.size(); ++at) {
    const ContentLine& line = lines[at];
    const std::string& tag = line.tokens[0];
    if (tag == "domain") {
      ContentLine dom = line;
      dom.tokens.erase(dom.tokens.begin());
      check_domain_line(dom);
      continue;
    }
    if (is_domain_line(line)) {
      check_domain_line(line);
      continue;
    }
    if (tag == "translation") {
      std::vector<Scalar> vals;
      read_scalars(line, 1, &vals);
      translation = std::move(vals);
      have_translation = true;
      continue;
    }
    if (tag == "slice-offset") {
      std::vector<Scalar> vals;
      read_scalars(line, 1, &vals);
      if (static_cast<Index>(vals.size()) != m) {
        fail(line.number, "slice offset must have " + std::to_string(m) +
                              " coordinates");
      }
      lift.slice.offset = to_vec(vals);
      have_offset = true;
      continue;
    }
    if (tag == "slice-dir") {
      std::vector<Scalar> vals;
      read_scalars(line, 1, &vals);
      if (static_cast<Index>(vals.size()) != m) {
        fail(line.number, "slice direction must have " + std::to_string(m) +
                              " coordinates");
      }
      dirs.push_back(to_vec(vals));
      continue;
    }
    if (tag == "projection") {
      std::vector<Scalar> vals;
      read_scalars(line, 1, &vals);
      if (static_cast<Index>(vals.size()) != m) {
        fail(line.number, "projection row must have " + std::to_string(m) +
                              " coordinates");
      }
      proj_rows.push_back(to_vec(vals));
      continue;
    }
    if (tag == "row") {
      if (line.tokens.size() < 4) fail(line.number, "malformed row line");
      LiftRowDual row;
      row.block = static_cast<int>(parse_long(line, line.tokens[1]));
      row.rhs = scalar_at(line, line.tokens[2]);
      if (line.tokens[3] != "|") fail(line.number, "expected '|' after rhs");
      std::vector<Scalar> normal;
      std::size_t bar = read_scalars(line, 4, &normal);
      if (bar >= line.tokens.size()) {
        fail(line.number, "expected '| <dual element>'");
      }
      std::vector<Scalar> dual;
      read_scalars(line, bar + 1, &dual);
      if (static_cast<Index>(dual.size()) != m) {
        fail(line.number, "dual element must have " + std::to_string(m) +
                              " coordinates");
      }
      row.normal = to_vec(normal);
      row.dual = unflatten_cone_element(lift.cone, to_vec(dual));
      lift.rows.push_back(std::move(row));
      continue;
    }
    if (tag == "line") {
      std::vector<Scalar> lvals;
      std::size_t bar = read_scalars(line, 1, &lvals);
      if (bar >= line.tokens.size()) {
        fail(line.number, "expected '| <pairing element>'");
      }
      std::vector<Scalar> pairing;
      read_scalars(line, bar + 1, &pairing);
      if (static_cast<Index>(pairing.size()) != m) {
        fail(line.number, "pairing element must have " + std::to_string(m) +
                              " coordinates");
      }
      LiftLineEquation le;
      le.line = to_vec(lvals);
      le.pairing = unflatten_cone_element(lift.cone, to_vec(pairing));
      lift.line_rows.push_back(std::move(le));
      continue;
    }
    if (tag == "witness") {
      if (line.tokens.size() < 3 ||
          (line.tokens[1] != "point" && line.tokens[1] != "ray")) {
        fail(line.number, "expected 'witness point ...' or 'witness ray ...'");
      }
      LiftWitness w;
      w.is_ray = line.tokens[1] == "ray";
      std::vector<Scalar> gen;
      std::size_t bar = read_scalars(line, 2, &gen);
      if (bar >= line.tokens.size()) {
        fail(line.number, "expected '| <cone element>'");
      }
      std::vector<Scalar> elem;
      read_scalars(line, bar + 1, &elem);
      if (static_cast<Index>(elem.size()) != m) {
        fail(line.number, "cone element must have " + std::to_string(m) +
                              " coordinates");
      }
      w.generator = to_vec(gen);
      w.cone_point = unflatten_cone_element(lift.cone, to_vec(elem));
      lift.witnesses.push_back(std::move(w));
      continue;
    }
    fail(line.number, "unknown lift line tag '" + tag + "'");
  }
  if (!have_offset) throw ParseError("lift file has no slice-offset line");
  if (proj_rows.empty()) throw ParseError("lift file has no projection rows");
  lift.slice.basis = Mat(m, static_cast<Index>(dirs.size()));
  for (std::size_t c = 0; c < dirs.size(); ++c) {
    for (Index i = 0; i < m; ++i) {
      lift.slice.basis(i, static_cast<Index>(c)) = dirs[c](i);
    }
  }
  const Index n = static_cast<Index>(proj_rows.size());
  lift.projection = Mat(n, m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) lift.projection(i, j) = proj_rows[i](j);
  }
  for (const LiftRowDual& row : lift.rows) {
    if (row.normal.size() != n) {
      throw ParseError("row normal dimension differs from the projection");
    }
  }
  for (const LiftLineEquation& le : lift.line_rows) {
    if (le.line.size() != n) {
      throw ParseError("line dimension differs from the projection");
    }
  }
  for (const LiftWitness& w : lift.witnesses) {
    if (w.generator.size() != n) {
      throw ParseError("witness generator dimension differs from the "
                       "projection");
    }
  }
  if (have_translation) {
    if (static_cast<Index>(translation.size()) != n) {
      throw ParseError("translation dimension differs from the projection");
    }
    Vec t(n);
    for (Index i = 0; i < n; ++i) t(i) = translation[static_cast<std::size_t>(i)];
    lift.translation = std::move(t);
  }
  return lift;
}

std::string print_lift_text(const Lift& lift) {
  std::int64_t rad = 0;
  const auto scan = [&rad](const Vec& v) {
    for (Index i = 0; i < v.size(); ++i) rad = radicand_of(v(i), rad);
  };
  std::string body;
  if (lift.translation) {
    body += "translation";
    append_scalars(&body, *lift.translation);
    scan(*lift.translation);
    body += "\n";
  }
  body += "slice-offset";
  append_scalars(&body, lift.slice.offset);
  scan(lift.slice.offset);
  body += "\n";
  for (Index c = 0; c < lift.slice.basis.cols(); ++c) {
    body += "slice-dir";
    const Vec col = lift.slice.basis.col(c);
    append_scalars(&body, col);
    scan(col);
    body += "\n";
  }
  for (Index i = 0; i < lift.projection.rows(); ++i) {
    body += "projection";
    const Vec row = lift.projection.row(i).transpose();
    append_scalars(&body, row);
    scan(row);
    body += "\n";
  }
  for (const LiftRowDual& row : lift.rows) {
    body += "row " + std::to_string(row.block) + " " + print_scalar(row.rhs) +
            " |";
    append_scalars(&body, row.normal);
    scan(row.normal);
    body += " |";
    const Vec flat = flatten_cone_element(lift.cone, row.dual);
    append_scalars(&body, flat);
    scan(flat);
    body += "\n";
  }
  for (const LiftLineEquation& le : lift.line_rows) {
    body += "line";
    append_scalars(&body, le.line);
    scan(le.line);
    body += " |";
    const Vec flat = flatten_cone_element(lift.cone, le.pairing);
    append_scalars(&body, flat);
    scan(flat);
    body += "\n";
  }
  for (const LiftWitness& w : lift.witnesses) {
    body += w.is_ray ? "witness ray" : "witness point";
    append_scalars(&body, w.generator);
    scan(w.generator);
    body += " |";
    const Vec flat = flatten_cone_element(lift.cone, w.cone_point);
    append_scalars(&body, flat);
    scan(flat);
    body += "\n";
  }
  std::string out = lift.cone.is_orthant() ? "orthant" : "psd";
  out += " " + std::to_string(lift.cone.size) + "\n";
  if (rad != 0) out += "domain " + domain_text(rad) + "\n";
  out += body;
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace polylift
