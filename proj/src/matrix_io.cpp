#include "dmsvp/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "dmsvp/errors.hpp"

namespace dmsvp {

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

Integer parse_integer(const std::string& token, std::size_t line_no) {
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + token + "'");
  for (std::size_t i = start; i < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9')
      throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + token + "'");
  return Integer(token[0] == '+' ? token.substr(1) : token);
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

IntVector parse_tagged(const std::vector<std::string>& toks, std::size_t expected, std::size_t line_no) {
  if (toks.size() - 1 != expected)
    throw ParseError("line " + std::to_string(line_no) + ": '" + toks[0] + "' expects " + std::to_string(expected) +
                     " entries, got " + std::to_string(toks.size() - 1));
  IntVector v(static_cast<Index>(expected));
  for (std::size_t i = 0; i < expected; ++i) v(static_cast<Index>(i)) = parse_integer(toks[i + 1], line_no);
  return v;
}

}  // namespace

MatrixDocument parse_document(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> toks;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (is_blank_or_comment(line)) continue;
      toks = split(line);
      return true;
    }
    return false;
  };

  if (!next()) throw ParseError("empty input: expected header line 'm n'");
  if (toks.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": header must be 'm n'");
  const Integer mi = parse_integer(toks[0], line_no), ni = parse_integer(toks[1], line_no);
  if (mi < 1 || ni < 1 || mi > 100000 || ni > 100000)
    throw ParseError("line " + std::to_string(line_no) + ": dimensions must be positive");
  const Index m = mi.convert_to<Index>(), n = ni.convert_to<Index>();

  MatrixDocument doc;
  doc.a.resize(m, n);
  for (Index r = 0; r < m; ++r) {
    if (!next()) throw ParseError("unexpected end of input: expected " + std::to_string(m) + " matrix rows");
    if (static_cast<Index>(toks.size()) != n)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " entries, got " +
                       std::to_string(toks.size()));
    for (Index c = 0; c < n; ++c) doc.a(r, c) = parse_integer(toks[static_cast<std::size_t>(c)], line_no);
  }
  while (next()) {
    if (toks[0] == "b:" && !doc.b && !doc.c) {
      doc.b = parse_tagged(toks, static_cast<std::size_t>(m), line_no);
    } else if (toks[0] == "c:" && doc.b && !doc.c) {
      doc.c = parse_tagged(toks, static_cast<std::size_t>(n), line_no);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected content after matrix block");
    }
  }
  return doc;
}

MatrixDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

IntMatrix parse_matrix(const std::string& text) {
  MatrixDocument doc = parse_document(text);
  if (doc.b || doc.c) throw ParseError("expected a bare matrix, found b:/c: lines");
  return std::move(doc.a);
}

MatrixDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_document(in);
}

IntMatrix read_matrix_file(const std::string& path) {
  MatrixDocument doc = read_document_file(path);
  if (doc.b || doc.c) throw ParseError("'" + path + "': expected a bare matrix, found b:/c: lines");
  return std::move(doc.a);
}

std::string format_row(const IntVector& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v(i).str();
  }
  return out;
}

std::string format_matrix(const IntMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (Index r = 0; r < a.rows(); ++r) out += format_row(a.row(r).transpose()) + "\n";
  return out;
}

std::string format_vector_line(const std::string& tag, const IntVector& v) {
  return tag + " " + format_row(v) + "\n";
}

std::string format_document(const MatrixDocument& doc) {
  std::string out = format_matrix(doc.a);
  if (doc.b) out += format_vector_line("b:", *doc.b);
  if (doc.c) out += format_vector_line("c:", *doc.c);
  return out;
}

}  // namespace dmsvp
