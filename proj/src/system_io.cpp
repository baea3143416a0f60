#include "fcg/system_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace fcg {

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

namespace {

struct Line {
  std::size_t no;  // 1-based physical line
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::size_t no = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    Line line{no, {}};
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double parse_entry(const std::string& tok, std::size_t line_no) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last)
    throw ParseError(line_no, "invalid number '" + tok + "'");
  if (!std::isfinite(v)) throw ParseError(line_no, "non-finite number '" + tok + "'");
  return v;
}

std::size_t parse_dim(const std::string& tok, std::size_t line_no, const char* what) {
  std::size_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last || v == 0)
    throw ParseError(line_no, std::string(what) + " must be a positive integer, got '" + tok + "'");
  return v;
}

}  // namespace

LinearSystem parse_system(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected dimension line 'm n'");

  const Line& dims = lines[0];
  if (dims.tokens.size() != 2)
    throw ParseError(dims.no, "dimension line must hold exactly 'm n'");
  const std::size_t m = parse_dim(dims.tokens[0], dims.no, "row count m");
  const std::size_t n = parse_dim(dims.tokens[1], dims.no, "column count n");

  if (lines.size() < 1 + m + 1) {
    const std::size_t last = lines.back().no;
    throw ParseError(last, "expected " + std::to_string(m) + " matrix rows and one right-hand side line");
  }

  std::vector<double> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    const Line& row = lines[1 + i];
    if (row.tokens.size() != n)
      throw ParseError(row.no, "matrix row " + std::to_string(i + 1) + " has " +
                                   std::to_string(row.tokens.size()) + " of " + std::to_string(n) +
                                   " entries");
    for (const std::string& tok : row.tokens) entries.push_back(parse_entry(tok, row.no));
  }

  const Line& bline = lines[1 + m];
  if (bline.tokens.size() != m)
    throw ParseError(bline.no, "right-hand side has " + std::to_string(bline.tokens.size()) +
                                   " of " + std::to_string(m) + " entries");
  std::vector<double> b;
  b.reserve(m);
  for (const std::string& tok : bline.tokens) b.push_back(parse_entry(tok, bline.no));

  if (lines.size() > 2 + m)
    throw ParseError(lines[2 + m].no, "unexpected content after the right-hand side");

  return LinearSystem(Matrix(m, n, std::move(entries)), Vector(std::move(b)));
}

std::string serialize_system(const LinearSystem& sys) {
  std::string out;
  const std::size_t m = sys.A.rows(), n = sys.A.cols();
  out += std::to_string(m) + " " + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += " ";
      out += format_double(sys.A(i, j));
    }
    out += "\n";
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (i) out += " ";
    out += format_double(sys.b[i]);
  }
  out += "\n";
  return out;
}

LinearSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidValueError("cannot open system file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

}  // namespace fcg
