#include "vqge/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace vqge {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw ParseError("bad floating-point literal: '" + s + "'");
  return v;
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
    }
    out << '\n';
  }
  return out.str();
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path.string());
  out << format_matrix(m);
}

namespace {

cplx parse_entry(const std::string& token, std::size_t line_no) {
  const auto comma = token.find(',');
  if (comma == std::string::npos)
    throw ParseError("line " + std::to_string(line_no) +
                     ": entry '" + token + "' is not a re,im pair");
  try {
    const double re = parse_double(token.substr(0, comma));
    const double im = parse_double(token.substr(comma + 1));
    return {re, im};
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

ComplexMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError("line 1: empty matrix file");
  ++line_no;
  std::istringstream header(line);
  long long rows = 0, cols = 0;
  if (!(header >> rows >> cols) || rows < 1 || cols < 1)
    throw ParseError("line 1: header must be 'rows cols' with positive counts");

  ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long i = 0; i < rows; ++i) {
    if (!std::getline(in, line))
      throw ParseError("line " + std::to_string(line_no + 1) + ": missing matrix row " +
                       std::to_string(i + 1));
    ++line_no;
    std::istringstream row(line);
    std::string token;
    for (long long j = 0; j < cols; ++j) {
      if (!(row >> token))
        throw ParseError("line " + std::to_string(line_no) + ": row has fewer than " +
                         std::to_string(cols) + " entries");
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          parse_entry(token, line_no);
    }
    std::string extra;
    if (row >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": row has more than " +
                       std::to_string(cols) + " entries");
  }
  if (!m.all_finite())
    throw ParseError("matrix contains non-finite entries");
  return m;
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace vqge
