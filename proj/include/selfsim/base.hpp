// Common small types and error categories shared by every module.
#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace selfsim {

// A vertex of the rooted q-ary tree: a finite word over {0,..,q-1},
// first letter = level 1.
using Vertex = std::vector<int>;

// Raised when an input file or expression cannot be parsed.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, int line = -1, int column = -1)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& what, int line, int column) {
    if (line < 0) return what;
    return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }
  int line_;
  int column_;
};

// Raised when a configurable resource cap is exceeded.  The result is
// "undecided at this cap", never a wrong answer.
class cap_exceeded : public std::runtime_error {
public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised on inconsistent requests (bad level, bad weights, ...).
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Renders a vertex as a digit string ("0110"); alphabets larger than ten
// letters use dot-separated decimal digits.
inline std::string vertex_to_string(const Vertex& v, int q = 2) {
  std::string s;
  if (q <= 10) {
    for (int x : v) s.push_back(static_cast<char>('0' + x));
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s.push_back('.');
      s += std::to_string(v[i]);
    }
  }
  return s;
}

// Parses a vertex string; accepts plain digits for q <= 10 and
// dot-separated decimal otherwise.
inline Vertex vertex_from_string(const std::string& s, int q) {
  Vertex v;
  if (q <= 10) {
    for (char c : s) {
      if (c < '0' || c > '9') throw parse_error("invalid vertex letter '" + std::string(1, c) + "'");
      int x = c - '0';
      if (x >= q) throw parse_error("vertex letter " + std::to_string(x) + " out of range for alphabet size " + std::to_string(q));
      v.push_back(x);
    }
  } else {
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = s.find('.', i);
      if (j == std::string::npos) j = s.size();
      int x = std::stoi(s.substr(i, j - i));
      if (x < 0 || x >= q) throw parse_error("vertex letter out of range");
      v.push_back(x);
      i = j + 1;
    }
  }
  return v;
}

// Number of vertices at the given depth of the q-ary tree.
inline long long vertex_count(int q, int depth) {
  long long n = 1;
  for (int i = 0; i < depth; ++i) n *= q;
  return n;
}

// Decodes the lexicographic index of a depth-d vertex (first letter is the
// most significant digit).
inline Vertex vertex_from_index(int q, int depth, long long index) {
  Vertex v(static_cast<std::size_t>(depth));
  for (int i = depth - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(index % q);
    index /= q;
  }
  return v;
}

// Lexicographic index of a vertex among the vertices of its depth.
inline long long vertex_to_index(const Vertex& v, int q) {
  long long index = 0;
  for (int x : v) index = index * q + x;
  return index;
}

// Serializes a double with 17 significant digits (lossless round-trip).
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

}  // namespace selfsim
