#include "ybe/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "ybe/error.hpp"

namespace ybe {

namespace {

// Token reader that tracks line/column for error messages.
class Tokens {
public:
  explicit Tokens(std::istream &in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        toks_.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
      }
    }
  }

  bool done() const { return pos_ >= toks_.size(); }

  [[noreturn]] void fail(const std::string &msg) const {
    int line = 0, col = 0;
    if (pos_ < toks_.size()) {
      line = toks_[pos_].line;
      col = toks_[pos_].col;
    } else if (!toks_.empty()) {
      line = toks_.back().line;
      col = toks_.back().col;
    }
    throw ValidationError("parse-error",
                          msg + " at line " + std::to_string(line) + ":" + std::to_string(col));
  }

  std::string word() {
    if (done()) fail("unexpected end of file");
    return toks_[pos_++].text;
  }

  void expect(const std::string &kw) {
    std::string w = word();
    if (w != kw) {
      --pos_;
      fail("expected '" + kw + "', found '" + w + "'");
    }
  }

  int integer() {
    if (done()) fail("unexpected end of file");
    const std::string &t = toks_[pos_].text;
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(t, &used);
    } catch (...) {
      fail("expected an integer, found '" + t + "'");
    }
    if (used != t.size()) fail("expected an integer, found '" + t + "'");
    ++pos_;
    return value;
  }

private:
  struct Tok {
    std::string text;
    int line, col;
  };
  std::vector<Tok> toks_;
  size_t pos_ = 0;
};

std::vector<int> read_table(Tokens &t, int n) {
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) {
    int v = t.integer();
    if (v < 0 || v >= n) t.fail("table entry out of range [0," + std::to_string(n - 1) + "]");
    table[static_cast<size_t>(i)] = v;
  }
  return table;
}

}  // namespace

FiniteSolution read_solution(std::istream &in) {
  Tokens t(in);
  t.expect("n");
  int n = t.integer();
  if (n <= 0) t.fail("n must be positive");
  t.expect("sigma");
  std::vector<int> table = read_table(t, n);
  if (!t.done()) t.fail("trailing input");
  std::vector<std::vector<int>> rows(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    rows[static_cast<size_t>(x)] =
        std::vector<int>(table.begin() + static_cast<long>(x) * n,
                         table.begin() + static_cast<long>(x + 1) * n);
  return validate_solution_rows(n, rows);
}

FiniteBrace read_brace(std::istream &in) {
  Tokens t(in);
  t.expect("n");
  int n = t.integer();
  if (n <= 0) t.fail("n must be positive");
  t.expect("add");
  std::vector<int> add = read_table(t, n);
  t.expect("mul");
  std::vector<int> mul = read_table(t, n);
  if (!t.done()) t.fail("trailing input");
  return validate_left_brace(n, std::move(add), std::move(mul));
}

FiniteSolution read_solution_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("parse-error", "cannot open " + path);
  return read_solution(in);
}

FiniteBrace read_brace_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("parse-error", "cannot open " + path);
  return read_brace(in);
}

void write_solution(std::ostream &out, const FiniteSolution &s) {
  out << "n " << s.n << "\n";
  out << "sigma\n";
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) out << (y ? " " : "") << s.sigma_of(x)(y);
    out << "\n";
  }
}

void write_brace(std::ostream &out, const FiniteBrace &b) {
  out << "n " << b.size() << "\n";
  out << "add\n";
  for (int x = 0; x < b.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) out << (y ? " " : "") << b.plus(x, y);
    out << "\n";
  }
  out << "mul\n";
  for (int x = 0; x < b.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) out << (y ? " " : "") << b.times(x, y);
    out << "\n";
  }
}

std::string write_solution_string(const FiniteSolution &s) {
  std::ostringstream out;
  write_solution(out, s);
  return out.str();
}

std::string write_brace_string(const FiniteBrace &b) {
  std::ostringstream out;
  write_brace(out, b);
  return out.str();
}

}  // namespace ybe
