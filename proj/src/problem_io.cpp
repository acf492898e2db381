#include "trihull/problem_io.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trihull/errors.hpp"

namespace trihull {

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::shm: return "shm";
    case ProblemKind::chm: return "chm";
    case ProblemKind::sdp: return "sdp";
    case ProblemKind::maxcut: return "maxcut";
    case ProblemKind::svm: return "svm";
  }
  return "unknown";
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back(Token{raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& what) {
  throw ParseError(line.number, tok.column, what);
}

[[noreturn]] void fail(const Line& line, const std::string& what) { throw ParseError(line.number, 1, what); }

double parse_real(const Line& line, const Token& tok) {
  double v = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) fail(line, tok, "expected a number, got '" + std::string(tok.text) + "'");
  if (!std::isfinite(v)) fail(line, tok, "non-finite number");
  return v;
}

std::size_t parse_count(const Line& line, const Token& tok) {
  std::size_t v = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) fail(line, tok, "expected a nonnegative integer, got '" + std::string(tok.text) + "'");
  return v;
}

std::size_t parse_positive(const Line& line, const Token& tok) {
  const std::size_t v = parse_count(line, tok);
  if (v == 0) fail(line, tok, "expected a positive integer");
  return v;
}

Vector parse_reals(const Line& line, std::size_t from, std::size_t expected) {
  if (line.tokens.size() - from != expected) {
    const Token& at = line.tokens.size() > from ? line.tokens[from] : line.tokens.back();
    fail(line, at, "expected " + std::to_string(expected) + " numbers, got " + std::to_string(line.tokens.size() - from));
  }
  Vector out;
  out.reserve(expected);
  for (std::size_t k = from; k < line.tokens.size(); ++k) out.push_back(parse_real(line, line.tokens[k]));
  return out;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line, line.tokens.front(), "'" + std::string(line.tokens.front().text) + "' takes " +
                                        std::to_string(count - 1) + " argument(s)");
  }
}

// Shared reader for the matrix-family block: n, m, optional b, A blocks.
class MatrixBlock {
 public:
  explicit MatrixBlock(bool wants_target) : wants_target_(wants_target) {}

  // Consumes lines starting at `i`; stops at a line it does not own.
  std::size_t read(const std::vector<Line>& lines, std::size_t i) {
    while (i < lines.size()) {
      const Line& line = lines[i];
      const std::string_view key = line.tokens.front().text;
      if (key == "n") {
        expect_arity(line, 2);
        if (n_) fail(line, "duplicate 'n'");
        n_ = parse_positive(line, line.tokens[1]);
        ++i;
      } else if (key == "m") {
        expect_arity(line, 2);
        if (m_) fail(line, "duplicate 'm'");
        m_ = parse_positive(line, line.tokens[1]);
        ++i;
      } else if (key == "b") {
        if (!wants_target_) fail(line, line.tokens.front(), "'b' is not allowed here");
        if (!m_) fail(line, "'m' must precede 'b'");
        if (b_) fail(line, "duplicate 'b'");
        b_ = parse_reals(line, 1, *m_);
        ++i;
      } else if (key == "A") {
        expect_arity(line, 2);
        if (!n_ || !m_) fail(line, "'n' and 'm' must precede matrix blocks");
        const std::size_t k = parse_positive(line, line.tokens[1]);
        if (k > *m_) fail(line, line.tokens[1], "matrix index exceeds m");
        if (mats_.count(k)) fail(line, line.tokens[1], "duplicate matrix index");
        const std::size_t n = *n_;
        if (i + n >= lines.size()) fail(line, "matrix block needs " + std::to_string(n) + " rows");
        std::vector<double> entries;
        entries.reserve(n * n);
        for (std::size_t r = 1; r <= n; ++r) {
          const Vector row = parse_reals(lines[i + r], 0, n);
          entries.insert(entries.end(), row.begin(), row.end());
        }
        try {
          mats_.emplace(k, SymmetricMatrix(n, std::move(entries)));
        } catch (const std::exception& e) {
          fail(line, std::string("matrix ") + std::to_string(k) + ": " + e.what());
        }
        i += n + 1;
      } else {
        return i;
      }
    }
    return i;
  }

  ShmInstance finish(const Line& at) const {
    if (!n_) fail(at, "missing 'n'");
    if (!m_) fail(at, "missing 'm'");
    if (wants_target_ && !b_) fail(at, "missing 'b'");
    if (mats_.size() != *m_) fail(at, "expected " + std::to_string(*m_) + " matrix blocks, got " + std::to_string(mats_.size()));
    std::vector<SymmetricMatrix> mats;
    for (const auto& [k, a] : mats_) mats.push_back(a);
    return ShmInstance(std::move(mats), b_ ? *b_ : Vector(*m_, 0.0));
  }

 private:
  bool wants_target_;
  std::optional<std::size_t> n_;
  std::optional<std::size_t> m_;
  std::optional<Vector> b_;
  std::map<std::size_t, SymmetricMatrix> mats_;
};

ProblemFile parse_matrix_family(ProblemKind kind, const std::vector<Line>& lines) {
  MatrixBlock block(true);
  const std::size_t stop = block.read(lines, 1);
  if (stop < lines.size()) fail(lines[stop], lines[stop].tokens.front(), "unexpected '" + std::string(lines[stop].tokens.front().text) + "'");
  ShmInstance inst = block.finish(lines.back());
  if (kind == ProblemKind::shm) return ProblemFile{kind, std::move(inst)};
  return ProblemFile{kind, SdpFeasibilityInstance(inst.mats(), inst.b())};
}

ProblemFile parse_chm(const std::vector<Line>& lines) {
  std::optional<std::size_t> m;
  std::optional<std::size_t> count;
  std::optional<Vector> p0;
  std::vector<Vector> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view key = line.tokens.front().text;
    if (key == "m") {
      expect_arity(line, 2);
      if (m) fail(line, "duplicate 'm'");
      m = parse_positive(line, line.tokens[1]);
    } else if (key == "N") {
      expect_arity(line, 2);
      if (count) fail(line, "duplicate 'N'");
      count = parse_positive(line, line.tokens[1]);
    } else if (key == "p0") {
      if (!m) fail(line, "'m' must precede 'p0'");
      if (p0) fail(line, "duplicate 'p0'");
      p0 = parse_reals(line, 1, *m);
    } else {
      if (!m) fail(line, line.tokens.front(), "unexpected '" + std::string(key) + "' before 'm'");
      points.push_back(parse_reals(line, 0, *m));
      if (count && points.size() > *count) fail(line, "more points than N");
    }
  }
  const Line& last = lines.back();
  if (!m) fail(last, "missing 'm'");
  if (!count) fail(last, "missing 'N'");
  if (!p0) fail(last, "missing 'p0'");
  if (points.size() != *count) fail(last, "expected " + std::to_string(*count) + " points, got " + std::to_string(points.size()));
  return ProblemFile{ProblemKind::chm, ChmProblem{PointSet(*m, std::move(points)), std::move(*p0)}};
}

ProblemFile parse_maxcut(const std::vector<Line>& lines) {
  std::optional<std::size_t> n;
  std::vector<double> w;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view key = line.tokens.front().text;
    if (key == "n") {
      expect_arity(line, 2);
      if (n) fail(line, "duplicate 'n'");
      n = parse_positive(line, line.tokens[1]);
      w.assign(*n * *n, 0.0);
    } else if (key == "edge") {
      if (!n) fail(line, "'n' must precede edges");
      expect_arity(line, 4);
      const std::size_t a = parse_positive(line, line.tokens[1]);
      const std::size_t b = parse_positive(line, line.tokens[2]);
      const double weight = parse_real(line, line.tokens[3]);
      if (a > *n) fail(line, line.tokens[1], "vertex index exceeds n");
      if (b > *n) fail(line, line.tokens[2], "vertex index exceeds n");
      if (a == b) fail(line, line.tokens[2], "self-loops are not allowed");
      if (weight < 0.0) fail(line, line.tokens[3], "edge weights must be nonnegative");
      double& slot = w[(a - 1) * *n + (b - 1)];
      if (slot != 0.0) fail(line, "duplicate edge");
      slot = weight;
      w[(b - 1) * *n + (a - 1)] = weight;
    } else {
      fail(line, line.tokens.front(), "unexpected '" + std::string(key) + "'");
    }
  }
  if (!n) fail(lines.back(), "missing 'n'");
  return ProblemFile{ProblemKind::maxcut, MaxCutInstance(SymmetricMatrix(*n, std::move(w)))};
}

ProblemFile parse_svm(const std::vector<Line>& lines) {
  std::optional<ShmInstance> left;
  std::optional<ShmInstance> right;
  std::size_t i = 1;
  while (i < lines.size()) {
    const Line& header = lines[i];
    const std::string_view key = header.tokens.front().text;
    expect_arity(header, 1);
    std::optional<ShmInstance>* slot = nullptr;
    if (key == "left") slot = &left;
    else if (key == "right") slot = &right;
    else fail(header, header.tokens.front(), "expected 'left' or 'right', got '" + std::string(key) + "'");
    if (slot->has_value()) fail(header, "duplicate '" + std::string(key) + "' block");
    MatrixBlock block(false);
    const std::size_t stop = block.read(lines, i + 1);
    slot->emplace(block.finish(stop < lines.size() ? lines[stop] : lines.back()));
    i = stop;
  }
  if (!left) fail(lines.back(), "missing 'left' block");
  if (!right) fail(lines.back(), "missing 'right' block");
  if (left->m() != right->m()) fail(lines.back(), "left and right blocks must share m");
  return ProblemFile{ProblemKind::svm, SvmProblem{std::move(*left), std::move(*right)}};
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty problem file");
  const Line& head = lines.front();
  expect_arity(head, 1);
  const std::string_view kind = head.tokens.front().text;
  if (kind == "shm") return parse_matrix_family(ProblemKind::shm, lines);
  if (kind == "sdp") return parse_matrix_family(ProblemKind::sdp, lines);
  if (kind == "chm") return parse_chm(lines);
  if (kind == "maxcut") return parse_maxcut(lines);
  if (kind == "svm") return parse_svm(lines);
  fail(head, head.tokens.front(), "unknown problem kind '" + std::string(kind) + "'");
}

}  // namespace trihull
