#include "sgraph/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sgraph {

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& what) {
  std::ostringstream os;
  if (line != 0) {
    os << "line " << line;
    if (column != 0) os << ", column " << column;
    os << ": ";
  } else if (column != 0) {
    os << "position " << column << ": ";
  }
  os << what;
  return os.str();
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

/// Splits on LF; yields (1-based line number, content) skipping comments
/// and blank lines.
class LineCursor {
 public:
  explicit LineCursor(std::string_view text) : text_(text) {}

  bool next(std::string_view& line, std::size_t& number) {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) {
        pos_ = text_.size() + 1;
        return false;
      }
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (!raw.empty() && raw.front() == '#') continue;
      if (raw.find_first_not_of(" \t") == std::string_view::npos) continue;
      line = raw;
      number = line_no_;
      return true;
    }
    return false;
  }

  std::size_t last_line() const noexcept { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::size_t parse_count(const Token& t, std::size_t line, const char* what) {
  std::size_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, t.column, std::string("expected ") + what + ", got '" +
                                         std::string(t.text) + "'");
  return value;
}

bool looks_like_header(std::string_view line) {
  const auto toks = tokenize(line);
  if (toks.size() != 2) return false;
  for (const auto& t : toks)
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

/// Reads one `n m` block starting from the cursor; header already consumed.
SignedGraph read_block(LineCursor& cursor, std::size_t n, std::size_t m,
                       std::size_t header_line, bool signed_edges) {
  SignedGraph g(n);
  for (std::size_t k = 0; k < m; ++k) {
    std::string_view line;
    std::size_t ln = 0;
    if (!cursor.next(line, ln))
      throw ParseError(cursor.last_line() + 1, 0,
                       "expected " + std::to_string(m) + " edge lines after header on line " +
                           std::to_string(header_line) + ", found " + std::to_string(k));
    const auto toks = tokenize(line);
    const std::size_t want = signed_edges ? 3 : 2;
    if (toks.size() != want)
      throw ParseError(ln, toks.size() > want ? toks[want].column : 1,
                       "expected " + std::to_string(want) + " fields, got " +
                           std::to_string(toks.size()));
    const std::size_t u = parse_count(toks[0], ln, "vertex index");
    const std::size_t v = parse_count(toks[1], ln, "vertex index");
    if (u < 1 || u > n) throw ParseError(ln, toks[0].column, "vertex out of range 1.." + std::to_string(n));
    if (v < 1 || v > n) throw ParseError(ln, toks[1].column, "vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(ln, toks[1].column, "self-loop");
    if (u > v) throw ParseError(ln, toks[0].column, "endpoints must satisfy u < v");
    Sign s = Sign::Positive;
    if (signed_edges) {
      if (toks[2].text == "+") {
        s = Sign::Positive;
      } else if (toks[2].text == "-") {
        s = Sign::Negative;
      } else {
        throw ParseError(ln, toks[2].column, "sign must be '+' or '-'");
      }
    }
    if (g.adjacent(u - 1, v - 1)) throw ParseError(ln, toks[0].column, "duplicate edge");
    g.set_edge(u - 1, v - 1, s);
  }
  return g;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(located(line, column, what)), line_(line), column_(column) {}

std::string to_sg(const SignedGraph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u + 1 << ' ' << e.v + 1 << ' ' << sign_char(e.sign) << '\n';
  return os.str();
}

SignedGraph parse_sg(std::string_view text) {
  LineCursor cursor(text);
  std::string_view line;
  std::size_t ln = 0;
  if (!cursor.next(line, ln)) throw ParseError(1, 0, "missing 'n m' header");
  const auto head = tokenize(line);
  if (head.size() != 2) throw ParseError(ln, 1, "header must be 'n m'");
  const std::size_t n = parse_count(head[0], ln, "vertex count");
  const std::size_t m = parse_count(head[1], ln, "edge count");
  if (n >= 2 && m > n * (n - 1) / 2) throw ParseError(ln, head[1].column, "too many edges for a simple graph");
  SignedGraph g = read_block(cursor, n, m, ln, true);
  if (cursor.next(line, ln)) throw ParseError(ln, 1, "unexpected content after last edge");
  return g;
}

std::vector<SignedGraph> parse_unsigned_sg_list(std::string_view text) {
  LineCursor cursor(text);
  std::vector<SignedGraph> out;
  std::string_view line;
  std::size_t ln = 0;
  while (cursor.next(line, ln)) {
    const auto head = tokenize(line);
    if (head.size() != 2) throw ParseError(ln, 1, "header must be 'n m'");
    const std::size_t n = parse_count(head[0], ln, "vertex count");
    const std::size_t m = parse_count(head[1], ln, "edge count");
    out.push_back(read_block(cursor, n, m, ln, false));
  }
  return out;
}

SignedGraph read_sg_file(const std::filesystem::path& path) { return parse_sg(slurp(path)); }

void write_sg_file(const std::filesystem::path& path, const SignedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_sg(g);
  if (!out) throw IoError("write failed for " + path.string());
}

std::string to_graph6(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

SignedGraph parse_graph6(std::string_view record) {
  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= record.size()) throw ParseError(0, pos + 1, "truncated graph6 record");
    const int c = static_cast<unsigned char>(record[pos]);
    if (c < 63 || c > 126)
      throw ParseError(0, pos + 1, "invalid graph6 byte " + std::to_string(c));
    ++pos;
    return c - 63;
  };
  std::size_t n = 0;
  const int first = take();
  if (first < 63) {
    n = static_cast<std::size_t>(first);
  } else {
    int groups = 3;
    if (pos < record.size() && record[pos] == 126) {
      ++pos;
      groups = 6;
    }
    for (int k = 0; k < groups; ++k) n = (n << 6) | static_cast<std::size_t>(take());
  }
  SignedGraph g(n);
  int group = 0;
  int left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        group = take();
        left = 6;
      }
      --left;
      if ((group >> left) & 1) g.set_edge(i, j, Sign::Positive);
    }
  }
  if (left > 0 && (group & ((1 << left) - 1)) != 0)
    throw ParseError(0, pos, "nonzero padding bits in graph6 record");
  if (pos != record.size()) throw ParseError(0, pos + 1, "trailing bytes after graph6 record");
  return g;
}

std::vector<SignedGraph> ingest_graph_list_text(std::string_view text) {
  LineCursor probe(text);
  std::string_view line;
  std::size_t ln = 0;
  if (!probe.next(line, ln)) return {};
  if (looks_like_header(line)) return parse_unsigned_sg_list(text);

  std::vector<SignedGraph> out;
  LineCursor cursor(text);
  while (cursor.next(line, ln)) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
      throw ParseError(ln, e.column(), msg);
    }
  }
  return out;
}

std::vector<SignedGraph> ingest_graph_list(const std::filesystem::path& path) {
  return ingest_graph_list_text(slurp(path));
}

}  // namespace sgraph
