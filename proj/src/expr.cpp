#include "kmetric/expr.hpp"

#include <cctype>
#include <string>

namespace kmetric {

namespace {

struct Parser {
  std::string_view src;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& what) const {
    fail(ErrorCode::ParseError,
         "expression, position " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  void expect(char c) {
    if (peek() != c) err(std::string("expected '") + c + "'");
    ++pos;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == start) err("expected an integer");
    long v = 0;
    for (size_t i = start; i < pos; ++i) {
      v = v * 10 + (src[i] - '0');
      if (v > kMaxOrder) err("order too large");
    }
    return int(v);
  }

  std::string parse_word() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() &&
           std::isalpha(static_cast<unsigned char>(src[pos])))
      ++pos;
    return std::string(src.substr(start, pos - start));
  }

  Graph parse_expr() {
    skip_ws();
    if (pos >= src.size()) err("empty expression");
    const char c = src[pos];

    if (c == '@') {
      ++pos;
      size_t start = pos;
      while (pos < src.size() && src[pos] != ',' && src[pos] != ';' &&
             src[pos] != ')' &&
             !std::isspace(static_cast<unsigned char>(src[pos])))
        ++pos;
      if (pos == start) err("expected a file path after '@'");
      return load_edge_list(std::string(src.substr(start, pos - start)));
    }

    // Single family letter followed by digits.
    if ((c == 'P' || c == 'C' || c == 'K' || c == 'S' || c == 'F' || c == 'W') &&
        pos + 1 < src.size() &&
        std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
      ++pos;
      const int n = parse_int();
      try {
        switch (c) {
          case 'P': return path(n);
          case 'C': return cycle(n);
          case 'K': return complete(n);
          case 'S': return star(n);
          case 'F': return fan(n);
          case 'W': return wheel(n);
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidOrder) err(e.what());
        throw;
      }
    }

    const std::string word = parse_word();
    if (word == "petersen") return petersen();
    if (word == "comp") {
      expect('(');
      Graph g = parse_expr();
      expect(')');
      return complement(g);
    }
    if (word == "join") {
      expect('(');
      Graph a = parse_expr();
      expect(';');
      Graph b = parse_expr();
      expect(')');
      return join(a, b).first;
    }
    if (word == "corona") {
      expect('(');
      Graph base = parse_expr();
      expect(';');
      std::vector<Graph> attachments;
      attachments.push_back(parse_expr());
      while (peek() == ',') {
        ++pos;
        attachments.push_back(parse_expr());
      }
      expect(')');
      if (int(attachments.size()) != base.order())
        err("corona needs one attachment per base vertex (base order " +
            std::to_string(base.order()) + ", got " +
            std::to_string(attachments.size()) + ")");
      return corona(CoronaSpec{std::move(base), std::move(attachments)}).first;
    }
    if (word.empty()) err("unexpected character");
    err("unknown name '" + word + "'");
  }
};

}  // namespace

Graph parse_graph_expr(std::string_view expr) {
  Parser p{expr};
  Graph g = p.parse_expr();
  if (!p.eof()) p.err("trailing content");
  return g;
}

std::vector<Graph> parse_graph_list(std::string_view list) {
  std::vector<Graph> out;
  Parser p{list};
  out.push_back(p.parse_expr());
  while (p.peek() == ',') {
    ++p.pos;
    out.push_back(p.parse_expr());
  }
  if (!p.eof()) p.err("trailing content");
  return out;
}

}  // namespace kmetric
