#include "wang/color.hpp"

namespace wang {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad colour '" + s + "': " + why);
  }
  bool eat(const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) != 0) return false;
    pos += lit.size();
    return true;
  }
  int number() {
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("expected number");
    return std::stoi(s.substr(start, pos - start));
  }
  std::vector<int> dotted_numbers() {
    std::vector<int> out;
    if (pos >= s.size() || s[pos] == ')') return out;
    out.push_back(number());
    while (pos < s.size() && s[pos] == '.') {
      ++pos;
      out.push_back(number());
    }
    return out;
  }
  std::string text_until_break() {
    size_t start = pos;
    while (pos < s.size() && s[pos] != ':' && s[pos] != ')' && s[pos] != '.' &&
           s[pos] != '(')
      ++pos;
    if (pos == start) fail("expected text");
    return s.substr(start, pos - start);
  }

  Color color() {
    if (eat("tint:")) {
      int t = number();
      if (!eat(":(")) fail("expected ':(' after tint index");
      Color inner = color();
      if (!eat(")")) fail("expected ')'");
      return inner.tinted(t);
    }
    if (eat("atom:")) return Color::atom(text_until_break());
    if (eat("seqx:")) {
      int tag = number();
      if (!eat(":")) fail("expected ':' after seqx tag");
      return Color::seq_ext(dotted_numbers(), tag);
    }
    if (eat("seq:")) return Color::seq(dotted_numbers());
    if (eat("idx:")) {
      std::string tag = text_until_break();
      std::vector<int> idx;
      while (pos < s.size() && s[pos] == '.') {
        ++pos;
        idx.push_back(number());
      }
      return Color::indexed(tag, idx);
    }
    fail("unknown kind");
  }
};

}  // namespace

Color Color::decode(const std::string& s) {
  Parser p{s};
  Color c = p.color();
  if (p.pos != s.size()) p.fail("trailing characters");
  return c;
}

}  // namespace wang
