#include "mcg/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "mcg/errors.hpp"

namespace mcg {

void Presentation::validate() const {
  if (generator_count < 1) throw std::invalid_argument("Presentation: no generators");
  for (const auto& w : relators) {
    if (w.empty()) throw std::invalid_argument("Presentation: empty relator");
    for (int s : w) {
      int m = s > 0 ? s : -s;
      if (m < 1 || m > generator_count)
        throw std::invalid_argument("Presentation: generator index out of range");
    }
  }
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  std::map<std::string, int, std::less<>> gen_index;  // name -> 1-based

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw ParseError("presentation: expected '" + std::string(1, c) + "' at position " +
                       std::to_string(pos));
  }

  bool peek_ident() {
    skip_ws();
    return pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]));
  }

  std::string ident() {
    skip_ws();
    if (!peek_ident()) throw ParseError("presentation: expected identifier");
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("presentation: expected integer");
    return std::strtol(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
  }

  static std::vector<int> invert(const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
  }

  static std::vector<int> power(const std::vector<int>& w, long e) {
    std::vector<int> base = e < 0 ? invert(w) : w;
    if (e < 0) e = -e;
    std::vector<int> out;
    out.reserve(base.size() * static_cast<std::size_t>(e));
    for (long i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  // factor := ident | '(' expr ')'
  std::vector<int> factor() {
    if (eat('(')) {
      std::vector<int> w = expr();
      expect(')');
      return w;
    }
    std::string name = ident();
    auto it = gen_index.find(name);
    if (it == gen_index.end()) throw ParseError("presentation: unknown generator '" + name + "'");
    return {it->second};
  }

  // term := factor ('^' int)?
  std::vector<int> term() {
    std::vector<int> w = factor();
    skip_ws();
    if (eat('^')) w = power(w, integer());
    return w;
  }

  // expr := term ('*' term)*
  std::vector<int> expr() {
    std::vector<int> w = term();
    while (eat('*')) {
      std::vector<int> t = term();
      w.insert(w.end(), t.begin(), t.end());
    }
    return w;
  }
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Parser p{text, 0, {}};
  p.expect('<');
  Presentation out;
  while (true) {
    std::string name = p.ident();
    if (!p.gen_index.emplace(name, ++out.generator_count).second)
      throw ParseError("presentation: duplicate generator '" + name + "'");
    if (!p.eat(',')) break;
  }
  p.expect('|');
  p.skip_ws();
  if (p.pos < p.text.size() && p.text[p.pos] != '>') {
    while (true) {
      std::vector<int> w = p.expr();
      if (w.empty()) throw ParseError("presentation: relator reduces to the empty word");
      out.relators.push_back(std::move(w));
      if (!p.eat(',')) break;
    }
  }
  p.expect('>');
  p.skip_ws();
  if (p.pos != p.text.size()) throw ParseError("presentation: trailing input");
  out.validate();
  return out;
}

namespace {

std::string gen_symbol(int index_1based) {
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  if (index_1based <= 6) return names[index_1based - 1];
  return "g" + std::to_string(index_1based);
}

}  // namespace

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (int i = 1; i <= p.generator_count; ++i) {
    if (i > 1) out += ",";
    out += gen_symbol(i);
  }
  out += " |";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    out += r == 0 ? " " : ", ";
    const auto& w = p.relators[r];
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      long run = static_cast<long>(j - i);
      long exp = w[i] > 0 ? run : -run;
      if (!first) out += "*";
      out += gen_symbol(w[i] > 0 ? w[i] : -w[i]);
      if (exp != 1) out += "^" + std::to_string(exp);
      first = false;
      i = j;
    }
  }
  out += ">";
  return out;
}

}  // namespace mcg
