#include "hypdeg/parse.hpp"

#include <cctype>
#include <map>

#include "hypdeg/error.hpp"

namespace hypdeg {

namespace {

// Slot 0 is t, slot k >= 1 is x_k.
using Exps = std::vector<int>;
using Generic = std::map<Exps, Rat>;

Exps trimmed(Exps e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

void add_into(Generic& g, const Exps& e, const Rat& c) {
  if (c == 0) return;
  Exps key = trimmed(e);
  Rat& slot = g[key];
  slot += c;
  if (slot == 0) g.erase(key);
}

Generic mul(const Generic& a, const Generic& b) {
  Generic out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      add_into(out, e, ca * cb);
    }
  }
  return out;
}

Generic constant(const Rat& c) {
  Generic g;
  add_into(g, {}, c);
  return g;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Generic parse() {
    Generic g = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Generic expr() {
    Generic acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = mul(acc, constant(Rat(-1)));
    for (;;) {
      if (accept('+')) {
        for (const auto& [e, c] : term()) add_into(acc, e, c);
      } else if (accept('-')) {
        for (const auto& [e, c] : term()) add_into(acc, e, -c);
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Generic term() {
    Generic acc = power();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, power());
      } else if (accept('/')) {
        Generic d = power();
        if (d.size() != 1 || !d.begin()->first.empty()) fail("division only by a nonzero constant");
        acc = mul(acc, constant(1 / d.begin()->second));
      } else if (starts_factor()) {
        // Implicit multiplication such as "3x1" or "2(t+1)".
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Generic power() {
    Generic base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const long e = std::stol(s_.substr(start, pos_ - start));
      if (e > 100000) fail("exponent too large");
      Generic out = constant(Rat(1));
      for (long i = 0; i < e; ++i) out = mul(out, base);
      return out;
    }
    return base;
  }

  Generic primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Generic g = expr();
      if (!accept(')')) fail("expected ')'");
      return g;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rat(Int(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      int slot = 0;
      if (c == 't') {
        slot = 0;
      } else if (c == 'x') {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        slot = start == pos_ ? 1 : std::stoi(s_.substr(start, pos_ - start));
        if (slot < 1) fail("variable index must be >= 1");
      } else if (c == 'y') {
        slot = 2;
      } else if (c == 'z') {
        slot = 3;
      } else {
        --pos_;
        fail("unknown variable");
      }
      Exps e(static_cast<std::size_t>(slot) + 1, 0);
      e[static_cast<std::size_t>(slot)] = 1;
      Generic g;
      add_into(g, e, Rat(1));
      return g;
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_multipoly(const std::string& text, int nvars) {
  const Generic g = Parser(text).parse();
  int max_index = 0;
  for (const auto& [e, c] : g) {
    if (!e.empty() && e[0] != 0) throw Error(ErrorCode::ParseError, "variable t not allowed in a form: '" + text + "'");
    max_index = std::max(max_index, static_cast<int>(e.size()) - 1);
    if (c.get_den() != 1) throw Error(ErrorCode::ParseError, "non-integral coefficient in '" + text + "'");
  }
  const int m = nvars < 0 ? std::max(max_index, 1) : nvars;
  if (max_index > m) throw Error(ErrorCode::ParseError, "variable index exceeds declared count in '" + text + "'");
  MultiPoly out(m);
  for (const auto& [e, c] : g) {
    ExponentVector ex(static_cast<std::size_t>(m), 0);
    for (std::size_t k = 1; k < e.size(); ++k) ex[k - 1] = e[k];
    out.add_term(ex, c.get_num());
  }
  return out;
}

UniPoly parse_unipoly(const std::string& text) {
  const Generic g = Parser(text).parse();
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : g) {
    int deg = 0;
    int used = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      deg = e[k];
      ++used;
      // x1 stands in for t in univariate input.
      if (k > 1) throw Error(ErrorCode::ParseError, "univariate input must use t or x: '" + text + "'");
    }
    if (used > 1) throw Error(ErrorCode::ParseError, "mixed variables in univariate input: '" + text + "'");
    if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(static_cast<std::size_t>(deg) + 1, Rat(0));
    coeffs[static_cast<std::size_t>(deg)] += c;
  }
  return UniPoly(std::move(coeffs));
}

std::vector<UniPoly> parse_unipoly_list(const std::string& text) {
  std::vector<UniPoly> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    out.push_back(parse_unipoly(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  std::size_t start = 0;
  if (text.empty()) return out;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stol(piece, &used));
      if (used != piece.size() && piece.find_first_not_of(' ', used) != std::string::npos)
        throw Error(ErrorCode::ParseError, "bad integer '" + piece + "'");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hypdeg
