#include "gralg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gralg {

Poly Poly::constant(int nvars, const Int& c) {
  Poly p = zero(nvars);
  p.add_term(Exp(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Exp e(nvars, 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(nvars, std::move(e), 1);
}

Poly Poly::monomial(int nvars, Exp e, const Int& c) {
  Poly p = zero(nvars);
  p.add_term(e, c);
  return p;
}

Poly& Poly::add_term(const Exp& e, const Int& c) {
  if (c == 0) return *this;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r = zero(nvars);
  for (const auto& [e, c] : terms) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r = zero(nvars);
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      Exp e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::pow(long n) const {
  Poly r = constant(nvars, 1);
  for (long i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print leading monomials first
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) os << "-", a = -a;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](long k) { return k != 0; });
    if (a != 1 || !has_var) os << a.get_str() << (has_var ? "*" : "");
    bool star = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  const std::vector<std::string>& names;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  Poly expr() {
    Poly r = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  Poly term() {
    Poly r = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        r = r * factor();
      } else if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '(')) {
        r = r * factor();  // juxtaposition
      } else {
        return r;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    skip();
    if (eat('^')) {
      long n = integer();
      if (n < 0) fail("negative exponent");
      return b.pow(n);
    }
    return b;
  }

  long integer() {
    skip();
    bool neg = eat('-');
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    long v = std::stol(s.substr(start, pos - start));
    return neg ? -v : v;
  }

  Poly base() {
    skip();
    if (eat('(')) {
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Poly::constant(static_cast<int>(names.size()), Int(s.substr(start, pos - start)));
    }
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) fail("unknown variable '" + name + "'");
      return Poly::variable(static_cast<int>(names.size()),
                            static_cast<int>(it - names.begin()));
    }
    fail("expected polynomial");
  }
};

}  // namespace

Poly parse_poly(const std::string& src, const std::vector<std::string>& names) {
  PolyParser p{src, names};
  Poly r = p.expr();
  p.skip();
  if (p.pos != src.size()) p.fail("trailing input");
  return r;
}

}  // namespace gralg
