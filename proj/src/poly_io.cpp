#include "pdda/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace pdda {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      out.push_back(s_[pos_++]);
    if (out.empty()) throw value_error("expected digits at position " + std::to_string(pos_) +
                                       " in \"" + s_ + "\"");
    return out;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw value_error(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, FieldSpec field, int nvars,
                            bool allow_laurent) {
  Scanner sc(text);
  Polynomial result(field, nvars);
  if (sc.done()) throw value_error("empty polynomial text");

  bool first = true;
  while (!sc.done()) {
    bool negative = false;
    if (sc.accept('-'))
      negative = true;
    else if (sc.accept('+')) {
      if (first) sc.fail("unexpected leading '+'");
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;

    Scalar coeff = Scalar::one(field);
    Monomial mono = Monomial::unit(nvars);
    bool saw_factor = false;

    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      std::string num = sc.digits();
      std::string lit = num;
      if (sc.accept('/')) lit += "/" + sc.digits();
      coeff = Scalar::parse(lit, field);
      saw_factor = true;
      if (!sc.accept('*')) {
        result.add_term(mono, negative ? -coeff : coeff);
        continue;
      }
      saw_factor = false;
    }

    do {
      char c = sc.peek();
      if (c != 'X' && c != 'T') sc.fail("expected a variable factor");
      sc.accept(c);
      long index = std::stol(sc.digits());
      if (index < 1 || index > nvars)
        throw value_error("variable index " + std::to_string(index) + " outside X1..X" +
                          std::to_string(nvars));
      long exp = 1;
      if (sc.accept('^')) {
        bool eneg = sc.accept('-');
        exp = std::stol(sc.digits());
        if (eneg) exp = -exp;
      }
      if (exp < 0 && !allow_laurent)
        throw value_error("negative exponent outside a Laurent context");
      Monomial factor = Monomial::var(nvars, static_cast<int>(index - 1), 1)
                            .pow(exp);
      mono = mono.times(factor);
      saw_factor = true;
    } while (sc.accept('*'));

    if (!saw_factor) sc.fail("empty term");
    result.add_term(mono, negative ? -coeff : coeff);
  }
  return result;
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, FieldSpec field, int nvars,
                                              bool allow_laurent) {
  std::vector<Polynomial> out;
  std::string piece;
  std::stringstream ss(text);
  while (std::getline(ss, piece, ',')) {
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) throw value_error("empty entry in polynomial list");
    out.push_back(parse_polynomial(piece, field, nvars, allow_laurent));
  }
  if (out.empty()) throw value_error("empty polynomial list");
  return out;
}

std::string to_string(const Scalar& s) { return s.str(); }

namespace {

std::string monomial_string(const Monomial& m, char letter) {
  std::string out;
  for (int v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += letter + std::to_string(v + 1);
    if (m[v] != 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, char letter) {
  if (p.is_zero()) return "0";
  std::string out;
  // Descending grevlex; over Q split signs, over F_p print residues plainly.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = p.field().is_rational() && c.value() < 0;
    Scalar mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string ms = monomial_string(m, letter);
    if (ms.empty())
      out += mag.str();
    else if (mag.is_one())
      out += ms;
    else
      out += mag.str() + "*" + ms;
  }
  return out;
}

std::string to_string(const RationalExpression& r, char letter) {
  std::string den = to_string(r.den(), letter);
  if (den == "1") return to_string(r.num(), letter);
  return "(" + to_string(r.num(), letter) + ") / (" + den + ")";
}

}  // namespace pdda
