#include <cctype>
#include <optional>
#include <string>

#include "artinian/error.hpp"
#include "artinian/polyring.hpp"

namespace artinian {

std::string to_text(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (c < 0)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    out += Rational(abs(c)).get_str();
    for (int k = 0; k < m.num_vars(); ++k) {
      const int a = m.exponents[k];
      if (a == 0) continue;
      out += "*y" + std::to_string(k + 1);
      if (a > 1) out += '^' + std::to_string(a);
    }
  }
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, int num_vars) : text_(text), num_vars_(num_vars) {}

  Form parse(int declared_degree) {
    if (num_vars_ < 1) fail("num_vars must be positive");
    std::optional<Form> out;
    if (declared_degree >= 0) out.emplace(num_vars_, declared_degree);

    skip_ws();
    if (at_end()) fail("empty form");
    if (is_zero_literal()) return out ? *out : Form(num_vars_, 0);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;

      const std::size_t term_start = pos_;
      auto [mono, coeff] = term();
      if (!out) out.emplace(num_vars_, mono.degree());
      if (mono.degree() != out->degree()) {
        pos_ = term_start;
        fail("term of degree " + std::to_string(mono.degree()) + " in a form of degree " +
             std::to_string(out->degree()));
      }
      out->add_term(mono, coeff * sign);
      skip_ws();
    }
    return *out;
  }

 private:
  bool is_zero_literal() const {
    const auto rest = text_.substr(pos_);
    const auto last = rest.find_last_not_of(" \t\r\n");
    return last == 0 && rest[0] == '0';
  }

  std::pair<Monomial, Rational> term() {
    Monomial mono{std::vector<int>(num_vars_, 0)};
    Rational coeff = 1;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      skip_ws();
      if (peek() != '*') return {mono, coeff};
      ++pos_;
      skip_ws();
    }
    while (need_factor) {
      if (peek() != 'y') fail("expected a variable 'y<k>'");
      ++pos_;
      const std::size_t var_at = pos_;
      const long k = number();
      if (k < 1 || k > num_vars_) {
        pos_ = var_at;
        fail("variable index " + std::to_string(k) + " outside 1.." + std::to_string(num_vars_));
      }
      long e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = number();
      }
      mono.exponents[k - 1] += static_cast<int>(e);
      skip_ws();
      need_factor = peek() == '*';
      if (need_factor) {
        ++pos_;
        skip_ws();
      }
    }
    return {mono, coeff};
  }

  Rational rational() {
    const std::size_t start = pos_;
    digits();
    if (peek() == '/') {
      ++pos_;
      const std::size_t den_at = pos_;
      digits();
      Integer den(std::string(text_.substr(den_at, pos_ - den_at)));
      if (den == 0) {
        pos_ = den_at;
        fail("zero denominator");
      }
    }
    Rational q(std::string(text_.substr(start, pos_ - start)));
    q.canonicalize();
    return q;
  }

  long number() {
    const std::size_t start = pos_;
    digits();
    if (pos_ - start > 9) {
      pos_ = start;
      fail("number too large");
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  int num_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, int num_vars, int degree) {
  return FormParser(text, num_vars).parse(degree);
}

}  // namespace artinian
