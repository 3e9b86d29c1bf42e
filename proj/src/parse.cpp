#include "fanforge/parse.hpp"

#include "fanforge/error.hpp"

#include <cctype>

namespace fanforge {

namespace {

class Parser {
 public:
  Parser(const TablePtr& table, std::string_view text) : table_(table), text_(text) {}

  Scalar run() {
    skip_space();
    if (at_end()) error("empty expression");
    Scalar value = expr();
    skip_space();
    if (!at_end()) error("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what + " in \"" + std::string(text_) + "\"");
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match_utf8(std::string_view seq) {
    if (text_.substr(pos_, seq.size()) == seq) {
      pos_ += seq.size();
      return true;
    }
    return false;
  }

  // Returns the operator character after normalizing Unicode spellings, or 0.
  char peek_operator() {
    skip_space();
    if (at_end()) return 0;
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return '-';
    if (text_.substr(pos_, 2) == "\xC2\xB7") return '*';
    return text_[pos_];
  }

  void consume_operator() {
    if (match_utf8("\xE2\x88\x92") || match_utf8("\xC2\xB7")) return;
    ++pos_;
  }

  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      const char op = peek_operator();
      if (op != '+' && op != '-') return acc;
      consume_operator();
      Scalar rhs = term();
      if (op == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
  }

  Scalar term() {
    Scalar acc = unary();
    for (;;) {
      const char op = peek_operator();
      if (op != '*' && op != '/') return acc;
      consume_operator();
      const std::size_t where = pos_;
      Scalar rhs = unary();
      if (op == '*') {
        acc *= rhs;
      } else {
        if (rhs.is_zero()) {
          pos_ = where;
          error("division by zero");
        }
        acc /= rhs;
      }
    }
  }

  Scalar unary() {
    const char op = peek_operator();
    if (op == '-') {
      consume_operator();
      return -unary();
    }
    if (op == '+') {
      consume_operator();
      return unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (peek_operator() != '^') return base;
    consume_operator();
    skip_space();
    bool negative = false;
    if (!at_end() && (text_[pos_] == '-' || match_utf8("\xE2\x88\x92"))) {
      if (text_[pos_] == '-') ++pos_;
      negative = true;
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    if (pos_ - start > 6) error("exponent too large");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    Scalar result(1);
    Scalar factor = base;
    for (unsigned long k = e; k > 0; k >>= 1) {
      if (k & 1) result *= factor;
      if (k > 1) factor *= factor;
    }
    if (negative) {
      if (result.is_zero()) error("zero raised to a negative power");
      result = invert(result);
    }
    return result;
  }

  Scalar atom() {
    skip_space();
    if (at_end()) error("unexpected end of expression");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Scalar inner = expr();
      skip_space();
      if (at_end() || text_[pos_] != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return number();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!table_ || !table_->index_of(name)) {
        pos_ = start;
        fail(ErrorCode::UnknownSymbol, "column " + std::to_string(start + 1) + ": unknown symbol '" + name + "'");
      }
      return Scalar::symbol(table_, name);
    }
    error("unexpected character '" + std::string(1, ch) + "'");
  }

  Scalar number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    mpz_class den = 1;
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (frac == pos_) error("expected digits after '.'");
      digits += std::string(text_.substr(frac, pos_ - frac));
      for (std::size_t i = frac; i < pos_; ++i) den *= 10;
    }
    Rational value(mpz_class(digits), den);
    value.canonicalize();
    Scalar out(value);
    return out;
  }

  const TablePtr& table_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const TablePtr& table, std::string_view text) {
  Scalar value = Parser(table, text).run();
  // Literal-only expressions still carry the document's table.
  return value.table() ? value : value + Scalar::fraction(table, Polynomial(), Polynomial(Rational(1)));
}

}  // namespace fanforge
