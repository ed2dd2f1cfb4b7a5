#include "pseudoquant/symcore/parse.hpp"

#include <cctype>

namespace pq {

ParseError::ParseError(std::string message, std::size_t column)
    : Error(message + " at column " + std::to_string(column)), detail_(std::move(message)), column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ChartPtr& chart) : text_(text), chart_(chart) {}

  Poly parse() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("empty expression", 1);
    Poly p = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by nonzero constants");
        }
        acc *= d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      return pow(base, static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational r;
      r.set_str(std::string(text_.substr(start, pos_ - start)), 10);
      return Poly(chart_, Scalar(r));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      auto name = text_.substr(start, pos_ - start);
      if (name == "i") return Poly(chart_, Scalar::i());
      if (name == kHbarName) return Poly::hbar(chart_);
      if (auto coord = chart_->find(name)) return Poly::coordinate(chart_, *coord);
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ChartPtr& chart_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const ChartPtr& chart) { return Parser(text, chart).parse(); }

OneForm parse_one_form(const std::vector<std::pair<std::string, std::string>>& entries, const ChartPtr& chart) {
  OneForm w(chart);
  for (const auto& [coeff, basis] : entries) {
    if (basis.size() < 2 || basis[0] != 'd') throw ParseError("basis covector must look like 'd<coordinate>'", 1);
    auto coord = chart->find(std::string_view(basis).substr(1));
    if (!coord) throw ParseError("unknown covector '" + basis + "'", 2);
    w[*coord] += parse_poly(coeff, chart);
  }
  return w;
}

std::vector<std::pair<std::string, std::string>> one_form_entries(const OneForm& form) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int c = 0; c < form.chart()->dim(); ++c) {
    if (!form[c].is_zero()) out.emplace_back(to_string(form[c]), "d" + form.chart()->name(c));
  }
  return out;
}

}  // namespace pq
