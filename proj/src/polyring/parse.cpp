#include "defring/parse.hpp"

#include <cctype>

namespace defring {

namespace {

class Parser {
 public:
  Parser(const RosterPtr& roster, std::string_view text, const std::map<std::string, Polynomial>& bindings)
      : roster_(roster), text_(text), bindings_(bindings) {}

  Polynomial run() {
    Polynomial r = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw AlgebraError("parse error in \"" + std::string(text_) + "\": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    Polynomial r = product();
    while (true) {
      if (eat('+'))
        r += product();
      else if (eat('-'))
        r -= product();
      else
        return r;
    }
  }

  Polynomial product() {
    Polynomial r = unary();
    while (true) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        r *= Rational(1) / d.constant_term();
      } else {
        return r;
      }
    }
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (eat('(')) {
      Polynomial r = sum();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(roster_, Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (roster_->contains(name)) return Polynomial::variable(roster_, name);
      auto it = bindings_.find(name);
      if (it == bindings_.end()) fail("unknown name '" + name + "'");
      if (it->second.is_zero()) return Polynomial(roster_);
      return it->second.transport(roster_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RosterPtr& roster_;
  std::string_view text_;
  const std::map<std::string, Polynomial>& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RosterPtr& roster, std::string_view text,
                            const std::map<std::string, Polynomial>& bindings) {
  return Parser(roster, text, bindings).run();
}

}  // namespace defring
