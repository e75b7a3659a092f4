#include "qsheaf/parse.hpp"

#include <cctype>
#include <charconv>

namespace qsheaf {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  SheafExpr run() {
    skip();
    expect('Q', "expected header `Qn:`");
    const int n = integer("quadric dimension");
    skip();
    expect(':', "expected ':' after the quadric dimension");
    if (n < 2 || n > Quadric::kMaxDim) {
      fail("quadric dimension must lie in [2, " + std::to_string(Quadric::kMaxDim) + "]");
    }
    SheafExpr e = expr(Quadric(n));
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return normalize(e);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    int line = 1;
    int col = 1;
    for (std::size_t k = 0; k < at && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* msg) {
    if (!accept(c)) fail(msg);
  }

  bool keyword(std::string_view kw) {
    skip();
    if (s_.substr(pos_, kw.size()) != kw) return false;
    pos_ += kw.size();
    return true;
  }

  int integer(const char* what) {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail_at(std::string("expected an integer ") + what, start);
    int v = 0;
    const char* first = s_.data() + (s_[start] == '+' ? start + 1 : start);
    auto [p, ec] = std::from_chars(first, s_.data() + pos_, v);
    if (ec != std::errc() || p != s_.data() + pos_) fail_at(std::string("integer out of range: ") + what, start);
    return v;
  }

  // '(' int ')' directly after a term
  std::optional<int> twist() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != '(') return std::nullopt;
    std::size_t k = pos_ + 1;
    while (k < s_.size() && std::isspace(static_cast<unsigned char>(s_[k]))) ++k;
    if (k >= s_.size() || !(std::isdigit(static_cast<unsigned char>(s_[k])) || s_[k] == '-' || s_[k] == '+')) {
      return std::nullopt;
    }
    ++pos_;
    const int v = integer("twist");
    expect(')', "expected ')' after twist");
    return v;
  }

  SheafExpr expr(const Quadric& q) {
    std::vector<SheafExpr> terms{term(q)};
    while (accept('+')) terms.push_back(term(q));
    return SheafExpr::sum(std::move(terms));
  }

  template <class F>
  SheafExpr build(std::size_t at, F&& f) {
    try {
      return f();
    } catch (const StructuralError& e) {
      fail_at(e.what(), at);
    }
  }

  SheafExpr with_twist(SheafExpr e) {
    if (auto k = twist()) return SheafExpr::twist(std::move(e), *k);
    return e;
  }

  SheafExpr term(const Quadric& q) {
    skip();
    const std::size_t at = pos_;
    if (keyword("quot")) {
      expect('(', "expected '(' after quot");
      SheafExpr sub = expr(q);
      expect(',', "expected ',' in quot(sub, mid)");
      SheafExpr mid = expr(q);
      expect(')', "expected ')' closing quot");
      return with_twist(build(at, [&] { return SheafExpr::quotient(sub, mid); }));
    }
    if (keyword("res")) {
      expect('(', "expected '(' after res");
      if (q.n() + 1 > Quadric::kMaxDim) fail_at("res body would live above the largest supported quadric", at);
      SheafExpr body = expr(Quadric(q.n() + 1));
      expect(')', "expected ')' closing res");
      return with_twist(build(at, [&] { return SheafExpr::restrict_to_hyperplane(body); }));
    }
    if (accept('(')) {
      SheafExpr inner = expr(q);
      expect(')', "expected ')'");
      return with_twist(inner);
    }
    if (keyword("Pt")) {
      expect('[', "expected '[' after Pt");
      const std::size_t len_at = pos_;
      const int len = integer("skyscraper length");
      expect(']', "expected ']'");
      if (len < 1) fail_at("skyscraper length must be >= 1", len_at);
      auto tw = twist();
      (void)tw;  // twisting a skyscraper is the identity
      return SheafExpr::atom(q, {Generator::skyscraper(len)});
    }
    if (accept('0')) return SheafExpr::atom(q, {});
    if (accept('O')) {
      const int k = twist().value_or(0);
      return SheafExpr::atom(q, {Generator::line(k)});
    }
    if (accept('S')) {
      SpinorLabel label = SpinorLabel::Single;
      if (pos_ < s_.size() && s_[pos_] == '1') {
        label = SpinorLabel::First;
        ++pos_;
      } else if (pos_ < s_.size() && s_[pos_] == '2') {
        label = SpinorLabel::Second;
        ++pos_;
      }
      if (!q.valid_label(label)) {
        fail_at("spinor " + to_string(label) + " is not defined on Q" + std::to_string(q.n()) +
                    (q.even() ? " (use S1 or S2)" : " (use S)"),
                at);
      }
      const int k = twist().value_or(0);
      return SheafExpr::atom(q, {Generator::spinor(label, k)});
    }
    if (pos_ >= s_.size()) fail("unexpected end of input, expected a term");
    fail(std::string("unexpected '") + s_[pos_] + "', expected a term");
  }
};

}  // namespace

SheafExpr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace qsheaf
