#include "seqnorm/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include "seqnorm/error.hpp"

namespace seqnorm {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NormDescriptor parse() {
    NormDescriptor d = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const { throw ParseError(message, at); }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a space name");
    return text_.substr(start, pos_ - start);
  }

  double number(std::size_t& at) {
    skip_space();
    at = pos_;
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    if (!std::isfinite(value)) fail("number must be finite");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  NormDescriptor expr() {
    skip_space();
    const std::size_t start = pos_;
    const std::string_view name = identifier();
    if (name == "sup") return NormDescriptor::sup();
    if (name == "l1") return NormDescriptor::l1();
    if (name == "day") return NormDescriptor::day();
    if (name == "lorentz") return NormDescriptor::lorentz();
    if (name == "tsirelson") return NormDescriptor::tsirelson();
    if (name == "lp") {
      expect('(');
      std::size_t at = 0;
      const double p = number(at);
      if (!(p >= 1.0)) fail("lp requires 1 <= p < infinity", at);
      expect(')');
      return NormDescriptor::lp(p);
    }
    if (name == "dayAug" || name == "scBase" || name == "sym2R") {
      expect('(');
      NormDescriptor base = expr();
      expect(')');
      if (name == "dayAug") return NormDescriptor::day_augment(std::move(base));
      if (name == "scBase") return NormDescriptor::strictly_convex(std::move(base));
      return NormDescriptor::symmetric_2r(std::move(base));
    }
    if (name == "davis") {
      expect('(');
      NormDescriptor e = expr();
      expect(',');
      NormDescriptor f = expr();
      expect(',');
      std::size_t at = 0;
      const double m = number(at);
      if (!(m > 0.0)) fail("davis requires m > 0", at);
      expect(')');
      return NormDescriptor::davis(std::move(e), std::move(f), m);
    }
    if (name == "Y") {
      expect('(');
      NormDescriptor e = expr();
      expect(',');
      NormDescriptor f = expr();
      expect(',');
      NormDescriptor x = expr();
      expect(',');
      skip_space();
      const std::size_t at = pos_;
      if (identifier() != "pow2") fail("unknown m-rule (expected pow2)", at);
      expect(')');
      return NormDescriptor::y_space(std::move(e), std::move(f), std::move(x), MRule::kPow2);
    }
    fail("unknown space '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return {buffer, ptr};
}

NormDescriptor parse_space(std::string_view text) { return Parser(text).parse(); }

std::string print_space(const NormDescriptor& norm) {
  switch (norm.kind()) {
    case NormKind::kLp:
      return "lp(" + format_number(norm.parameter()) + ")";
    case NormKind::kSup:
      return "sup";
    case NormKind::kL1:
      return "l1";
    case NormKind::kDay:
      return "day";
    case NormKind::kLorentz:
      return "lorentz";
    case NormKind::kTsirelson:
      return "tsirelson";
    case NormKind::kDayAugment:
      return "dayAug(" + print_space(norm.child(0)) + ")";
    case NormKind::kStrictlyConvex:
      return "scBase(" + print_space(norm.child(0)) + ")";
    case NormKind::kSymmetric2R:
      return "sym2R(" + print_space(norm.child(0)) + ")";
    case NormKind::kDavis:
      return "davis(" + print_space(norm.child(0)) + ", " + print_space(norm.child(1)) + ", " +
             format_number(norm.parameter()) + ")";
    case NormKind::kYSpace:
      return "Y(" + print_space(norm.child(0)) + ", " + print_space(norm.child(1)) + ", " +
             print_space(norm.child(2)) + ", pow2)";
    case NormKind::kCustom:
      break;
  }
  throw std::invalid_argument("custom norm '" + norm.custom_name() + "' has no expression form");
}

}  // namespace seqnorm
