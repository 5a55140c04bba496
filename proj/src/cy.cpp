#include "cyclocover/cy.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cyclo {

HodgeNumbers borcea_voisin_hodge(const FixedLocusProfile& p) {
  if (p.curves < 0 || p.genus_sum < 0)
    throw std::invalid_argument("fixed locus counts must be non-negative");
  return HodgeNumbers{11 + 5 * p.curves - p.genus_sum, 11 + 5 * p.genus_sum - p.curves};
}

FixedLocusProfile nikulin_fixed_locus(const NikulinTriple& n) {
  if (n.t < 1 || n.t > 20) throw std::invalid_argument("rank t must lie between 1 and 20");
  if (n.a < 0) throw std::invalid_argument("discriminant exponent a must be non-negative");
  if (n.delta != 0 && n.delta != 1) throw std::invalid_argument("delta must be 0 or 1");
  if ((n.t - n.a) % 2 != 0) throw std::invalid_argument("t and a must have equal parity");
  if (n.a > n.t) throw std::invalid_argument("a cannot exceed t");
  if (n.t + n.a > 22) throw std::invalid_argument("t + a cannot exceed 22");
  if (n.t == 10 && n.a == 10 && n.delta == 0) return FixedLocusProfile{0, 0};
  if (n.t == 10 && n.a == 8 && n.delta == 0) return FixedLocusProfile{2, 2};
  return FixedLocusProfile{(n.t - n.a) / 2 + 1, (22 - n.t - n.a) / 2};
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& text) : text_(text) {}

  VhsExpression parse() {
    VhsExpression e = expression();
    skip_spaces();
    if (pos_ != text_.size())
      throw std::invalid_argument("unexpected text after the expression");
    return e;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string word() {
    skip_spaces();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw std::invalid_argument("expected a keyword in the expression");
    return text_.substr(start, pos_ - start);
  }

  long number() {
    skip_spaces();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw std::invalid_argument("expected a non-negative integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in the expression");
    ++pos_;
  }

  VhsExpression expression() {
    std::string head = word();
    VhsExpression e;
    if (head == "leaf") {
      e.kind = VhsExpression::Kind::leaf;
      e.value = number();
      return e;
    }
    if (head == "tensor")
      e.kind = VhsExpression::Kind::tensor;
    else if (head == "sum")
      e.kind = VhsExpression::Kind::direct_sum;
    else
      throw std::invalid_argument("unknown expression head '" + head + "'");
    expect('(');
    e.children.push_back(expression());
    while (true) {
      skip_spaces();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        e.children.push_back(expression());
        continue;
      }
      break;
    }
    expect(')');
    return e;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

VhsExpression parse_vhs_expression(const std::string& text) {
  return ExpressionParser(text).parse();
}

std::string vhs_expression_string(const VhsExpression& e) {
  std::ostringstream out;
  switch (e.kind) {
    case VhsExpression::Kind::leaf:
      out << "leaf " << e.value;
      break;
    case VhsExpression::Kind::tensor:
    case VhsExpression::Kind::direct_sum:
      out << (e.kind == VhsExpression::Kind::tensor ? "tensor(" : "sum(");
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out << ", ";
        out << vhs_expression_string(e.children[i]);
      }
      out << ")";
      break;
  }
  return out.str();
}

long yukawa_length(const VhsExpression& e) {
  switch (e.kind) {
    case VhsExpression::Kind::leaf:
      if (e.value < 0) throw std::invalid_argument("leaf lengths must be non-negative");
      return e.value;
    case VhsExpression::Kind::tensor: {
      if (e.children.empty())
        throw std::invalid_argument("a tensor product needs at least one factor");
      long total = 0;
      for (const VhsExpression& child : e.children) total += yukawa_length(child);
      return total;
    }
    case VhsExpression::Kind::direct_sum: {
      if (e.children.empty())
        throw std::invalid_argument("a direct sum needs at least one summand");
      long best = 0;
      for (const VhsExpression& child : e.children)
        best = std::max(best, yukawa_length(child));
      return best;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace cyclo
