#include "oigb/text.hpp"

#include <algorithm>
#include <cctype>

namespace oigb {

namespace {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    try {
      return std::stol(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
    return 0;
  }

  /* digits with optional /digits; arbitrary precision, parsed by the field */
  std::string number_token() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den) fail("expected a denominator");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

std::vector<int> integer_list(TextCursor& cursor) {
  std::vector<int> values;
  values.push_back(static_cast<int>(cursor.integer()));
  while (cursor.consume(',')) values.push_back(static_cast<int>(cursor.integer()));
  return values;
}

VarKey parse_var_key(TextCursor& cursor, const VariableScheme& scheme) {
  if (scheme.kind() == VariableScheme::Kind::Tensor) {
    cursor.expect('[');
    int i = static_cast<int>(cursor.integer());
    cursor.expect(',');
    int j = static_cast<int>(cursor.integer());
    cursor.expect(']');
    return VarKey{{i, j}};
  }
  cursor.expect('(');
  VarKey key;
  if (!cursor.consume(')')) {
    key.idx = integer_list(cursor);
    cursor.expect(')');
  }
  return key;
}

int parse_exponent(TextCursor& cursor) {
  if (!cursor.consume('^')) return 1;
  long e = cursor.integer();
  if (e < 1) cursor.fail("exponent must be positive");
  return static_cast<int>(e);
}

struct BasisToken {
  size_t slot = 0;
  std::vector<int> image;
};

BasisToken parse_basis_token(TextCursor& cursor) {
  BasisToken token;
  cursor.expect('{');
  if (cursor.consume('}')) return token;
  if (cursor.consume("λ=") || cursor.consume("l=")) {
    long slot = cursor.integer();
    if (slot < 0) cursor.fail("slot must be >= 0");
    token.slot = static_cast<size_t>(slot);
    if (cursor.consume('}')) return token;
    cursor.expect(';');
  }
  token.image = integer_list(cursor);
  cursor.expect('}');
  return token;
}

struct ParsedTerm {
  FieldElem coeff;
  RingMonomial mono;
  std::optional<BasisToken> basis;
};

/* sign? primary ((*|juxtaposition) primary)*, primaries being numbers,
 * x-variables, or (in element context) one basis symbol. */
ParsedTerm parse_term(TextCursor& cursor, const VariableScheme& scheme, int width,
                      const Field& field, bool allow_basis, bool negative) {
  ParsedTerm term{field.one(), RingMonomial(scheme, width), std::nullopt};
  bool any = false;
  while (true) {
    char c = cursor.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      term.coeff = term.coeff * field.parse(cursor.number_token());
      any = true;
    } else if (c == 'x') {
      cursor.consume('x');
      VarKey key = parse_var_key(cursor, scheme);
      int exp = parse_exponent(cursor);
      term.mono = term.mono * RingMonomial::variable(scheme, width, key, exp);
      any = true;
    } else if (c == 'e' && allow_basis) {
      cursor.consume('e');
      if (term.basis) cursor.fail("two basis symbols in one term");
      term.basis = parse_basis_token(cursor);
      any = true;
    } else {
      break;
    }
    if (!cursor.consume('*')) {
      char next = cursor.peek();
      bool more = std::isdigit(static_cast<unsigned char>(next)) || next == 'x' ||
                  (next == 'e' && allow_basis);
      if (!more) break;
    }
  }
  if (!any) cursor.fail("expected a term");
  if (negative) term.coeff = -term.coeff;
  return term;
}

template <typename Sink>
void parse_sum(TextCursor& cursor, const VariableScheme& scheme, int width, const Field& field,
               bool allow_basis, Sink&& sink) {
  bool negative = cursor.consume('-');
  if (!negative) cursor.consume('+');
  sink(parse_term(cursor, scheme, width, field, allow_basis, negative));
  while (!cursor.eof()) {
    if (cursor.consume('-'))
      negative = true;
    else if (cursor.consume('+'))
      negative = false;
    else
      cursor.fail("expected '+' or '-'");
    sink(parse_term(cursor, scheme, width, field, allow_basis, negative));
  }
}

}  // namespace

RingMonomial parse_ring_monomial(std::string_view text, const VariableScheme& scheme, int width) {
  TextCursor cursor(text);
  ParsedTerm term = parse_term(cursor, scheme, width, Field::rationals(), false, false);
  if (!cursor.eof()) cursor.fail("trailing input after monomial");
  if (!term.coeff.is_one()) cursor.fail("monomial with a coefficient");
  return term.mono;
}

Polynomial parse_polynomial(std::string_view text, const VariableScheme& scheme, int width,
                            const Field& field) {
  TextCursor cursor(text);
  Polynomial poly(scheme, width, field);
  if (cursor.consume('0') && cursor.eof()) return poly;
  cursor = TextCursor(text);
  parse_sum(cursor, scheme, width, field, false,
            [&](const ParsedTerm& term) { poly.add_term(term.mono, term.coeff); });
  return poly;
}

ModuleElement parse_element(std::string_view text, const SignaturePtr& sig, int width,
                            const Field& field) {
  TextCursor cursor(text);
  ModuleElement elem(sig, width, field);
  if (cursor.consume('0') && cursor.eof()) return elem;
  cursor = TextCursor(text);
  parse_sum(cursor, sig->scheme(), width, field, true, [&](const ParsedTerm& term) {
    if (!term.basis) throw ParseError("module term without a basis symbol in \"" +
                                      std::string(text) + "\"");
    if (term.basis->slot >= sig->size())
      throw ParseError("slot " + std::to_string(term.basis->slot) + " out of range");
    int d = sig->slot(term.basis->slot).basis_degree;
    if (static_cast<int>(term.basis->image.size()) != d)
      throw ParseError("basis symbol arity != slot degree " + std::to_string(d));
    OIMorphism basis(d, width, term.basis->image);
    elem.add_term(ModuleMonomial(term.basis->slot, basis, term.mono), term.coeff);
  });
  return elem;
}

OIMorphism parse_oi_morphism(std::string_view text) {
  TextCursor cursor(text);
  cursor.expect('[');
  int m = static_cast<int>(cursor.integer());
  cursor.expect('-');
  cursor.expect('>');
  int n = static_cast<int>(cursor.integer());
  cursor.expect(':');
  std::vector<int> image;
  if (!cursor.consume(']')) {
    image = integer_list(cursor);
    cursor.expect(']');
  }
  if (!cursor.eof()) cursor.fail("trailing input after morphism");
  return OIMorphism(m, n, std::move(image));
}

std::vector<SignatureSlot> parse_signature(std::string_view text) {
  TextCursor cursor(text);
  std::vector<SignatureSlot> slots;
  do {
    cursor.expect('F');
    cursor.expect('(');
    long d = cursor.integer();
    cursor.expect(')');
    int shift = 0;
    if (cursor.peek() == '(') {
      cursor.expect('(');
      shift = -static_cast<int>(cursor.integer());
      cursor.expect(')');
    }
    if (d < 0) cursor.fail("basis degree must be >= 0");
    slots.push_back(SignatureSlot{static_cast<int>(d), shift});
  } while (cursor.consume(','));
  if (!cursor.eof()) cursor.fail("trailing input after signature");
  return slots;
}

std::string render_element(const ModuleElement& elem, const MonomialOrder& order) {
  if (elem.is_zero()) return "0";
  std::vector<std::pair<ModuleMonomial, FieldElem>> terms(elem.terms().begin(),
                                                          elem.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return order.greater(a.first, b.first);
  });
  std::string s;
  for (const auto& [mono, coeff] : terms) {
    std::string c = coeff.str();
    bool negative = !c.empty() && c[0] == '-';
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (negative) c = c.substr(1);
    if (c != "1") s += c + "*";
    s += mono.str();
  }
  return s;
}

std::string render_witness(const OIMorphism& map, const RingMonomial& cofactor) {
  return map.str() + " * " + cofactor.str();
}

}  // namespace oigb
