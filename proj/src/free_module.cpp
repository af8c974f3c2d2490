#include "oigb/free_module.hpp"

#include <algorithm>

namespace oigb {

FreeSignature::FreeSignature(VariableScheme scheme, std::vector<SignatureSlot> slots)
    : scheme_(scheme), slots_(std::move(slots)) {
  for (const SignatureSlot& slot : slots_)
    if (slot.basis_degree < 0) throw ParameterMismatch("slot basis degree must be >= 0");
}

long FreeSignature::rank_at_width(int width) const {
  long rank = 0;
  for (const SignatureSlot& slot : slots_)
    rank += static_cast<long>(enumerate_oi(slot.basis_degree, width).size());
  return rank;
}

std::string FreeSignature::str() const {
  std::string s;
  for (size_t i = 0; i < slots_.size(); ++i) {
    if (i) s += ", ";
    s += "F(" + std::to_string(slots_[i].basis_degree) + ")";
    if (slots_[i].shift != 0) s += "(" + std::to_string(-slots_[i].shift) + ")";
  }
  return s;
}

SignaturePtr make_signature(VariableScheme scheme, std::vector<SignatureSlot> slots) {
  return std::make_shared<const FreeSignature>(scheme, std::move(slots));
}

ModuleMonomial::ModuleMonomial(size_t slot, OIMorphism basis_map, RingMonomial mono)
    : slot_(slot), basis_(std::move(basis_map)), mono_(std::move(mono)) {
  if (basis_.target_width() != mono_.width())
    throw WidthMismatch("basis map target width != ring monomial width");
}

std::string ModuleMonomial::str() const {
  std::string s = mono_.is_unit() ? "" : mono_.str() + "*";
  s += "e{λ=" + std::to_string(slot_);
  const std::vector<int>& image = basis_.image();
  if (!image.empty()) {
    s += "; ";
    for (size_t i = 0; i < image.size(); ++i) s += (i ? "," : "") + std::to_string(image[i]);
  }
  return s + "}";
}

int degree(const ModuleMonomial& mono, const FreeSignature& sig) {
  return mono.ring().total_degree() + sig.slot(mono.slot()).shift;
}

ModuleElement::ModuleElement(SignaturePtr sig, int width, Field field)
    : sig_(std::move(sig)), width_(width), field_(field) {
  if (!sig_) throw SignatureMismatch("null signature");
}

ModuleElement ModuleElement::from_term(SignaturePtr sig, const ModuleMonomial& mono,
                                       const FieldElem& coeff) {
  ModuleElement out(std::move(sig), mono.width(), coeff.field());
  out.add_term(mono, coeff);
  return out;
}

ModuleElement ModuleElement::basis_element(SignaturePtr sig, Field field, size_t slot,
                                           const OIMorphism& basis_map) {
  const VariableScheme scheme = sig->scheme();
  ModuleMonomial mono(slot, basis_map, RingMonomial(scheme, basis_map.target_width()));
  return from_term(std::move(sig), mono, field.one());
}

void ModuleElement::add_term(const ModuleMonomial& mono, const FieldElem& coeff) {
  if (mono.width() != width_) throw WidthMismatch("term width mismatch");
  if (coeff.field() != field_) throw FieldMismatch("term coefficient field mismatch");
  if (mono.slot() >= sig_->size()) throw SignatureMismatch("slot index out of range");
  if (mono.basis_map().source_width() != sig_->slot(mono.slot()).basis_degree)
    throw SignatureMismatch("basis map arity does not match slot");
  if (mono.ring().scheme() != sig_->scheme()) throw SchemeMismatch("term scheme mismatch");
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const auto& t, const ModuleMonomial& m) { return t.first < m; });
  if (it != terms_.end() && it->first == mono) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {mono, coeff});
  }
}

void ModuleElement::check_compatible(const ModuleElement& o) const {
  if (!(*sig_ == *o.sig_)) throw SignatureMismatch("element signature mismatch");
  if (width_ != o.width_) throw WidthMismatch("element width mismatch");
  if (field_ != o.field_) throw FieldMismatch("element field mismatch");
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  check_compatible(o);
  ModuleElement out = *this;
  for (const auto& [mono, coeff] : o.terms_) out.add_term(mono, coeff);
  return out;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  check_compatible(o);
  ModuleElement out = *this;
  for (const auto& [mono, coeff] : o.terms_) out.add_term(mono, -coeff);
  return out;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement out(sig_, width_, field_);
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace_back(mono, -coeff);
  return out;
}

ModuleElement ModuleElement::scaled(const FieldElem& c) const {
  ModuleElement out(sig_, width_, field_);
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace_back(mono, coeff * c);
  return out;
}

ModuleElement ModuleElement::mono_multiple(const RingMonomial& mono) const {
  ModuleElement out(sig_, width_, field_);
  for (const auto& [term, coeff] : terms_)
    out.add_term(ModuleMonomial(term.slot(), term.basis_map(), term.ring() * mono), coeff);
  return out;
}

ModuleElement ModuleElement::poly_multiple(const Polynomial& poly) const {
  ModuleElement out(sig_, width_, field_);
  for (const auto& [mono, coeff] : poly.terms())
    out = out + mono_multiple(mono).scaled(coeff);
  return out;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
  return *sig_ == *o.sig_ && width_ == o.width_ && field_ == o.field_ && terms_ == o.terms_;
}

std::optional<int> ModuleElement::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int deg = degree(terms_.front().first, *sig_);
  for (const auto& [mono, coeff] : terms_)
    if (degree(mono, *sig_) != deg) return std::nullopt;
  return deg;
}

std::string ModuleElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mono, coeff] : terms_) {
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

ModuleMonomial apply_morphism(const OIMorphism& map, const ModuleMonomial& mono) {
  return ModuleMonomial(mono.slot(), compose(map, mono.basis_map()),
                        apply_morphism(map, mono.ring()));
}

ModuleElement apply_morphism(const OIMorphism& map, const ModuleElement& elem) {
  if (map.source_width() != elem.width())
    throw WidthMismatch("morphism source width != element width");
  ModuleElement out(elem.signature(), map.target_width(), elem.field());
  for (const auto& [mono, coeff] : elem.terms()) out.add_term(apply_morphism(map, mono), coeff);
  return out;
}

ModuleElement apply_morphism(const FIMorphism& map, const ModuleElement& elem) {
  if (map.source_width() != elem.width())
    throw WidthMismatch("morphism source width != element width");
  ModuleElement out(elem.signature(), map.target_width(), elem.field());
  for (const auto& [mono, coeff] : elem.terms()) {
    if (mono.basis_map().source_width() > 1)
      throw UnsupportedInput("FI action on basis symbols of degree >= 2 is not supported");
    std::vector<int> image;
    image.reserve(mono.basis_map().image().size());
    for (int v : mono.basis_map().image()) image.push_back(map(v));
    OIMorphism basis(mono.basis_map().source_width(), map.target_width(), std::move(image));
    out.add_term(ModuleMonomial(mono.slot(), basis, apply_morphism(map, mono.ring())), coeff);
  }
  return out;
}

std::vector<ModuleElement> generator_orbit(const SignaturePtr& sig, const Field& field,
                                           size_t slot, int width) {
  std::vector<ModuleElement> out;
  int d = sig->slot(slot).basis_degree;
  for (const OIMorphism& map : enumerate_oi(d, width))
    out.push_back(ModuleElement::basis_element(sig, field, slot, map));
  return out;
}

}  // namespace oigb
