#include "curvesys/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "curvesys/detail/embedding.hpp"
#include "curvesys/detail/zp.hpp"

namespace curvesys {

namespace {

using Ext = std::vector<std::uint64_t>;

}  // namespace

bool is_prime(std::uint64_t n) { return zp::is_prime(n); }

Field::Field(Token, FieldKind kind, std::uint64_t p, std::vector<std::uint64_t> modulus)
    : kind_(kind), p_(p), modulus_(std::move(modulus)) {
  if (kind_ == FieldKind::Extension) prime_ = Field::prime(p_);
}

FieldPtr Field::rationals() { return std::make_shared<Field>(Token{}, FieldKind::Rationals, 0, std::vector<std::uint64_t>{}); }

FieldPtr Field::prime(std::uint64_t p) {
  require(p < (1ULL << 63), ErrorCode::UnsupportedField, "characteristic must be below 2^63");
  require(zp::is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return std::make_shared<Field>(Token{}, FieldKind::Prime, p, std::vector<std::uint64_t>{});
}

FieldPtr Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  require(p < (1ULL << 63), ErrorCode::UnsupportedField, "characteristic must be below 2^63");
  require(zp::is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  zp::trim(modulus);
  require(modulus.size() >= 3, ErrorCode::PreconditionViolation, "extension modulus must have degree >= 2");
  const std::uint64_t li = zp::inv(modulus.back(), p);
  for (auto& c : modulus) c = zp::mul(c, li, p);
  require(zp::is_irreducible(modulus, p), ErrorCode::NotIrreducible, "extension modulus is reducible over F_" + std::to_string(p));
  return std::make_shared<Field>(Token{}, FieldKind::Extension, p, std::move(modulus));
}

mpz_class Field::order() const {
  if (kind_ == FieldKind::Rationals) return 0;
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, static_cast<unsigned long>(degree()));
  return r;
}

FieldPtr Field::prime_subfield() const {
  if (kind_ == FieldKind::Extension) return prime_;
  return shared_from_this();
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "F_" + std::to_string(p_);
    case FieldKind::Extension: {
      std::ostringstream os;
      os << "F_" << p_ << "^" << degree() << "[";
      for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
      os << "]";
      return os.str();
    }
  }
  return "?";
}

FieldPtr make_extension(std::uint64_t p, int k, std::uint64_t seed) {
  require(zp::is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require(k >= 2, ErrorCode::PreconditionViolation, "extension degree must be >= 2; use the prime field for k = 1");
  Rng rng(seed);
  for (;;) {
    std::vector<std::uint64_t> f(k + 1);
    for (int i = 0; i < k; ++i) f[i] = rng.below(p);
    f[k] = 1;
    if (f[0] == 0) continue;
    if (zp::is_irreducible(f, p)) return Field::extension(p, std::move(f));
  }
}

// ---------------------------------------------------------------------------

FieldElement FieldElement::zero(const FieldPtr& f) {
  switch (f->kind()) {
    case FieldKind::Rationals: return FieldElement(f, mpq_class(0));
    case FieldKind::Prime: return FieldElement(f, std::uint64_t{0});
    case FieldKind::Extension: return FieldElement(f, Ext(f->degree(), 0));
  }
  return {};
}

FieldElement FieldElement::one(const FieldPtr& f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(const FieldPtr& f, long long v) { return from_mpz(f, mpz_class(std::to_string(v))); }

FieldElement FieldElement::from_mpz(const FieldPtr& f, const mpz_class& v) {
  switch (f->kind()) {
    case FieldKind::Rationals: return FieldElement(f, mpq_class(v));
    case FieldKind::Prime: return FieldElement(f, zp::from_mpz(v, f->characteristic()));
    case FieldKind::Extension: {
      Ext e(f->degree(), 0);
      e[0] = zp::from_mpz(v, f->characteristic());
      return FieldElement(f, std::move(e));
    }
  }
  return {};
}

FieldElement FieldElement::from_mpq(const FieldPtr& f, const mpq_class& v) {
  if (f->kind() == FieldKind::Rationals) return FieldElement(f, v);
  return from_mpz(f, v.get_num()) / from_mpz(f, v.get_den());
}

FieldElement FieldElement::from_coeffs(const FieldPtr& f, std::vector<std::uint64_t> coeffs) {
  const std::uint64_t p = f->characteristic();
  if (f->kind() != FieldKind::Extension) {
    require(f->kind() == FieldKind::Prime, ErrorCode::DescriptorMismatch, "coefficient vectors need a finite field");
    zp::trim(coeffs);
    require(coeffs.size() <= 1, ErrorCode::DescriptorMismatch, "prime-field element given as a polynomial");
    return FieldElement(f, coeffs.empty() ? std::uint64_t{0} : coeffs[0] % p);
  }
  for (auto& c : coeffs) c %= p;
  zp::trim(coeffs);
  if (coeffs.size() >= f->modulus().size()) coeffs = zp::rem(coeffs, f->modulus(), p);
  coeffs.resize(f->degree(), 0);
  return FieldElement(f, std::move(coeffs));
}

FieldElement FieldElement::generator(const FieldPtr& f) {
  require(f->kind() == FieldKind::Extension, ErrorCode::DescriptorMismatch, "generator requires an extension field");
  return from_coeffs(f, {0, 1});
}

FieldElement FieldElement::random(const FieldPtr& f, Rng& rng) {
  switch (f->kind()) {
    case FieldKind::Rationals: {
      const long num = static_cast<long>(rng.below(2001)) - 1000;
      const unsigned long den = static_cast<unsigned long>(rng.below(1000)) + 1;
      mpq_class q(num, den);
      q.canonicalize();
      return FieldElement(f, q);
    }
    case FieldKind::Prime: return FieldElement(f, rng.below(f->characteristic()));
    case FieldKind::Extension: {
      Ext e(f->degree());
      for (auto& c : e) c = rng.below(f->characteristic());
      return FieldElement(f, std::move(e));
    }
  }
  return {};
}

FieldElement FieldElement::random_nonzero(const FieldPtr& f, Rng& rng) {
  for (;;) {
    FieldElement e = random(f, rng);
    if (!e.is_zero()) return e;
  }
}

FieldElement FieldElement::parse(const FieldPtr& f, const std::string& text_in) {
  std::string text;
  for (char c : text_in)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  require(!text.empty(), ErrorCode::ParseError, "empty field element");
  try {
    if (text.front() == '[') {
      require(text.back() == ']', ErrorCode::ParseError, "unterminated coefficient list: " + text_in);
      require(f->is_finite(), ErrorCode::ParseError, "coefficient list given for Q");
      std::vector<std::uint64_t> coeffs;
      std::string body = text.substr(1, text.size() - 2);
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
        coeffs.push_back(zp::from_mpz(mpz_class(item), f->characteristic()));
      }
      return from_coeffs(f, std::move(coeffs));
    }
    mpq_class q(text);
    require(q.get_den() != 0, ErrorCode::DivisionByZero, "zero denominator in " + text_in);
    q.canonicalize();
    return from_mpq(f, q);
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "cannot parse field element '" + text_in + "'");
  }
}

bool FieldElement::is_zero() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: {
      const auto& v = std::get<1>(value_);
      return std::all_of(v.begin(), v.end(), [](std::uint64_t c) { return c == 0; });
    }
    default: return std::get<2>(value_) == 0;
  }
}

bool FieldElement::is_one() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: {
      const auto& v = std::get<1>(value_);
      if (v.empty() || v[0] != 1) return false;
      return std::all_of(v.begin() + 1, v.end(), [](std::uint64_t c) { return c == 0; });
    }
    default: return std::get<2>(value_) == 1;
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(field_, o.field_))
    fail(ErrorCode::DescriptorMismatch, (field_ ? field_->name() : "<none>") + " vs " + (o.field_ ? o.field_->name() : "<none>"));
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const std::uint64_t p = field_->characteristic();
  switch (r.value_.index()) {
    case 0: std::get<0>(r.value_) = zp::neg(std::get<0>(r.value_), p); break;
    case 1:
      for (auto& c : std::get<1>(r.value_)) c = zp::neg(c, p);
      break;
    default: std::get<2>(r.value_) = -std::get<2>(r.value_); break;
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  const std::uint64_t p = field_->characteristic();
  switch (value_.index()) {
    case 0: std::get<0>(value_) = zp::add(std::get<0>(value_), std::get<0>(o.value_), p); break;
    case 1: {
      auto& a = std::get<1>(value_);
      const auto& b = std::get<1>(o.value_);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = zp::add(a[i], b[i], p);
      break;
    }
    default: std::get<2>(value_) += std::get<2>(o.value_); break;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  const std::uint64_t p = field_->characteristic();
  switch (value_.index()) {
    case 0: std::get<0>(value_) = zp::sub(std::get<0>(value_), std::get<0>(o.value_), p); break;
    case 1: {
      auto& a = std::get<1>(value_);
      const auto& b = std::get<1>(o.value_);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = zp::sub(a[i], b[i], p);
      break;
    }
    default: std::get<2>(value_) -= std::get<2>(o.value_); break;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  const std::uint64_t p = field_->characteristic();
  switch (value_.index()) {
    case 0: std::get<0>(value_) = zp::mul(std::get<0>(value_), std::get<0>(o.value_), p); break;
    case 1: {
      auto& a = std::get<1>(value_);
      Ext out(a.size());
      zp::ext_mul(a.data(), std::get<1>(o.value_).data(), out.data(), field_->modulus(), p);
      a = std::move(out);
      break;
    }
    default: std::get<2>(value_) *= std::get<2>(o.value_); break;
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  return *this *= o.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in " + field_->name());
  const std::uint64_t p = field_->characteristic();
  switch (value_.index()) {
    case 0: return FieldElement(field_, zp::inv(std::get<0>(value_), p));
    case 1: {
      Ext a = std::get<1>(value_);
      zp::trim(a);
      Ext r = zp::invmod(a, field_->modulus(), p);
      r.resize(field_->degree(), 0);
      return FieldElement(field_, std::move(r));
    }
    default: {
      mpq_class q = 1 / std::get<2>(value_);
      return FieldElement(field_, q);
    }
  }
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElement FieldElement::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  FieldElement result = one(field_);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

FieldElement FieldElement::frobenius() const {
  if (field_->kind() != FieldKind::Extension) return *this;
  return pow(field_->characteristic());
}

FieldElement FieldElement::norm() const {
  if (field_->kind() != FieldKind::Extension) return *this;
  FieldElement acc = *this, conj = *this;
  for (int i = 1; i < field_->degree(); ++i) {
    conj = conj.frobenius();
    acc *= conj;
  }
  return acc.to_prime_subfield();
}

FieldElement FieldElement::trace() const {
  if (field_->kind() != FieldKind::Extension) return *this;
  FieldElement acc = *this, conj = *this;
  for (int i = 1; i < field_->degree(); ++i) {
    conj = conj.frobenius();
    acc += conj;
  }
  return acc.to_prime_subfield();
}

FieldElement FieldElement::embed(const FieldPtr& target) const {
  if (same_field(field_, target)) return *this;
  if (field_->kind() == FieldKind::Prime && target->kind() == FieldKind::Extension &&
      target->characteristic() == field_->characteristic()) {
    Ext e(target->degree(), 0);
    e[0] = std::get<0>(value_);
    return FieldElement(target, std::move(e));
  }
  if (field_->kind() == FieldKind::Extension && in_prime_subfield() && target->kind() != FieldKind::Rationals &&
      target->characteristic() == field_->characteristic()) {
    return to_prime_subfield().embed(target);
  }
  if (field_->kind() == FieldKind::Extension && target->kind() == FieldKind::Extension &&
      target->characteristic() == field_->characteristic() && target->degree() % field_->degree() == 0) {
    const FieldElement t = detail::generator_image(field_, target);
    const auto& c = std::get<1>(value_);
    FieldElement acc = zero(target);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + from_int(target, static_cast<long long>(c[i]));
    return acc;
  }
  fail(ErrorCode::DescriptorMismatch, "cannot embed " + field_->name() + " into " + target->name());
}

bool FieldElement::in_prime_subfield() const {
  if (value_.index() != 1) return true;
  const auto& v = std::get<1>(value_);
  return std::all_of(v.begin() + 1, v.end(), [](std::uint64_t c) { return c == 0; });
}

FieldElement FieldElement::to_prime_subfield() const {
  if (value_.index() != 1) return *this;
  require(in_prime_subfield(), ErrorCode::DescriptorMismatch, "element " + to_string() + " is not in the prime field");
  return FieldElement(field_->prime_subfield(), std::get<1>(value_)[0]);
}

const mpq_class& FieldElement::rational() const {
  require(value_.index() == 2, ErrorCode::DescriptorMismatch, "not a rational number");
  return std::get<2>(value_);
}

std::uint64_t FieldElement::residue() const {
  require(value_.index() == 0, ErrorCode::DescriptorMismatch, "not a prime-field element");
  return std::get<0>(value_);
}

const std::vector<std::uint64_t>& FieldElement::coeffs() const {
  require(value_.index() == 1, ErrorCode::DescriptorMismatch, "not an extension-field element");
  return std::get<1>(value_);
}

std::string FieldElement::to_string() const {
  if (!field_) return "<invalid>";
  switch (value_.index()) {
    case 0: return std::to_string(std::get<0>(value_));
    case 1: {
      std::string s = "[";
      const auto& v = std::get<1>(value_);
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "]";
    }
    default: return std::get<2>(value_).get_str();
  }
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field_, b.field_)) return false;
  return a.value_ == b.value_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.value_ < b.value_;
}

}  // namespace curvesys
