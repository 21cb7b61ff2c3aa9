#include "galie/field.hpp"

namespace galie {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("Field::prime: modulus " + std::to_string(p) + " is not prime");
  return Field{FieldKind::PrimeField, p};
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p);
}

std::optional<Field> Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    std::uint64_t v = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') return std::nullopt;
      v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (v > 0x7fffffffu) return std::nullopt;
    }
    if (!is_prime(static_cast<std::uint32_t>(v))) return std::nullopt;
    return prime(static_cast<std::uint32_t>(v));
  }
  return std::nullopt;
}

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("Scalar: zero has no inverse");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rationals()) {
    s.q_ = v;
  } else {
    long long m = v % static_cast<long long>(f.p);
    if (m < 0) m += f.p;
    s.r_ = static_cast<std::uint32_t>(m);
  }
  return s;
}

Scalar Scalar::from_rational(Rational q) {
  Scalar s;
  s.field_ = Field::rationals();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::residue(const Field& f, std::uint32_t r) {
  if (!f.is_prime_field()) throw std::invalid_argument("Scalar::residue: field is not a prime field");
  Scalar s;
  s.field_ = f;
  s.r_ = r % f.p;
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("Scalar: field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rationals())
    s.q_ += o.q_;
  else
    s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % field_.p);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rationals())
    s.q_ -= o.q_;
  else
    s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + field_.p - o.r_) % field_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rationals())
    s.q_ *= o.q_;
  else
    s.r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % field_.p);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rationals())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: zero has no inverse");
  Scalar s = *this;
  if (field_.is_rationals())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inverse(r_, field_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rationals() ? q_ < o.q_ : r_ < o.r_;
}

std::uint32_t Scalar::residue_value() const {
  if (!field_.is_prime_field()) throw std::logic_error("Scalar: residue_value on rational scalar");
  return r_;
}

const Rational& Scalar::rational_value() const {
  if (!field_.is_rationals()) throw std::logic_error("Scalar: rational_value on prime-field scalar");
  return q_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  std::string s = boost::multiprecision::numerator(q_).str();
  if (boost::multiprecision::denominator(q_) != 1)
    s += "/" + boost::multiprecision::denominator(q_).str();
  return s;
}

std::optional<Scalar> Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto parse_int = [](const std::string& t, bool allow_sign) -> std::optional<boost::multiprecision::cpp_int> {
    if (t.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) {
      neg = t[0] == '-';
      i = 1;
      if (i == t.size()) return std::nullopt;
    }
    boost::multiprecision::cpp_int v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return std::nullopt;
      v = v * 10 + (t[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  auto num = parse_int(text.substr(0, slash), true);
  if (!num) return std::nullopt;
  boost::multiprecision::cpp_int den = 1;
  if (slash != std::string::npos) {
    auto d = parse_int(text.substr(slash + 1), false);
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  if (f.is_rationals()) return from_rational(Rational(*num, den));
  // F_p: reduce numerator and denominator mod p
  boost::multiprecision::cpp_int pm = f.p;
  boost::multiprecision::cpp_int nr = *num % pm;
  if (nr < 0) nr += pm;
  boost::multiprecision::cpp_int dr = den % pm;
  if (dr == 0) return std::nullopt;
  Scalar n = residue(f, nr.convert_to<std::uint32_t>());
  Scalar d = residue(f, dr.convert_to<std::uint32_t>());
  return n / d;
}

}  // namespace galie
