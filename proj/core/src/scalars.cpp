#include "orthocurrent/scalars.hpp"

#include <cctype>

namespace orthocurrent {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;
  std::string variable;
  std::optional<Field> base;
  std::optional<FieldElement> radicand;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(PolyFp num, PolyFp den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  const auto p = num_.modulus();
  if (num_.is_zero()) {
    den_ = PolyFp::constant(p, 1);
    return;
  }
  PolyFp g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  if (den_.leading() != 1) {
    auto c = mod_inv(den_.leading(), p);
    num_ = num_.scaled(c);
    den_ = den_.scaled(c);
  }
}

RationalFunction::RationalFunction(PolyFp num) : num_(std::move(num)), den_(PolyFp::constant(num_.modulus(), 1)) {}

namespace {

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
  if (a.den() == b.den()) return RationalFunction(a.num() + b.num(), a.den());
  return RationalFunction(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b) {
  if (a.den() == b.den()) return RationalFunction(a.num() - b.num(), a.den());
  return RationalFunction(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num() * b.num(), a.den() * b.den());
}

RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) {
  if (b.num().is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in F_p(t)");
  return RationalFunction(a.num() * b.den(), a.den() * b.num());
}

// Least square root of a mod p, if any (Tonelli-Shanks).
std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  auto power = [p](std::uint32_t b, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e != 0) {
      if (e & 1U) r = mod_mul(r, b, p);
      b = mod_mul(b, b, p);
      e >>= 1U;
    }
    return r;
  };
  if (power(a, (p - 1) / 2) != 1) return std::nullopt;
  std::uint32_t q = p - 1, s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint32_t z = 2;
  while (power(z, (p - 1) / 2) != p - 1) ++z;
  std::uint32_t m = s, c = power(z, q), t = power(a, q), r = power(a, (q + 1) / 2);
  while (t != 1) {
    std::uint32_t i = 0, tt = t;
    while (tt != 1) {
      tt = mod_mul(tt, tt, p);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + 1 < m - i; ++j) b = mod_mul(b, b, p);
    m = i;
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    r = mod_mul(r, b, p);
  }
  return std::min(r, p - r);
}

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorKind::DescriptorMismatch,
                "cannot combine elements of " + a.field().to_string() + " and " + b.field().to_string());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() {
  static const Field q(std::make_shared<detail::FieldData>());
  return q;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a supported prime");
  auto d = std::make_shared<detail::FieldData>();
  d->kind = FieldKind::PrimeField;
  d->p = static_cast<std::uint32_t>(p);
  return Field(std::move(d));
}

Field Field::rational_functions(std::uint64_t p, std::string variable) {
  if (p >= (1ULL << 31) || !is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a supported prime");
  if (variable.empty() || variable == "r") throw Error(ErrorKind::Domain, "invalid variable name '" + variable + "'");
  auto d = std::make_shared<detail::FieldData>();
  d->kind = FieldKind::RationalFunctionField;
  d->p = static_cast<std::uint32_t>(p);
  d->variable = std::move(variable);
  return Field(std::move(d));
}

Field Field::quadratic_extension(const Field& base, const FieldElement& radicand) {
  if (radicand.field() != base) throw Error(ErrorKind::DescriptorMismatch, "radicand does not live in the base field");
  if (radicand.is_zero()) throw Error(ErrorKind::Domain, "radicand must be nonzero");
  if (is_square(radicand)) {
    throw Error(ErrorKind::Domain, radicand.to_string() + " is a square in " + base.to_string());
  }
  if (base.characteristic() == 2 && base.kind() != FieldKind::RationalFunctionField) {
    throw Error(ErrorKind::Domain, "characteristic-2 quadratic extensions are supported over F_2(t) only");
  }
  auto d = std::make_shared<detail::FieldData>();
  d->kind = FieldKind::QuadraticExtension;
  d->p = base.characteristic();
  d->base = base;
  d->radicand = radicand;
  return Field(std::move(d));
}

FieldKind Field::kind() const noexcept { return data_->kind; }

std::uint32_t Field::characteristic() const noexcept { return data_->p; }

const std::string& Field::variable() const {
  if (kind() != FieldKind::RationalFunctionField) throw Error(ErrorKind::Domain, to_string() + " has no variable");
  return data_->variable;
}

const Field& Field::base() const {
  if (kind() != FieldKind::QuadraticExtension) throw Error(ErrorKind::Domain, to_string() + " is not an extension");
  return *data_->base;
}

const FieldElement& Field::radicand() const {
  if (kind() != FieldKind::QuadraticExtension) throw Error(ErrorKind::Domain, to_string() + " is not an extension");
  return *data_->radicand;
}

std::optional<std::uint32_t> Field::finite_order() const noexcept {
  if (kind() == FieldKind::PrimeField) return data_->p;
  return std::nullopt;
}

std::string Field::to_string() const {
  switch (kind()) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "F" + std::to_string(data_->p);
    case FieldKind::RationalFunctionField:
      return "F" + std::to_string(data_->p) + "(" + data_->variable + ")";
    case FieldKind::QuadraticExtension:
      return data_->base->to_string() + "[sqrt " + data_->radicand->to_string() + "]";
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  if (x.kind != y.kind || x.p != y.p || x.variable != y.variable) return false;
  if (x.kind != FieldKind::QuadraticExtension) return true;
  return *x.base == *y.base && *x.radicand == *y.radicand;
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long n) const { return from_integer(mpz_class(static_cast<long>(n))); }

FieldElement Field::from_integer(const mpz_class& n) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return FieldElement(*this, mpq_class(n));
    case FieldKind::PrimeField: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), data_->p);
      return FieldElement(*this, static_cast<std::uint32_t>(r.get_ui()));
    }
    case FieldKind::RationalFunctionField: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), data_->p);
      return FieldElement(*this, RationalFunction(PolyFp::constant(data_->p, static_cast<std::uint32_t>(r.get_ui()))));
    }
    case FieldKind::QuadraticExtension:
      return embed(data_->base->from_integer(n));
  }
  throw Error(ErrorKind::Domain, "unknown field kind");
}

FieldElement Field::from_rational(const mpq_class& q) const {
  return from_integer(q.get_num()) / from_integer(q.get_den());
}

FieldElement Field::from_residue(std::uint64_t r) const {
  if (kind() != FieldKind::PrimeField) return from_integer(mpz_class(static_cast<unsigned long>(r)));
  return FieldElement(*this, static_cast<std::uint32_t>(r % data_->p));
}

FieldElement Field::from_polys(const PolyFp& num, const PolyFp& den) const {
  if (kind() != FieldKind::RationalFunctionField) throw Error(ErrorKind::Domain, to_string() + " has no polynomials");
  if (num.modulus() != data_->p || den.modulus() != data_->p) {
    throw Error(ErrorKind::DescriptorMismatch, "polynomial modulus does not match field");
  }
  return FieldElement(*this, RationalFunction(num, den));
}

FieldElement Field::from_pair(const FieldElement& u, const FieldElement& v) const {
  if (kind() != FieldKind::QuadraticExtension) throw Error(ErrorKind::Domain, to_string() + " is not an extension");
  if (u.field() != base() || v.field() != base()) throw Error(ErrorKind::DescriptorMismatch, "pair outside base field");
  return FieldElement(*this, QuadPair{std::make_shared<const std::pair<FieldElement, FieldElement>>(u, v)});
}

FieldElement Field::generator() const {
  if (kind() == FieldKind::QuadraticExtension) return embed(base().generator());
  if (kind() != FieldKind::RationalFunctionField) throw Error(ErrorKind::Domain, to_string() + " has no generator");
  return from_polys(PolyFp::monomial(data_->p, 1, 1), PolyFp::constant(data_->p, 1));
}

FieldElement Field::sqrt_radicand() const { return from_pair(base().zero(), base().one()); }

FieldElement Field::embed(const FieldElement& x) const {
  if (x.field() == *this) return x;
  if (kind() != FieldKind::QuadraticExtension) {
    throw Error(ErrorKind::DescriptorMismatch, "cannot embed " + x.field().to_string() + " into " + to_string());
  }
  FieldElement u = base().embed(x);
  return from_pair(u, base().zero());
}

// ---------------------------------------------------------------------------
// FieldElement

bool FieldElement::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return sgn(v) == 0;
        } else if constexpr (std::is_same_v<T, std::uint32_t>) {
          return v == 0;
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return v.num().is_zero();
        } else {
          return v.uv->first.is_zero() && v.uv->second.is_zero();
        }
      },
      payload_);
}

bool FieldElement::is_one() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpq_class>) {
          return v == 1;
        } else if constexpr (std::is_same_v<T, std::uint32_t>) {
          return v == 1;
        } else if constexpr (std::is_same_v<T, RationalFunction>) {
          return v.num().is_one() && v.den().is_one();
        } else {
          return v.uv->first.is_one() && v.uv->second.is_zero();
        }
      },
      payload_);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.payload_.index() != b.payload_.index()) return false;
  if (a.field_ != b.field_) return false;
  switch (a.payload_.index()) {
    case 0:
      return std::get<0>(a.payload_) == std::get<0>(b.payload_);
    case 1:
      return std::get<1>(a.payload_) == std::get<1>(b.payload_);
    case 2:
      return std::get<2>(a.payload_) == std::get<2>(b.payload_);
    default:
      return a.quad_u() == b.quad_u() && a.quad_v() == b.quad_v();
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const Field& f = a.field_;
  switch (f.kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, mpq_class(a.rational() + b.rational()));
    case FieldKind::PrimeField:
      return FieldElement(f, mod_add(a.residue(), b.residue(), f.characteristic()));
    case FieldKind::RationalFunctionField:
      return FieldElement(f, rf_add(a.ratfunc(), b.ratfunc()));
    case FieldKind::QuadraticExtension:
      return f.from_pair(a.quad_u() + b.quad_u(), a.quad_v() + b.quad_v());
  }
  throw Error(ErrorKind::Domain, "unknown field kind");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const Field& f = a.field_;
  switch (f.kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, mpq_class(a.rational() - b.rational()));
    case FieldKind::PrimeField:
      return FieldElement(f, mod_sub(a.residue(), b.residue(), f.characteristic()));
    case FieldKind::RationalFunctionField:
      return FieldElement(f, rf_sub(a.ratfunc(), b.ratfunc()));
    case FieldKind::QuadraticExtension:
      return f.from_pair(a.quad_u() - b.quad_u(), a.quad_v() - b.quad_v());
  }
  throw Error(ErrorKind::Domain, "unknown field kind");
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const Field& f = a.field_;
  switch (f.kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, mpq_class(a.rational() * b.rational()));
    case FieldKind::PrimeField:
      return FieldElement(f, mod_mul(a.residue(), b.residue(), f.characteristic()));
    case FieldKind::RationalFunctionField:
      return FieldElement(f, rf_mul(a.ratfunc(), b.ratfunc()));
    case FieldKind::QuadraticExtension: {
      const auto& u1 = a.quad_u();
      const auto& v1 = a.quad_v();
      const auto& u2 = b.quad_u();
      const auto& v2 = b.quad_v();
      return f.from_pair(u1 * u2 + f.radicand() * v1 * v2, u1 * v2 + u2 * v1);
    }
  }
  throw Error(ErrorKind::Domain, "unknown field kind");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a.field_.kind() == FieldKind::RationalFunctionField) {
    return FieldElement(a.field_, rf_div(a.ratfunc(), b.ratfunc()));
  }
  return a * b.inv();
}

FieldElement FieldElement::operator-() const { return field_.zero() - *this; }

FieldElement FieldElement::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + field_.to_string());
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return FieldElement(field_, mpq_class(1 / rational()));
    case FieldKind::PrimeField:
      return FieldElement(field_, mod_inv(residue(), field_.characteristic()));
    case FieldKind::RationalFunctionField:
      return FieldElement(field_, RationalFunction(ratfunc().den(), ratfunc().num()));
    case FieldKind::QuadraticExtension: {
      // (u + v r)^-1 = (u - v r) / (u^2 - D v^2); the norm vanishes only at 0
      // because D is not a square.
      const auto& u = quad_u();
      const auto& v = quad_v();
      FieldElement norm_inv = (u * u - field_.radicand() * v * v).inv();
      return field_.from_pair(u * norm_inv, -v * norm_inv);
    }
  }
  throw Error(ErrorKind::Domain, "unknown field kind");
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

namespace {

bool needs_parens(const std::string& lit) {
  for (std::size_t i = 1; i < lit.size(); ++i) {
    if (lit[i] == '+' || lit[i] == '-') return true;
  }
  return lit.find('+') != std::string::npos;
}

std::string scaled_root(const std::string& coeff_lit) {
  if (coeff_lit == "1") return "r";
  if (coeff_lit == "-1") return "-r";
  if (needs_parens(coeff_lit)) return "(" + coeff_lit + ")*r";
  return coeff_lit + "*r";
}

}  // namespace

std::string FieldElement::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return rational().get_str();
    case FieldKind::PrimeField:
      return std::to_string(residue());
    case FieldKind::RationalFunctionField: {
      const auto& var = field_.variable();
      if (ratfunc().den().is_one()) return ratfunc().num().to_string(var);
      auto group = [](std::string lit) { return needs_parens(lit) ? "(" + lit + ")" : lit; };
      return group(ratfunc().num().to_string(var)) + "/" + group(ratfunc().den().to_string(var));
    }
    case FieldKind::QuadraticExtension: {
      const auto& u = quad_u();
      const auto& v = quad_v();
      if (v.is_zero()) return u.to_string();
      std::string vpart = scaled_root(v.to_string());
      if (u.is_zero()) return vpart;
      if (vpart.front() == '-') return u.to_string() + vpart;
      return u.to_string() + "+" + vpart;
    }
  }
  return "?";
}

FieldElement inv(const FieldElement& x) { return x.inv(); }

// ---------------------------------------------------------------------------
// Square and p-th roots

namespace {

std::optional<PolyFp> poly_sqrt(const PolyFp& f) {
  const auto p = f.modulus();
  if (f.is_zero()) return f;
  auto sf = poly_squarefree(f);
  auto unit_root = sqrt_mod(sf.unit, p);
  if (!unit_root) return std::nullopt;
  PolyFp root = PolyFp::constant(p, *unit_root);
  for (const auto& [g, m] : sf.factors) {
    if (m % 2 != 0) return std::nullopt;
    root = root * g.pow(m / 2);
  }
  return root;
}

// Splits x in F_2(t) as x0 + t*x1 with x0, x1 in F_2(t^2).
std::pair<FieldElement, FieldElement> split_even_odd(const FieldElement& x) {
  const Field& f = x.field();
  const auto& rf = x.ratfunc();
  // den^2 lies in F_2(t^2), so x = (num*den) / den^2.
  PolyFp top = rf.num() * rf.den();
  PolyFp bottom = rf.den() * rf.den();
  std::vector<std::uint32_t> even, odd;
  for (std::size_t i = 0; i < top.coeffs().size(); ++i) {
    if (i % 2 == 0) {
      even.resize(i + 1, 0);
      even[i] = top.coeffs()[i];
    } else {
      odd.resize(i, 0);
      odd[i - 1] = top.coeffs()[i];
    }
  }
  return {f.from_polys(PolyFp(2, even), bottom), f.from_polys(PolyFp(2, odd), bottom)};
}

std::optional<FieldElement> quad_sqrt(const FieldElement& x) {
  const Field& k = x.field();
  const Field& base = k.base();
  const FieldElement& d = k.radicand();
  const auto& u = x.quad_u();
  const auto& v = x.quad_v();
  std::optional<FieldElement> root;
  if (k.characteristic() == 2) {
    // (a + b r)^2 = a^2 + D b^2, so v must vanish and u = alpha + D beta with
    // alpha, beta in F_2(t^2); {1, D} is a basis of F_2(t) over F_2(t^2).
    if (!v.is_zero()) return std::nullopt;
    auto [u0, u1] = split_even_odd(u);
    auto [d0, d1] = split_even_odd(d);
    FieldElement beta = u1 / d1;
    FieldElement alpha = u0 + d0 * beta;
    auto a = is_square(alpha);
    auto b = is_square(beta);
    if (!a || !b) return std::nullopt;
    root = k.from_pair(*a, *b);
  } else {
    FieldElement two = base.from_int(2);
    if (v.is_zero()) {
      if (auto a = is_square(u)) {
        root = k.from_pair(*a, base.zero());
      } else if (auto b = is_square(u / d)) {
        root = k.from_pair(base.zero(), *b);
      }
    } else if (auto n = is_square(u * u - d * v * v)) {
      for (const auto& cand : {(u + *n) / two, (u - *n) / two}) {
        if (auto a = is_square(cand); a && !a->is_zero()) {
          root = k.from_pair(*a, v / (two * *a));
          break;
        }
      }
    }
  }
  if (!root) return std::nullopt;
  FieldElement other = -*root;
  return other.to_string() < root->to_string() ? other : *root;
}

}  // namespace

std::optional<FieldElement> is_square(const FieldElement& x) {
  const Field& f = x.field();
  switch (f.kind()) {
    case FieldKind::Rationals: {
      const mpq_class& q = x.rational();
      if (sgn(q) < 0) return std::nullopt;
      if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
      return f.from_rational(mpq_class(n, d));
    }
    case FieldKind::PrimeField: {
      auto r = sqrt_mod(x.residue(), f.characteristic());
      if (!r) return std::nullopt;
      return f.from_residue(*r);
    }
    case FieldKind::RationalFunctionField: {
      auto n = poly_sqrt(x.ratfunc().num());
      if (!n) return std::nullopt;
      auto d = poly_sqrt(x.ratfunc().den());
      if (!d) return std::nullopt;
      PolyFp num = *n;
      const auto p = f.characteristic();
      if (!num.is_zero() && mod_sub(0, num.leading(), p) < num.leading()) num = -num;
      return f.from_polys(num, *d);
    }
    case FieldKind::QuadraticExtension:
      return quad_sqrt(x);
  }
  return std::nullopt;
}

std::optional<FieldElement> pth_root(const FieldElement& x) {
  const Field& f = x.field();
  switch (f.kind()) {
    case FieldKind::Rationals:
      throw Error(ErrorKind::Domain, "p-th roots need positive characteristic");
    case FieldKind::PrimeField:
      return x;
    case FieldKind::RationalFunctionField: {
      const auto& rf = x.ratfunc();
      if (!rf.num().is_polynomial_in_pth_power() || !rf.den().is_polynomial_in_pth_power()) return std::nullopt;
      return f.from_polys(rf.num().pth_root(), rf.den().pth_root());
    }
    case FieldKind::QuadraticExtension:
      throw Error(ErrorKind::Domain, "p-th roots in quadratic extensions are not supported");
  }
  return std::nullopt;
}

FieldElement frobenius_embed(const FieldElement& x, const Field& target) {
  const Field& src = x.field();
  if (src.kind() != FieldKind::RationalFunctionField || target.kind() != FieldKind::RationalFunctionField ||
      src.characteristic() != target.characteristic()) {
    throw Error(ErrorKind::DescriptorMismatch, "Frobenius embedding needs two rational function fields over one prime");
  }
  const auto p = src.characteristic();
  const auto& rf = x.ratfunc();
  return target.from_polys(rf.num().inflate(p), rf.den().inflate(p));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax, "'" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  FieldElement term() {
    FieldElement v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        FieldElement d = unary();
        if (d.is_zero()) throw Error(ErrorKind::Domain, "'" + std::string(text_) + "' divides by zero in " + field_.to_string());
        v = v / d;
      } else {
        return v;
      }
    }
  }

  FieldElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FieldElement power() {
    FieldElement base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    long long e = std::stoll(std::string(text_.substr(start, pos_ - start)));
    if (negative && base.is_zero()) throw Error(ErrorKind::Domain, "negative power of zero");
    return base.pow(negative ? -e : e);
  }

  FieldElement atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return field_.from_integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return identifier(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  FieldElement identifier(const std::string& name) {
    // r names the outermost square root; variables resolve through the tower.
    if (field_.kind() == FieldKind::QuadraticExtension && name == "r") return field_.sqrt_radicand();
    const Field* f = &field_;
    while (f->kind() == FieldKind::QuadraticExtension) f = &f->base();
    if (f->kind() == FieldKind::RationalFunctionField && f->variable() == name) return field_.embed(f->generator());
    fail("unknown identifier '" + name + "' in " + field_.to_string());
  }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_scalar(std::string_view literal, const Field& field) {
  try {
    return ScalarParser(literal, field).parse();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DivisionByZero) throw Error(ErrorKind::Domain, e.what());
    throw;
  }
}

Field Field::parse(std::string_view literal) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(literal);
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::Syntax, "field literal '" + std::string(literal) + "': " + why);
  };
  // Extensions nest to the right: "<base>[sqrt D]".
  if (!s.empty() && s.back() == ']') {
    auto open = s.rfind('[');
    if (open == std::string_view::npos) throw bad("unbalanced ']'");
    Field base = parse(s.substr(0, open));
    std::string_view inner = trim(s.substr(open + 1, s.size() - open - 2));
    if (inner.substr(0, 4) != "sqrt") throw bad("expected 'sqrt' inside brackets");
    return quadratic_extension(base, parse_scalar(trim(inner.substr(4)), base));
  }
  if (s == "Q") return rationals();
  if (s.size() < 2 || s.front() != 'F') throw bad("expected Q, F<p>, F<p>(t) or <field>[sqrt D]");
  std::size_t i = 1;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 1 || i > 10) throw bad("expected a prime after 'F'");
  std::uint64_t p = std::stoull(std::string(s.substr(1, i - 1)));
  if (i == s.size()) return prime(p);
  if (s[i] != '(' || s.back() != ')' || s.size() < i + 3) throw bad("expected F<p>(<var>)");
  std::string var(trim(s.substr(i + 1, s.size() - i - 2)));
  for (char c : var) {
    if (!std::isalnum(static_cast<unsigned char>(c))) throw bad("invalid variable name");
  }
  if (var.empty() || !std::isalpha(static_cast<unsigned char>(var.front()))) throw bad("invalid variable name");
  return rational_functions(p, var);
}

// ---------------------------------------------------------------------------
// Random elements

FieldElement random_element(const Field& field, std::mt19937_64& rng) {
  switch (field.kind()) {
    case FieldKind::Rationals: {
      std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
      return field.from_rational(mpq_class(num(rng), static_cast<unsigned long>(den(rng))));
    }
    case FieldKind::PrimeField: {
      std::uniform_int_distribution<std::uint32_t> r(0, field.characteristic() - 1);
      return field.from_residue(r(rng));
    }
    case FieldKind::RationalFunctionField: {
      const auto p = field.characteristic();
      std::uniform_int_distribution<std::uint32_t> r(0, p - 1);
      std::uniform_int_distribution<int> deg(0, 2);
      auto random_poly = [&](int d) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = r(rng);
        return PolyFp(p, std::move(c));
      };
      PolyFp num = random_poly(deg(rng));
      PolyFp den = random_poly(deg(rng));
      while (den.is_zero()) den = random_poly(deg(rng));
      return field.from_polys(num, den);
    }
    case FieldKind::QuadraticExtension:
      return field.from_pair(random_element(field.base(), rng), random_element(field.base(), rng));
  }
  return field.zero();
}

FieldElement random_nonzero(const Field& field, std::mt19937_64& rng) {
  for (;;) {
    FieldElement x = random_element(field, rng);
    if (!x.is_zero()) return x;
  }
}

}  // namespace orthocurrent
