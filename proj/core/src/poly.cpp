#include "orthocurrent/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orthocurrent/error.hpp"

namespace orthocurrent {

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  long long r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return mod_reduce(s0, p);
}

std::uint32_t mod_reduce(long long value, std::uint32_t p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PolyFp::PolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

PolyFp PolyFp::constant(std::uint32_t p, std::uint32_t c) { return PolyFp(p, {c}); }

PolyFp PolyFp::monomial(std::uint32_t p, std::uint32_t c, std::size_t degree) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c;
  return PolyFp(p, std::move(v));
}

void PolyFp::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyFp PolyFp::scaled(std::uint32_t c) const {
  PolyFp out(p_);
  if (c % p_ == 0) return out;
  out.coeffs_.reserve(coeffs_.size());
  for (auto x : coeffs_) out.coeffs_.push_back(mod_mul(x, c, p_));
  return out;
}

PolyFp PolyFp::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(mod_inv(leading(), p_));
}

PolyFp PolyFp::derivative() const {
  PolyFp out(p_);
  if (coeffs_.size() <= 1) return out;
  out.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.coeffs_[i - 1] = mod_mul(coeffs_[i], static_cast<std::uint32_t>(i % p_), p_);
  }
  out.trim();
  return out;
}

PolyFp PolyFp::pow(unsigned e) const {
  PolyFp result = constant(p_, 1);
  PolyFp base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

bool PolyFp::is_polynomial_in_pth_power() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && i % p_ != 0) return false;
  }
  return true;
}

PolyFp PolyFp::pth_root() const {
  if (!is_polynomial_in_pth_power()) throw Error(ErrorKind::Domain, "polynomial is not a p-th power");
  PolyFp out(p_);
  if (is_zero()) return out;
  out.coeffs_.resize((coeffs_.size() - 1) / p_ + 1);
  for (std::size_t i = 0; i < coeffs_.size(); i += p_) out.coeffs_[i / p_] = coeffs_[i];
  out.trim();
  return out;
}

PolyFp PolyFp::inflate(unsigned factor) const {
  PolyFp out(p_);
  if (is_zero()) return out;
  out.coeffs_.assign((coeffs_.size() - 1) * factor + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * factor] = coeffs_[i];
  return out;
}

std::string PolyFp::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    auto c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  PolyFp out(a.p_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = mod_add(a.coeff(i), b.coeff(i), a.p_);
  out.trim();
  return out;
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  PolyFp out(a.p_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = mod_sub(a.coeff(i), b.coeff(i), a.p_);
  out.trim();
  return out;
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  PolyFp out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % p;
    }
  }
  out.coeffs_.assign(acc.begin(), acc.end());
  out.trim();
  return out;
}

PolyFp PolyFp::operator-() const { return PolyFp(p_) - *this; }

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto p = a.modulus();
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<std::uint32_t> rem = a.coeffs();
  std::vector<std::uint32_t> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
  const auto lead_inv = mod_inv(b.leading(), p);
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    auto c = mod_mul(rem[k + db], lead_inv, p);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = mod_sub(rem[k + j], mod_mul(c, b.coeffs()[j], p), p);
  }
  return {PolyFp(p, std::move(quot)), PolyFp(p, std::move(rem))};
}

PolyFp exact_div(const PolyFp& a, const PolyFp& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::Domain, "inexact polynomial division");
  return q;
}

PolyFp poly_gcd(const PolyFp& f, const PolyFp& g) {
  PolyFp a = f, b = g;
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Yun-style decomposition of a monic polynomial into (factor, multiplicity)
// pairs; multiplicities may repeat and are merged by the caller.
void squarefree_monic(const PolyFp& f, unsigned scale, std::vector<std::pair<PolyFp, unsigned>>& out) {
  const auto p = f.modulus();
  if (f.degree() <= 0) return;
  PolyFp df = f.derivative();
  if (df.is_zero()) {
    squarefree_monic(f.pth_root(), scale * p, out);
    return;
  }
  PolyFp c = poly_gcd(f, df);
  PolyFp w = exact_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    PolyFp y = poly_gcd(w, c);
    PolyFp factor = exact_div(w, y);
    if (factor.degree() > 0) out.emplace_back(factor, i * scale);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (!c.is_one()) squarefree_monic(c.pth_root(), scale * p, out);
}

}  // namespace

SquarefreeDecomposition poly_squarefree(const PolyFp& f) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "squarefree decomposition of 0");
  SquarefreeDecomposition result;
  result.unit = f.leading();
  std::vector<std::pair<PolyFp, unsigned>> raw;
  squarefree_monic(f.monic(), 1, raw);
  std::map<unsigned, PolyFp> merged;
  for (auto& [g, m] : raw) {
    auto it = merged.find(m);
    if (it == merged.end()) {
      merged.emplace(m, g);
    } else {
      it->second = it->second * g;
    }
  }
  for (auto& [m, g] : merged) result.factors.emplace_back(g, m);
  return result;
}

}  // namespace orthocurrent
