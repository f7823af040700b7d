#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orthocurrent {

// Residue helpers for a prime modulus p < 2^32.
std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);
std::uint32_t mod_reduce(long long value, std::uint32_t p);
bool is_prime(std::uint64_t n);

/// Dense univariate polynomial over F_p. Coefficients are stored
/// lowest degree first with no trailing zeros, so the zero polynomial is
/// the empty vector and structural equality is semantic equality.
class PolyFp {
 public:
  explicit PolyFp(std::uint32_t p) : p_(p) {}
  PolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static PolyFp constant(std::uint32_t p, std::uint32_t c);
  static PolyFp monomial(std::uint32_t p, std::uint32_t c, std::size_t degree);

  std::uint32_t modulus() const noexcept { return p_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint32_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  PolyFp scaled(std::uint32_t c) const;
  PolyFp monic() const;
  PolyFp derivative() const;
  PolyFp pow(unsigned e) const;

  /// True when only exponents divisible by p occur, i.e. f = h(t^p).
  bool is_polynomial_in_pth_power() const;
  /// For f = h(t^p) returns h; over F_p every coefficient is its own p-th
  /// root, so h is the p-th root of f.
  PolyFp pth_root() const;
  /// h(t) -> h(t^p).
  PolyFp inflate(unsigned factor) const;

  std::string to_string(std::string_view var = "t") const;

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  PolyFp operator-() const;
  friend bool operator==(const PolyFp& a, const PolyFp& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// Euclidean division; throws DivisionByZero for b = 0.
std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
/// Exact quotient; throws Domain if b does not divide a.
PolyFp exact_div(const PolyFp& a, const PolyFp& b);

/// Monic gcd by Euclid. gcd(f, 0) is the monic associate of f.
PolyFp poly_gcd(const PolyFp& f, const PolyFp& g);

struct SquarefreeDecomposition {
  std::uint32_t unit = 1;
  /// Monic, squarefree, pairwise coprime factors with distinct multiplicities.
  std::vector<std::pair<PolyFp, unsigned>> factors;
};

/// f = unit * prod g_i^{m_i}. Handles f' = 0 through the p-th root branch.
SquarefreeDecomposition poly_squarefree(const PolyFp& f);

}  // namespace orthocurrent
