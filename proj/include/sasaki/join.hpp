#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sasaki/poly.hpp"

namespace sasaki {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters (G, l1, l2, w1, w2) of the lens space bundle
/// M_G *_l S^3_w over a genus-G Riemann surface.
struct JoinParams {
  std::int64_t genus = 0;
  std::int64_t l1 = 1;
  std::int64_t l2 = 1;
  std::int64_t w1 = 1;
  std::int64_t w2 = 1;

  /// Throws ValidationError naming the failed condition.
  void validate() const;
  bool is_valid() const noexcept;
  /// Same tuple with the two sphere weights exchanged.
  JoinParams swapped_weights() const { return {genus, l1, l2, w2, w1}; }

  friend bool operator==(const JoinParams&, const JoinParams&) = default;
};

std::string to_string(const JoinParams& p);

/// Display-only metadata quoted for the worked examples; never computed.
struct Annotation {
  std::string label;
  std::string lo;
  std::string hi;
  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct FunctionalBundle {
  JoinParams params;
  RatFunc H;   // Q^3 / (b^2 (w1 b + w2)^2)
  Poly Q;      // b^2 l1 w1 + 2 b l2 (1 - G) + l1 w2
  Poly F;      // Sasaki-Futaki polynomial, cubic
  Poly g1;     // cube root of the SE numerator, quintic
  Poly g2;     // extra factor of the SE' numerator, quintic
  RatFunc SE;  // g1^3 / (b^4 (w1 b + w2) (b^2 w1^2 + 4 b w1 w2 + w2^2)^3)
  std::vector<Annotation> annotations;
};

Poly q_polynomial(const JoinParams& p);
Poly f_polynomial(const JoinParams& p);
Poly g1_polynomial(const JoinParams& p);
Poly g2_polynomial(const JoinParams& p);
/// b^2 w1^2 + 4 b w1 w2 + w2^2
Poly se_quadratic(const JoinParams& p);
/// w1 b + w2
Poly weight_linear(const JoinParams& p);

/// Validates p and builds every functional with exact coefficients.
FunctionalBundle build_bundle(const JoinParams& p);

struct IdentityReport {
  std::string name;
  bool passed = false;
  Poly residual;
};

/// H'(b) b^3 (w1 b + w2)^3 - 2 Q^2 F, which must vanish identically.
IdentityReport verify_h_derivative_identity(const FunctionalBundle& fb);
/// SE' against 4 F g1^2 g2 / (b^5 (w1 b + w2)^2 (b^2 w1^2 + 4 b w1 w2 + w2^2)^4),
/// compared by cross-multiplication.
IdentityReport verify_se_derivative_identity(const FunctionalBundle& fb);

/// Raised by callers that treat a failed identity as fatal.
class IdentityFailure : public std::runtime_error {
 public:
  explicit IdentityFailure(const IdentityReport& report);
  const Poly& residual() const { return residual_; }

 private:
  Poly residual_;
};

/// Exponent k in  quantity_{a^-1 xi} = a^k quantity_xi,  k = n_coeff * n + offset.
struct ScalingLaw {
  std::string_view quantity;
  int n_coeff;
  int offset;
  int exponent(int n) const { return n_coeff * n + offset; }
};

const std::array<ScalingLaw, 8>& scaling_law_table();

/// Checks (a^n S)^(n+1) / (a^(n+1) V)^n == S^(n+1) / V^n exactly, using the
/// table exponents for S, V and H.
bool verify_scaling_laws(int n, const Rational& a, const Rational& S, const Rational& V);

/// H and SE for swapped weights evaluated at 1/b must equal the originals.
bool verify_swap_symmetry(const JoinParams& p);

}  // namespace sasaki
