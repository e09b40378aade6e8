#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subres/matrix.hpp"
#include "subres/multipoly.hpp"
#include "subres/mv_subres.hpp"

namespace subres {

struct Point {
  std::vector<Scalar> coords;

  [[nodiscard]] std::size_t size() const { return coords.size(); }
  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

/// Σ a_α ∂_α|_ξ, where ∂_α f is the coefficient of (x−ξ)^α in f, i.e. the
/// α-derivative divided by α_1!⋯α_n!.
class DualFunctional {
 public:
  using Coefficients = std::map<Exponents, Scalar>;

  DualFunctional(Point anchor, Coefficients coeffs);
  static DualFunctional evaluation(Point anchor);

  [[nodiscard]] const Point& anchor() const { return anchor_; }
  [[nodiscard]] const Coefficients& coefficients() const { return coeffs_; }
  [[nodiscard]] std::size_t nvars() const { return anchor_.size(); }
  [[nodiscard]] bool is_evaluation() const;
  [[nodiscard]] unsigned order() const;
  /// "1", "d(1,0)", "d(0,1)+2*d(2,0)".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const DualFunctional& a, const DualFunctional& b) {
    return a.anchor_ == b.anchor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Point anchor_;
  Coefficients coeffs_;
};

Scalar dual_eval(const DualFunctional& L, const MultiPoly& f);

/// σ_β: ∂_α ↦ ∂_{α−β}, terms with a negative exponent dropped.  Returns
/// nullopt when every term drops.
std::optional<DualFunctional> sigma_shift(const DualFunctional& L, const Exponents& beta);

struct InverseSystem {
  std::vector<DualFunctional> basis;
  std::vector<std::size_t> dims_by_order;  // dimension of the order-≤N part, N = 0, 1, …
  std::size_t order_bound = 0;
  bool truncated = false;
};

/// Local dual space at ξ of the ideal generated by `generators`, built order
/// by order.  The default order bound is Σ(deg g − 1) + 1.
InverseSystem inverse_system(const std::vector<MultiPoly>& generators, const Point& xi,
                             std::optional<std::size_t> order_bound = std::nullopt);

/// True when σ_{e_i}(L) lies in the span of `basis` for every L and i.
bool is_sigma_closed(const std::vector<DualFunctional>& basis);

class DualBasis {
 public:
  DualBasis() = default;

  [[nodiscard]] std::size_t size() const { return functionals_.size(); }
  [[nodiscard]] const std::vector<DualFunctional>& functionals() const { return functionals_; }
  [[nodiscard]] const DualFunctional& operator[](std::size_t i) const { return functionals_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& group_sizes() const { return group_sizes_; }

 private:
  friend DualBasis assemble_dual_basis(const std::vector<std::pair<Point, std::vector<DualFunctional>>>&, std::size_t);
  std::vector<DualFunctional> functionals_;
  std::vector<std::size_t> group_sizes_;
};

/// Concatenates the per-root lists.  Each list must start with the pure
/// evaluation at its root, and the total must equal `bezout`.
DualBasis assemble_dual_basis(const std::vector<std::pair<Point, std::vector<DualFunctional>>>& per_root,
                              std::size_t bezout);

/// Entry (a, b) = Λ_b(x^{α_a}).
ExactMatrix dual_vandermonde(const MonomialSet& E, const DualBasis& L);

/// Entry (a, b) = Λ_b(x^{α_a}·h).
ExactMatrix dual_wronskian(const MultiPoly& h, const MonomialSet& E, const DualBasis& L);

struct PoissonTerms {
  Scalar leading_product;  // ∏ Δ̃_{T_j}
  Scalar det_os;
  Scalar det_vt;
  Scalar value;
};

/// (∏_j Δ̃_{T_j}) · det O_S(Λ) / det V_T(Λ) with
/// O_S(Λ) = [V_S(Λ); V_{T*}(Λ); W_{f_{n+1},R}(Λ)].
PoissonTerms poisson_terms(const MVSystem& sys, unsigned t, const MonomialSet& S, const DualBasis& L,
                           const MonomialSets& sets);
Scalar poisson_delta(const MVSystem& sys, unsigned t, const MonomialSet& S, const DualBasis& L,
                     const MonomialSets& sets);

}  // namespace subres
