#pragma once

#include "matrixgroup.hpp"

namespace satrop {

// Integer-polynomial matrix standing for P / delta, where delta is a scalar
// of the function field tracked only through ord(delta): ratios of
// equal-size minors are delta-free, and edge valuations only need the order.
struct PolyMat {
  int n = 0;
  long long den_ord = 0;
  std::vector<IntPoly> a;  // row-major

  IntPoly& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const IntPoly& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

PolyMat pm_identity(int n);
PolyMat pm_mul(const PolyMat& x, const PolyMat& y);
// Adjugate-with-order-bookkeeping inverse: P' = adj(P), den_ord' = ord(det P) - den_ord.
PolyMat pm_inverse(const PolyMat& x);
// Convert a matrix whose entries have monomial denominators (torus values,
// unipotents at monomial arguments, Weyl representatives).
PolyMat pm_from_matq(const MatQ& m);
IntPoly pm_det(const PolyMat& x);
IntPoly poly_submatrix_det(const PolyMat& x, const std::vector<int>& rows,
                           const std::vector<int>& cols);

// Valuations of W and Ed at integer chart points, by exact monomial
// substitution. The h part is given as lambda coordinate vectors for the
// edges 2..n, the u part as Lusztig coordinate vectors on the standardized
// chart word for the angles 2..n-1.
class TropEvaluator {
 public:
  TropEvaluator(const ChartGroup& chart, int n);

  int n() const { return n_; }
  const ChartGroup& chart() const { return *chart_; }

  long long W_val(const std::vector<IVec>& h, const std::vector<IVec>& u) const;
  IVec ed1_val(const std::vector<IVec>& h, const std::vector<IVec>& u) const;

  // Reference route through the exact rational-function engine; used to
  // cross-validate the minor-based fast route.
  long long W_val_reference(const std::vector<IVec>& h, const std::vector<IVec>& u) const;
  IVec ed1_val_reference(const std::vector<IVec>& h, const std::vector<IVec>& u) const;

  // Ed_1 tropicalizes to a linear map (it is a monomial map on the chart
  // torus). The form is precomputed from evaluations and verified on sample
  // points at construction.
  struct Ed1Form {
    std::vector<IMat> h_coeff;  // per h slot: lambda_rank x lambda_rank
    std::vector<IMat> u_coeff;  // per u slot: lambda_rank x word length
  };
  const Ed1Form& ed1_form() const { return form_; }
  IVec ed1_linear(const std::vector<IVec>& h, const std::vector<IVec>& u) const;

 private:
  const ChartGroup* chart_;
  int n_;
  int m_;
  bool fast_;
  PolyMat w_pm_, w_inv_pm_;
  Ed1Form form_;

  PolyMat torus_pm(const IVec& lambda) const;
  PolyMat unipotent_pm(const IVec& coords) const;
  std::vector<PolyMat> config_pms(const std::vector<IVec>& h, const std::vector<IVec>& u) const;
  long long an_term_val(const PolyMat& gA, const PolyMat& q1, const PolyMat& q2) const;
  Configuration reference_config(const std::vector<IVec>& h, const std::vector<IVec>& u) const;
  void build_ed1_form();
};

}  // namespace satrop
