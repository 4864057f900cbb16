#pragma once

#include <memory>
#include <optional>

#include "plmoves.hpp"
#include "ratfun.hpp"

namespace satrop {

struct GenericityError : Error {
  using Error::Error;
};

using MatQ = std::vector<std::vector<RatFun>>;

MatQ mat_identity(int n);
MatQ mat_mul(const MatQ& a, const MatQ& b);
MatQ mat_inverse(const MatQ& a);  // throws GenericityError when singular
MatQ mat_scale(const MatQ& a, const RatFun& s);
MatQ mat_from_diag(const std::vector<RatFun>& d);
RatFun mat_det(const MatQ& a);
bool mat_equal(const MatQ& a, const MatQ& b);
bool is_upper_unipotent(const MatQ& a);
RatFun ratfun_pow(const RatFun& f, long long e);

// M = u * L with u upper-unipotent and L lower-triangular; exists when the
// trailing principal minors are nonzero, otherwise GenericityError.
struct ULPair {
  MatQ u;
  MatQ L;
};
ULPair ul_decompose(const MatQ& m);

// Matrix realization of a chart group over the rational-function field:
// either the ambient type-A group (GL_m or SL_m), optionally carrying a
// pinned Dynkin automorphism, or the fixed subgroup of SL_m under one.
// All pinning identities are verified at construction.
class ChartGroup {
 public:
  static ChartGroup ambient(const RootDatum& datum);
  static ChartGroup ambient(const RootDatum& datum, const DiagramAutomorphism& s);
  static ChartGroup folded(const RootDatum& ambient_datum, const DiagramAutomorphism& s);

  int msize() const { return m_; }
  bool folded_kind() const { return folded_; }
  const RootDatum& datum() const { return datum_; }
  bool has_sigma() const { return sigma_.has_value(); }
  const DiagramAutomorphism& sigma() const;
  // Letters of the standardized unipotent chart (ambient indices, or folded
  // orbit indices for the folded kind).
  const IVec& chart_word() const { return chart_word_; }
  int chart_letters() const { return static_cast<int>(chart_word_.size()); }
  int lambda_rank() const;  // coordinates of a tropical torus point

  MatQ x(int i, const RatFun& a) const;  // root subgroup (orbit letter when folded)
  MatQ y(int i, const RatFun& a) const;
  MatQ sbar(int i) const;          // y(1) x(-1) y(1)
  const MatQ& w_rep() const { return w_rep_; }
  const MatQ& w_rep_inv() const { return w_rep_inv_; }
  const RatFun& s_G() const { return sG_; }  // scalar with w_rep^2 = s_G * Id

  // Torus element for a cocharacter in this chart's lambda coordinates,
  // evaluated at the given base (entries are integer powers of base).
  MatQ torus(const IVec& lambda, const RatFun& base) const;
  IVec lambda_to_diag_exps(const IVec& lambda) const;
  IVec diag_vals_to_lambda(const std::vector<long long>& vals) const;

  // Unipotent from chart-letter arguments, in standardized word order.
  MatQ unipotent(const std::vector<RatFun>& vals) const;

  // Additive Whittaker character of a unipotent matrix (chi, or chi_sigma
  // for the folded kind).
  RatFun chi(const MatQ& u) const;

  // The pinned Dynkin automorphism as a matrix map g -> w (g^t)^{-1} w^{-1}.
  MatQ sigma_on_matrix(const MatQ& g) const;

 private:
  ChartGroup() = default;
  void finish(bool folded);
  MatQ x_single(int i, const RatFun& a) const;
  MatQ y_single(int i, const RatFun& a) const;

  RootDatum datum_;  // ambient chart datum (gl or sc A)
  std::optional<DiagramAutomorphism> sigma_;
  FoldedWords words_;
  bool folded_ = false;
  int m_ = 0;
  IVec chart_word_;
  MatQ w_rep_, w_rep_inv_;
  RatFun sG_;
  MatQ sigma_w_;  // conjugator for sigma_on_matrix
};

// Configuration of decorated flags, stored as group-element representatives
// of the cosets g U.
struct Configuration {
  const ChartGroup* chart;
  std::vector<MatQ> g;

  int n() const { return static_cast<int>(g.size()); }
};

// Representative of the underlying Borel of A_i, as a coset q B^-.
MatQ flag_rep(const Configuration& c, int i);

// (A1, A2) = (U, ed * w_rep * U): the unique normalizing torus element.
MatQ ed(const ChartGroup& g, const MatQ& g1, const MatQ& g2);
// (B1, A, B2) = (B^-, U, an * B^-): the unique normalizing unipotent.
// q1, q2 are Borel representatives (cosets q B^-), gA the decorated flag.
MatQ an(const ChartGroup& g, const MatQ& q1, const MatQ& gA, const MatQ& q2);

// The chart p: build a configuration with prescribed edge and angle
// invariants; round-trip of the invariants is asserted.
Configuration chart_p(const ChartGroup& g, const std::vector<MatQ>& h,
                      const std::vector<MatQ>& u);

MatQ config_h(const Configuration& c, int i);  // ed(A_{i-1}, A_i), i in [2..n]
MatQ config_u(const Configuration& c, int j);  // an(pi(A_1), A_j, pi(A_{j+1})), j in [2..n-1]

RatFun potential_W(const Configuration& c);
std::vector<MatQ> edge_map_Ed(const Configuration& c);
Configuration cyclic_shift(const Configuration& c);
Configuration sigma_config(const Configuration& c);
bool config_equal(const Configuration& a, const Configuration& b);

}  // namespace satrop
