#pragma once

#include <map>
#include <mutex>

#include "rootdata.hpp"

namespace satrop {

// Character support: dominant weight -> multiplicity.
using WeightMap = std::map<IVec, long long>;

// Classical weight/tensor computations over a root datum, independent of the
// tropical engine: Freudenthal multiplicities, Weyl dimensions, Klimyk
// tensor decompositions, invariant dimensions. Weights are characters of the
// datum in its X basis. Memoized; the memo tables are lock-protected.
class RepOracle {
 public:
  explicit RepOracle(const RootDatum& d);
  const RootDatum& datum() const { return d_; }

  long long weight_multiplicity(const IVec& lambda, const IVec& mu);
  WeightMap character(const IVec& lambda);
  Rational dim_weyl(const IVec& lambda) const;
  long long dim(const IVec& lambda);
  WeightMap tensor_decompose(const IVec& lambda, const IVec& mu);
  long long invariant_dim(std::vector<IVec> lambdas);

  IVec dominant_rep(const IVec& x) const;
  std::vector<IVec> weyl_orbit(const IVec& dominant) const;

 private:
  RootDatum d_;
  std::vector<Rational> sym_;  // symmetrizers d_i
  std::map<IVec, WeightMap> char_memo_;
  std::map<std::pair<IVec, IVec>, WeightMap> tensor_memo_;
  std::mutex lock_;

  Rational form(const QVec& x, const QVec& y) const;  // W-invariant inner product
  QVec to_q(const IVec& v) const;
  std::vector<IVec> dominant_below(const IVec& lambda) const;
  WeightMap character_unlocked(const IVec& lambda);
  WeightMap tensor_unlocked(const IVec& lambda, const IVec& mu);
};

// dim W_{lambda}^{G_sigma} for sigma-invariant dominant weights of G, via
// folding and weight translation.
long long twining_rhs(const RootDatum& g_datum, const DiagramAutomorphism& sigma_on_g,
                      const std::vector<IVec>& lambdas);

struct SaturationRow {
  std::vector<IVec> lambda;
  long long least_nonzero_N = 0;  // 0 when no N <= n_max gives a nonzero invariant
  long long dim_at_factor = -1;   // invariant dimension at factor * lambda (when scanned)
  bool ok = true;                 // no counterexample to the saturation property
};

std::vector<SaturationRow> saturation_scan(RepOracle& oracle,
                                           const std::vector<std::vector<IVec>>& tuples,
                                           int factor, int n_max);

}  // namespace satrop
