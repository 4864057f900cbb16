#pragma once

#include <memory>

#include "json.hpp"
#include "tropeval.hpp"

namespace satrop {

struct BoxLimitError : Error {
  using Error::Error;
};

// Tropical point of the configuration space in the standardized chart:
// n-1 cocharacter coordinate vectors (edges 2..n) and n-2 Lusztig vectors
// (angles 2..n-1).
struct TropConfPoint {
  std::vector<IVec> h;
  std::vector<IVec> u;

  bool operator==(const TropConfPoint& o) const { return h == o.h && u == o.u; }
  bool operator<(const TropConfPoint& o) const {
    if (h != o.h) return h < o.h;
    return u < o.u;
  }
};

struct BoxMeta {
  long long lo = 0, hi = 0;
  int growths = 0;
  bool boundary_clean = true;
  bool complete = true;
};

struct TropPointSet {
  std::vector<IVec> lambda;
  std::vector<TropConfPoint> points;
  BoxMeta box;

  long long count() const { return static_cast<long long>(points.size()); }
};

struct BoundPolicy {
  long long init_hi = -1;  // -1: derive from the height of lambda
  int max_growths = 3;
  int jobs = 1;
  bool error_on_dirty = true;  // throw BoxLimitError instead of returning a partial set
};

// Chart context for one (group, n) pair: matrix chart, tropical evaluator,
// and the piecewise-linear sigma machinery when sigma is present.
class ConfContext {
 public:
  static ConfContext ambient(const RootDatum& d, int n);
  static ConfContext ambient_with_sigma(const RootDatum& d, const DiagramAutomorphism& s, int n);
  static ConfContext folded(const RootDatum& ambient_sc, const DiagramAutomorphism& s, int n);

  int n() const { return n_; }
  bool folded_kind() const { return folded_; }
  bool has_sigma() const { return sigma_.has_value(); }
  const RootDatum& datum() const { return datum_; }
  const DiagramAutomorphism& sigma() const;
  const ChartGroup& chart() const { return *chart_; }
  const TropEvaluator& eval() const { return *eval_; }
  const PLContext& pl() const;

  long long height_of(const std::vector<IVec>& lambda) const;
  bool lattice_prefilter(const std::vector<IVec>& lambda) const;
  bool lambda_dominant(const IVec& lambda) const;

 private:
  RootDatum datum_;  // ambient chart datum
  std::optional<DiagramAutomorphism> sigma_;
  std::shared_ptr<ChartGroup> chart_;
  std::shared_ptr<TropEvaluator> eval_;
  std::shared_ptr<PLContext> pl_;
  int n_ = 0;
  bool folded_ = false;
};

// Membership in C_lambda: h part matches, Ed_1 matches, W >= 0. Uses direct
// evaluation (no cached linear form).
bool membership(const ConfContext& ctx, const TropConfPoint& l, const std::vector<IVec>& lambda);

// Enumerate C_lambda over a grown integer box; the result is certified
// boundary-clean unless the growth limit is hit.
TropPointSet enumerate_C(const ConfContext& ctx, const std::vector<IVec>& lambda,
                         const BoundPolicy& policy = {});

// sigma^t on configuration points (ambient contexts with sigma).
TropConfPoint sigma_trop_conf(const ConfContext& ctx, const TropConfPoint& l);
TropPointSet fixed_points(const ConfContext& ctx, const TropPointSet& s);

// The tropicalized embedding iota and its inverse: folded chart points
// correspond to block-constant sigma-fixed ambient points.
TropConfPoint iota_expand(const ConfContext& ambient_ctx, const TropConfPoint& folded_point);
TropConfPoint iota_collapse(const ConfContext& ambient_ctx, const TropConfPoint& fixed_point);

// The summation map: S on the h part, S_i on the u part. Output is
// sigma^t-fixed and lands in C_{S(lambda)}.
TropConfPoint sum_map_Sigma(const ConfContext& ctx, const TropConfPoint& l);
std::vector<IVec> s_map_tuple(const ConfContext& ctx, const std::vector<IVec>& lambda);

nlohmann::ordered_json trop_set_to_json(const TropPointSet& s);

}  // namespace satrop
