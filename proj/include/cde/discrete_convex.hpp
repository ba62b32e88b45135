// Copyright 2026 The CDE Fairness Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CDE_DISCRETE_CONVEX_HPP
#define CDE_DISCRETE_CONVEX_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cde/polyhedra.hpp"

namespace cde {

// Absolute tolerance for objective-value comparisons and tie detection.
inline constexpr double kObjectiveTol = 1e-9;

// Separable fairness cost: the sum over clients of a convex per-client term.
//   uniform       r*ln(r)   (0 at r = 0)
//   jain          r^2 / alpha^2
//   proportional  -ln(r)    (+inf at r = 0)
//   weighted      w_j * r_j
// The full objective is +inf outside the feasible region; see evaluate().
class FairnessObjective {
 public:
  enum class Kind { kUniform, kJain, kProportional, kWeightedLinear };

  static FairnessObjective uniform(int alpha);
  static FairnessObjective jain(int alpha);
  static FairnessObjective proportional(int alpha);
  static FairnessObjective weighted_linear(int alpha, std::vector<double> weights);

  Kind kind() const { return kind_; }
  int alpha() const { return alpha_; }
  const std::vector<double>& weights() const { return weights_; }
  std::string name() const;

  // f_j(count); +inf for negative counts.
  double term(int client, int count) const;
  // f_j(count + 1) - f_j(count); -inf for the proportional term at count = 0,
  // which makes a first transmission mandatory before any second one.
  double marginal(int client, int count) const;
  // Sum of per-client terms, with no feasibility check.
  double separable_sum(const RateVector& r) const;

 private:
  FairnessObjective(Kind kind, int alpha, std::vector<double> weights);

  Kind kind_;
  int alpha_;
  std::vector<double> weights_;  // only for kWeightedLinear
};

// F_alpha(r): +inf unless r is feasible at the objective's sum-rate, the
// separable sum otherwise.
double evaluate(const FairnessObjective& obj, const MissingTable& missing,
                const RateVector& r);

// The feasible region at one sum-rate, listed exhaustively.
struct EnumeratedRegion {
  int alpha = 0;
  std::vector<RateVector> members;  // lexicographically sorted
};

bool region_contains(const EnumeratedRegion& region, const RateVector& r);

// Brute force: every nonnegative integer vector summing to alpha is tested
// against the constraints. Guarded; throws GuardError when the composition
// count would be unreasonable at desk scale.
EnumeratedRegion enumerate_R_alpha(const Instance& inst, int alpha);

// Exchange axiom: for all members x, y and every coordinate u where x > y,
// some coordinate v with x < y keeps x - e_u + e_v inside the region.
struct ExchangeReport {
  bool holds = true;
  RateVector x, y;  // violating pair when !holds
  int u = -1;       // 0-based client index
};
ExchangeReport check_exchange_axiom(const EnumeratedRegion& region);

// Exchange inequality for the objective: for all members x, y and every
// u with x_u > y_u there is v with x_v < y_v such that
//   F(x) + F(y) >= F(x - e_u + e_v) + F(y + e_u - e_v).
struct MConvexReport {
  bool holds = true;
  RateVector x, y;
  int u = -1;
};
MConvexReport check_mconvex_inequality(const FairnessObjective& obj,
                                       const EnumeratedRegion& region);

// True iff no feasible single-pair exchange strictly improves the objective
// at r. Throws std::invalid_argument when r is infeasible.
bool check_optimality(const FairnessObjective& obj, const MissingTable& missing,
                      const RateVector& r);

// Exact minimizer set by exhaustive evaluation; ties within kObjectiveTol are
// all returned (lexicographically sorted).
std::vector<RateVector> brute_force_argmin(const FairnessObjective& obj,
                                           const EnumeratedRegion& region);

// Largest pairwise l1 distance between members.
int l1_size(const EnumeratedRegion& region);

struct CheckResult {
  bool holds = true;
  std::string witness;  // empty when holds
};

// For every member: whenever two tight sets cross (nonempty intersection,
// union not everything), their intersection is tight too.
CheckResult check_tight_closure(const MissingTable& missing,
                                const EnumeratedRegion& region);

// For every subset S, the maximum of r(S) over the region equals the
// truncated table value at S.
CheckResult check_sup_mapping(const TruncationTable& table,
                              const EnumeratedRegion& region);

// csv: header r_1,...,r_K then one member per row.
void write_region_csv(const EnumeratedRegion& region, std::ostream& out);
EnumeratedRegion read_region_csv(std::istream& in);

}  // namespace cde

#endif  // CDE_DISCRETE_CONVEX_HPP
