#pragma once

#include "paraf/rational.hpp"
#include "paraf/report.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace paraf {

// Irreducible K(sl2,k)-module M^{i,j}, always stored canonically:
// 0 <= j < i <= k, the vacuum being (k,0).
struct IrrLabel {
  int i = 0;
  int j = 0;
  int k = 2;
  auto operator<=>(const IrrLabel&) const = default;
};

// Dual labelling M~^{i,l} with l = i - 2j mod 2k.
struct TildeLabel {
  int i = 0;
  int l = 0;
  int k = 2;
  auto operator<=>(const TildeLabel&) const = default;
};

using FusionVector = std::map<IrrLabel, int>;
using FuseFn = std::function<FusionVector(const IrrLabel&, const IrrLabel&)>;

IrrLabel canonical_label(int i, int j, int k);
IrrLabel vacuum(int k);
// Simple current M^p = M^{k,p}.
IrrLabel simple_current(int p, int k);
std::vector<IrrLabel> all_labels(int k);

TildeLabel to_tilde(const IrrLabel& x);
IrrLabel from_tilde(const TildeLabel& t);

FusionVector fuse(const IrrLabel& a, const IrrLabel& b);
// Linear extension of a fusion rule to formal sums.
FusionVector fuse(const FusionVector& a, const FusionVector& b, const FuseFn& rule);

IrrLabel theta_dual(const IrrLabel& x);
Rational conformal_weight(const IrrLabel& x);
bool is_sigma_type(const IrrLabel& x);
// M^{2j,j} in canonical form.
IrrLabel sigma_label(int j, int k);

Report verify_zk_grading(int k);
Report verify_zk_grading(int k, const FuseFn& rule);

Rational minimal_model_weight(int m, int r, int s);
Report verify_weight_one_tops(int k);
Rational twisted_conformal_weight(int p);
Rational untwisted_coset_weight(int j, int p);

std::string to_string(const IrrLabel& x);
std::string to_string(const FusionVector& v);
// Parses "i,j" at level k and canonicalizes.
IrrLabel parse_label(const std::string& text, int k);

}  // namespace paraf
