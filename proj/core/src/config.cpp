#include "xscale/config.hpp"

#include <cmath>
#include <string>

#include "xscale/error.hpp"

namespace xscale {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw Error(ErrorKind::kConfig, what);
}

}  // namespace

void AggregationConfig::validate() const {
  if (scale < 1) reject("scale must be >= 1");
  if (k < 1) reject("k must be >= 1");
  if (patch_size < 2) reject("patch size must be >= 2");
  if (window < patch_size) reject("window must be >= patch size");
  if (stride < 1) reject("stride must be >= 1");
  // Fused ls x ls patches land every stride*s HR pixels; wider steps would
  // leave gaps.
  if (stride > patch_size) reject("stride must be <= patch size");
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    reject("bandwidth must be positive");
  }
  if (!(adapn_eps > 0.0)) reject("adapn epsilon must be positive");
  if (threads < 0) reject("threads must be >= 0");
}

std::string_view to_string(Weighting w) {
  return w == Weighting::kAverage ? "average" : "gaussian";
}

std::string_view to_string(BoundaryPolicy b) {
  return b == BoundaryPolicy::kReflect ? "reflect" : "clamp";
}

Weighting parse_weighting(std::string_view text) {
  if (text == "average") return Weighting::kAverage;
  if (text == "gaussian") return Weighting::kGaussian;
  reject("unknown weighting '" + std::string(text) + "'");
}

BoundaryPolicy parse_boundary(std::string_view text) {
  if (text == "reflect") return BoundaryPolicy::kReflect;
  if (text == "clamp") return BoundaryPolicy::kClampToEdge;
  reject("unknown boundary '" + std::string(text) + "'");
}

}  // namespace xscale
