#pragma once

#include <span>
#include <vector>

#include "xscale/config.hpp"
#include "xscale/graph.hpp"
#include "xscale/image.hpp"
#include "xscale/patch.hpp"

namespace xscale {

// exp(-|label|^2 / bandwidth), unnormalized. Throws kInvalidInput on a
// non-finite label or a non-positive bandwidth.
double gaussian_edge_weight(std::span<const double> edge_label,
                            double bandwidth);

// Adaptive Patch Normalization: per channel, re-centers and re-scales the
// neighbor so its mean and population std match the query's. The two
// patches may differ in side; only their channel counts must agree.
// Neighbor std is floored at eps, so a flat neighbor maps to the query mean.
Patch adapn(const Patch& neighbor, const Patch& query, double eps);

// Per-query aggregation weights for the given edges: uniform under kAverage,
// normalized Gaussian edge weights under kGaussian. Nonnegative, sum to 1.
std::vector<double> aggregation_weights(std::span<const GraphEdge> edges,
                                        const AggregationConfig& cfg);

struct QueryWeights {
  PatchCoord query;           // in the LR image
  std::vector<Patch> patches; // k HR exemplars, ls x ls, AdaPN applied if on
  std::vector<double> weights;
};

using WeightedPatchSet = std::vector<QueryWeights>;

QueryWeights weigh_query(const CrossScaleGraph& graph, std::size_t query,
                         const Image& lr, const AggregationConfig& cfg);

WeightedPatchSet compute_weights(const CrossScaleGraph& graph, const Image& lr,
                                 const AggregationConfig& cfg);

// Weighted sum of a query's exemplars, placed at scale * query.
Patch fuse(const QueryWeights& weighted, int scale);

// Uniform overlap averaging of placed patches. Throws kBounds for a patch
// leaving the canvas and kCoverage naming the first uncovered pixel.
Image patch2img(std::span<const Patch> patches, int width, int height,
                int channels);

// Single-stage cross-scale super-resolution by cfg.scale.
Image super_resolve(const Image& lr, const AggregationConfig& cfg);

// Reaches total_scale by repeated cfg.scale stages (e.g. x4 as two x2
// stages). total_scale must be a power of cfg.scale.
Image super_resolve_chained(const Image& lr, int total_scale,
                            const AggregationConfig& cfg);

}  // namespace xscale
