#pragma once

#include <span>
#include <string>
#include <vector>

#include "xscale/config.hpp"
#include "xscale/image.hpp"
#include "xscale/patch.hpp"

namespace xscale {

struct Neighbor {
  PatchCoord coord;
  double distance = 0.0;  // Euclidean
};

// k nearest l x l patches of `haystack` to `query`, among the candidates
// whose top-left lies in the window x window square centered on
// window_center (rows/cols center - window/2 ... center - window/2 +
// window - 1), clipped to the image. Sorted by distance; equal distances
// keep raster order of the candidate. Throws kInsufficientCandidates when
// the clipped window holds fewer than k positions.
std::vector<Neighbor> knn_search(const Patch& query, const Image& haystack,
                                 PatchCoord window_center, int window, int k,
                                 int patch_size);

struct GraphEdge {
  PatchCoord neighbor_down;  // l x l patch in the downsampled image
  PatchCoord neighbor_hr;    // ls x ls patch in the LR image, scale * down
  double distance = 0.0;
  std::vector<double> edge_label;  // query - neighbor, l*l*C values
};

struct CrossScaleGraph {
  int scale = 1;
  int patch_size = 0;
  int k = 0;
  std::vector<PatchCoord> queries;  // raster order over the query grid
  std::vector<GraphEdge> edges;     // queries.size() * k, grouped per query

  std::span<const GraphEdge> edges_of(std::size_t query) const {
    return std::span(edges).subspan(query * k, k);
  }
};

// Patch embedding used for matching: the image itself, or its luma when
// luma_embedding is set and the image is RGB.
Image embed(const Image& img, const AggregationConfig& cfg);

// Builds the cross-scale k-NN graph between query patches of lr and the
// patches of lr_down (= lr downsampled by cfg.scale).
CrossScaleGraph build_graph(const Image& lr, const Image& lr_down,
                            const AggregationConfig& cfg);

// One line per query: "q_row q_col | n_row n_col dist | ..." with k triples.
std::string format_graph(const CrossScaleGraph& graph);

}  // namespace xscale
