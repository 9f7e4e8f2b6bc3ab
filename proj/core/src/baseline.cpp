#include "xscale/baseline.hpp"

#include <vector>

#include "parallel.hpp"
#include "xscale/aggregate.hpp"
#include "xscale/error.hpp"
#include "xscale/graph.hpp"
#include "xscale/resample.hpp"

namespace xscale {

Image bicubic_baseline(const Image& lr, int scale, BoundaryPolicy boundary) {
  if (scale < 1) throw Error(ErrorKind::kInvalidInput, "scale must be >= 1");
  return bicubic_resample(lr, static_cast<double>(scale), boundary);
}

Image same_scale_knn(const Image& img, const AggregationConfig& cfg) {
  AggregationConfig same = cfg;
  same.scale = 1;
  same.weighting = Weighting::kGaussian;
  same.adapn = false;
  // With scale 1 the graph searches the image itself and the exemplar of
  // each neighbor is the neighbor patch.
  const CrossScaleGraph graph = build_graph(img, img, same);
  std::vector<Patch> fused(graph.queries.size());
  detail::parallel_for(fused.size(), same.threads, [&](std::size_t qi) {
    fused[qi] = fuse(weigh_query(graph, qi, img, same), 1);
  });
  return patch2img(fused, img.width(), img.height(), img.channels());
}

}  // namespace xscale
