#include "xscale/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "xscale/error.hpp"
#include "xscale/resample.hpp"

namespace xscale {

namespace {

double squared_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw Error(ErrorKind::kInvalidInput, "non-finite edge label value");
    }
    sum += x * x;
  }
  return sum;
}

struct Moments {
  double mean;
  double stddev;
};

// Per-channel mean and population standard deviation.
std::vector<Moments> channel_moments(const Patch& p) {
  const std::size_t n = static_cast<std::size_t>(p.side) * p.side;
  std::vector<Moments> m(p.channels, {0.0, 0.0});
  for (int ch = 0; ch < p.channels; ++ch) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += p.values[i * p.channels + ch];
    const double mean = sum / static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = p.values[i * p.channels + ch] - mean;
      var += d * d;
    }
    m[ch] = {mean, std::sqrt(var / static_cast<double>(n))};
  }
  return m;
}

void require_finite(const Patch& p, const char* what) {
  for (double v : p.values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidInput,
                  std::string("non-finite value in ") + what + " patch");
    }
  }
}

}  // namespace

double gaussian_edge_weight(std::span<const double> edge_label,
                            double bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw Error(ErrorKind::kInvalidInput, "bandwidth must be positive");
  }
  return std::exp(-squared_norm(edge_label) / bandwidth);
}

Patch adapn(const Patch& neighbor, const Patch& query, double eps) {
  if (neighbor.channels != query.channels) {
    throw Error(ErrorKind::kChannelMismatch,
                "AdaPN needs matching channel counts");
  }
  require_finite(neighbor, "neighbor");
  require_finite(query, "query");
  const auto from = channel_moments(neighbor);
  const auto to = channel_moments(query);
  Patch out = neighbor;
  const int c = neighbor.channels;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const int ch = static_cast<int>(i % c);
    const double gain = to[ch].stddev / std::max(from[ch].stddev, eps);
    out.values[i] = (neighbor.values[i] - from[ch].mean) * gain + to[ch].mean;
  }
  return out;
}

std::vector<double> aggregation_weights(std::span<const GraphEdge> edges,
                                        const AggregationConfig& cfg) {
  if (edges.empty()) {
    throw Error(ErrorKind::kInvalidInput, "query has no edges");
  }
  const std::size_t k = edges.size();
  std::vector<double> weights(k, 1.0 / static_cast<double>(k));
  if (cfg.weighting == Weighting::kAverage) return weights;
  if (!(cfg.bandwidth > 0.0) || !std::isfinite(cfg.bandwidth)) {
    throw Error(ErrorKind::kInvalidInput, "bandwidth must be positive");
  }

  // exp(-|D|^2/h) / sum exp(-|D|^2/h), shifted by the smallest |D|^2 so the
  // normalizer never underflows.
  std::vector<double> sq(k);
  for (std::size_t r = 0; r < k; ++r) sq[r] = squared_norm(edges[r].edge_label);
  const double floor = *std::min_element(sq.begin(), sq.end());
  double total = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    weights[r] = std::exp(-(sq[r] - floor) / cfg.bandwidth);
    total += weights[r];
  }
  for (double& w : weights) w /= total;
  return weights;
}

QueryWeights weigh_query(const CrossScaleGraph& graph, std::size_t query,
                         const Image& lr, const AggregationConfig& cfg) {
  const int s = graph.scale;
  const int l = graph.patch_size;
  const PatchCoord q = graph.queries.at(query);
  const auto edges = graph.edges_of(query);

  QueryWeights out;
  out.query = q;
  out.weights = aggregation_weights(edges, cfg);
  out.patches.reserve(edges.size());
  const Patch query_patch = extract_patch(lr, q, l);
  for (const GraphEdge& e : edges) {
    Patch hr = extract_patch(lr, e.neighbor_hr, l * s);
    if (cfg.adapn) hr = adapn(hr, query_patch, cfg.adapn_eps);
    out.patches.push_back(std::move(hr));
  }
  return out;
}

WeightedPatchSet compute_weights(const CrossScaleGraph& graph, const Image& lr,
                                 const AggregationConfig& cfg) {
  if (graph.scale != cfg.scale || graph.patch_size != cfg.patch_size ||
      graph.k != cfg.k) {
    throw Error(ErrorKind::kConfig, "graph was built with a different config");
  }
  WeightedPatchSet set(graph.queries.size());
  detail::parallel_for(set.size(), cfg.threads, [&](std::size_t qi) {
    set[qi] = weigh_query(graph, qi, lr, cfg);
  });
  return set;
}

Patch fuse(const QueryWeights& weighted, int scale) {
  if (weighted.patches.empty() ||
      weighted.patches.size() != weighted.weights.size()) {
    throw Error(ErrorKind::kInvalidInput, "mismatched exemplars and weights");
  }
  const Patch& first = weighted.patches.front();
  Patch out{{weighted.query.row * scale, weighted.query.col * scale,
             ScaleTag::kLr},
            first.side,
            first.channels,
            std::vector<double>(first.values.size(), 0.0)};
  for (std::size_t r = 0; r < weighted.patches.size(); ++r) {
    const double w = weighted.weights[r];
    const auto& vals = weighted.patches[r].values;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += w * vals[i];
  }
  return out;
}

Image patch2img(std::span<const Patch> patches, int width, int height,
                int channels) {
  Image sum(width, height, channels);
  std::vector<int> count(static_cast<std::size_t>(width) * height, 0);
  for (const Patch& p : patches) {
    if (p.channels != channels) {
      throw Error(ErrorKind::kChannelMismatch, "patch channel count differs");
    }
    const PatchCoord o = p.origin;
    if (o.row < 0 || o.col < 0 || o.row + p.side > height ||
        o.col + p.side > width) {
      throw Error(ErrorKind::kBounds,
                  "patch at (" + std::to_string(o.row) + "," +
                      std::to_string(o.col) + ") leaves the canvas");
    }
    for (int r = 0; r < p.side; ++r) {
      for (int c = 0; c < p.side; ++c) {
        ++count[static_cast<std::size_t>(o.row + r) * width + o.col + c];
        for (int ch = 0; ch < channels; ++ch) {
          sum.at(o.row + r, o.col + c, ch) += p.at(r, c, ch);
        }
      }
    }
  }
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const int n = count[static_cast<std::size_t>(r) * width + c];
      if (n == 0) {
        throw Error(ErrorKind::kCoverage,
                    "pixel (" + std::to_string(r) + "," + std::to_string(c) +
                        ") is not covered by any patch");
      }
      for (int ch = 0; ch < channels; ++ch) sum.at(r, c, ch) /= n;
    }
  }
  sum.clamp();
  return sum;
}

Image super_resolve(const Image& lr, const AggregationConfig& cfg) {
  cfg.validate();
  const int s = cfg.scale;
  if (lr.width() % s != 0 || lr.height() % s != 0) {
    throw Error(ErrorKind::kInvalidDimension,
                std::to_string(lr.width()) + "x" + std::to_string(lr.height()) +
                    " is not divisible by scale " + std::to_string(s));
  }
  const Image lr_down =
      s == 1 ? lr : bicubic_resample(lr, 1.0 / s, cfg.boundary);
  const CrossScaleGraph graph = build_graph(lr, lr_down, cfg);

  std::vector<Patch> fused(graph.queries.size());
  detail::parallel_for(fused.size(), cfg.threads, [&](std::size_t qi) {
    fused[qi] = fuse(weigh_query(graph, qi, lr, cfg), s);
  });
  return patch2img(fused, lr.width() * s, lr.height() * s, lr.channels());
}

Image super_resolve_chained(const Image& lr, int total_scale,
                            const AggregationConfig& cfg) {
  cfg.validate();
  if (total_scale < 1) {
    throw Error(ErrorKind::kConfig, "total scale must be >= 1");
  }
  int stages = 0;
  for (int rest = total_scale; rest > 1; rest /= cfg.scale) {
    if (cfg.scale == 1 || rest % cfg.scale != 0) {
      throw Error(ErrorKind::kConfig,
                  "scale " + std::to_string(total_scale) +
                      " is not a power of search scale " +
                      std::to_string(cfg.scale));
    }
    ++stages;
  }
  Image out = lr;
  for (int i = 0; i < stages; ++i) out = super_resolve(out, cfg);
  return out;
}

}  // namespace xscale
