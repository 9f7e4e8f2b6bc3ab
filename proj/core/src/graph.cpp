#include "xscale/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "parallel.hpp"
#include "xscale/color.hpp"
#include "xscale/error.hpp"

namespace xscale {

namespace {

struct Candidate {
  double ssd;
  int row;
  int col;
};

struct WindowRange {
  int row_begin, row_end;  // inclusive
  int col_begin, col_end;

  long count() const {
    if (row_end < row_begin || col_end < col_begin) return 0;
    return static_cast<long>(row_end - row_begin + 1) *
           (col_end - col_begin + 1);
  }
};

WindowRange clip_window(PatchCoord center, int window, int patch_size,
                        const Image& haystack) {
  const int row_lo = center.row - window / 2;
  const int col_lo = center.col - window / 2;
  return {std::max(0, row_lo),
          std::min(haystack.height() - patch_size, row_lo + window - 1),
          std::max(0, col_lo),
          std::min(haystack.width() - patch_size, col_lo + window - 1)};
}

// Exhaustive top-k over the window. Candidates are visited in raster
// order and inserted after any equal key, which gives raster tie-breaking.
std::vector<Candidate> scan_window(std::span<const double> query,
                                   const Image& haystack,
                                   const WindowRange& range, int k,
                                   int patch_size) {
  const int c = haystack.channels();
  const std::size_t row_len = static_cast<std::size_t>(patch_size) * c;
  const auto px = haystack.pixels();
  std::vector<Candidate> best;
  best.reserve(k + 1);
  for (int r = range.row_begin; r <= range.row_end; ++r) {
    for (int col = range.col_begin; col <= range.col_end; ++col) {
      const bool full = static_cast<int>(best.size()) == k;
      const double bound = full ? best.back().ssd : INFINITY;
      double ssd = 0.0;
      for (int pr = 0; pr < patch_size && ssd <= bound; ++pr) {
        const double* hay =
            px.data() +
            (static_cast<std::size_t>(r + pr) * haystack.width() + col) * c;
        const double* q = query.data() + pr * row_len;
        for (std::size_t i = 0; i < row_len; ++i) {
          const double diff = q[i] - hay[i];
          ssd += diff * diff;
        }
      }
      if (full && ssd >= bound) continue;
      auto pos = std::upper_bound(
          best.begin(), best.end(), ssd,
          [](double v, const Candidate& cand) { return v < cand.ssd; });
      best.insert(pos, {ssd, r, col});
      if (static_cast<int>(best.size()) > k) best.pop_back();
    }
  }
  return best;
}

void check_search_args(const Patch& query, const Image& haystack, int window,
                       int k, int patch_size) {
  if (k < 1) throw Error(ErrorKind::kInvalidInput, "k must be >= 1");
  if (window < 1) throw Error(ErrorKind::kInvalidInput, "window must be >= 1");
  if (query.side != patch_size) {
    throw Error(ErrorKind::kInvalidInput,
                "query side " + std::to_string(query.side) +
                    " differs from patch size " + std::to_string(patch_size));
  }
  if (query.channels != haystack.channels()) {
    throw Error(ErrorKind::kChannelMismatch,
                "query and haystack channel counts differ");
  }
}

}  // namespace

std::vector<Neighbor> knn_search(const Patch& query, const Image& haystack,
                                 PatchCoord window_center, int window, int k,
                                 int patch_size) {
  check_search_args(query, haystack, window, k, patch_size);
  const WindowRange range =
      clip_window(window_center, window, patch_size, haystack);
  if (range.count() < k) {
    throw Error(ErrorKind::kInsufficientCandidates,
                "window around (" + std::to_string(window_center.row) + "," +
                    std::to_string(window_center.col) + ") holds " +
                    std::to_string(range.count()) + " candidates, need " +
                    std::to_string(k));
  }
  const auto best = scan_window(query.values, haystack, range, k, patch_size);
  std::vector<Neighbor> out;
  out.reserve(best.size());
  for (const Candidate& cand : best) {
    out.push_back({{cand.row, cand.col, ScaleTag::kLrDown}, std::sqrt(cand.ssd)});
  }
  return out;
}

Image embed(const Image& img, const AggregationConfig& cfg) {
  if (cfg.luma_embedding && img.channels() == 3) return rgb_to_y(img);
  return img;
}

CrossScaleGraph build_graph(const Image& lr, const Image& lr_down,
                            const AggregationConfig& cfg) {
  cfg.validate();
  const int s = cfg.scale;
  const int l = cfg.patch_size;
  if (lr.channels() != lr_down.channels()) {
    throw Error(ErrorKind::kChannelMismatch,
                "LR and downsampled images have different channel counts");
  }
  if (lr.width() % s != 0 || lr.height() % s != 0 ||
      lr_down.width() != lr.width() / s ||
      lr_down.height() != lr.height() / s) {
    throw Error(ErrorKind::kScaleMismatch,
                "downsampled image " + std::to_string(lr_down.width()) + "x" +
                    std::to_string(lr_down.height()) + " is not " +
                    std::to_string(lr.width()) + "x" +
                    std::to_string(lr.height()) + " / " + std::to_string(s));
  }
  const auto rows = patch_grid(lr.height(), l, cfg.stride);
  const auto cols = patch_grid(lr.width(), l, cfg.stride);
  if (rows.empty() || cols.empty()) {
    throw Error(ErrorKind::kInvalidDimension,
                "image smaller than the query patch");
  }

  const Image query_embed = embed(lr, cfg);
  const Image search_embed = embed(lr_down, cfg);

  CrossScaleGraph graph;
  graph.scale = s;
  graph.patch_size = l;
  graph.k = cfg.k;
  graph.queries.reserve(rows.size() * cols.size());
  for (int r : rows) {
    for (int c : cols) graph.queries.push_back({r, c, ScaleTag::kLr});
  }
  graph.edges.resize(graph.queries.size() * cfg.k);

  detail::parallel_for(graph.queries.size(), cfg.threads, [&](std::size_t qi) {
    const PatchCoord q = graph.queries[qi];
    const Patch query = extract_patch(query_embed, q, l);
    const auto neighbors =
        knn_search(query, search_embed, {q.row / s, q.col / s, ScaleTag::kLrDown},
                   cfg.window, cfg.k, l);
    for (int r = 0; r < cfg.k; ++r) {
      const Neighbor& n = neighbors[r];
      GraphEdge& edge = graph.edges[qi * cfg.k + r];
      edge.neighbor_down = n.coord;
      edge.neighbor_hr = {n.coord.row * s, n.coord.col * s, ScaleTag::kLr};
      edge.distance = n.distance;
      const Patch found = extract_patch(search_embed, n.coord, l);
      edge.edge_label.resize(query.values.size());
      for (std::size_t i = 0; i < query.values.size(); ++i) {
        edge.edge_label[i] = query.values[i] - found.values[i];
      }
    }
  });
  return graph;
}

std::string format_graph(const CrossScaleGraph& graph) {
  std::string out;
  char buf[96];
  for (std::size_t qi = 0; qi < graph.queries.size(); ++qi) {
    const PatchCoord q = graph.queries[qi];
    std::snprintf(buf, sizeof(buf), "%d %d", q.row, q.col);
    out += buf;
    for (const GraphEdge& e : graph.edges_of(qi)) {
      std::snprintf(buf, sizeof(buf), " | %d %d %.17g", e.neighbor_down.row,
                    e.neighbor_down.col, e.distance);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace xscale
