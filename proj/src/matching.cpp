#include "starsat/matching.hpp"

#include <algorithm>

#include "starsat/detail/blossom.hpp"

namespace starsat {

namespace detail {

CsrGraph make_csr(std::int32_t n, const std::vector<std::pair<std::int32_t, std::int32_t>>& edges) {
  CsrGraph g;
  g.offset.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : edges) {
    ++g.offset[static_cast<std::size_t>(u) + 1];
    ++g.offset[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 1; i < g.offset.size(); ++i) g.offset[i] += g.offset[i - 1];
  g.target.resize(static_cast<std::size_t>(g.offset.back()));
  std::vector<std::int64_t> fill(g.offset.begin(), g.offset.end() - 1);
  for (auto [u, v] : edges) {
    g.target[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = v;
    g.target[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = u;
  }
  return g;
}

BlossomMatcher::BlossomMatcher(const CsrGraph& g) : g_(g) {
  const auto n = static_cast<std::size_t>(g.order());
  mate_.assign(n, -1);
  parent_.assign(n, -1);
  uf_.assign(n, 0);
  base_.assign(n, 0);
  even_.assign(n, 0);
  stamp_.assign(n, 0);
  lca_mark_.assign(n, 0);
  queue_.reserve(n);
}

void BlossomMatcher::match(std::int32_t u, std::int32_t v) {
  mate_[static_cast<std::size_t>(u)] = v;
  mate_[static_cast<std::size_t>(v)] = u;
}

void BlossomMatcher::touch(std::int32_t v) {
  const auto i = static_cast<std::size_t>(v);
  if (stamp_[i] == search_) return;
  stamp_[i] = search_;
  parent_[i] = -1;
  uf_[i] = v;
  base_[i] = v;
  even_[i] = 0;
}

std::int32_t BlossomMatcher::find(std::int32_t v) {
  touch(v);
  std::int32_t root = v;
  while (uf_[static_cast<std::size_t>(root)] != root) root = uf_[static_cast<std::size_t>(root)];
  while (uf_[static_cast<std::size_t>(v)] != root) {
    std::int32_t next = uf_[static_cast<std::size_t>(v)];
    uf_[static_cast<std::size_t>(v)] = root;
    v = next;
  }
  return base_[static_cast<std::size_t>(root)];
}

std::int32_t BlossomMatcher::lca(std::int32_t a, std::int32_t b) {
  if (++lca_round_ == 0) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    lca_round_ = 1;
  }
  while (true) {
    a = find(a);
    lca_mark_[static_cast<std::size_t>(a)] = lca_round_;
    if (mate_[static_cast<std::size_t>(a)] == -1) break;
    a = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
  }
  while (true) {
    b = find(b);
    if (lca_mark_[static_cast<std::size_t>(b)] == lca_round_) return b;
    b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
  }
}

void BlossomMatcher::mark_path(std::int32_t v, std::int32_t base, std::int32_t child) {
  auto merge = [&](std::int32_t x) {
    // Attach x's set under the set holding `base`, keeping `base` as label.
    std::int32_t rx = x;
    while (uf_[static_cast<std::size_t>(rx)] != rx) rx = uf_[static_cast<std::size_t>(rx)];
    std::int32_t rb = base;
    while (uf_[static_cast<std::size_t>(rb)] != rb) rb = uf_[static_cast<std::size_t>(rb)];
    if (rx == rb) return;
    uf_[static_cast<std::size_t>(rx)] = rb;
    base_[static_cast<std::size_t>(rb)] = base;
  };
  while (find(v) != base) {
    const std::int32_t m = mate_[static_cast<std::size_t>(v)];
    touch(m);
    merge(v);
    merge(m);
    parent_[static_cast<std::size_t>(v)] = child;
    child = m;
    if (!even_[static_cast<std::size_t>(m)]) {
      even_[static_cast<std::size_t>(m)] = 1;
      queue_.push_back(m);
    }
    v = parent_[static_cast<std::size_t>(m)];
  }
}

bool BlossomMatcher::augment_from(std::int32_t root) {
  ++search_;
  if (search_ == 0) {  // wrapped; invalidate every stamp
    std::fill(stamp_.begin(), stamp_.end(), 0);
    search_ = 1;
  }
  queue_.clear();
  touch(root);
  even_[static_cast<std::size_t>(root)] = 1;
  queue_.push_back(root);

  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const std::int32_t v = queue_[head];
    const auto vi = static_cast<std::size_t>(v);
    for (std::int64_t e = g_.offset[vi]; e < g_.offset[vi + 1]; ++e) {
      const std::int32_t to = g_.target[static_cast<std::size_t>(e)];
      touch(to);
      if (mate_[vi] == to || find(v) == find(to)) continue;
      const std::int32_t to_mate = mate_[static_cast<std::size_t>(to)];
      bool to_even = to == root;
      if (!to_even && to_mate != -1) {
        touch(to_mate);
        to_even = parent_[static_cast<std::size_t>(to_mate)] != -1;
      }
      if (to_even) {
        const std::int32_t base = lca(v, to);
        mark_path(v, base, to);
        mark_path(to, base, v);
      } else if (parent_[static_cast<std::size_t>(to)] == -1) {
        parent_[static_cast<std::size_t>(to)] = v;
        if (to_mate == -1) {
          for (std::int32_t x = to; x != -1;) {
            const std::int32_t px = parent_[static_cast<std::size_t>(x)];
            const std::int32_t next = mate_[static_cast<std::size_t>(px)];
            match(x, px);
            x = next;
          }
          return true;
        }
        even_[static_cast<std::size_t>(to_mate)] = 1;
        queue_.push_back(to_mate);
      }
    }
  }
  return false;
}

void BlossomMatcher::maximize() {
  const std::int32_t n = g_.order();
  for (std::int32_t v = 0; v < n; ++v) {
    if (mate_[static_cast<std::size_t>(v)] != -1) continue;
    const auto vi = static_cast<std::size_t>(v);
    for (std::int64_t e = g_.offset[vi]; e < g_.offset[vi + 1]; ++e) {
      const std::int32_t w = g_.target[static_cast<std::size_t>(e)];
      if (mate_[static_cast<std::size_t>(w)] == -1) {
        match(v, w);
        break;
      }
    }
  }
  for (std::int32_t v = 0; v < n; ++v)
    if (mate_[static_cast<std::size_t>(v)] == -1) augment_from(v);
}

}  // namespace detail

EdgeList max_matching(const Graph& g) {
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  const detail::CsrGraph csr = detail::make_csr(g.order(), edges);
  detail::BlossomMatcher matcher(csr);
  matcher.maximize();
  EdgeList out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (matcher.mate(v) > v) out.emplace_back(v, matcher.mate(v));
  return out;
}

bool is_matching(const Graph& g, const EdgeList& edges) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) return false;
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
  }
  return true;
}

}  // namespace starsat
