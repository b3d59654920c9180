#pragma once

#include <cstdint>
#include <vector>

namespace starsat::detail {

// Compressed adjacency for matching on large auxiliary graphs.
struct CsrGraph {
  std::vector<std::int64_t> offset;  // size n + 1
  std::vector<std::int32_t> target;

  std::int32_t order() const noexcept { return static_cast<std::int32_t>(offset.size()) - 1; }
};

// Builds a CSR graph from an undirected edge list on n vertices.
CsrGraph make_csr(std::int32_t n, const std::vector<std::pair<std::int32_t, std::int32_t>>& edges);

// Edmonds' blossom-shrinking search for augmenting paths, one root at a time.
// Blossom bases are tracked with union-find and per-search state is stamped,
// so a search costs O(E alpha(V)) in the part of the graph it reaches.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const CsrGraph& g);

  // Seeds the matching; u and v must be adjacent and currently free.
  void match(std::int32_t u, std::int32_t v);

  // Looks for an augmenting path from the free vertex `root` and applies it.
  // A root with no augmenting path never gains one after later augmentations.
  bool augment_from(std::int32_t root);

  // Greedy seed plus one search from every free vertex: a maximum matching.
  void maximize();

  std::int32_t mate(std::int32_t v) const noexcept { return mate_[static_cast<std::size_t>(v)]; }
  const std::vector<std::int32_t>& mates() const noexcept { return mate_; }

 private:
  void touch(std::int32_t v);
  std::int32_t find(std::int32_t v);
  std::int32_t lca(std::int32_t a, std::int32_t b);
  void mark_path(std::int32_t v, std::int32_t base, std::int32_t child);

  const CsrGraph& g_;
  std::vector<std::int32_t> mate_;
  std::vector<std::int32_t> parent_;  // tree / bridge pointer
  std::vector<std::int32_t> uf_;      // union-find parent
  std::vector<std::int32_t> base_;    // base label, valid at union-find roots
  std::vector<char> even_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> lca_mark_;
  std::vector<std::int32_t> queue_;
  std::uint32_t search_ = 0;
  std::uint32_t lca_round_ = 0;
};

}  // namespace starsat::detail
