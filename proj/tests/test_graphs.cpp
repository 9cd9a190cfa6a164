#include "indzero/errors.hpp"
#include "indzero/graphs.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace indzero;

namespace {

/// Labeled tree from a Pruefer sequence over n >= 2 vertices.
std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int v : seq) {
    ++degree[v];
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
        break;
      }
    }
  }
  int u = -1;
  for (int w = 0; w < n; ++w) {
    if (degree[w] == 1) {
      if (u < 0) {
        u = w;
      } else {
        edges.emplace_back(u, w);
      }
    }
  }
  return edges;
}

/// Isomorphism invariant by brute force: minimum over all roots of the rooted
/// parenthesis encoding.
std::string brute_canonical(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v]) {
      if (w != parent) {
        kids.push_back(enc(w, v));
      }
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) {
      s += k;
    }
    return s + ")";
  };
  std::string best;
  for (int r = 0; r < n; ++r) {
    std::string s = enc(r, -1);
    if (best.empty() || s < best) {
      best = s;
    }
  }
  return best;
}

/// Unlabeled tree counts per size and degree bound, from labeled enumeration.
std::map<int, std::size_t> pruefer_counts(int n_max, int max_deg) {
  std::map<int, std::size_t> counts;
  counts[1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    std::set<std::string> classes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
      auto edges = pruefer_decode(seq, n);
      std::vector<int> deg(n, 0);
      for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
      }
      if (*std::max_element(deg.begin(), deg.end()) <= max_deg) {
        classes.insert(brute_canonical(n, edges));
      }
      int k = 0;
      while (k < n - 2 && ++seq[k] == n) {
        seq[k++] = 0;
      }
      if (k == n - 2) {
        break;
      }
    }
    counts[n] = classes.size();
  }
  return counts;
}

std::map<int, std::size_t> catalog_counts(int n_max, int max_deg) {
  std::map<int, std::size_t> counts;
  for (const auto& t : gen_all_trees(n_max, max_deg)) {
    ++counts[t.vertex_count()];
  }
  return counts;
}

std::vector<std::pair<int, int>> edges_of(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto e : g.edges()) {
    out.emplace_back(e.first, e.second);
  }
  return out;
}

} // namespace

TEST_SUITE("graphs") {

TEST_CASE("parse_edge_list examples") {
  const Graph p = parse_edge_list("0 1\n1 2");
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 2);
  CHECK(parse_edge_list("").vertex_count() == 0);
  const Graph dup = parse_edge_list("0 1\n# c\n0 1");
  CHECK(dup.vertex_count() == 2);
  CHECK(dup.edge_count() == 1);
  const Graph ws = parse_edge_list("  3\t 1  \n\n   # note\n1 0\r\n");
  CHECK(ws.vertex_count() == 4);
  CHECK(ws.edge_count() == 2);
  CHECK(ws.adjacent(1, 3));
}

TEST_CASE("parse_edge_list errors carry the line number") {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_edge_list("0 1\n\n2 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("1\n"), ParseError);
}

TEST_CASE("edge list round trip") {
  const Graph g = gen_complete_dary_tree(2, 3);
  CHECK(parse_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("Graph invariants") {
  const Graph g(4, {{0, 1}, {1, 0}, {2, 3}, {1, 2}});
  CHECK(g.edge_count() == 3);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (int w : nb) {
      CHECK(g.adjacent(w, v));
    }
  }
  CHECK(g.is_connected());
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("max_degree examples") {
  CHECK(max_degree(Graph(4, {{0, 1}, {0, 2}, {0, 3}})) == 3);
  CHECK(max_degree(parse_edge_list("0 1\n1 2\n2 3")) == 2);
  CHECK(max_degree(Graph(0, {})) == 0);
}

TEST_CASE("complete and layered trees") {
  CHECK(gen_complete_dary_tree(2, 2).vertex_count() == 7);
  const Graph star = gen_complete_dary_tree(3, 1);
  CHECK(star.vertex_count() == 4);
  CHECK(max_degree(star) == 3);
  CHECK(gen_complete_dary_tree(2, 0).vertex_count() == 1);
  const std::vector<int> a{2};
  CHECK(gen_layered_tree(a).vertex_count() == 3);
  const std::vector<int> b{2, 3};
  const Graph layered = gen_layered_tree(b);
  CHECK(layered.vertex_count() == 9);
  CHECK(layered.edge_count() == 8);
  CHECK(gen_layered_tree(std::vector<int>{}).vertex_count() == 1);
  CHECK_THROWS_AS(gen_complete_dary_tree(10, 10, 1000), CapExceeded);
}

TEST_CASE("tree catalog small examples") {
  CHECK(gen_all_trees(3, 2).size() == 3);
  const auto paths = gen_all_trees(5, 2);
  CHECK(paths.size() == 5);
  for (const auto& t : paths) {
    CHECK(max_degree(t) <= 2);
  }
  CHECK(gen_all_trees(7, 6).size() == 25);
  CHECK_THROWS_AS(gen_all_trees(17, 4), CapExceeded);
}

TEST_CASE("tree catalog agrees with labeled enumeration") {
  for (int max_deg : {2, 3, 4, 7}) {
    CAPTURE(max_deg);
    CHECK(catalog_counts(8, max_deg) == pruefer_counts(8, max_deg));
  }
}

TEST_CASE("tree catalog totals up to 16 vertices") {
  const std::vector<std::size_t> all{0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320};
  const std::vector<std::size_t> quartic{0, 1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355, 802, 1858, 4347, 10359};
  const auto c_all = catalog_counts(16, 15);
  const auto c_quartic = catalog_counts(16, 4);
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(c_all.at(n) == all[n]);
    CHECK(c_quartic.at(n) == quartic[n]);
  }
}

TEST_CASE("catalog trees are trees, within the degree bound, pairwise non-isomorphic") {
  const auto trees = gen_all_trees(12, 4);
  std::set<std::string> forms;
  std::set<std::string> brute;
  for (const auto& t : trees) {
    CHECK(t.edge_count() + 1 == static_cast<std::size_t>(t.vertex_count()));
    CHECK(t.is_connected());
    CHECK(max_degree(t) <= 4);
    forms.insert(tree_canonical_form(t));
    if (t.vertex_count() <= 10) {
      brute.insert(brute_canonical(t.vertex_count(), edges_of(t)));
    }
  }
  CHECK(forms.size() == trees.size());
  std::size_t small = 0;
  for (const auto& t : trees) {
    small += t.vertex_count() <= 10 ? 1 : 0;
  }
  CHECK(brute.size() == small);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (const auto& t : gen_all_trees(10, 4)) {
    std::vector<int> perm(t.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(tree_canonical_form(t.relabeled(perm)) == tree_canonical_form(t));
  }
}

TEST_CASE("catalog order is deterministic") {
  const auto a = gen_all_trees(11, 4);
  const auto b = gen_all_trees(11, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
  }
}

} // TEST_SUITE
