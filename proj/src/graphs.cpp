#include "indzero/graphs.hpp"

#include "indzero/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace indzero {

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) {
    throw PreconditionError("vertex count must be nonnegative");
  }
  adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != adj_.size()) {
    throw PreconditionError("permutation size mismatch");
  }
  std::vector<Edge> mapped;
  for (auto [u, v] : edges()) {
    mapped.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return Graph(vertex_count(), mapped);
}

bool Graph::is_connected() const {
  if (adj_.empty()) {
    return true;
  }
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == adj_.size();
}

namespace {

bool parse_vertex(const std::string& token, int& out) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Graph::Edge> edges;
  int max_id = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) {
      tokens.push_back(tok);
    }
    if (tokens.empty() || tokens.front().front() == '#') {
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex ids, got " + std::to_string(tokens.size()) + " fields");
    }
    int u = 0;
    int v = 0;
    if (!parse_vertex(tokens[0], u) || !parse_vertex(tokens[1], v)) {
      throw ParseError(line_no, "vertex ids must be nonnegative decimal integers");
    }
    if (static_cast<std::size_t>(std::max(u, v)) >= kDefaultVertexCap) {
      throw ParseError(line_no, "vertex id exceeds the vertex cap");
    }
    if (u == v) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    }
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  return Graph(max_id + 1, edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open graph file: " + path);
  }
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
  return out.str();
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

Graph gen_layered_tree(std::span<const int> arities, std::size_t vertex_cap) {
  std::size_t total = 1;
  std::size_t level_size = 1;
  for (int a : arities) {
    if (a < 0) {
      throw PreconditionError("arity must be nonnegative");
    }
    if (a > 0 && level_size > vertex_cap / static_cast<std::size_t>(a)) {
      throw CapExceeded("layered tree exceeds the vertex cap");
    }
    level_size *= static_cast<std::size_t>(a);
    total += level_size;
    if (total > vertex_cap) {
      throw CapExceeded("layered tree exceeds the vertex cap");
    }
  }
  std::vector<Graph::Edge> edges;
  edges.reserve(total - 1);
  int next = 1;
  int level_begin = 0;
  int level_end = 1;
  for (int a : arities) {
    for (int parent = level_begin; parent < level_end; ++parent) {
      for (int c = 0; c < a; ++c) {
        edges.emplace_back(parent, next++);
      }
    }
    level_begin = level_end;
    level_end = next;
  }
  return Graph(static_cast<int>(total), edges);
}

Graph gen_complete_dary_tree(int d, int depth, std::size_t vertex_cap) {
  if (d < 1 || depth < 0) {
    throw PreconditionError("complete d-ary tree needs d >= 1 and depth >= 0");
  }
  const std::vector<int> arities(static_cast<std::size_t>(depth), d);
  return gen_layered_tree(arities, vertex_cap);
}

namespace {

std::vector<int> tree_centres(const Graph& t) {
  const int n = t.vertex_count();
  if (n <= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      all[static_cast<std::size_t>(i)] = i;
    }
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) {
      layer.push_back(v);
    }
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : t.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) {
          next.push_back(w);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string ahu(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v)) {
    if (w != parent) {
      kids.push_back(ahu(t, w, v));
    }
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) {
    out += k;
  }
  out += ")";
  return out;
}

} // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (tree.vertex_count() == 0) {
    return "";
  }
  if (tree.edge_count() + 1 != static_cast<std::size_t>(tree.vertex_count()) || !tree.is_connected()) {
    throw PreconditionError("tree_canonical_form needs a tree");
  }
  std::string best;
  for (int c : tree_centres(tree)) {
    std::string form = ahu(tree, c, -1);
    if (best.empty() || form < best) {
      best = std::move(form);
    }
  }
  return best;
}

} // namespace indzero
