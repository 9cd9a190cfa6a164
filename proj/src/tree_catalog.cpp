// Isomorph-free enumeration of free trees with bounded degree.
//
// A "branch" is a rooted tree whose root has at most max_deg - 1 children (it hangs
// off a parent). Branches are stored in a pool ordered by size; a rooted tree is
// canonical when its child branches are listed in non-increasing pool index. A
// free tree on n vertices is either unicentroidal (centroid root, every branch of
// size <= (n-1)/2) or bicentroidal (two branches of size n/2 joined by an edge,
// listed with the larger index first). The two cases are disjoint.

#include "indzero/errors.hpp"
#include "indzero/graphs.hpp"

#include <functional>
#include <string>

namespace indzero {

namespace {

struct Branch {
  int size = 1;
  std::vector<int> children; // pool indices, non-increasing
};

class BranchPool {
public:
  BranchPool(int max_size, int child_cap) : child_cap_(child_cap) {
    first_of_size_.assign(static_cast<std::size_t>(max_size) + 2, 0);
    for (int k = 1; k <= max_size; ++k) {
      first_of_size_[static_cast<std::size_t>(k)] = static_cast<int>(pool_.size());
      const int limit = static_cast<int>(pool_.size()); // only strictly smaller branches
      std::vector<int> kids;
      multisets(k - 1, limit - 1, child_cap_, kids, [&](const std::vector<int>& chosen) {
        pool_.push_back(Branch{k, chosen});
        return true;
      });
    }
    first_of_size_[static_cast<std::size_t>(max_size) + 1] = static_cast<int>(pool_.size());
  }

  const Branch& at(int id) const { return pool_[static_cast<std::size_t>(id)]; }

  /// Pool index range [begin, end) of branches with exactly `size` vertices.
  std::pair<int, int> of_size(int size) const {
    return {first_of_size_[static_cast<std::size_t>(size)], first_of_size_[static_cast<std::size_t>(size) + 1]};
  }

  /// Last pool index whose branch has at most `size` vertices, or -1.
  int last_with_size_at_most(int size) const {
    if (size <= 0) {
      return -1;
    }
    return first_of_size_[static_cast<std::size_t>(size) + 1] - 1;
  }

  /// Enumerates multisets of branches (indices <= max_id, non-increasing) with the
  /// given total size and at most `count_left` members.
  bool multisets(int remaining, int max_id, int count_left, std::vector<int>& chosen,
                 const std::function<bool(const std::vector<int>&)>& emit) const {
    if (remaining == 0) {
      return emit(chosen);
    }
    if (count_left <= 0) {
      return true;
    }
    for (int id = max_id; id >= 0; --id) {
      const int s = pool_[static_cast<std::size_t>(id)].size;
      if (s > remaining) {
        continue;
      }
      // Pool is sorted by size: if even the largest remaining candidates cannot
      // fill `remaining` with count_left members, stop.
      if (static_cast<long>(s) * count_left < remaining) {
        break;
      }
      chosen.push_back(id);
      const bool go_on = multisets(remaining - s, id, count_left - 1, chosen, emit);
      chosen.pop_back();
      if (!go_on) {
        return false;
      }
    }
    return true;
  }

  void append(int id, int parent, int& next, std::vector<Graph::Edge>& edges) const {
    const int me = next++;
    if (parent >= 0) {
      edges.emplace_back(parent, me);
    }
    for (int c : pool_[static_cast<std::size_t>(id)].children) {
      append(c, me, next, edges);
    }
  }

private:
  int child_cap_;
  std::vector<Branch> pool_;
  std::vector<int> first_of_size_;
};

} // namespace

void for_each_tree(int n_max, int max_deg, const std::function<bool(const Graph&)>& visit) {
  if (n_max > kMaxCatalogVertices) {
    throw CapExceeded("tree catalog is limited to n_max <= " + std::to_string(kMaxCatalogVertices));
  }
  if (max_deg < 0) {
    throw PreconditionError("max_deg must be nonnegative");
  }
  if (n_max < 1) {
    return;
  }
  const BranchPool pool(n_max / 2, max_deg - 1);

  for (int n = 1; n <= n_max; ++n) {
    // Unicentroidal trees.
    const int branch_limit = pool.last_with_size_at_most((n - 1) / 2);
    std::vector<int> chosen;
    const bool go_on = pool.multisets(n - 1, branch_limit, max_deg, chosen, [&](const std::vector<int>& kids) {
      std::vector<Graph::Edge> edges;
      int next = 1;
      for (int c : kids) {
        pool.append(c, 0, next, edges);
      }
      return visit(Graph(n, edges));
    });
    if (!go_on) {
      return;
    }
    // Bicentroidal trees.
    if (n % 2 == 0 && max_deg >= 1) {
      const auto [lo, hi] = pool.of_size(n / 2);
      for (int a = lo; a < hi; ++a) {
        for (int b = lo; b <= a; ++b) {
          std::vector<Graph::Edge> edges;
          int next = 0;
          pool.append(a, -1, next, edges);
          const int second_root = next;
          pool.append(b, -1, next, edges);
          edges.emplace_back(0, second_root);
          if (!visit(Graph(n, edges))) {
            return;
          }
        }
      }
    }
  }
}

std::vector<Graph> gen_all_trees(int n_max, int max_deg) {
  std::vector<Graph> out;
  for_each_tree(n_max, max_deg, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

} // namespace indzero
