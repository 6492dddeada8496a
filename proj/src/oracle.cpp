#include "transversals/oracle.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace transversals {

namespace {

using Visitor = std::function<bool(const Transversal&)>;

class Budgeted {
 public:
  explicit Budgeted(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Returns normally while within budget; throws otherwise.
  void tick(const std::vector<Transversal>& found, std::int64_t count) {
    ++nodes_;
    bool over = nodes_ > budget_.max_nodes;
    if (!over && budget_.time_limit && (nodes_ & 1023) == 0) {
      over = std::chrono::steady_clock::now() - start_ > *budget_.time_limit;
    }
    if (over) throw BudgetExceeded(found, count, nodes_);
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t nodes_ = 0;
};

/// Colors whose subgraph holds each vertex pair, flattened n x n.
std::vector<std::vector<Color>> pair_colors(const SubgraphFamily& family) {
  const int n = family.num_vertices();
  std::vector<std::vector<Color>> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Color c = 0; c < family.num_colors(); ++c) {
    for (const Edge& e : family.subgraph(c).edges()) {
      if (e.is_loop()) continue;
      out[static_cast<std::size_t>(e.u * n + e.v)].push_back(c);
      out[static_cast<std::size_t>(e.v * n + e.u)].push_back(c);
    }
  }
  return out;
}

/// Kuhn augmenting path from `slot` over the color lists in `options`.
bool augment(int slot, const std::vector<const std::vector<Color>*>& options, std::vector<int>& owner,
             std::vector<char>& seen) {
  for (Color c : *options[static_cast<std::size_t>(slot)]) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    seen[static_cast<std::size_t>(c)] = 1;
    int& o = owner[static_cast<std::size_t>(c)];
    if (o < 0 || augment(o, options, owner, seen)) {
      o = slot;
      return true;
    }
  }
  return false;
}

class HamSearch {
 public:
  HamSearch(const SubgraphFamily& family, const SearchBudget& budget, bool collect, Visitor visit)
      : n_(family.num_vertices()),
        colors_(pair_colors(family)),
        budget_(budget),
        collect_(collect),
        visit_(std::move(visit)) {}

  void run() {
    if (n_ < 3) return;
    path_.assign(1, 0);
    in_path_.assign(static_cast<std::size_t>(n_), 0);
    in_path_[0] = 1;
    owner_.assign(static_cast<std::size_t>(n_), -1);
    options_.clear();
    extend();
  }

  std::vector<Transversal> found;
  std::int64_t count = 0;

 private:
  const std::vector<Color>& colors(Vertex a, Vertex b) const {
    return colors_[static_cast<std::size_t>(a * n_ + b)];
  }

  // Pushes the edge (a, b) and keeps a full edge/color matching; false if none.
  bool push_edge(Vertex a, Vertex b) {
    options_.push_back(&colors(a, b));
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    if (augment(static_cast<int>(options_.size()) - 1, options_, owner_, seen)) return true;
    options_.pop_back();
    return false;
  }

  bool extend() {
    budget_.tick(found, count);
    const Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == n_) {
      if (path_[1] > path_.back() || colors(end, 0).empty()) return true;
      const auto saved = owner_;
      bool go = true;
      if (push_edge(end, 0)) {
        go = color_cycle();
        options_.pop_back();
      }
      owner_ = saved;
      return go;
    }
    for (Vertex next = 0; next < n_; ++next) {
      if (in_path_[static_cast<std::size_t>(next)] || colors(end, next).empty()) continue;
      // Orientation: the second vertex must end up smaller than the last one,
      // so it can never be n-1 (and 1 is excluded as a last vertex below).
      if (path_.size() == 1 && next == n_ - 1) continue;
      const auto saved = owner_;
      if (push_edge(end, next)) {
        path_.push_back(next);
        in_path_[static_cast<std::size_t>(next)] = 1;
        const bool go = extend();
        in_path_[static_cast<std::size_t>(next)] = 0;
        path_.pop_back();
        options_.pop_back();
        owner_ = saved;
        if (!go) return false;
      } else {
        owner_ = saved;
      }
    }
    return true;
  }

  // All colorings of the current cycle, edge k = (path[k], path[k+1 mod n]).
  bool color_cycle() {
    std::vector<Color> assigned(static_cast<std::size_t>(n_), -1);
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    return color_from(0, assigned, used);
  }

  bool completable(int from, const std::vector<char>& used) const {
    std::vector<const std::vector<Color>*> rest(options_.begin() + from, options_.end());
    std::vector<int> owner(static_cast<std::size_t>(n_), -1);
    for (Color c = 0; c < n_; ++c) {
      if (used[static_cast<std::size_t>(c)]) owner[static_cast<std::size_t>(c)] = -2;
    }
    for (int k = 0; k < static_cast<int>(rest.size()); ++k) {
      std::vector<char> seen(static_cast<std::size_t>(n_), 0);
      for (Color c = 0; c < n_; ++c) {
        if (used[static_cast<std::size_t>(c)]) seen[static_cast<std::size_t>(c)] = 1;
      }
      if (!augment(k, rest, owner, seen)) return false;
    }
    return true;
  }

  bool color_from(int k, std::vector<Color>& assigned, std::vector<char>& used) {
    budget_.tick(found, count);
    if (k == n_) {
      Transversal t;
      t.kind = TransversalKind::cycle;
      for (int j = 0; j < n_; ++j) {
        t.edges.push_back({Edge::of(path_[static_cast<std::size_t>(j)], path_[static_cast<std::size_t>((j + 1) % n_)]),
                           assigned[static_cast<std::size_t>(j)]});
      }
      t = t.canonical();
      ++count;
      if (collect_) found.push_back(t);
      return visit_ ? visit_(t) : true;
    }
    for (Color c : *options_[static_cast<std::size_t>(k)]) {
      if (used[static_cast<std::size_t>(c)]) continue;
      used[static_cast<std::size_t>(c)] = 1;
      assigned[static_cast<std::size_t>(k)] = c;
      bool go = true;
      if (completable(k + 1, used)) go = color_from(k + 1, assigned, used);
      used[static_cast<std::size_t>(c)] = 0;
      if (!go) return false;
    }
    return true;
  }

  int n_;
  std::vector<std::vector<Color>> colors_;
  Budgeted budget_;
  bool collect_;
  Visitor visit_;
  std::vector<Vertex> path_;
  std::vector<char> in_path_;
  std::vector<int> owner_;
  std::vector<const std::vector<Color>*> options_;
};

class PmSearch {
 public:
  PmSearch(const SubgraphFamily& family, const SearchBudget& budget, bool collect, Visitor visit)
      : n_(family.num_vertices()),
        colors_(pair_colors(family)),
        budget_(budget),
        collect_(collect),
        visit_(std::move(visit)) {}

  void run() {
    if (n_ == 0 || n_ % 2 != 0) return;
    matched_.assign(static_cast<std::size_t>(n_), 0);
    used_.assign(static_cast<std::size_t>(n_ / 2), 0);
    chosen_.clear();
    extend();
  }

  std::vector<Transversal> found;
  std::int64_t count = 0;

 private:
  const std::vector<Color>& colors(Vertex a, Vertex b) const {
    return colors_[static_cast<std::size_t>(a * n_ + b)];
  }

  bool has_option(Vertex u) const {
    for (Vertex w = 0; w < n_; ++w) {
      if (w == u || matched_[static_cast<std::size_t>(w)]) continue;
      for (Color c : colors(u, w)) {
        if (!used_[static_cast<std::size_t>(c)]) return true;
      }
    }
    return false;
  }

  bool viable() const {
    for (Vertex u = 0; u < n_; ++u) {
      if (!matched_[static_cast<std::size_t>(u)] && !has_option(u)) return false;
    }
    return true;
  }

  bool extend() {
    budget_.tick(found, count);
    Vertex v = 0;
    while (v < n_ && matched_[static_cast<std::size_t>(v)]) ++v;
    if (v == n_) {
      Transversal t{TransversalKind::matching, chosen_};
      t = t.canonical();
      ++count;
      if (collect_) found.push_back(t);
      return visit_ ? visit_(t) : true;
    }
    for (Vertex w = v + 1; w < n_; ++w) {
      if (matched_[static_cast<std::size_t>(w)]) continue;
      for (Color c : colors(v, w)) {
        if (used_[static_cast<std::size_t>(c)]) continue;
        matched_[static_cast<std::size_t>(v)] = matched_[static_cast<std::size_t>(w)] = 1;
        used_[static_cast<std::size_t>(c)] = 1;
        chosen_.push_back({Edge::of(v, w), c});
        bool go = true;
        if (viable()) go = extend();
        chosen_.pop_back();
        used_[static_cast<std::size_t>(c)] = 0;
        matched_[static_cast<std::size_t>(v)] = matched_[static_cast<std::size_t>(w)] = 0;
        if (!go) return false;
      }
    }
    return true;
  }

  int n_;
  std::vector<std::vector<Color>> colors_;
  Budgeted budget_;
  bool collect_;
  Visitor visit_;
  std::vector<char> matched_;
  std::vector<char> used_;
  std::vector<ColoredEdge> chosen_;
};

bool shape_ok(const SubgraphFamily& family) {
  const auto kind = family.kind;
  if (kind == FamilyKind::hamiltonian) return family.num_colors() == family.num_vertices();
  return 2 * family.num_colors() == family.num_vertices();
}

Visitor limit_visitor(const SearchBudget& budget) {
  if (!budget.max_results) return {};
  auto seen = std::make_shared<std::int64_t>(0);
  const std::int64_t cap = *budget.max_results;
  return [seen, cap](const Transversal&) { return ++*seen < cap; };
}

template <class Search>
std::vector<Transversal> enumerate(const SubgraphFamily& family, const SearchBudget& budget) {
  if (!shape_ok(family)) return {};
  Search search(family, budget, true, limit_visitor(budget));
  try {
    search.run();
  } catch (BudgetExceeded& e) {
    sort_unique(e.partial);
    throw;
  }
  sort_unique(search.found);
  return std::move(search.found);
}

template <class Search>
std::int64_t count(const SubgraphFamily& family, const SearchBudget& budget) {
  if (!shape_ok(family)) return 0;
  Search search(family, budget, false, limit_visitor(budget));
  search.run();
  return search.count;
}

template <class Search>
std::optional<Transversal> first(const SubgraphFamily& family, SearchBudget budget) {
  budget.max_results = 1;
  auto all = enumerate<Search>(family, budget);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace

std::vector<Transversal> enumerate_all_ham_transversals(const SubgraphFamily& family, const SearchBudget& budget) {
  return enumerate<HamSearch>(family, budget);
}

std::int64_t count_ham_transversals(const SubgraphFamily& family, const SearchBudget& budget) {
  return count<HamSearch>(family, budget);
}

std::vector<Transversal> enumerate_all_pm_transversals(const SubgraphFamily& family, const SearchBudget& budget) {
  return enumerate<PmSearch>(family, budget);
}

std::int64_t count_pm_transversals(const SubgraphFamily& family, const SearchBudget& budget) {
  return count<PmSearch>(family, budget);
}

std::optional<Transversal> exists_ham_transversal(const SubgraphFamily& family, const SearchBudget& budget) {
  return first<HamSearch>(family, budget);
}

std::optional<Transversal> exists_pm_transversal(const SubgraphFamily& family, const SearchBudget& budget) {
  return first<PmSearch>(family, budget);
}

}  // namespace transversals
