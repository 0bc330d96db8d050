#include "max_flow.hpp"

#include <algorithm>
#include <queue>

namespace planted::detail {

MaxFlow::MaxFlow(std::size_t node_count) : arcs_(node_count), level_(node_count), cursor_(node_count) {}

void MaxFlow::add_edge(std::size_t from, std::size_t to, Capacity capacity) {
  arcs_[from].push_back({to, arcs_[to].size(), capacity});
  arcs_[to].push_back({from, arcs_[from].size() - 1, 0});
}

void MaxFlow::add_undirected(std::size_t a, std::size_t b, Capacity capacity) {
  arcs_[a].push_back({b, arcs_[b].size(), capacity});
  arcs_[b].push_back({a, arcs_[a].size() - 1, capacity});
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    std::size_t v = frontier.front();
    frontier.pop();
    for (const Arc& a : arcs_[v]) {
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        frontier.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

MaxFlow::Capacity MaxFlow::push(std::size_t v, std::size_t sink, Capacity limit) {
  if (v == sink) return limit;
  for (std::size_t& i = cursor_[v]; i < arcs_[v].size(); ++i) {
    Arc& a = arcs_[v][i];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    Capacity got = push(a.to, sink, std::min(limit, a.cap));
    if (got > 0) {
      a.cap -= got;
      arcs_[a.to][a.rev].cap += got;
      return got;
    }
  }
  return 0;
}

MaxFlow::Capacity MaxFlow::run(std::size_t source, std::size_t sink) {
  Capacity total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (Capacity f = push(source, sink, kInfinite)) total += f;
  }
  return total;
}

std::vector<char> MaxFlow::source_side(std::size_t source) const {
  std::vector<char> seen(arcs_.size(), 0);
  std::vector<std::size_t> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (const Arc& a : arcs_[v]) {
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace planted::detail
