#include "lcom/member_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcom {

std::size_t MemberGraph::add_vertex(MemberVertex vertex) {
  vertices_.push_back(std::move(vertex));
  return vertices_.size() - 1;
}

bool MemberGraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= vertices_.size() || to >= vertices_.size())
    throw std::invalid_argument("member graph edge references an unknown vertex");
  if (vertices_[from].is_attribute() && vertices_[to].is_attribute())
    throw std::invalid_argument("member graph edges must touch a method");
  if (from == to) return false;
  if (!edge_keys_.emplace(std::min(from, to), std::max(from, to)).second) return false;
  edges_.push_back({from, to});
  return true;
}

std::size_t MemberGraph::method_count() const {
  return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(),
                                                [](const MemberVertex& v) { return v.is_method(); }));
}

std::size_t MemberGraph::attribute_count() const { return vertices_.size() - method_count(); }

std::optional<std::size_t> MemberGraph::find_method(std::string_view name, std::size_t arity) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.is_method() && v.name == name && v.arity == arity) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> MemberGraph::find_attribute(std::string_view owner,
                                                       std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.is_attribute() && v.owner == owner && v.name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> MemberGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adjacent(vertices_.size());
  for (const auto& edge : edges_) {
    adjacent[edge.from].push_back(edge.to);
    adjacent[edge.to].push_back(edge.from);
  }
  return adjacent;
}

std::size_t method_component_count(const MemberGraph& graph) {
  const auto adjacent = graph.adjacency();
  const auto& vertices = graph.vertices();
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::size_t> stack;
  std::size_t components = 0;

  for (std::size_t start = 0; start < vertices.size(); ++start) {
    if (seen[start] || !vertices[start].is_method()) continue;
    ++components;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto next : adjacent[v]) {
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
  }
  return components;
}

}  // namespace lcom
