#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcom {

struct MemberVertex {
  enum class Kind { Method, Attribute };

  Kind kind = Kind::Method;
  std::string name;
  std::size_t arity = 0;  // methods only
  std::string owner;      // declaring type
  bool is_static = false;

  bool is_method() const { return kind == Kind::Method; }
  bool is_attribute() const { return kind == Kind::Attribute; }

  friend bool operator==(const MemberVertex&, const MemberVertex&) = default;
};

/// An access (method -> attribute) or invocation (method -> method). The
/// graph is undirected; `from` keeps the orientation for rendering only.
struct MemberEdge {
  std::size_t from = 0;
  std::size_t to = 0;

  friend bool operator==(const MemberEdge&, const MemberEdge&) = default;
};

/// Undirected graph over a type's methods and attributes. Edges are unique per
/// unordered vertex pair; self-loops are discarded.
class MemberGraph {
 public:
  std::size_t add_vertex(MemberVertex vertex);

  // Throws std::invalid_argument for out-of-range ids or an attribute-attribute
  // pair. Returns false when the edge already exists or is a self-loop.
  bool add_edge(std::size_t from, std::size_t to);

  const std::vector<MemberVertex>& vertices() const { return vertices_; }
  const std::vector<MemberEdge>& edges() const { return edges_; }

  std::size_t method_count() const;
  std::size_t attribute_count() const;

  std::optional<std::size_t> find_method(std::string_view name, std::size_t arity) const;
  std::optional<std::size_t> find_attribute(std::string_view owner, std::string_view name) const;

  // Adjacency lists indexed by vertex id.
  std::vector<std::vector<std::size_t>> adjacency() const;

 private:
  std::vector<MemberVertex> vertices_;
  std::vector<MemberEdge> edges_;
  std::set<std::pair<std::size_t, std::size_t>> edge_keys_;
};

/// Number of connected components that contain at least one method vertex.
/// Attribute-only components are not counted, so the result never exceeds the
/// number of methods.
std::size_t method_component_count(const MemberGraph& graph);

}  // namespace lcom
