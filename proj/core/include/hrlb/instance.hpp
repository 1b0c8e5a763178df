#ifndef HRLB_INSTANCE_HPP
#define HRLB_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hrlb/kgraph.hpp"

namespace hrlb {

// Fixed-length vertex tuples stored back to back. In partite instances
// coordinate j of a tuple lies in part j.
class CopyFamily {
 public:
  CopyFamily() = default;
  explicit CopyFamily(unsigned tuple_length, std::optional<unsigned> disjointness = {})
      : length_(tuple_length), disjointness_(disjointness) {}

  unsigned tuple_length() const { return length_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  std::span<const Vertex> operator[](std::size_t i) const { return {data_.data() + i * length_, length_}; }
  void push_back(std::span<const Vertex> tuple);
  void reserve(std::size_t n) { data_.reserve(n * length_); }

  // Declared level: any two tuples share at most disjointness-1 vertices.
  std::optional<unsigned> disjointness() const { return disjointness_; }
  void set_disjointness(std::optional<unsigned> l) { disjointness_ = l; }

  friend bool operator==(const CopyFamily&, const CopyFamily&) = default;

 private:
  unsigned length_ = 0;
  std::size_t count_ = 0;
  std::vector<Vertex> data_;
  std::optional<unsigned> disjointness_;
};

// Parts have size n; value a in [1, n] of part j is vertex j*n + a - 1.
inline Vertex part_vertex(unsigned part, Vertex n, Vertex value) { return part * n + value - 1; }

struct InstanceMeta {
  std::uint64_t seed = 0;
  unsigned s = 0;
  unsigned r = 0;
  unsigned l = 0;
  std::uint64_t C = 0;
  std::int64_t b_m = 0;
  unsigned b_t = 0;
  std::vector<std::int64_t> b_elements;
  // permutation[i] is the target vertex that played role i during the build.
  std::vector<Vertex> permutation;
  std::string path;
  unsigned attempts = 0;
  // Placed copies are canonical copies of this graph; vertex j <-> part j.
  KGraph target;

  friend bool operator==(const InstanceMeta&, const InstanceMeta&) = default;
};

struct PartiteInstance {
  KGraph graph;
  Vertex n = 0;
  unsigned num_parts = 0;
  CopyFamily placed;
  InstanceMeta meta;

  unsigned part_of(Vertex v) const { return v / n; }
  Vertex value_of(Vertex v) const { return v % n + 1; }
  // Collapses part j onto vertex j.
  VertexMap part_collapse() const;

  friend bool operator==(const PartiteInstance&, const PartiteInstance&) = default;
};

// Edges of `target` carried by a tuple whose coordinate j plays vertex j.
std::vector<Edge> copy_edges(const KGraph& target, std::span<const Vertex> tuple);

// Union of the copies' edges on `num_vertices` vertices, duplicates merged.
KGraph union_of_copies(const KGraph& target, const CopyFamily& copies, Vertex num_vertices);

// Instance JSON with a fixed key order:
// {schema, k, n, parts, edges, placed:[{tuple}], meta:{...}}.
std::string to_json(const PartiteInstance& inst);
PartiteInstance instance_from_json(std::string_view json);

inline constexpr std::string_view kInstanceSchema = "hrlb.instance/1";

}  // namespace hrlb

#endif  // HRLB_INSTANCE_HPP
