#include "hrlb/instance.hpp"

#include <algorithm>

#include "hrlb/error.hpp"
#include "json.hpp"

namespace hrlb {

namespace {

using ojson = nlohmann::ordered_json;

ojson kgraph_json(const KGraph& f) {
  ojson j;
  j["k"] = f.k();
  j["v"] = f.num_vertices();
  j["edges"] = f.edges();
  return j;
}

KGraph kgraph_of(const ojson& j) {
  return KGraph(j.at("k").get<unsigned>(), j.at("v").get<Vertex>(), j.at("edges").get<std::vector<Edge>>());
}

}  // namespace

void CopyFamily::push_back(std::span<const Vertex> tuple) {
  if (tuple.size() != length_) throw ParameterError("CopyFamily: tuple length mismatch");
  data_.insert(data_.end(), tuple.begin(), tuple.end());
  ++count_;
}

VertexMap PartiteInstance::part_collapse() const {
  VertexMap phi{static_cast<Vertex>(num_parts), std::vector<Vertex>(graph.num_vertices())};
  for (Vertex v = 0; v < graph.num_vertices(); ++v) phi.image[v] = part_of(v);
  return phi;
}

std::vector<Edge> copy_edges(const KGraph& target, std::span<const Vertex> tuple) {
  if (tuple.size() != target.num_vertices()) throw ParameterError("copy_edges: tuple does not match target");
  std::vector<Edge> out;
  out.reserve(target.num_edges());
  for (auto e : target.edge_range()) {
    Edge img;
    img.reserve(e.size());
    for (Vertex u : e) img.push_back(tuple[u]);
    std::sort(img.begin(), img.end());
    out.push_back(std::move(img));
  }
  return out;
}

KGraph union_of_copies(const KGraph& target, const CopyFamily& copies, Vertex num_vertices) {
  std::vector<Edge> edges;
  edges.reserve(copies.size() * target.num_edges());
  for (std::size_t i = 0; i < copies.size(); ++i) {
    auto es = copy_edges(target, copies[i]);
    edges.insert(edges.end(), std::make_move_iterator(es.begin()), std::make_move_iterator(es.end()));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return KGraph(target.k(), num_vertices, std::move(edges));
}

std::string to_json(const PartiteInstance& inst) {
  ojson j;
  j["schema"] = kInstanceSchema;
  j["k"] = inst.graph.k();
  j["n"] = inst.n;
  ojson parts = ojson::array();
  for (unsigned p = 0; p < inst.num_parts; ++p) {
    std::vector<Vertex> ids(inst.n);
    for (Vertex a = 1; a <= inst.n; ++a) ids[a - 1] = part_vertex(p, inst.n, a);
    parts.push_back(std::move(ids));
  }
  j["parts"] = std::move(parts);
  j["edges"] = inst.graph.edges();
  ojson placed = ojson::array();
  for (std::size_t i = 0; i < inst.placed.size(); ++i) {
    auto t = inst.placed[i];
    ojson entry;
    entry["tuple"] = std::vector<Vertex>(t.begin(), t.end());
    placed.push_back(std::move(entry));
  }
  j["placed"] = std::move(placed);
  if (auto l = inst.placed.disjointness()) j["placed_disjointness"] = *l;

  const auto& m = inst.meta;
  ojson meta;
  meta["seed"] = m.seed;
  meta["s"] = m.s;
  meta["r"] = m.r;
  meta["l"] = m.l;
  meta["C"] = m.C;
  ojson b;
  b["m"] = m.b_m;
  b["t"] = m.b_t;
  b["elements"] = m.b_elements;
  meta["B"] = std::move(b);
  meta["permutation"] = m.permutation;
  meta["path"] = m.path;
  meta["attempts"] = m.attempts;
  meta["target"] = kgraph_json(m.target);
  j["meta"] = std::move(meta);
  return j.dump();
}

PartiteInstance instance_from_json(std::string_view json) {
  try {
    auto j = ojson::parse(json);
    if (j.at("schema").get<std::string>() != kInstanceSchema)
      throw ParseError("instance JSON: unsupported schema " + j.at("schema").get<std::string>());
    PartiteInstance inst;
    inst.n = j.at("n").get<Vertex>();
    inst.num_parts = static_cast<unsigned>(j.at("parts").size());
    const auto k = j.at("k").get<unsigned>();
    inst.graph = KGraph(k, inst.n * inst.num_parts, j.at("edges").get<std::vector<Edge>>());

    const auto& m = j.at("meta");
    inst.meta.seed = m.at("seed").get<std::uint64_t>();
    inst.meta.s = m.at("s").get<unsigned>();
    inst.meta.r = m.at("r").get<unsigned>();
    inst.meta.l = m.at("l").get<unsigned>();
    inst.meta.C = m.at("C").get<std::uint64_t>();
    inst.meta.b_m = m.at("B").at("m").get<std::int64_t>();
    inst.meta.b_t = m.at("B").at("t").get<unsigned>();
    inst.meta.b_elements = m.at("B").at("elements").get<std::vector<std::int64_t>>();
    inst.meta.permutation = m.at("permutation").get<std::vector<Vertex>>();
    inst.meta.path = m.at("path").get<std::string>();
    inst.meta.attempts = m.at("attempts").get<unsigned>();
    inst.meta.target = kgraph_of(m.at("target"));

    std::optional<unsigned> level;
    if (j.contains("placed_disjointness")) level = j.at("placed_disjointness").get<unsigned>();
    inst.placed = CopyFamily(inst.meta.target.num_vertices(), level);
    for (const auto& entry : j.at("placed")) inst.placed.push_back(entry.at("tuple").get<std::vector<Vertex>>());
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
}

}  // namespace hrlb
