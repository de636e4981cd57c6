#include "usogrid/json_io.hpp"

#include <stdexcept>

namespace uso {

using nlohmann::json;

json to_json(const Signotope& chi) {
  return json{{"n", chi.n()}, {"rank", chi.rank()}, {"signs", chi.map().sign_string()}};
}

Signotope signotope_from_json(const json& j) {
  return Signotope::checked(
      SignMap::from_sign_string(j.at("n").get<int>(), j.at("rank").get<int>(),
                                j.at("signs").get<std::string>()));
}

json to_json(const BlockSignotope& b) {
  return json{{"signotope", to_json(b.chi)}, {"blocks", b.partition.sizes}};
}

BlockSignotope block_signotope_from_json(const json& j) {
  return BlockSignotope::checked(signotope_from_json(j.at("signotope")),
                                 BlockPartition{j.at("blocks").get<std::vector<int>>()});
}

namespace {

json rf_nested(const RefinedIndex& rf, const Grid& g, std::vector<int>& prefix, int axis) {
  json out = json::array();
  if (axis == rf.shape.dims()) return out;  // unreachable for dims >= 1
  for (int v = 1; v <= rf.shape.sizes[axis]; ++v) {
    prefix.push_back(v);
    if (axis + 1 == rf.shape.dims())
      out.push_back(rf.values[g.vertex_of(prefix)]);
    else
      out.push_back(rf_nested(rf, g, prefix, axis + 1));
    prefix.pop_back();
  }
  return out;
}

void rf_flatten(const json& node, const GridShape& shape, const Grid& g, std::vector<int>& prefix,
                int axis, RefinedIndex& rf) {
  if (!node.is_array() || static_cast<int>(node.size()) != shape.sizes[axis])
    throw std::invalid_argument("orientation json: rf array shape mismatch");
  for (int v = 1; v <= shape.sizes[axis]; ++v) {
    prefix.push_back(v);
    const json& child = node[v - 1];
    if (axis + 1 == shape.dims()) {
      auto vals = child.get<std::vector<int>>();
      if (static_cast<int>(vals.size()) != shape.dims())
        throw std::invalid_argument("orientation json: rf entry arity mismatch");
      rf.values[g.vertex_of(prefix)] = std::move(vals);
    } else {
      rf_flatten(child, shape, g, prefix, axis + 1, rf);
    }
    prefix.pop_back();
  }
}

}  // namespace

json orientation_to_rf_json(const GridOrientation& o) {
  if (!is_uso(o))
    throw std::invalid_argument("orientation_to_rf_json: refined-index form is valid only for USOs");
  const RefinedIndex rf = refined_index(o);
  const Grid& g = grid_for(o.shape);
  std::vector<int> prefix;
  return json{{"shape", o.shape.sizes}, {"rf", rf_nested(rf, g, prefix, 0)}};
}

json orientation_to_edges_json(const GridOrientation& o) {
  const Grid& g = grid_for(o.shape);
  json edges = json::array();
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    const int tail = o.dir[e] ? edge.a : edge.b;
    const int head = o.dir[e] ? edge.b : edge.a;
    edges.push_back(json::array({g.coords[tail], g.coords[head]}));
  }
  return json{{"shape", o.shape.sizes}, {"edges", edges}};
}

GridOrientation orientation_from_json(const json& j) {
  GridShape shape{j.at("shape").get<std::vector<int>>()};
  const Grid& g = grid_for(shape);
  if (j.contains("rf")) {
    RefinedIndex rf{shape, std::vector<std::vector<int>>(g.nverts)};
    std::vector<int> prefix;
    rf_flatten(j.at("rf"), shape, g, prefix, 0, rf);
    return uso_from_refined_index(rf);
  }
  if (!j.contains("edges")) throw std::invalid_argument("orientation json: need 'rf' or 'edges'");
  GridOrientation o{shape, std::vector<uint8_t>(g.edges.size(), 0)};
  std::vector<char> seen(g.edges.size(), 0);
  for (const auto& entry : j.at("edges")) {
    const auto tail_c = entry.at(0).get<std::vector<int>>();
    const auto head_c = entry.at(1).get<std::vector<int>>();
    const int tail = g.vertex_of(tail_c), head = g.vertex_of(head_c);
    const int lo = std::min(tail, head), hi = std::max(tail, head);
    int eid = -1;
    for (auto [cand, other] : g.incident[lo])
      if (other == hi) {
        eid = cand;
        break;
      }
    if (eid < 0) throw std::invalid_argument("orientation json: pair is not a grid edge");
    if (seen[eid]) throw std::invalid_argument("orientation json: duplicate edge");
    seen[eid] = 1;
    o.dir[eid] = (head == hi) ? 1 : 0;
  }
  for (char s : seen)
    if (!s) throw std::invalid_argument("orientation json: not every grid edge is oriented");
  return o;
}

json table_to_json(const std::vector<ViolationRecord>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    std::string subset;
    for (int x : row.subset) subset += std::to_string(x);
    out.push_back(json{{"pi", row.pi.images},
                       {"subset", subset},
                       {"sequence", sequence_string(row.sequence)}});
  }
  return out;
}

}  // namespace uso
