#include "usogrid/arrangement2d.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "usogrid/admissibility.hpp"

namespace uso {

Arrangement2D Arrangement2D::checked(BlockSignotope base) {
  if (base.chi.rank() != 3 || base.partition.count() != 2)
    throw std::invalid_argument("Arrangement2D: need a rank-3 signotope with two blocks");
  return Arrangement2D{std::move(base)};
}

std::pair<int, int> crossing_index(const Arrangement2D& a, int p, int q) {
  const int r = a.reds(), n = a.n();
  if (p < 1 || p > r) throw std::invalid_argument("crossing_index: p must be a red label");
  if (q <= r || q > n) throw std::invalid_argument("crossing_index: q must be a blue label");
  const Signotope& chi = a.base.chi;
  int x = 0;
  for (int qq = r + 1; qq <= n; ++qq) {
    if (qq == q) continue;
    if (qq < q)
      x += chi.sign({p, qq, q}) > 0;  // p crosses qq before q
    else
      x += chi.sign({p, q, qq}) < 0;
  }
  int y = 0;
  for (int pp = 1; pp <= r; ++pp) {
    if (pp == p) continue;
    if (pp < p)
      y += chi.sign({pp, p, q}) > 0;  // q crosses pp before p
    else
      y += chi.sign({p, pp, q}) < 0;
  }
  return {x, y};
}

GridOrientation uso_from_arrangement(const Arrangement2D& a) {
  const int r = a.reds(), b = a.blues();
  RefinedIndex rf{GridShape{{b, r}}, std::vector<std::vector<int>>(b * r)};
  const Grid& g = grid_for(rf.shape);
  for (int i = 1; i <= b; ++i)
    for (int j = 1; j <= r; ++j) {
      auto [x, y] = crossing_index(a, j, r + i);
      rf.values[g.vertex_of({i, j})] = {x, y};
    }
  return uso_from_refined_index(rf);
}

int curve_crossings(const std::vector<int>& f, const std::vector<int>& g) {
  int crossings = 0;
  bool above = f[0] > g[0];
  for (size_t t = 1; t < f.size(); ++t) {
    if (f[t] == g[t]) throw std::logic_error("curve_crossings: curves share a point");
    const bool now = f[t] > g[t];
    if (now != above) ++crossings;
    above = now;
  }
  return crossings;
}

CurveFamily curves_from_uso(const GridOrientation& o) {
  if (o.shape.dims() != 2) throw std::invalid_argument("curves_from_uso: need a 2-dim shape");
  if (!is_uso(o)) throw std::invalid_argument("curves_from_uso: input is not a USO");
  const int b = o.shape.sizes[0], r = o.shape.sizes[1];
  const Grid& g = grid_for(o.shape);
  const RefinedIndex rf = refined_index(o);

  CurveFamily f;
  f.nblue = b;
  f.nred = r;
  f.blue_row_at_col.assign(b, std::vector<int>(r, -1));
  f.red_col_at_row.assign(r, std::vector<int>(b, -1));
  f.blue_source_row.assign(b, 0);
  f.red_source_col.assign(r, 0);

  std::vector<std::vector<int>> row_curve(b, std::vector<int>(r, -1));  // per USO row: col -> row
  std::vector<std::vector<int>> col_curve(r, std::vector<int>(b, -1));  // per USO col: row -> col
  for (int i = 1; i <= b; ++i)
    for (int j = 1; j <= r; ++j) {
      const auto& v = rf.values[g.vertex_of({i, j})];
      row_curve[i - 1][v[1]] = v[0];
      col_curve[j - 1][v[0]] = v[1];
    }
  for (int i = 1; i <= b; ++i) {
    const int k = row_curve[i - 1][0] + 1;  // contains point (k-1, 0)
    f.blue_row_at_col[k - 1] = row_curve[i - 1];
    f.blue_source_row[k - 1] = i;
  }
  for (int j = 1; j <= r; ++j) {
    const int k = r - col_curve[j - 1][0];  // contains point (0, r-k)
    f.red_col_at_row[k - 1] = col_curve[j - 1];
    f.red_source_col[k - 1] = j;
  }
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (curve_crossings(f.blue_row_at_col[i], f.blue_row_at_col[j]) > 1)
        throw std::invalid_argument("curves_from_uso: two blue curves cross twice (not admissible)");
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (curve_crossings(f.red_col_at_row[i], f.red_col_at_row[j]) > 1)
        throw std::invalid_argument("curves_from_uso: two red curves cross twice (not admissible)");
  return f;
}

std::pair<Poset, Poset> crossing_posets(const CurveFamily& f) {
  Poset blue{f.nblue, {}};
  for (int i = 1; i <= f.nblue; ++i)
    for (int j = i + 1; j <= f.nblue; ++j)
      if (curve_crossings(f.blue_row_at_col[i - 1], f.blue_row_at_col[j - 1]) > 0)
        blue.relations.emplace_back(i, j);
  Poset red{f.nred, {}};
  for (int i = 1; i <= f.nred; ++i)
    for (int j = i + 1; j <= f.nred; ++j)
      if (curve_crossings(f.red_col_at_row[i - 1], f.red_col_at_row[j - 1]) > 0)
        red.relations.emplace_back(i, j);
  return {blue, red};
}

namespace {

bool extends(const std::vector<int>& order, const Poset& p) {
  if (static_cast<int>(order.size()) != p.n) return false;
  std::vector<int> pos(p.n + 1, -1);
  for (int t = 0; t < p.n; ++t) {
    if (order[t] < 1 || order[t] > p.n || pos[order[t]] != -1) return false;
    pos[order[t]] = t;
  }
  for (auto& [a, b] : p.relations)
    if (pos[a] > pos[b]) return false;
  return true;
}

// lexicographically first completion of the 0 entries into a valid signotope
std::optional<Signotope> complete_sign_map(SignMap partial) {
  std::vector<int> unknown;
  for (size_t t = 0; t < partial.signs.size(); ++t)
    if (partial.signs[t] == 0) unknown.push_back(static_cast<int>(t));
  // per unknown position: the (rank+1)-subsets decided by it (all other
  // facets either known or earlier unknowns)
  const auto bigs = k_subsets(partial.n, partial.rank + 1);
  std::vector<int> unknown_pos(partial.signs.size(), -1);
  for (size_t u = 0; u < unknown.size(); ++u) unknown_pos[unknown[u]] = static_cast<int>(u);
  std::vector<std::vector<std::vector<int>>> checks(unknown.size());
  std::vector<std::vector<int>> fixed_checks;
  for (const auto& a : bigs) {
    std::vector<int> facets;
    int last_unknown = -1;
    for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
      const int rank = subset_rank(partial.n, omit_ith(a, i));
      facets.push_back(rank);
      if (unknown_pos[rank] >= 0) last_unknown = std::max(last_unknown, unknown_pos[rank]);
    }
    if (last_unknown < 0)
      fixed_checks.push_back(std::move(facets));
    else
      checks[last_unknown].push_back(std::move(facets));
  }
  auto changes = [&](const std::vector<int>& facets) {
    int c = 0;
    Sign prev = 0;
    for (int idx : facets) {
      const Sign v = partial.signs[idx];
      if (prev != 0 && v != prev) ++c;
      prev = v;
    }
    return c;
  };
  for (const auto& facets : fixed_checks)
    if (changes(facets) > 1) return std::nullopt;

  std::optional<Signotope> found;
  auto rec = [&](auto&& self, size_t u) -> void {
    if (found) return;
    if (u == unknown.size()) {
      found = Signotope::checked(partial);
      return;
    }
    for (Sign v : {Sign(-1), Sign(1)}) {
      partial.signs[unknown[u]] = v;
      bool ok = true;
      for (const auto& facets : checks[u])
        if (changes(facets) > 1) {
          ok = false;
          break;
        }
      if (ok) self(self, u + 1);
      if (found) return;
    }
    partial.signs[unknown[u]] = 0;
  };
  rec(rec, 0);
  return found;
}

}  // namespace

Arrangement2D arrangement_from(const GridOrientation& o, const std::vector<int>& ext_blue,
                               const std::vector<int>& ext_red) {
  const CurveFamily f = curves_from_uso(o);
  const auto [poset_blue, poset_red] = crossing_posets(f);
  if (!extends(ext_blue, poset_blue) || !extends(ext_red, poset_red))
    throw std::invalid_argument("arrangement_from: extensions not compatible with the crossing posets");

  const int b = f.nblue, r = f.nred, n = r + b;
  const Grid& g = grid_for(o.shape);
  const RefinedIndex rf = refined_index(o);

  // label assignment: t-th curve in the extension order gets the t-th label
  std::vector<int> row_of_label(n + 1, 0), col_of_label(n + 1, 0);
  for (int t = 0; t < b; ++t) row_of_label[r + 1 + t] = f.blue_source_row[ext_blue[t] - 1];
  for (int t = 0; t < r; ++t) col_of_label[1 + t] = f.red_source_col[ext_red[t] - 1];
  auto point = [&](int red_label, int blue_label) -> const std::vector<int>& {
    return rf.values[g.vertex_of({row_of_label[blue_label], col_of_label[red_label]})];
  };

  SignMap m{n, 3, std::vector<Sign>(static_cast<size_t>(binomial(n, 3)), 0)};
  for (const auto& tri : k_subsets(n, 3)) {
    const int reds_in = static_cast<int>(std::count_if(tri.begin(), tri.end(), [&](int z) { return z <= r; }));
    Sign s = 0;
    if (reds_in == 2)
      s = point(tri[0], tri[2])[1] < point(tri[1], tri[2])[1] ? 1 : -1;
    else if (reds_in == 1)
      s = point(tri[0], tri[1])[0] < point(tri[0], tri[2])[0] ? 1 : -1;
    if (s != 0) m.signs[subset_rank(n, tri)] = s;
  }
  std::optional<Signotope> chi = complete_sign_map(std::move(m));
  if (!chi)
    throw std::runtime_error("arrangement_from: no monochromatic completion exists");
  return Arrangement2D::checked(BlockSignotope::checked(std::move(*chi), BlockPartition{{r, b}}));
}

std::pair<std::vector<int>, std::vector<int>> curve_identifications(const Arrangement2D& a) {
  const int r = a.reds(), b = a.blues();
  const GridOrientation o = uso_from_arrangement(a);
  const CurveFamily f = curves_from_uso(o);
  std::vector<int> id_blue(b), id_red(r);
  for (int k = 1; k <= b; ++k) id_blue[k - 1] = r + f.blue_source_row[k - 1];
  for (int k = 1; k <= r; ++k) id_red[k - 1] = f.red_source_col[k - 1];
  return {id_blue, id_red};
}

std::pair<std::vector<int>, std::vector<int>> read_extensions(const Arrangement2D& a) {
  auto [id_blue, id_red] = curve_identifications(a);
  const int b = a.blues(), r = a.reds();
  std::vector<int> ext_blue(b), ext_red(r);
  for (int k = 1; k <= b; ++k) ext_blue[id_blue[k - 1] - r - 1] = k;
  for (int k = 1; k <= r; ++k) ext_red[id_red[k - 1] - 1] = k;
  return {ext_blue, ext_red};
}

GridDrawing grid_drawing(const Arrangement2D& a) {
  const int r = a.reds(), b = a.blues(), n = r + b;
  GridDrawing d;
  d.rows = b;
  d.cols = r;
  d.crossing_at.assign(b, std::vector<std::pair<int, int>>(r, {0, 0}));
  d.red_col_at_row.assign(r, std::vector<int>(b, -1));
  d.blue_row_at_col.assign(b, std::vector<int>(r, -1));
  for (int p = 1; p <= r; ++p)
    for (int q = r + 1; q <= n; ++q) {
      auto [x, y] = crossing_index(a, p, q);
      if (d.crossing_at[x][y] != std::pair<int, int>{0, 0})
        throw std::logic_error("grid_drawing: crossing placement is not bijective");
      d.crossing_at[x][y] = {p, q};
      d.red_col_at_row[p - 1][x] = y;
      d.blue_row_at_col[q - r - 1][y] = x;
    }
  return d;
}

BijectionReport bijection_report(int r, int b) {
  const int n = r + b;
  const std::vector<Signotope> sigs = enumerate_signotopes(n, 3);

  std::vector<KSubset> mono;
  for (const auto& tri : k_subsets(n, 3))
    if (tri.back() <= r || tri.front() > r) mono.push_back(tri);

  // flip classes over the enumerated signotopes
  std::map<std::vector<Sign>, int> class_of;
  int nclasses = 0;
  for (const auto& chi : sigs) {
    if (class_of.count(chi.map().signs)) continue;
    for (const auto& member : flip_class(chi, mono)) class_of[member.map().signs] = nclasses;
    ++nclasses;
  }

  BijectionReport report;
  report.flip_classes = nclasses;

  for (const auto& chi : sigs) {
    const Arrangement2D a =
        Arrangement2D::checked(BlockSignotope::checked(chi, BlockPartition{{r, b}}));
    const GridOrientation o = uso_from_arrangement(a);
    auto [ext_blue, ext_red] = read_extensions(a);
    const Arrangement2D rebuilt = arrangement_from(o, ext_blue, ext_red);
    if (class_of.at(rebuilt.base.chi.map().signs) != class_of.at(chi.map().signs))
      ++report.roundtrip_failures;
  }

  const GridShape shape{{b, r}};
  std::set<std::vector<uint8_t>> reps;
  enumerate_usos(shape, 48, [&](const GridOrientation& o) {
    if (!is_admissible(o)) return true;
    ++report.admissible_labeled;
    if (!reps.insert(canonical_form_fixed_axes(o)).second) return true;
    const CurveFamily f = curves_from_uso(o);
    const auto [pb, pr] = crossing_posets(f);
    report.extension_sum += static_cast<long long>(linear_extensions(pb).size()) *
                            static_cast<long long>(linear_extensions(pr).size());
    return true;
  });
  report.uso_classes = static_cast<long long>(reps.size());
  return report;
}

std::string emit_svg(const GridDrawing& d, const SvgStyle& style) {
  const int cell = style.cell, margin = style.margin, stub = style.stub;
  auto px = [&](int col) { return margin + col * cell; };
  auto py = [&](int row) { return margin + row * cell; };
  const int width = 2 * margin + (d.cols - 1) * cell;
  const int height = 2 * margin + (d.rows - 1) * cell;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <rect x=\"" << px(0) - cell / 2 << "\" y=\"" << py(0) - cell / 2 << "\" width=\""
      << (d.cols - 1) * cell + cell << "\" height=\"" << (d.rows - 1) * cell + cell
      << "\" fill=\"#f2f3f4\" stroke=\"none\"/>\n";

  auto polyline = [&](const std::vector<std::pair<int, int>>& pts, const char* color) {
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << pts[i].first << ',' << pts[i].second;
    }
    out << "\"/>\n";
  };
  auto label = [&](int x, int y, const char* color, int text) {
    out << "  <text x=\"" << x << "\" y=\"" << y << "\" fill=\"" << color
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" << text
        << "</text>\n";
  };

  // red pseudolines: top to bottom through one point per row
  for (int p = 1; p <= d.cols; ++p) {
    const auto& cols = d.red_col_at_row[p - 1];
    std::vector<std::pair<int, int>> pts;
    pts.push_back({px(cols[0]), py(0) - stub});
    for (int row = 0; row < d.rows; ++row) pts.push_back({px(cols[row]), py(row)});
    pts.push_back({px(cols[d.rows - 1]), py(d.rows - 1) + stub});
    polyline(pts, style.red);
    label(pts.front().first, pts.front().second - 8, style.red, p);
    label(pts.back().first, pts.back().second + 16, style.red, p);
  }
  // blue pseudolines: left to right through one point per column
  for (int k = 1; k <= d.rows; ++k) {
    const auto& rows = d.blue_row_at_col[k - 1];
    std::vector<std::pair<int, int>> pts;
    pts.push_back({px(0) - stub, py(rows[0])});
    for (int col = 0; col < d.cols; ++col) pts.push_back({px(col), py(rows[col])});
    pts.push_back({px(d.cols - 1) + stub, py(rows[d.cols - 1])});
    polyline(pts, style.blue);
    label(pts.front().first - 10, pts.front().second + 5, style.blue, d.cols + k);
    label(pts.back().first + 10, pts.back().second + 5, style.blue, d.cols + k);
  }
  for (int row = 0; row < d.rows; ++row)
    for (int col = 0; col < d.cols; ++col)
      out << "  <circle cx=\"" << px(col) << "\" cy=\"" << py(row) << "\" r=\"" << style.point_radius
          << "\" fill=\"" << style.point << "\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace uso
