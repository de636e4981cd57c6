// usogrid: validate, induce, sweep, reproduce the violation tables, run the
// counting identity, and draw arrangements.
//
// Exit codes: 0 success, 1 property/check failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "usogrid/admissibility.hpp"
#include "usogrid/appendix.hpp"
#include "usogrid/arrangement2d.hpp"
#include "usogrid/json_io.hpp"
#include "usogrid/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

int cmd_validate(const std::string& input) {
  const json j = json::parse(read_file(input));
  bool all_ok = true;
  auto report = [&](const std::string& name, bool value) {
    std::cout << "  " << name << ": " << (value ? "yes" : "NO") << "\n";
    all_ok = all_ok && value;
  };

  if (j.contains("signotope") && j.contains("blocks")) {
    std::cout << "block signotope (n=" << j["signotope"]["n"] << ")\n";
    const uso::SignMap m = uso::SignMap::from_sign_string(
        j["signotope"]["n"].get<int>(), j["signotope"]["rank"].get<int>(),
        j["signotope"]["signs"].get<std::string>());
    report("monotonicity", uso::is_signotope(m));
    if (all_ok) {
      const auto b = uso::block_signotope_from_json(j);
      report("block partition consistent", true);
      const auto o = uso::induced_orientation(b);
      report("induced orientation is a USO", uso::is_uso(o));
      report("induced orientation is acyclic", uso::is_acyclic(o));
    }
  } else if (j.contains("signs")) {
    std::cout << "signotope (n=" << j["n"] << ", rank=" << j["rank"] << ")\n";
    const uso::SignMap m = uso::SignMap::from_sign_string(
        j["n"].get<int>(), j["rank"].get<int>(), j["signs"].get<std::string>());
    report("monotonicity", uso::is_signotope(m));
  } else if (j.contains("shape")) {
    const auto o = uso::orientation_from_json(j);
    std::cout << "grid orientation (shape";
    for (int s : o.shape.sizes) std::cout << " " << s;
    std::cout << ")\n";
    const bool uso_ok = uso::is_uso(o);
    report("unique sink orientation", uso_ok);
    report("acyclic", uso::is_acyclic(o));
    if (uso_ok) report("admissible", uso::is_admissible(o));
  } else {
    throw std::runtime_error("unrecognized input format");
  }
  return all_ok ? 0 : 1;
}

int cmd_induce(const std::string& input, const std::string& output) {
  const auto b = uso::block_signotope_from_json(json::parse(read_file(input)));
  const auto o = uso::induced_orientation(b);
  const bool uso_ok = uso::is_uso(o);
  std::cout << "USO: " << (uso_ok ? "yes" : "NO") << "\n";
  std::cout << "acyclic: " << (uso::is_acyclic(o) ? "yes" : "NO") << "\n";
  if (uso_ok) std::cout << "admissible: " << (uso::is_admissible(o) ? "yes" : "no") << "\n";
  if (!output.empty()) {
    const json out = uso_ok ? uso::orientation_to_rf_json(o) : uso::orientation_to_edges_json(o);
    write_file(output, out.dump(2) + "\n");
    std::cout << "wrote " << output << "\n";
  }
  return uso_ok ? 0 : 1;
}

int cmd_sweep(const uso::SweepConfig& config, const std::string& cert_path) {
  const uso::SweepResult r = uso::sweep_block_signotopes(config);
  std::cout << "processed: " << r.processed
            << (r.exhaustive ? " (exhaustive)" : " (budget exhausted; seeded samples)") << "\n";
  std::cout << "not USO: " << r.non_uso << "\n";
  std::cout << "cyclic: " << r.cyclic << "\n";
  std::cout << "refined-index mismatches: " << r.rf_mismatch << "\n";
  std::cout << "non-admissible: " << r.non_admissible << "\n";
  const std::optional<uso::Signotope>& cert =
      r.non_uso_cert ? r.non_uso_cert
                     : (r.cyclic_cert ? r.cyclic_cert
                                      : (r.rf_cert ? r.rf_cert : r.non_admissible_cert));
  if (cert && !cert_path.empty()) {
    json j = uso::to_json(uso::BlockSignotope::checked(*cert, uso::BlockPartition{config.blocks}));
    write_file(cert_path, j.dump(2) + "\n");
    std::cout << "certificate written to " << cert_path << "\n";
  }
  return (r.non_uso || r.cyclic || r.rf_mismatch) ? 1 : 0;
}

int cmd_appendix(const std::string& golden_dir, const std::string& output_dir, bool write_golden) {
  const std::array<const char*, 3> names = {"table_nac1", "table_nac2", "table_adm_not_induced"};
  std::array<std::string, 3> golden;
  for (int i = 0; i < 3; ++i)
    golden[i] = read_file(fs::path(golden_dir) / (std::string(names[i]) + ".txt"));

  const uso::PinnedCubes pinned = uso::pin_base_labelings(golden[0], golden[1], golden[2]);
  const std::array<const uso::GridOrientation*, 3> bases = {&pinned.nac1, &pinned.nac2,
                                                            &pinned.adm_not_induced};
  bool all_equal = true;
  for (int i = 0; i < 3; ++i) {
    const auto rows = uso::reproduce_table(*bases[i]);
    const std::string text = uso::format_table(rows);
    const std::string jtext = uso::table_to_json(rows).dump(2) + "\n";
    const fs::path dir = write_golden ? fs::path(golden_dir) : fs::path(output_dir);
    write_file(dir / (std::string(names[i]) + ".txt"), text);
    write_file(dir / (std::string(names[i]) + ".json"), jtext);
    const bool same = text == golden[i];
    all_equal = all_equal && same;
    std::cout << names[i] << ": " << rows.size() << " rows, "
              << (same ? "matches golden" : "DIFFERS from golden") << "\n";
    if (!same) {
      std::istringstream a(text), b(golden[i]);
      std::string la, lb;
      int line = 0;
      while (std::getline(a, la) && std::getline(b, lb)) {
        ++line;
        if (la != lb) {
          std::cout << "  first diff at line " << line << ":\n    regenerated: " << la
                    << "\n    golden:      " << lb << "\n";
          break;
        }
      }
    }
  }
  return all_equal ? 0 : 1;
}

int cmd_bijection(int r, int b) {
  if (r < 1 || b < 1 || r + b > 7) throw std::runtime_error("bijection: need r,b >= 1 and r+b <= 7");
  const uso::BijectionReport rep = uso::bijection_report(r, b);
  std::cout << "flip classes of rank-3 two-block signotopes: " << rep.flip_classes << "\n";
  std::cout << "admissible USOs (labeled): " << rep.admissible_labeled
            << ", per-axis classes: " << rep.uso_classes << "\n";
  std::cout << "sum of linear-extension products: " << rep.extension_sum << "\n";
  std::cout << "roundtrip failures: " << rep.roundtrip_failures << "\n";
  std::cout << (rep.ok() ? "counting identity holds" : "MISMATCH") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_draw(const std::string& input, const std::string& output) {
  const auto b = uso::block_signotope_from_json(json::parse(read_file(input)));
  const auto a = uso::Arrangement2D::checked(b);
  write_file(output, uso::emit_svg(uso::grid_drawing(a)));
  std::cout << "wrote " << output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unique sink orientations of grids from block signotopes"};
  app.require_subcommand(1);

  std::string input, output, cert_path;
  std::string golden_dir = "data/golden", output_dir = "appendix_out";
  bool write_golden = false;
  uso::SweepConfig sweep_config;
  int br = 2, bb = 2;

  auto* validate = app.add_subcommand("validate", "check predicates of a JSON input");
  validate->add_option("--input", input)->required();

  auto* induce = app.add_subcommand("induce", "orientation induced by a block signotope");
  induce->add_option("--input", input)->required();
  induce->add_option("--output", output);

  auto* sweep = app.add_subcommand("sweep", "check every induced orientation of a corpus");
  sweep->add_option("--n", sweep_config.n)->required();
  sweep->add_option("--rank", sweep_config.rank)->required();
  sweep->add_option("--blocks", sweep_config.blocks, "block sizes a,b,c")->required()->delimiter(',');
  sweep->add_option("--budget", sweep_config.budget);
  sweep->add_option("--samples", sweep_config.samples);
  sweep->add_option("--seed", sweep_config.seed);
  sweep->add_option("--jobs", sweep_config.jobs);
  sweep->add_option("--output", cert_path, "certificate file on failure");

  auto* appendix = app.add_subcommand("appendix", "regenerate the three violation tables");
  appendix->add_option("--golden-dir", golden_dir);
  appendix->add_option("--output-dir", output_dir);
  appendix->add_flag("--write-golden", write_golden, "rewrite the golden files in place");

  auto* bijection = app.add_subcommand("bijection", "counting identity for r red, b blue");
  bijection->add_option("--r", br)->required();
  bijection->add_option("--b", bb)->required();

  auto* draw = app.add_subcommand("draw", "grid drawing of an arrangement as SVG");
  draw->add_option("--input", input)->required();
  draw->add_option("--output", output)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(input);
    if (induce->parsed()) return cmd_induce(input, output);
    if (sweep->parsed()) return cmd_sweep(sweep_config, cert_path);
    if (appendix->parsed()) return cmd_appendix(golden_dir, output_dir, write_golden);
    if (bijection->parsed()) return cmd_bijection(br, bb);
    if (draw->parsed()) return cmd_draw(input, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
