#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "shuffle/cache.hpp"
#include "shuffle/roots.hpp"
#include "shuffle/tables.hpp"
#include "shuffle/verify.hpp"

namespace {

using namespace shuffle;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;

struct RunConfig {
  int n = 0;
  std::string family = "columns";
  std::string format = "tsv";
  std::string output;
  std::string type;
  std::string orbit;
  std::vector<std::string> suites;
  std::string report;
  std::string cache_dir;
  int threads = 1;
  int samples = 20;
  std::uint64_t seed = 1;
  bool allow_large = false;
  bool allow_long = false;
};

int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  write_file_atomic(cfg.output, text);
  return kExitOk;
}

int cmd_type_a(const RunConfig& cfg) {
  if (cfg.n < 1) throw CLI::ValidationError("--n", "n must be at least 1");
  if (cfg.n > 6 && !cfg.allow_large) {
    std::cerr << "n > 6 needs --allow-large (n = 8 takes seconds to a minute)\n";
    return kExitUsage;
  }
  TableOptions opts;
  opts.threads = cfg.threads;
  const auto t = simultaneous_tables(cfg.n, parse_family(cfg.family), opts);
  std::string text;
  if (cfg.format == "json") {
    text = to_json(t);
  } else if (cfg.format == "md") {
    text = to_markdown(t);
  } else {
    text = to_tsv(t);
  }
  emit(cfg, text);
  for (const auto& w : t.warnings) std::cerr << "warning: " << w << "\n";
  if (!t.integral) {
    std::cerr << "finding: non-integral eigenvalue\n";
    return kExitFinding;
  }
  return kExitOk;
}

int cmd_rank_one(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> rows;
  if (cfg.type.empty()) {
    rows = rank_one_table_rows(cfg.allow_long);
  } else if (cfg.orbit.empty()) {
    const auto rs = build_root_system(cfg.type);
    const auto orbits = hyperplane_orbits(rs);
    if (orbits.size() == 1) {
      rows.emplace_back(cfg.type, "");
    } else {
      for (std::size_t i = 0; i < orbits.size(); ++i) rows.emplace_back(cfg.type, std::to_string(i + 1));
    }
  } else {
    rows.emplace_back(cfg.type, cfg.orbit);
  }
  for (const auto& [label, orbit] : rows)
    if ((label == "E7" || label == "E8") && !cfg.allow_long) {
      std::cerr << label << " needs --allow-long\n";
      return kExitUsage;
    }

  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::ostringstream out;
  if (cfg.format == "tsv") out << "# type\torbit\tsize\tcharpoly\n";
  if (cfg.format == "md") out << "| type | orbit | size | characteristic polynomial |\n|---|---|---|---|\n";
  bool ok = true;
  for (const auto& [label, orbit] : rows) {
    const auto rs = build_root_system(label);
    const auto hs = select_hyperplanes(rs, orbit);
    const auto r = rank_one_charpoly(rs, hs);
    ok = ok && r.trace_ok && r.symmetric;
    const auto f = r.factors.str();
    const auto shown = orbit.empty() ? "-" : orbit;
    if (cfg.format == "json") {
      nlohmann::ordered_json j;
      j["type"] = label;
      j["orbit"] = orbit.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(orbit);
      j["size"] = hs.size();
      j["order"] = rs.order;
      j["charpoly"] = f;
      nlohmann::ordered_json roots = nlohmann::ordered_json::array();
      for (const auto& [x, m] : r.factors.roots) roots.push_back({{"root", rational_str(x)}, {"multiplicity", m}});
      j["rational_roots"] = roots;
      if (r.factors.quadratic_power > 0) {
        j["quadratic"] = r.factors.quadratic.str();
        j["quadratic_power"] = r.factors.quadratic_power;
      }
      arr.push_back(j);
    } else if (cfg.format == "md") {
      out << "| " << label << " | " << shown << " | " << hs.size() << " | " << f << " |\n";
    } else {
      out << label << "\t" << shown << "\t" << hs.size() << "\t" << f << "\n";
    }
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["rows"] = arr;
    out << j.dump(2) << "\n";
  }
  emit(cfg, out.str());
  return ok ? kExitOk : kExitFinding;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.n > 6 && !cfg.allow_large) {
    std::cerr << "n > 6 needs --allow-large\n";
    return kExitUsage;
  }
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  VerifyOptions opts;
  opts.threads = cfg.threads;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  opts.allow_long = cfg.allow_long;
  std::vector<SuiteReport> reports;
  bool ok = true;
  for (const auto& s : suites) {
    auto r = run_suite(s, cfg.n, opts);
    ok = ok && r.ok();
    if (cfg.format != "json") {
      std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << r.suite << " (n = " << r.n << ", " << r.seconds << " s)\n";
      for (const auto& c : r.checks) {
        const char* tag = c.ok ? "ok  " : (c.reported ? "note" : "FAIL");
        std::cout << "  " << tag << "  " << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
      }
    }
    reports.push_back(std::move(r));
  }
  const auto json = reports_to_json(reports);
  if (cfg.format == "json") std::cout << json;
  if (!cfg.report.empty()) write_file_atomic(cfg.report, json);
  return ok ? kExitOk : kExitFinding;
}

std::filesystem::path cache_dir(const RunConfig& cfg) {
  return cfg.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cfg.cache_dir);
}

int cmd_cache_build(const RunConfig& cfg) {
  if (cfg.n > 8 && !cfg.allow_large) {
    std::cerr << "n > 8 needs --allow-large\n";
    return kExitUsage;
  }
  for (const auto& p : build_cache(cache_dir(cfg), cfg.n)) std::cout << p.string() << "\n";
  return kExitOk;
}

int cmd_cache_inspect(const RunConfig& cfg) {
  const auto dir = cache_dir(cfg);
  const auto s = inspect_cache(dir, cfg.n);
  std::cout << "cache " << dir.string() << " n = " << s.n << "\n";
  std::cout << "characters: " << (s.characters ? "present" : "missing") << "\n";
  std::cout << "seminormal: " << (s.seminormal ? "present" : "missing") << "\n";
  for (const auto& [lam, dim] : s.representations) std::cout << lam.str() << "\t" << dim << "\n";
  return s.characters && s.seminormal ? kExitOk : kExitUsage;
}

int cmd_cache_clear(const RunConfig& cfg) {
  const auto dir = cache_dir(cfg);
  std::cout << "removed " << clear_cache(dir) << " files from " << dir.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of symmetrized shuffling operators and rank-one reflection operators"};
  app.require_subcommand(1);
  RunConfig cfg;
  int code = kExitOk;

  auto* spectra = app.add_subcommand("spectra", "Eigenvalue tables");
  spectra->require_subcommand(1);
  auto* type_a = spectra->add_subcommand("type-a", "Joint eigenspaces of a commuting family on Q S_n");
  type_a->add_option("--n", cfg.n, "Size of the symmetric group")->required();
  type_a->add_option("--family", cfg.family, "columns or two-blocks")
      ->check(CLI::IsMember({"columns", "two-blocks"}));
  type_a->add_option("--format", cfg.format, "tsv, json or md")->check(CLI::IsMember({"tsv", "json", "md"}));
  type_a->add_option("--output,-o", cfg.output, "Write to a file instead of stdout");
  type_a->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  type_a->add_flag("--allow-large", cfg.allow_large, "Permit n > 6");
  type_a->callback([&] { code = cmd_type_a(cfg); });

  auto* rank_one = spectra->add_subcommand("rank-one", "Characteristic polynomials of mu on the minus space");
  rank_one->add_option("--type", cfg.type, "A3, B4, D5, E6, F4, H3, H4, I2(7), ...; default: the whole table");
  rank_one->add_option("--orbit", cfg.orbit, "long, short, sign-change, transposition, all, or an orbit number");
  rank_one->add_option("--format", cfg.format, "tsv, json or md")->check(CLI::IsMember({"tsv", "json", "md"}));
  rank_one->add_option("--output,-o", cfg.output, "Write to a file instead of stdout");
  rank_one->add_flag("--allow-long", cfg.allow_long, "Include E7 and E8");
  rank_one->callback([&] { code = cmd_rank_one(cfg); });

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suites, "Suite name, repeatable, or all")
      ->check([](const std::string& s) -> std::string {
        if (s == "all") return {};
        for (const auto& n : suite_names())
          if (n == s) return {};
        return "unknown suite " + s;
      });
  verify->add_option("--n", cfg.n, "Size of the symmetric group")->required();
  verify->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  verify->add_option("--report", cfg.report, "Also write the JSON report to this file");
  verify->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--samples", cfg.samples, "Random instances for sampled suites")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Seed for sampled suites");
  verify->add_flag("--allow-large", cfg.allow_large, "Permit n > 6");
  verify->add_flag("--allow-long", cfg.allow_long, "Include E7 and E8 in rank-one");
  verify->callback([&] { code = cmd_verify(cfg); });

  auto* cache = app.add_subcommand("cache", "Character table and seminormal caches");
  cache->require_subcommand(1);
  cache->add_option("--dir", cfg.cache_dir, "Cache directory (default $SHUFFLE_SPECTRA_CACHE)");
  auto* build = cache->add_subcommand("build", "Write the caches for n");
  build->add_option("--n", cfg.n, "Size of the symmetric group")->required()->check(CLI::Range(1, 10));
  build->add_flag("--allow-large", cfg.allow_large, "Permit n > 8");
  build->callback([&] { code = cmd_cache_build(cfg); });
  auto* inspect = cache->add_subcommand("inspect", "List cached representations for n");
  inspect->add_option("--n", cfg.n, "Size of the symmetric group")->required()->check(CLI::Range(1, 10));
  inspect->callback([&] { code = cmd_cache_inspect(cfg); });
  auto* clear = cache->add_subcommand("clear", "Remove cache files");
  clear->callback([&] { code = cmd_cache_clear(cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}
