#include "shuffle/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace shuffle {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

const std::regex kCacheFile("(characters|seminormal)_n[0-9]+\\.json");

fs::path characters_path(const fs::path& dir, int n) { return dir / ("characters_n" + std::to_string(n) + ".json"); }
fs::path seminormal_path(const fs::path& dir, int n) { return dir / ("seminormal_n" + std::to_string(n) + ".json"); }

json rational_json(const Rational& q) { return json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Rational rational_from(const json& j) {
  Rational q(Integer(j.at(0).get<std::string>()), Integer(j.at(1).get<std::string>()));
  q.canonicalize();
  return q;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cache: cannot read " + p.string());
  return json::parse(in);
}

void check_n(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("cache: n must be in 1..10");
}

}  // namespace

fs::path default_cache_dir() {
  if (const char* e = std::getenv("SHUFFLE_SPECTRA_CACHE"); e && *e) return fs::path(e);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "shuffle-spectra";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "shuffle-spectra";
  return fs::path(".shuffle-spectra");
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::random_device rd;
  const fs::path tmp = path.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string character_table_json(int n) {
  check_n(n);
  const auto& t = character_table(n);
  json j;
  j["schema"] = 1;
  j["n"] = n;
  json classes = json::array(), sizes = json::array(), irr = json::array(), values = json::array();
  for (const auto& mu : t.classes) classes.push_back(mu.str());
  for (auto s : t.class_sizes) sizes.push_back(s);
  for (const auto& lam : t.irreducibles) irr.push_back(lam.str());
  for (const auto& row : t.values) values.push_back(row);
  j["classes"] = classes;
  j["class_sizes"] = sizes;
  j["irreducibles"] = irr;
  j["values"] = values;
  return j.dump(1) + "\n";
}

std::string seminormal_json(int n) {
  check_n(n);
  json j;
  j["schema"] = 1;
  j["n"] = n;
  json reps = json::array();
  for (const auto& lam : partitions_of(n)) {
    const SeminormalRep rep(lam);
    json r;
    r["lambda"] = lam.str();
    r["dim"] = rep.dim();
    json gens = json::array();
    for (int i = 1; i < n; ++i) {
      const auto g = rep.generator(i);
      json entries = json::array();
      for (std::size_t a = 0; a < g.rows(); ++a)
        for (std::size_t b = 0; b < g.cols(); ++b)
          if (sgn(g(a, b)) != 0) entries.push_back(json::array({a, b, rational_json(g(a, b))}));
      gens.push_back(entries);
    }
    r["generators"] = gens;
    reps.push_back(r);
  }
  j["representations"] = reps;
  return j.dump(1) + "\n";
}

std::vector<fs::path> build_cache(const fs::path& dir, int n) {
  check_n(n);
  fs::create_directories(dir);
  const auto c = characters_path(dir, n), s = seminormal_path(dir, n);
  write_file_atomic(c, character_table_json(n));
  write_file_atomic(s, seminormal_json(n));
  return {c, s};
}

CacheSummary inspect_cache(const fs::path& dir, int n) {
  check_n(n);
  CacheSummary s;
  s.n = n;
  s.characters = fs::exists(characters_path(dir, n));
  s.seminormal = fs::exists(seminormal_path(dir, n));
  if (s.seminormal) {
    const auto j = read_json(seminormal_path(dir, n));
    for (const auto& r : j.at("representations"))
      s.representations.emplace_back(NumberPartition::parse(r.at("lambda").get<std::string>()),
                                     r.at("dim").get<std::size_t>());
  }
  return s;
}

CharacterTable load_character_table(const fs::path& dir, int n) {
  check_n(n);
  const auto j = read_json(characters_path(dir, n));
  CharacterTable t;
  t.n = j.at("n").get<int>();
  for (const auto& mu : j.at("classes")) t.classes.push_back(NumberPartition::parse(mu.get<std::string>()));
  for (const auto& lam : j.at("irreducibles")) t.irreducibles.push_back(NumberPartition::parse(lam.get<std::string>()));
  t.class_sizes = j.at("class_sizes").get<std::vector<std::uint64_t>>();
  t.values = j.at("values").get<std::vector<std::vector<std::int64_t>>>();
  return t;
}

std::vector<ExactMatrix> load_seminormal_generators(const fs::path& dir, const NumberPartition& lambda) {
  const int n = lambda.size();
  const auto j = read_json(seminormal_path(dir, n));
  for (const auto& r : j.at("representations")) {
    if (NumberPartition::parse(r.at("lambda").get<std::string>()) != lambda) continue;
    const auto d = r.at("dim").get<std::size_t>();
    std::vector<ExactMatrix> gens;
    for (const auto& entries : r.at("generators")) {
      ExactMatrix g(d, d);
      for (const auto& e : entries) g(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()) = rational_from(e.at(2));
      gens.push_back(std::move(g));
    }
    return gens;
  }
  throw std::runtime_error("cache: no entry for " + lambda.str());
}

std::size_t clear_cache(const fs::path& dir) {
  std::size_t removed = 0;
  if (!fs::exists(dir)) return 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    if (e.is_regular_file() && (std::regex_match(name, kCacheFile) || name.find(".json.tmp") != std::string::npos)) {
      fs::remove(e.path());
      ++removed;
    }
  }
  return removed;
}

}  // namespace shuffle
