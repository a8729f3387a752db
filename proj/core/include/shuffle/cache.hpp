#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/characters.hpp"
#include "shuffle/linalg.hpp"

namespace shuffle {

// $SHUFFLE_SPECTRA_CACHE, else $XDG_CACHE_HOME/shuffle-spectra, else ~/.cache/shuffle-spectra.
std::filesystem::path default_cache_dir();

// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string character_table_json(int n);
// Generators rho(s_i) for every lambda of n, sparse entries [row, col, [num, den]].
std::string seminormal_json(int n);

// Writes characters_n<n>.json and seminormal_n<n>.json; returns the paths.
std::vector<std::filesystem::path> build_cache(const std::filesystem::path& dir, int n);

struct CacheSummary {
  int n = 0;
  bool characters = false;
  bool seminormal = false;
  std::vector<std::pair<NumberPartition, std::size_t>> representations;  // lambda, dim
};
CacheSummary inspect_cache(const std::filesystem::path& dir, int n);

CharacterTable load_character_table(const std::filesystem::path& dir, int n);
// rho(s_1) .. rho(s_{n-1}) of lambda.
std::vector<ExactMatrix> load_seminormal_generators(const std::filesystem::path& dir, const NumberPartition& lambda);

// Removes the cache files; returns how many were removed.
std::size_t clear_cache(const std::filesystem::path& dir);

}  // namespace shuffle
