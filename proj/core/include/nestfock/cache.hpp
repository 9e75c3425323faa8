#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "nestfock/basis_change.hpp"

namespace nestfock {

// Library version baked into cache file names and contents.
std::string library_version();

// One JSON file per transition matrix, keyed by (source, target, degree,
// version). Files from another version are ignored. A file whose checksum
// does not match its contents raises CacheError.
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir, std::string version = library_version());

  std::optional<TransitionMatrix> load(Basis source, Basis target, int n) const;
  void store(const TransitionMatrix& m) const;

  // Load, or compute with transition() and store.
  TransitionMatrix get(Basis source, Basis target, int n) const;

  std::filesystem::path path_for(Basis source, Basis target, int n) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string version_;
};

}  // namespace nestfock
