#include "nestfock/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nestfock/errors.hpp"
#include "nestfock/io.hpp"

#ifndef NESTFOCK_VERSION
#define NESTFOCK_VERSION "0.0.0"
#endif

namespace nestfock {

std::string library_version() { return NESTFOCK_VERSION; }

namespace {

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json key_order(Basis source, Basis target, int n) {
  Json src = Json::array();
  for (const auto& k : basis_keys(source, n)) src.push_back(key_label(k));
  Json dst = Json::array();
  for (const auto& k : basis_keys(target, n)) dst.push_back(key_label(k));
  return Json{{"source", std::move(src)}, {"target", std::move(dst)}};
}

// Everything except the checksum, in a fixed order.
Json payload(const TransitionMatrix& m, const std::string& version) {
  return Json{{"source", basis_name(m.source)},
              {"target", basis_name(m.target)},
              {"n", m.degree},
              {"version", version},
              {"triangularity", m.triangularity},
              {"key_order", key_order(m.source, m.target, m.degree)},
              {"rows", rows_to_json(m.entries)}};
}

}  // namespace

MatrixCache::MatrixCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {}

std::filesystem::path MatrixCache::path_for(Basis source, Basis target, int n) const {
  std::string name = std::string(basis_name(source)) + "_" + std::string(basis_name(target)) + "_n" +
                     std::to_string(n) + "_v" + version_ + ".json";
  return dir_ / name;
}

std::optional<TransitionMatrix> MatrixCache::load(Basis source, Basis target, int n) const {
  const auto path = path_for(source, target, n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw CacheError("unreadable cache file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("checksum") || !doc.contains("version")) {
    throw CacheError("malformed cache file " + path.string());
  }
  if (doc.at("version") != version_) return std::nullopt;

  std::string stored = doc.at("checksum").is_string() ? doc.at("checksum").get<std::string>() : "";
  Json body = doc;
  body.erase("checksum");
  if (fnv1a64(body.dump()) != stored) throw CacheError("checksum mismatch in " + path.string());
  if (body.at("source") != basis_name(source) || body.at("target") != basis_name(target) || body.at("n") != n ||
      body.at("key_order") != key_order(source, target, n)) {
    throw CacheError("cache file " + path.string() + " does not describe the requested matrix");
  }

  TransitionMatrix m;
  m.degree = n;
  m.source = source;
  m.target = target;
  m.triangularity = body.value("triangularity", "");
  const auto& order = body.at("key_order");
  try {
    m.entries = rows_from_json(body.at("rows"), order.at("source").size(), order.at("target").size());
  } catch (const DomainError& e) {
    throw CacheError("bad matrix in " + path.string() + ": " + e.what());
  }
  return m;
}

void MatrixCache::store(const TransitionMatrix& m) const {
  std::filesystem::create_directories(dir_);
  Json doc = payload(m, version_);
  doc["checksum"] = fnv1a64(doc.dump());
  const auto path = path_for(m.source, m.target, m.degree);
  // Write then rename so readers never see a partial file.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

TransitionMatrix MatrixCache::get(Basis source, Basis target, int n) const {
  if (auto hit = load(source, target, n)) return *hit;
  TransitionMatrix m = transition(source, target, n);
  store(m);
  return m;
}

}  // namespace nestfock
