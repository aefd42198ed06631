#include "plucker/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>

#include "json.hpp"

namespace plucker {

namespace fs = std::filesystem;
using nlohmann::json;

StraightenCache& StraightenCache::global() {
  static StraightenCache instance;
  return instance;
}

std::shared_ptr<const Expansion> StraightenCache::find(int n, const GraphKey& key) {
  std::shared_lock lock(mu_);
  auto it = map_.find(Key{n, key});
  if (it == map_.end()) {
    ++misses_;
    return nullptr;
  }
  ++hits_;
  return it->second;
}

void StraightenCache::insert(int n, const GraphKey& key, std::shared_ptr<const Expansion> value) {
  std::unique_lock lock(mu_);
  map_[Key{n, key}] = std::move(value);
}

void StraightenCache::clear() {
  std::unique_lock lock(mu_);
  map_.clear();
  hits_ = 0;
  misses_ = 0;
}

std::size_t StraightenCache::size() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

namespace {
json edges_json(const GraphKey& k) {
  json a = json::array();
  for (auto c : k) a.push_back({code_a(c), code_b(c)});
  return a;
}

GraphKey key_from_json(const json& a, int n) {
  GraphKey k;
  for (const auto& e : a) {
    int x = e.at(0).get<int>(), y = e.at(1).get<int>();
    if (x < 1 || y > n || x >= y) throw std::runtime_error("non-canonical edge in cache file");
    k.push_back(edge_code(x, y));
  }
  if (!std::is_sorted(k.begin(), k.end())) throw std::runtime_error("unsorted edges in cache file");
  return k;
}

std::string file_name(int n, int d) { return "straighten_n" + std::to_string(n) + "_d" + std::to_string(d) + ".json"; }
}  // namespace

int StraightenCache::save(const std::string& dir) const {
  std::map<std::pair<int, int>, std::vector<std::pair<GraphKey, std::shared_ptr<const Expansion>>>> groups;
  {
    std::shared_lock lock(mu_);
    for (const auto& [k, v] : map_) {
      int d = k.n ? static_cast<int>(k.g.size()) * 2 / k.n : 0;
      groups[{k.n, d}].emplace_back(k.g, v);
    }
  }
  fs::create_directories(dir);
  int written = 0;
  for (auto& [nd, entries] : groups) {
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    json j;
    j["format"] = "plucker-straighten-cache";
    j["version"] = kVersion;
    j["n"] = nd.first;
    j["degree"] = nd.second;
    json arr = json::array();
    for (const auto& [g, ex] : entries) {
      json terms = json::array();
      for (const auto& [kk, c] : *ex) terms.push_back({{"coeff", c.get_str()}, {"edges", edges_json(kk)}});
      arr.push_back({{"graph", edges_json(g)}, {"expansion", terms}});
    }
    j["entries"] = std::move(arr);
    fs::path tmp = fs::path(dir) / (file_name(nd.first, nd.second) + ".tmp");
    {
      std::ofstream os(tmp);
      os << j.dump() << "\n";
    }
    fs::rename(tmp, fs::path(dir) / file_name(nd.first, nd.second));
    ++written;
  }
  return written;
}

int StraightenCache::load(const std::string& dir, std::vector<std::string>* warnings) {
  auto warn = [&](const std::string& msg) {
    std::cerr << "warning: " << msg << "\n";
    if (warnings) warnings->push_back(msg);
  };
  if (!fs::is_directory(dir)) return 0;
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(dir)) {
    auto name = ent.path().filename().string();
    if (name.rfind("straighten_n", 0) == 0 && ent.path().extension() == ".json") files.push_back(ent.path());
  }
  std::sort(files.begin(), files.end());
  int loaded = 0;
  for (const auto& f : files) {
    try {
      std::ifstream is(f);
      json j = json::parse(is);
      if (j.value("format", "") != "plucker-straighten-cache" || j.at("version").get<int>() != kVersion) {
        warn("ignoring cache file with unexpected format or version: " + f.string());
        continue;
      }
      int n = j.at("n").get<int>();
      std::vector<std::pair<GraphKey, std::shared_ptr<const Expansion>>> staged;
      for (const auto& e : j.at("entries")) {
        Expansion ex;
        for (const auto& t : e.at("expansion")) ex.emplace_back(key_from_json(t.at("edges"), n), Q(t.at("coeff").get<std::string>()));
        staged.emplace_back(key_from_json(e.at("graph"), n), std::make_shared<const Expansion>(std::move(ex)));
      }
      for (auto& [k, v] : staged) insert(n, k, std::move(v));
      ++loaded;
    } catch (const std::exception& ex) {
      warn("ignoring corrupt cache file " + f.string() + ": " + ex.what());
    }
  }
  return loaded;
}

}  // namespace plucker
