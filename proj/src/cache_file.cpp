#include "nilsemi/cache_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <unistd.h>

#include "json.hpp"
#include "nilsemi/output.hpp"

namespace nilsemi {

namespace {

constexpr char const* kFormatTag = "nilcount-cache-1";

char letter(OrbitFunction f) {
  switch (f) {
    case OrbitFunction::N:
      return 'N';
    case OrbitFunction::L:
      return 'L';
    case OrbitFunction::K:
      return 'K';
  }
  return '?';
}

std::optional<OrbitCountCache::Key> parse_key(std::string const& key) {
  // <letter>:<p>:<q>
  if (key.size() < 5 || key[1] != ':') {
    return std::nullopt;
  }
  OrbitFunction f;
  switch (key[0]) {
    case 'N':
      f = OrbitFunction::N;
      break;
    case 'L':
      f = OrbitFunction::L;
      break;
    case 'K':
      f = OrbitFunction::K;
      break;
    default:
      return std::nullopt;
  }
  auto const colon = key.find(':', 2);
  if (colon == std::string::npos) {
    return std::nullopt;
  }
  try {
    auto const p = parse_decimal(key.substr(2, colon - 2));
    auto const q = parse_decimal(key.substr(colon + 1));
    if (!p.fits_uint_p() || !q.fits_uint_p() || q < 1 || q >= p) {
      return std::nullopt;
    }
    return OrbitCountCache::Key{f, static_cast<std::uint32_t>(p.get_ui()),
                                static_cast<std::uint32_t>(q.get_ui())};
  } catch (std::invalid_argument const&) {
    return std::nullopt;
  }
}

}  // namespace

CacheLoadStats load_cache(std::filesystem::path const& path,
                          OrbitCountCache& cache) {
  CacheLoadStats stats;
  std::ifstream in(path);
  if (!in) {
    return stats;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (nlohmann::json::exception const& e) {
    throw std::runtime_error("cache " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kFormatTag ||
      !doc.contains("values") || !doc["values"].is_object()) {
    throw std::runtime_error("cache " + path.string() +
                             ": not a nilcount cache document");
  }
  for (auto const& [key, value] : doc["values"].items()) {
    auto const k = parse_key(key);
    if (!k || !value.is_string()) {
      ++stats.rejected;
      continue;
    }
    try {
      cache.store(k->function, k->p, k->q,
                  parse_decimal(value.get<std::string>()));
      ++stats.loaded;
    } catch (std::invalid_argument const&) {
      ++stats.rejected;
    }
  }
  return stats;
}

void save_cache(std::filesystem::path const& path,
                OrbitCountCache const& cache) {
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (auto const& [key, value] : cache.snapshot()) {
    std::string const name = std::string(1, letter(key.function)) + ":" +
                             std::to_string(key.p) + ":" +
                             std::to_string(key.q);
    values[name] = value.get_str();
  }
  nlohmann::ordered_json doc;
  doc["format"] = kFormatTag;
  doc["values"] = std::move(values);

  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write cache " + tmp.string());
    }
    out << doc.dump(1) << '\n';
    if (!out.flush()) {
      throw std::runtime_error("cannot write cache " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nilsemi
