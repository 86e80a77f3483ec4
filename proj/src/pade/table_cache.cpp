#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include <json.hpp>
#include <openssl/evp.h>

#include "lapinv/error.hpp"
#include "lapinv/pade.hpp"

namespace lapinv::pade {

using mp::BigComplex;
using mp::BigReal;
using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

std::string cache_key(const mp::ExactReal& beta, int twoN, int precision) {
  return beta.key() + "|" + std::to_string(twoN) + "|" + std::to_string(precision);
}

json complex_list(const std::vector<BigComplex>& values) {
  json out = json::array();
  for (const auto& z : values) out.push_back({z.re().serialize(), z.im().serialize()});
  return out;
}

std::vector<BigComplex> parse_complex_list(const json& list) {
  std::vector<BigComplex> out;
  for (const auto& pair : list) {
    out.emplace_back(BigReal::deserialize(pair.at(0).get<std::string>()),
                     BigReal::deserialize(pair.at(1).get<std::string>()));
  }
  return out;
}

mp::ExactReal parse_beta_key(const std::string& key) {
  if (key.rfind("q:", 0) == 0) return mp::ExactReal(mpq_class(key.substr(2)));
  if (key.rfind("r:", 0) == 0) return mp::ExactReal(BigReal::deserialize(key.substr(2)));
  throw Error(ErrorKind::CacheCorruption, "unrecognized beta key '" + key + "'");
}

json table_body(const PoleWeightTable& table) {
  return {{"format", kFormatVersion},
          {"beta", table.beta.key()},
          {"beta_text", table.beta.to_string()},
          {"twoN", table.twoN},
          {"precision", table.precision},
          {"poles", complex_list(table.poles)},
          {"weights", complex_list(table.weights)},
          {"canonical_residual", table.canonical_residual.serialize()}};
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::DomainError, "SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string serialize_table(const PoleWeightTable& table) {
  json body = table_body(table);
  const std::string checksum = sha256_hex(body.dump());
  body["checksum"] = checksum;
  return body.dump(1) + "\n";
}

PoleWeightTable deserialize_table(const std::string& text) {
  try {
    json body = json::parse(text);
    const std::string checksum = body.at("checksum").get<std::string>();
    body.erase("checksum");
    if (sha256_hex(body.dump()) != checksum) throw Error(ErrorKind::CacheCorruption, "checksum mismatch");
    if (body.at("format").get<int>() != kFormatVersion) {
      throw Error(ErrorKind::CacheCorruption, "unsupported table format");
    }
    PoleWeightTable table;
    table.beta = parse_beta_key(body.at("beta").get<std::string>());
    table.twoN = body.at("twoN").get<int>();
    table.precision = body.at("precision").get<int>();
    table.poles = parse_complex_list(body.at("poles"));
    table.weights = parse_complex_list(body.at("weights"));
    table.canonical_residual = BigReal::deserialize(body.at("canonical_residual").get<std::string>());
    check_pole_geometry(table);
    return table;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CacheCorruption) throw;
    throw Error(ErrorKind::CacheCorruption, e.what());
  } catch (const std::exception& e) {
    throw Error(ErrorKind::CacheCorruption, e.what());
  }
}

TableCache::TableCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path TableCache::file_for(const mp::ExactReal& beta, int twoN, int precision) const {
  return directory_ / ("pwt_" + sha256_hex(cache_key(beta, twoN, precision)).substr(0, 24) + ".json");
}

TableCache::Stats TableCache::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

void TableCache::clear_memory() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

std::shared_ptr<const PoleWeightTable> TableCache::get_or_build(const mp::ExactReal& beta, int twoN, int precision) {
  validate_arguments(beta, twoN, precision);
  std::shared_ptr<Entry> entry;
  {
    std::lock_guard lock(mutex_);
    auto& slot = entries_[cache_key(beta, twoN, precision)];
    if (!slot) slot = std::make_shared<Entry>();
    entry = slot;
  }
  // One builder per key; other callers for the same key wait here.
  std::lock_guard entry_lock(entry->mutex);
  if (entry->table) {
    std::lock_guard lock(mutex_);
    ++stats_.memory_hits;
    return entry->table;
  }
  entry->table = load_or_build(beta, twoN, precision);
  return entry->table;
}

std::shared_ptr<const PoleWeightTable> TableCache::load_or_build(const mp::ExactReal& beta, int twoN,
                                                                 int precision) {
  const bool persistent = !directory_.empty();
  const auto path = persistent ? file_for(beta, twoN, precision) : std::filesystem::path{};
  bool corrupt = false;
  if (persistent && std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      auto table = std::make_shared<PoleWeightTable>(deserialize_table(buffer.str()));
      if (!(table->beta == beta) || table->twoN != twoN || table->precision != precision) {
        throw Error(ErrorKind::CacheCorruption, "cache file holds a different key");
      }
      std::lock_guard lock(mutex_);
      ++stats_.disk_hits;
      return table;
    } catch (const Error&) {
      corrupt = true;
    }
  }

  auto table = std::make_shared<PoleWeightTable>(build_table(beta, twoN, precision));
  {
    std::lock_guard lock(mutex_);
    ++stats_.builds;
    if (corrupt) ++stats_.recoveries;
  }
  if (persistent) {
    // Write to a unique temporary name, then rename over the target.
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec);
    std::ostringstream tmp_name;
    tmp_name << path.filename().string() << ".tmp." << std::hex << std::hash<std::string>{}(path.string())
             << "." << reinterpret_cast<std::uintptr_t>(table.get());
    const auto tmp = directory_ / tmp_name.str();
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << serialize_table(*table);
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }
  return table;
}

std::filesystem::path default_cache_directory() {
  if (const char* dir = std::getenv("LAPINV_CACHE_DIR"); dir != nullptr && *dir != '\0') return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "lapinv";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "lapinv";
  }
  return {};
}

TableCache& default_cache() {
  static TableCache cache(default_cache_directory());
  return cache;
}

}  // namespace lapinv::pade
