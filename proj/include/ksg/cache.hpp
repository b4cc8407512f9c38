#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ksg/cartan.hpp"

namespace ksg {

inline constexpr int kCacheSchemaVersion = 1;

// Directory used for persisted CartanData. An explicit setting wins over the
// KSG_CACHE_DIR environment variable; nullopt disables persistence.
void set_cache_dir(std::optional<std::string> dir);
std::optional<std::string> cache_dir();

std::string cartan_cache_key(const FiniteGroup& g, const FiniteField& f, std::uint64_t seed);

std::string serialize_cartan(const CartanData& cd);
// Rebuilds simples, projectives and fingerprints from the stored matrices.
// Returns nullopt on schema or group mismatch.
std::optional<CartanData> deserialize_cartan(const std::string& text, const GroupPtr& g, const FieldPtr& f);

std::optional<CartanData> load_cartan(const GroupPtr& g, const FieldPtr& f, std::uint64_t seed);
// Write to a temporary file then rename, so readers never see a partial record.
void store_cartan(const CartanData& cd);

}  // namespace ksg
