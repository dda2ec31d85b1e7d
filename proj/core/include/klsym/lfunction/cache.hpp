#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "klsym/local/euler.hpp"

namespace klsym {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCodeVersion = "0.1.0";

// KLSYM_CACHE_DIR if set, else $HOME/.cache/klsym, else ./klsym-cache.
// The directory is not created here.
std::filesystem::path cache_directory();

// dir / "k{K}_p{P}.json", one entry per (k, p).
std::filesystem::path cache_entry_path(const std::filesystem::path& dir, int k,
                                       std::uint64_t p);

std::string iso8601_utc_now();

// Canonical serialization: sorted keys, big integers as decimal strings.
// Deterministic given (rec, created_at), so two records agree iff their
// serializations agree after dropping created_at.
std::string cache_entry_json(const EulerFactorRecord& rec, const std::string& created_at);

// Writes to a temp file in the same directory, then renames into place, so
// readers and concurrent writers only ever observe whole entries.
void store_cached_record(const std::filesystem::path& dir, const EulerFactorRecord& rec);

// nullopt when the entry does not exist. A present entry is re-verified:
// schema version, matching (k, p), Z = R * M, the degree rule, and the Weil
// certificate must all re-pass and agree with the stored check results;
// violations throw IoError or CrossCheckFailed.
std::optional<EulerFactorRecord> load_cached_record(const std::filesystem::path& dir,
                                                    int k, std::uint64_t p);

// Cache-through build: the verified cached record when present, otherwise
// build_euler_record followed by store.
EulerFactorRecord cached_or_build(const std::filesystem::path& dir, int k,
                                  std::uint64_t p, MomentTable& table,
                                  const EulerFarmOptions& opts = {});

}  // namespace klsym
