#pragma once

#include <filesystem>
#include <optional>

#include "fjf/jacobi.hpp"

namespace fjf {

inline constexpr int kCacheSchemaVersion = 1;

/// Content hash (FNV-1a) of the kernel generator expansions at a fixed
/// small precision; a mismatch invalidates every cached basis.
std::string generatorFingerprint();

/// File name a given basis is stored under inside the cache directory.
std::string cacheFileName(long k, long m, SpaceKind kind, long prec);

/// Write a basis atomically (write-then-rename).  Rationals are stored as
/// "numerator/denominator" strings in the canonical coefficient order.
void saveBasis(const std::filesystem::path& dir, long k, long m, SpaceKind kind, long prec,
               const std::vector<JacobiFormQExp>& basis);

/// Load a basis; nullopt on a missing file, schema/parameter mismatch, or
/// stale generator fingerprint.
std::optional<std::vector<JacobiFormQExp>> loadBasis(const std::filesystem::path& dir, long k,
                                                     long m, SpaceKind kind, long prec);

/// jacobiBasis with a read-through cache; an empty dir disables caching.
std::vector<JacobiFormQExp> cachedJacobiBasis(long k, long m, SpaceKind kind, long prec,
                                              const std::filesystem::path& dir);

}  // namespace fjf
