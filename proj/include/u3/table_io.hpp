#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "u3/canonical_cgc.hpp"
#include "u3/wigner.hpp"

namespace u3 {

// Versioned binary cache of computed tables.  Files live under
//   <dir>/cgc/<g1>__<g2>__<coupled>.bin
//   <dir>/wigner/<lambda1>_<mu1>__<lambda2>_<mu2>.bin
// and carry a magic tag, a format version, the tolerance and the labels,
// so stale or foreign files are never misread: any mismatch or truncation
// is treated as a miss and the table is recomputed.  Writes go through a
// temporary file followed by an atomic rename.
//
// Stored coefficients are raw little-endian doubles; a round trip through
// the cache reproduces the exact bits of the computed table.

std::filesystem::path cgc_cache_path(const std::filesystem::path& dir, const U3Irrep& g1,
                                     const U3Irrep& g2, const U3Irrep& coupled);

std::filesystem::path wigner_cache_path(const std::filesystem::path& dir, const SU3Irrep& s1,
                                        const SU3Irrep& s2);

void save_table(const std::filesystem::path& dir, const CGTable& table);
std::optional<CGTable> load_table(const std::filesystem::path& dir, const U3Irrep& g1,
                                  const U3Irrep& g2, const U3Irrep& coupled, double tol);

void save_wigner(const std::filesystem::path& dir, const WignerTable& table);
std::optional<WignerTable> load_wigner(const std::filesystem::path& dir, const SU3Irrep& s1,
                                       const SU3Irrep& s2, double tol);

} // namespace u3
