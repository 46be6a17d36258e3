#pragma once

#include <filesystem>
#include <string>

#include "nss/types.hpp"

namespace nss {

// Recording container: "EEGR" magic, u32 version, f64 sampling rate, u32
// channel count, u64 sample count, name table, then float32 little-endian
// samples in channel-major order.
void save_recording(const Recording& rec, const std::filesystem::path& path);
Recording load_recording(const std::filesystem::path& path);

// Loads samples from disk and attaches the manifest entry's metadata.
Recording load_recording(const DatasetManifest& manifest, const std::string& recording_id);

DatasetManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

SplitSpec load_splits(const std::filesystem::path& path);
void save_splits(const SplitSpec& splits, const std::filesystem::path& path);

// FNV-1a, used for output caching and the determinism checks
uint64_t hash_file(const std::filesystem::path& path);
uint64_t hash_bytes(const void* data, size_t n, uint64_t h = 1469598103934665603ULL);

}  // namespace nss
