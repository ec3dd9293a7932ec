#pragma once
// Content-addressed report cache: one JSON file per key under a directory.
// Writes go through a temp file and an atomic rename, so a crashed writer
// never leaves a half-written entry. Cache I/O failures degrade to a cache
// miss (with a warning on stderr); they are never fatal.

#include <optional>
#include <string>
#include <vector>

namespace symloop::cache {

// 64-bit FNV-1a, hex encoded. Used as the cache key of a canonical config.
std::string fnv1a_hex(const std::string& data);

// Returns the stored bytes, or nullopt on miss / unreadable / corrupted
// entry (not valid JSON). Corrupted entries are reported on stderr.
std::optional<std::string> get(const std::string& dir, const std::string& key);

// Best effort; returns false (with a warning) when the entry could not be
// written. `bytes` must be valid JSON.
bool put(const std::string& dir, const std::string& key,
         const std::string& bytes);

// Keys present in the cache directory, sorted.
std::vector<std::string> list(const std::string& dir);
// Removes all entries; returns how many were removed.
int clear(const std::string& dir);

std::string entry_path(const std::string& dir, const std::string& key);

}  // namespace symloop::cache
