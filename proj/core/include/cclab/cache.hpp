#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "cclab/chartable.hpp"
#include "cclab/groups.hpp"

namespace cclab {

constexpr int kCacheSchemaVersion = 1;
// bump whenever the table engine can produce different values or ordering
constexpr const char* kTableEngineVersion = "dixon-schneider/1";

uint64_t fnv1a64(const std::string& bytes);
std::string hex64(uint64_t v);

class CacheError : public std::runtime_error {
public:
    enum class Kind { Corrupt, Schema, Tampered, Mismatch };
    CacheError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Canonical JSON text of a built table (group must carry its spec). The
// content hash covers everything except the "hash" field itself.
std::string serialize_table(const CharacterTable& t);
// Content hash recorded in a serialized table.
std::string serialized_hash(const std::string& text);

// Rebuild a table from its serialization against freshly computed classes of
// the same group. Checks schema, engine, hash, class data and the table
// invariants; throws CacheError.
TablePtr restore_table(const std::string& text, const ClassesPtr& classes);

struct CacheEvent {
    enum class Status { Disabled, Hit, Miss, Rebuilt };
    Status status = Status::Disabled;
    std::string path;
    std::string warning;  // set when a cached file was rejected
};

const char* cache_status_name(CacheEvent::Status s);

class TableCache {
public:
    // empty dir disables the cache
    explicit TableCache(std::string dir = {});
    // CCLAB_CACHE_DIR, or disabled when unset
    static TableCache from_env();

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }
    // file name from (spec, schema version, engine version)
    std::string path_for(const GroupSpec& spec) const;

    // Load and re-verify, or build and store. Warnings go to the event.
    TablePtr table(const GroupSpec& spec, size_t enumeration_budget = kDefaultEnumerationBudget,
                   CacheEvent* event = nullptr) const;
    TablePtr table(const ClassesPtr& classes, CacheEvent* event = nullptr) const;

private:
    std::string dir_;
};

}  // namespace cclab
