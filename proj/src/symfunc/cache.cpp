// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/symfunc/cache.hpp"

#include "lz/ring/json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

namespace lz::symfunc {

namespace {

struct CacheState {
    std::recursive_mutex mutex;
    std::map<std::string, MultiPoly> memory;
    bool dir_initialized = false;
    std::optional<std::string> dir;
};

CacheState& state() {
    static CacheState s;
    return s;
}

std::optional<std::string> current_dir(CacheState& s) {
    if (!s.dir_initialized) {
        s.dir_initialized = true;
        if (const char* env = std::getenv("LZ_CACHE_DIR"); env != nullptr && *env != '\0')
            s.dir = env;
    }
    return s.dir;
}

void store(const std::string& dir, const std::filesystem::path& file, const MultiPoly& p) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(file);
    if (out)
        out << poly_to_json(p).dump() << '\n';
}

} // namespace

void set_cache_dir(std::optional<std::string> dir) {
    CacheState& s = state();
    std::lock_guard lock(s.mutex);
    s.dir_initialized = true;
    s.dir = std::move(dir);
}

std::optional<std::string> cache_dir() {
    CacheState& s = state();
    std::lock_guard lock(s.mutex);
    return current_dir(s);
}

MultiPoly cached(const std::string& key, const std::function<MultiPoly()>& compute) {
    CacheState& s = state();
    std::lock_guard lock(s.mutex);
    auto dir = current_dir(s);
    std::filesystem::path file;
    if (dir)
        file = std::filesystem::path(*dir) / (key + ".json");
    auto it = s.memory.find(key);
    if (it != s.memory.end()) {
        if (dir && !std::filesystem::exists(file))
            store(*dir, file, it->second);
        return it->second;
    }
    if (dir) {
        std::ifstream in(file);
        if (in) {
            try {
                MultiPoly p = poly_from_json(Json::parse(in));
                return s.memory.emplace(key, std::move(p)).first->second;
            } catch (const std::exception&) {
                // Unreadable table: recompute and overwrite it below.
            }
        }
    }
    MultiPoly p = compute();
    if (dir)
        store(*dir, file, p);
    return s.memory.emplace(key, std::move(p)).first->second;
}

} // namespace lz::symfunc
