// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/ring/multipoly.hpp"

#include <functional>
#include <optional>
#include <string>

namespace lz::symfunc {

/// Memoizes a universal polynomial under `key`. When a cache directory is
/// configured (set_cache_dir, or the LZ_CACHE_DIR environment variable) the
/// table is also read from and written to <dir>/<key>.json.
MultiPoly cached(const std::string& key, const std::function<MultiPoly()>& compute);

void set_cache_dir(std::optional<std::string> dir);
std::optional<std::string> cache_dir();

} // namespace lz::symfunc
