// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/ring/multipoly.hpp"
#include "lz/ring/ring.hpp"

#include <json.hpp>

namespace lz {

using Json = nlohmann::ordered_json;

/// {"terms":[{"c":"<int>","e":{"<var>":exp,...}},...]}, terms in ascending
/// monomial order so that encoding is canonical.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

/// {"kind":"integers"} | {"kind":"poly","vars":[...],"families":[...]} |
/// {"kind":"square_zero",...} | {"kind":"fraction","of":{...}}.
Json ring_to_json(const Ring& r);
Ring ring_from_json(const Json& j);

/// Polynomial encoding outside fraction fields; {"num":...,"den":...} inside.
Json elem_to_json(const Ring& r, const Elem& a);
Elem elem_from_json(const Ring& r, const Json& j);

} // namespace lz
