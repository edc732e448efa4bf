// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/lambda/lambda.hpp"
#include "lz/rationality/rationality.hpp"
#include "lz/ring/json.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lz::measures {

using lambda::GradedSpace;

/// Numerical invariants of a smooth projective surface, supplied as input.
/// plurigenera[k] is P_{k+1}; h1n maps n >= 2 to the virtual dimension
/// h^1_n.
struct SurfaceData {
    BigInt q;
    BigInt pg;
    std::vector<BigInt> plurigenera;
    std::map<unsigned, BigInt> h1n;

    /// Throws DomainError "invalid_surface" unless q, pg, P_n >= 0 and P_1 = pg.
    void validate() const;
    BigInt plurigenus(unsigned n) const;
    std::string to_string() const;
};

/// Text form "q=2,pg=1,P=1,1,1,1,h1=0,0": P lists P_1, P_2, ...; h1 lists
/// h^1_2, h^1_3, .... Without P the list defaults to P_1 = pg. Throws
/// ParseError with a 1-based offset.
SurfaceData parse_surface(std::string_view text);
SurfaceData surface_from_json(const Json& j);
Json surface_to_json(const SurfaceData& s);

/// mu_1 = 1 + q s + pg s^2; mu_n = 1 + h^1_n s + P_n s^2 for n >= 2.
/// Throws DomainError "missing_data" when P_n or h^1_n is not supplied.
GradedSpace mu(const SurfaceData& s, unsigned n);

/// Entries mu(Sym^m X) = lambda^m(mu(X)) for m = 0..M.
struct MeasureSequence {
    std::vector<GradedSpace> entries;
};

MeasureSequence mu_sym_sequence(const SurfaceData& s, std::size_t max_m);

/// dim H^0(Hilb^m X, omega^n) = C(P_n + m - 1, m).
BigInt hilb_leading_term(const SurfaceData& s, unsigned n, std::size_t m);

struct BoundednessReport {
    std::size_t degree = 0;
    std::vector<BigInt> track; // s^degree coefficient of each entry
    BigInt max;
    bool s1_constant = false; // s^1 coefficient constant from m = 1 on
    BigInt s1_value;
    std::vector<BigInt> leading;
    std::vector<long> leading_degrees;
    /// Leading degree strictly increasing and leading coefficient
    /// nondecreasing from m = 1 on.
    bool leading_growing = false;
    bool leading_coefficient_strict = false;
};

BoundednessReport boundedness_check(const MeasureSequence& seq, std::size_t degree);

enum class HarnessVerdict { NoWitness, PeriodFound, Inapplicable, Inconclusive };
std::string to_string(HarnessVerdict v);

/// A candidate (n, i0) ruled out by the data in residue class r at index i.
struct Refutation {
    std::size_t n = 0;
    std::size_t i0 = 0;
    std::size_t r = 0;
    std::size_t i = 0;
    std::string reason;
};

/// Finite-window form of the unboundedness contradiction: constant terms 1,
/// a bounded fixed-degree track, growing leading terms, and every candidate
/// period (n, i0) with n <= n_max, i0 <= i0_max refuted on the range.
struct GrowthCertificate {
    bool established = false;
    std::size_t range = 0;
    bool constant_terms_one = false;
    std::size_t bounded_degree = 0;
    std::vector<std::optional<BigInt>> bounded_track;
    bool track_bounded = false;
    std::vector<BigInt> leading;
    std::vector<long> leading_degrees;
    bool leading_growing = false;
    std::vector<Refutation> refutations;
    std::vector<std::pair<std::size_t, std::size_t>> unrefuted;
    std::string statement;
};

struct HarnessReport {
    HarnessVerdict verdict = HarnessVerdict::Inconclusive;
    unsigned n = 1;
    std::size_t requested_m = 0;
    std::size_t range = 0;
    bool full_model = false;
    std::optional<rational::PeriodicResult> periodic;
    GrowthCertificate certificate;
    /// For inapplicable data: rational reconstruction of sum mu(Sym^m X) t^m.
    std::optional<rational::PadeResult> rational;
    std::vector<std::string> notes;
};

/// For n = 1 the exact sequence is tested with periodic_ratio_test; for
/// n >= 2 only the constant, s^1 and leading tracks are modelled. The range
/// is extended to at least i0_max + 3 n_max so every candidate is tested.
HarnessReport irrationality_harness(const SurfaceData& s, unsigned n, std::size_t max_m,
                                    std::size_t n_max, std::size_t i0_max);

Json to_json(const MeasureSequence& seq);
Json to_json(const BoundednessReport& r);
Json to_json(const HarnessReport& r);

} // namespace lz::measures
