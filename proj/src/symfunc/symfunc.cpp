// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/symfunc/symfunc.hpp"

#include "lz/error.hpp"
#include "lz/symfunc/cache.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace lz::symfunc {

namespace {

using Packed = unsigned __int128;

struct PackedHash {
    std::size_t operator()(Packed k) const noexcept {
        auto lo = static_cast<std::uint64_t>(k);
        auto hi = static_cast<std::uint64_t>(k >> 64);
        return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

constexpr std::uint32_t kMaxPackedRoots = 16;

void partitions_into(std::uint32_t weight, std::uint32_t max_parts, std::uint32_t max_part,
                     Partition& current, std::vector<Partition>& out) {
    if (weight == 0) {
        out.push_back(current);
        return;
    }
    if (max_parts == 0)
        return;
    for (std::uint32_t part = std::min(weight, max_part); part >= 1; --part) {
        // The remaining parts cannot exceed `part`, so they hold at most
        // part * (max_parts - 1).
        if (static_cast<std::uint64_t>(part) * max_parts < weight)
            break;
        current.push_back(part);
        partitions_into(weight - part, max_parts - 1, part, current, out);
        current.pop_back();
    }
}

BigInt factorial(std::uint32_t n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Number of distinct rearrangements of an exponent vector.
BigInt arrangements(const std::vector<std::uint32_t>& exps) {
    std::map<std::uint32_t, std::uint32_t> mult;
    for (auto e : exps)
        ++mult[e];
    BigInt n = factorial(static_cast<std::uint32_t>(exps.size()));
    for (const auto& [v, k] : mult)
        n /= factorial(k);
    return n;
}

class MatrixCounter {
public:
    explicit MatrixCounter(std::vector<std::uint32_t> rows) : rows_(std::move(rows)) {}

    BigInt count(std::size_t row, const std::vector<std::uint32_t>& cols) {
        if (row == rows_.size())
            return cols.empty() ? BigInt(1) : BigInt(0);
        auto key = std::make_pair(row, cols);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        BigInt total = 0;
        std::uint32_t r = rows_[row];
        if (r <= cols.size()) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> groups;
            for (auto v : cols) {
                if (!groups.empty() && groups.back().first == v)
                    ++groups.back().second;
                else
                    groups.emplace_back(v, 1);
            }
            std::vector<std::uint32_t> take(groups.size(), 0);
            choose(row, groups, take, 0, r, BigInt(1), total);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    void choose(std::size_t row, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& groups,
                std::vector<std::uint32_t>& take, std::size_t g, std::uint32_t left,
                const BigInt& ways, BigInt& total) {
        if (g == groups.size()) {
            if (left != 0)
                return;
            std::vector<std::uint32_t> next;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                auto [v, cnt] = groups[i];
                for (std::uint32_t c = 0; c < cnt - take[i]; ++c)
                    next.push_back(v);
                if (v > 1) {
                    for (std::uint32_t c = 0; c < take[i]; ++c)
                        next.push_back(v - 1);
                }
            }
            std::sort(next.begin(), next.end(), std::greater<>());
            total += ways * count(row + 1, next);
            return;
        }
        auto cnt = groups[g].second;
        for (std::uint32_t k = 0; k <= std::min(cnt, left); ++k) {
            take[g] = k;
            choose(row, groups, take, g + 1, left - k,
                   ways * binomial(BigInt(cnt), k), total);
        }
        take[g] = 0;
    }

    std::vector<std::uint32_t> rows_;
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, BigInt> memo_;
};

struct RootIndex {
    std::size_t block;
    std::size_t index;
};

std::map<std::string, RootIndex> root_table(const std::vector<std::uint32_t>& blocks) {
    std::map<std::string, RootIndex> table;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t i = 0; i < blocks[b]; ++i)
            table.emplace(root_name(b, i + 1), RootIndex{b, i});
    }
    return table;
}

} // namespace

std::vector<Partition> partitions(std::uint32_t weight, std::uint32_t max_parts,
                                  std::uint32_t max_part) {
    std::vector<Partition> out;
    Partition current;
    partitions_into(weight, max_parts, max_part, current, out);
    return out;
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty())
        return out;
    for (std::uint32_t j = 1; j <= p.front(); ++j) {
        std::uint32_t c = 0;
        for (auto part : p) {
            if (part >= j)
                ++c;
        }
        out.push_back(c);
    }
    return out;
}

BigInt count_01_matrices(const std::vector<std::uint32_t>& rows,
                         const std::vector<std::uint32_t>& cols) {
    std::uint64_t rs = 0;
    std::uint64_t cs = 0;
    for (auto r : rows)
        rs += r;
    std::vector<std::uint32_t> c;
    for (auto v : cols) {
        cs += v;
        if (v > 0)
            c.push_back(v);
    }
    if (rs != cs)
        return 0;
    std::sort(c.begin(), c.end(), std::greater<>());
    if (!c.empty() && c.front() > rows.size())
        return 0;
    MatrixCounter counter(rows);
    return counter.count(0, c);
}

std::string root_name(std::size_t block, std::size_t index) {
    return std::string(1, static_cast<char>('a' + block)) + std::to_string(index);
}

std::string elementary_symbol(std::size_t block, std::size_t index) {
    return std::string(1, static_cast<char>('e' + block)) + std::to_string(index);
}

MultiPoly elementary(std::uint32_t i, const std::vector<std::string>& vars) {
    // Coefficients of prod (1 + v t) up to t^i.
    std::vector<MultiPoly> c(i + 1);
    c[0] = MultiPoly(1L);
    for (const auto& v : vars) {
        MultiPoly x = MultiPoly::variable(v);
        for (std::uint32_t k = i; k >= 1; --k)
            c[k] += c[k - 1] * x;
    }
    return c[i];
}

DominantForm dominant_form(const MultiPoly& p, const std::vector<std::uint32_t>& blocks) {
    auto table = root_table(blocks);
    struct Group {
        BigInt coeff;
        BigInt count;
    };
    std::map<std::vector<Partition>, Group> groups;
    std::map<std::vector<Partition>, BigInt> expected;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::vector<std::uint32_t>> exps(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b)
            exps[b].assign(blocks[b], 0);
        for (const auto& [v, e] : m.factors()) {
            auto it = table.find(v);
            if (it == table.end())
                throw DomainError("not_symmetric", "variable " + v + " is not a root variable");
            exps[it->second.block][it->second.index] = e;
        }
        std::vector<Partition> key;
        BigInt arr = 1;
        for (auto& block_exps : exps) {
            arr *= arrangements(block_exps);
            Partition part = block_exps;
            std::sort(part.begin(), part.end(), std::greater<>());
            while (!part.empty() && part.back() == 0)
                part.pop_back();
            key.push_back(std::move(part));
        }
        auto it = groups.find(key);
        if (it == groups.end()) {
            groups.emplace(key, Group{c, BigInt(1)});
            expected.emplace(std::move(key), arr);
        } else {
            if (it->second.coeff != c)
                throw DomainError("not_symmetric", "coefficients differ on the orbit of " +
                                                       m.to_string());
            it->second.count += 1;
        }
    }
    DominantForm form;
    for (auto& [key, g] : groups) {
        if (g.count != expected[key])
            throw DomainError("not_symmetric", "polynomial is not symmetric in its root blocks");
        form.emplace(key, g.coeff);
    }
    return form;
}

MultiPoly rewrite_dominant(DominantForm form, const std::vector<std::uint32_t>& blocks) {
    // e_mu in one block, expanded on monomial symmetric functions.
    std::map<std::pair<Partition, std::uint32_t>, std::vector<std::pair<Partition, BigInt>>> cache;
    auto expansion = [&](const Partition& mu, std::uint32_t roots)
        -> const std::vector<std::pair<Partition, BigInt>>& {
        auto key = std::make_pair(mu, roots);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        std::uint32_t weight = 0;
        for (auto x : mu)
            weight += x;
        std::vector<std::pair<Partition, BigInt>> terms;
        MatrixCounter counter(mu);
        for (auto& nu : partitions(weight, roots, static_cast<std::uint32_t>(mu.size()))) {
            BigInt c = counter.count(0, nu);
            if (c != 0)
                terms.emplace_back(std::move(nu), std::move(c));
        }
        return cache.emplace(std::move(key), std::move(terms)).first->second;
    };

    MultiPoly result;
    while (!form.empty()) {
        auto top = std::prev(form.end());
        std::vector<Partition> lead = top->first;
        BigInt c = top->second;
        std::vector<Monomial::Factor> symbols;
        std::vector<const std::vector<std::pair<Partition, BigInt>>*> parts;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (!lead[b].empty() && lead[b].size() > blocks[b])
                throw DomainError("not_symmetric", "partition longer than its root block");
            Partition mu = conjugate(lead[b]);
            for (auto j : mu)
                symbols.emplace_back(elementary_symbol(b, j), 1);
            parts.push_back(&expansion(mu, blocks[b]));
        }
        result.add_term(Monomial(std::move(symbols)), c);
        // Subtract c * prod_b e_{mu_b} in the dominant basis.
        std::vector<std::size_t> idx(blocks.size(), 0);
        while (true) {
            std::vector<Partition> key;
            BigInt coeff = c;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                const auto& [nu, m] = (*parts[b])[idx[b]];
                key.push_back(nu);
                coeff *= m;
            }
            auto [it, inserted] = form.try_emplace(std::move(key), -coeff);
            if (!inserted) {
                it->second -= coeff;
                if (it->second == 0)
                    form.erase(it);
            }
            std::size_t b = 0;
            while (b < blocks.size()) {
                if (++idx[b] < parts[b]->size())
                    break;
                idx[b] = 0;
                ++b;
            }
            if (b == blocks.size())
                break;
        }
    }
    return result;
}

MultiPoly rewrite_in_elementaries(const MultiPoly& p, const std::vector<std::uint32_t>& blocks) {
    return rewrite_dominant(dominant_form(p, blocks), blocks);
}

MultiPoly back_substitute(const MultiPoly& expr, const std::vector<std::uint32_t>& blocks) {
    std::map<std::string, MultiPoly> values;
    for (const auto& v : expr.variables()) {
        bool found = false;
        for (std::size_t b = 0; b < blocks.size() && !found; ++b) {
            std::string prefix(1, static_cast<char>('e' + b));
            if (v.size() > 1 && v.compare(0, 1, prefix) == 0 &&
                std::all_of(v.begin() + 1, v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                std::vector<std::string> roots;
                for (std::size_t i = 1; i <= blocks[b]; ++i)
                    roots.push_back(root_name(b, i));
                auto index = static_cast<std::uint32_t>(std::stoul(v.substr(1)));
                values.emplace(v, elementary(index, roots));
                found = true;
            }
        }
        if (!found)
            throw DomainError("unknown_symbol", "symbol " + v + " is not an elementary symbol");
    }
    return expr.substitute(values);
}

MultiPoly universal_P_restricted(std::uint32_t p, std::uint32_t m, std::uint32_t k) {
    std::string key = "P_" + std::to_string(p) + "_" + std::to_string(m) + "_" + std::to_string(k);
    return cached(key, [&] {
        if (p == 0)
            return MultiPoly(1L);
        if (static_cast<std::uint64_t>(m) * k < p)
            return MultiPoly();
        DominantForm form;
        for (const auto& lambda : partitions(p, m, k)) {
            MatrixCounter counter(lambda);
            for (const auto& rho : partitions(p, k, m)) {
                BigInt c = counter.count(0, rho);
                if (c != 0)
                    form.emplace(std::vector<Partition>{lambda, rho}, c);
            }
        }
        return rewrite_dominant(std::move(form), {m, k});
    });
}

MultiPoly universal_P(std::uint32_t n) { return universal_P_restricted(n, n, n); }

MultiPoly universal_Q_restricted(std::uint32_t m, std::uint32_t n, std::uint32_t roots) {
    std::string key = "Q_" + std::to_string(m) + "_" + std::to_string(n) + "_" + std::to_string(roots);
    return cached(key, [&] {
        if (m == 0)
            return MultiPoly(1L);
        if (n > roots)
            return MultiPoly();
        if (n == 0)
            return m <= 1 ? MultiPoly(1L) : MultiPoly();
        if (roots > kMaxPackedRoots)
            throw DomainError("too_large", "universal Q needs more than " +
                                               std::to_string(kMaxPackedRoots) + " roots");
        if (m > 255)
            throw DomainError("too_large", "lambda order above 255");
        using Layer = std::unordered_map<Packed, std::uint64_t, PackedHash>;
        std::vector<Layer> layers(m + 1);
        layers[0].emplace(Packed(0), 1);
        std::uint32_t seen = 0;
        for (std::uint32_t mask = 0; mask < (1U << roots); ++mask) {
            if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != n)
                continue;
            Packed shift = 0;
            for (std::uint32_t j = 0; j < roots; ++j) {
                if (mask & (1U << j))
                    shift += Packed(1) << (8 * (roots - 1 - j));
            }
            ++seen;
            for (std::uint32_t l = std::min(m, seen); l >= 1; --l) {
                Layer& dst = layers[l];
                for (const auto& [k, c] : layers[l - 1]) {
                    std::uint64_t& slot = dst[k + shift];
                    if (__builtin_add_overflow(slot, c, &slot))
                        throw DomainError("too_large", "coefficient overflow in universal Q");
                }
            }
        }
        DominantForm form;
        for (const auto& [k, c] : layers[m]) {
            Partition part;
            bool dominant = true;
            std::uint32_t prev = 255;
            for (std::uint32_t j = 0; j < roots; ++j) {
                auto e = static_cast<std::uint32_t>((k >> (8 * (roots - 1 - j))) & 0xff);
                if (e > prev) {
                    dominant = false;
                    break;
                }
                prev = e;
                if (e > 0)
                    part.push_back(e);
            }
            if (dominant)
                form.emplace(std::vector<Partition>{part}, BigInt(std::to_string(c), 10));
        }
        return rewrite_dominant(std::move(form), {roots});
    });
}

MultiPoly universal_Q(std::uint32_t m, std::uint32_t n) { return universal_Q_restricted(m, n, m * n); }

MultiPoly newton_polynomial(std::uint32_t n) {
    if (n == 0)
        throw DomainError("invalid_argument", "Newton polynomial index must be positive");
    std::vector<MultiPoly> p(n + 1);
    for (std::uint32_t k = 1; k <= n; ++k) {
        MultiPoly acc;
        for (std::uint32_t i = 1; i < k; ++i) {
            MultiPoly t = MultiPoly::variable("e" + std::to_string(i)) * p[k - i];
            if (i % 2 == 1)
                acc += t;
            else
                acc -= t;
        }
        MultiPoly last = MultiPoly::variable("e" + std::to_string(k)) * BigInt(k);
        if (k % 2 == 1)
            acc += last;
        else
            acc -= last;
        p[k] = std::move(acc);
    }
    return p[n];
}

MultiPoly witt_product_coeff(std::uint32_t p) {
    return rename_prefix(universal_P(p), {{"e", "x"}, {"f", "y"}});
}

MultiPoly rename_prefix(const MultiPoly& p, const std::map<std::string, std::string>& prefixes) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> factors;
        for (const auto& [v, e] : m.factors()) {
            std::string name = v;
            for (const auto& [from, to] : prefixes) {
                if (v.size() > from.size() && v.compare(0, from.size(), from) == 0 &&
                    std::isdigit(static_cast<unsigned char>(v[from.size()]))) {
                    name = to + v.substr(from.size());
                    break;
                }
            }
            factors.emplace_back(std::move(name), e);
        }
        out.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

} // namespace lz::symfunc
