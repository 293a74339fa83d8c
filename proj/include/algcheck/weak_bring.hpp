#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "algcheck/boolalg.hpp"
#include "algcheck/common.hpp"

namespace algcheck {

/// Element a v hb of the twisted square A x A, stored as the pair (a, b).
struct PairElement {
    Element a, b;

    PairElement(Element a_, Element b_) : a{a_}, b{b_} { Element::require_same(a, b); }

    [[nodiscard]] std::string to_string() const { return "(" + a.to_string() + "," + b.to_string() + ")"; }

    /// Position in the canonical order (a major, then b; ascending masks).
    [[nodiscard]] std::uint32_t index() const { return (a.mask() << a.atoms()) | b.mask(); }

    static PairElement from_index(const BoolAlgebra& alg, std::uint32_t idx) {
        return {alg.element(idx >> alg.atom_count()), alg.element(idx & alg.full_mask())};
    }

    friend bool operator==(const PairElement& p, const PairElement& q) { return p.a == q.a && p.b == q.b; }
};

[[nodiscard]] inline PairElement pair_join(const PairElement& p, const PairElement& q) { return {p.a | q.a, p.b | q.b}; }

[[nodiscard]] inline PairElement pair_hat(const PairElement& p) { return {~p.a, ~p.b}; }

/// (a,b)(c,d) = (ac, ad v bc v bd): multiplication in A[h] with h^2 = h.
[[nodiscard]] inline PairElement twisted_meet(const PairElement& p, const PairElement& q) {
    return {p.a & q.a, (p.a & q.b) | (p.b & q.a) | (p.b & q.b)};
}

namespace pair {

[[nodiscard]] inline PairElement zero(const BoolAlgebra& alg) { return {alg.bottom(), alg.bottom()}; }
[[nodiscard]] inline PairElement one(const BoolAlgebra& alg) { return {alg.top(), alg.bottom()}; }
[[nodiscard]] inline PairElement h(const BoolAlgebra& alg) { return {alg.bottom(), alg.top()}; }

/// All 4^n pairs in canonical index order.
[[nodiscard]] inline std::vector<PairElement> enumerate(const BoolAlgebra& alg) {
    std::vector<PairElement> out;
    const std::uint32_t count = alg.size() * alg.size();
    out.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) out.push_back(PairElement::from_index(alg, i));
    return out;
}

} // namespace pair

/// Finite structure (X, v, 0, ., 1, ^) given purely by operation tables.
///
/// Nothing about the tables is assumed; `check_axioms` decides what holds.
struct BRingCandidate {
    std::uint32_t m = 0;
    std::vector<std::uint32_t> join_table;  // m*m, row-major: join_table[x*m + y] = x v y
    std::vector<std::uint32_t> prod_table;  // m*m
    std::vector<std::uint32_t> hat_table;   // m
    std::uint32_t zero_index = 0;
    std::uint32_t one_index = 0;

    [[nodiscard]] std::uint32_t join(std::uint32_t x, std::uint32_t y) const { return join_table[x * m + y]; }
    [[nodiscard]] std::uint32_t prod(std::uint32_t x, std::uint32_t y) const { return prod_table[x * m + y]; }
    [[nodiscard]] std::uint32_t hat(std::uint32_t x) const { return hat_table[x]; }

    void validate() const {
        if (m == 0) throw ValidationError("carrier must be nonempty");
        const std::size_t sq = std::size_t{m} * m;
        if (join_table.size() != sq || prod_table.size() != sq || hat_table.size() != m) {
            throw ValidationError("table sizes do not match carrier size " + std::to_string(m));
        }
        const auto in_range = [&](std::uint32_t v) { return v < m; };
        for (auto v : join_table)
            if (!in_range(v)) throw ValidationError("join table entry " + std::to_string(v) + " out of range");
        for (auto v : prod_table)
            if (!in_range(v)) throw ValidationError("product table entry " + std::to_string(v) + " out of range");
        for (auto v : hat_table)
            if (!in_range(v)) throw ValidationError("hat table entry " + std::to_string(v) + " out of range");
        if (!in_range(zero_index) || !in_range(one_index)) throw ValidationError("zero/one index out of range");
    }
};

struct AxiomResult {
    int number = 0;
    std::string law;
    bool passed = true;
    /// Carrier indices of the first failing tuple (x), (x,y) or (x,y,z).
    std::optional<std::vector<std::uint32_t>> witness;
    /// Laws (10) and (11) are checked exactly as stated even though they are
    /// instances of commutativity whenever the relevant operation commutes.
    bool as_printed = false;
};

struct AxiomReport {
    std::array<AxiomResult, 11> axioms;

    [[nodiscard]] bool all_passed() const {
        for (const auto& a : axioms)
            if (!a.passed) return false;
        return true;
    }
};

/// Tables of the twisted square of `alg`. Carrier index = PairElement::index().
[[nodiscard]] inline BRingCandidate build_pair_ring(const BoolAlgebra& alg) {
    if (alg.atom_count() > 3) {
        throw PreconditionError("pair ring tables need atom_count <= 3, got " + std::to_string(alg.atom_count()));
    }
    const auto elems = pair::enumerate(alg);
    BRingCandidate r;
    r.m = static_cast<std::uint32_t>(elems.size());
    r.join_table.resize(std::size_t{r.m} * r.m);
    r.prod_table.resize(std::size_t{r.m} * r.m);
    r.hat_table.resize(r.m);
    for (const auto& p : elems) {
        r.hat_table[p.index()] = pair_hat(p).index();
        for (const auto& q : elems) {
            r.join_table[p.index() * r.m + q.index()] = pair_join(p, q).index();
            r.prod_table[p.index() * r.m + q.index()] = twisted_meet(p, q).index();
        }
    }
    r.zero_index = pair::zero(alg).index();
    r.one_index = pair::one(alg).index();
    return r;
}

[[nodiscard]] inline AxiomReport check_axioms(const BRingCandidate& c) {
    c.validate();
    if (c.m > 256) throw PreconditionError("axiom checker supports m <= 256, got " + std::to_string(c.m));

    AxiomReport rep;
    const char* laws[11] = {
        "(x v y) v z = x v (y v z)", "x v y = y v x",       "x v 0 = x",         "(x.y).z = x.(y.z)",
        "x.1 = x = 1.x",             "x.0 = 0 = 0.x",       "x.(y v z) = x.y v x.z", "(x v y).z = x.z v y.z",
        "^^x = x",                   "x v ^x = ^x v x",     "x.^x = ^x.x",
    };
    for (int i = 0; i < 11; ++i) {
        rep.axioms[i].number = i + 1;
        rep.axioms[i].law = laws[i];
    }
    rep.axioms[9].as_printed = true;
    rep.axioms[10].as_printed = true;

    const auto fail = [&](int number, std::vector<std::uint32_t> w) {
        auto& a = rep.axioms[number - 1];
        if (a.passed) {
            a.passed = false;
            a.witness = std::move(w);
        }
    };
    const std::uint32_t m = c.m;
    const std::uint32_t zero = c.zero_index;
    const std::uint32_t one = c.one_index;

    for (std::uint32_t x = 0; x < m; ++x) {
        if (c.join(x, zero) != x) fail(3, {x});
        if (c.prod(x, one) != x || c.prod(one, x) != x) fail(5, {x});
        if (c.prod(x, zero) != zero || c.prod(zero, x) != zero) fail(6, {x});
        if (c.hat(c.hat(x)) != x) fail(9, {x});
        if (c.join(x, c.hat(x)) != c.join(c.hat(x), x)) fail(10, {x});
        if (c.prod(x, c.hat(x)) != c.prod(c.hat(x), x)) fail(11, {x});
        for (std::uint32_t y = 0; y < m; ++y) {
            if (c.join(x, y) != c.join(y, x)) fail(2, {x, y});
            for (std::uint32_t z = 0; z < m; ++z) {
                if (c.join(c.join(x, y), z) != c.join(x, c.join(y, z))) fail(1, {x, y, z});
                if (c.prod(c.prod(x, y), z) != c.prod(x, c.prod(y, z))) fail(4, {x, y, z});
                if (c.prod(x, c.join(y, z)) != c.join(c.prod(x, y), c.prod(x, z))) fail(7, {x, y, z});
                if (c.prod(c.join(x, y), z) != c.join(c.prod(x, z), c.prod(y, z))) fail(8, {x, y, z});
            }
        }
    }
    return rep;
}

/// Plain-text table format:
///   m zero_index one_index
///   m rows of join_table, m rows of prod_table, one row of hat_table
/// All entries are whitespace-separated decimal indices.
[[nodiscard]] inline BRingCandidate read_bring_tables(std::istream& in) {
    BRingCandidate c;
    const auto next = [&](const char* what) {
        long long v = 0;
        if (!(in >> v)) throw ValidationError(std::string("table file truncated while reading ") + what);
        if (v < 0 || v > 0xFFFFFFFFLL) throw ValidationError(std::string("negative or oversized ") + what);
        return static_cast<std::uint32_t>(v);
    };
    c.m = next("m");
    if (c.m == 0 || c.m > 256) throw ValidationError("carrier size must be in [1, 256]");
    c.zero_index = next("zero_index");
    c.one_index = next("one_index");
    const std::size_t sq = std::size_t{c.m} * c.m;
    c.join_table.resize(sq);
    c.prod_table.resize(sq);
    c.hat_table.resize(c.m);
    for (auto& v : c.join_table) v = next("join_table");
    for (auto& v : c.prod_table) v = next("prod_table");
    for (auto& v : c.hat_table) v = next("hat_table");
    std::string extra;
    if (in >> extra) throw ValidationError("trailing data in table file: '" + extra + "'");
    c.validate();
    return c;
}

inline void write_bring_tables(std::ostream& out, const BRingCandidate& c) {
    out << c.m << ' ' << c.zero_index << ' ' << c.one_index << '\n';
    const auto rows = [&](const std::vector<std::uint32_t>& t) {
        for (std::uint32_t r = 0; r < c.m; ++r) {
            for (std::uint32_t k = 0; k < c.m; ++k) out << (k ? " " : "") << t[r * c.m + k];
            out << '\n';
        }
    };
    rows(c.join_table);
    rows(c.prod_table);
    for (std::uint32_t k = 0; k < c.m; ++k) out << (k ? " " : "") << c.hat_table[k];
    out << '\n';
}

} // namespace algcheck
