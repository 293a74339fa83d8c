#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "algcheck/boolalg.hpp"
#include "algcheck/bring_euler.hpp"
#include "algcheck/common.hpp"

namespace algcheck {

using Triple3 = std::array<std::uint32_t, 3>;

/// A map X x X -> X x X on the carrier {0, ..., m-1}, stored as a full table.
struct SquareMapTable {
    std::uint32_t m = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> table;  // table[i*m + j] = phi(i, j)

    SquareMapTable() = default;
    explicit SquareMapTable(std::uint32_t carrier) : m{carrier}, table(std::size_t{carrier} * carrier) {}

    [[nodiscard]] std::pair<std::uint32_t, std::uint32_t> operator()(std::uint32_t i, std::uint32_t j) const {
        return table[i * m + j];
    }
    void set(std::uint32_t i, std::uint32_t j, std::uint32_t p, std::uint32_t q) { table[i * m + j] = {p, q}; }

    void validate() const {
        if (m == 0) throw ValidationError("square map carrier must be nonempty");
        if (table.size() != std::size_t{m} * m) throw ValidationError("square map table is not total");
        for (const auto& [p, q] : table) {
            if (p >= m || q >= m) throw ValidationError("square map output outside carrier");
        }
    }

    friend bool operator==(const SquareMapTable&, const SquareMapTable&) = default;
};

[[nodiscard]] inline Triple3 apply12(const SquareMapTable& phi, const Triple3& t) {
    const auto [p, q] = phi(t[0], t[1]);
    return {p, q, t[2]};
}
[[nodiscard]] inline Triple3 apply23(const SquareMapTable& phi, const Triple3& t) {
    const auto [p, q] = phi(t[1], t[2]);
    return {t[0], p, q};
}
/// phi12 phi23 phi12, applied right to left.
[[nodiscard]] inline Triple3 braid_lhs(const SquareMapTable& phi, const Triple3& t) {
    return apply12(phi, apply23(phi, apply12(phi, t)));
}
/// phi23 phi12 phi23, applied right to left.
[[nodiscard]] inline Triple3 braid_rhs(const SquareMapTable& phi, const Triple3& t) {
    return apply23(phi, apply12(phi, apply23(phi, t)));
}

struct BraidWitness {
    Triple3 input;
    Triple3 lhs;
    Triple3 rhs;

    [[nodiscard]] std::string to_string() const {
        const auto s = [](const Triple3& t) {
            return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
        };
        return "input=" + s(input) + " phi12.phi23.phi12=" + s(lhs) + " phi23.phi12.phi23=" + s(rhs);
    }
};

struct BraidVerdict {
    bool holds = true;
    std::optional<BraidWitness> witness;
};

/// Braid condition over all m^3 triples; the witness is the first failing
/// triple in lexicographic order.
[[nodiscard]] inline BraidVerdict braid_check(const SquareMapTable& phi) {
    phi.validate();
    if (phi.m > 512) throw PreconditionError("braid_check supports carriers up to 512");
    for (std::uint32_t x = 0; x < phi.m; ++x)
        for (std::uint32_t y = 0; y < phi.m; ++y)
            for (std::uint32_t z = 0; z < phi.m; ++z) {
                const Triple3 t{x, y, z};
                const auto l = braid_lhs(phi, t);
                const auto r = braid_rhs(phi, t);
                if (l != r) return {false, BraidWitness{t, l, r}};
            }
    return {true, std::nullopt};
}

namespace detail {

inline void require_braid_atoms(const BoolAlgebra& alg) {
    if (alg.atom_count() > 3) {
        throw PreconditionError("braid constructions need atom_count <= 3, got " + std::to_string(alg.atom_count()));
    }
}

template <typename F>
SquareMapTable tabulate(const BoolAlgebra& alg, F&& f) {
    require_braid_atoms(alg);
    SquareMapTable t{alg.size()};
    for (const auto& a : alg.enumerate())
        for (const auto& b : alg.enumerate()) {
            const auto [p, q] = f(a, b);
            t.set(a.mask(), b.mask(), p.mask(), q.mask());
        }
    return t;
}

} // namespace detail

/// (x, y) -> e^(hy) = (C_B(y), S_B(y)) on the elements of `alg`.
[[nodiscard]] inline SquareMapTable phi_complement(const BoolAlgebra& alg) {
    return detail::tabulate(alg, [](const Element&, const Element& y) { return std::pair{cb(y), sb(y)}; });
}

/// (a, b) -> (a v xb, (^x v xa) b).
[[nodiscard]] inline SquareMapTable phi_param(const BoolAlgebra& alg, const Element& x) {
    if (!alg.contains(x)) throw DomainError("parameter x is not an element of the algebra");
    return detail::tabulate(alg, [&](const Element& a, const Element& b) {
        return std::pair{a | (x & b), (~x | (x & a)) & b};
    });
}

/// C_B(x) Id v P S_B(x), i.e. (^x a, ^x b) v (x(a v b), x ab), built without phi_param.
[[nodiscard]] inline SquareMapTable blend(const BoolAlgebra& alg, const Element& x) {
    if (!alg.contains(x)) throw DomainError("parameter x is not an element of the algebra");
    return detail::tabulate(alg, [&](const Element& a, const Element& b) {
        const auto cx = cb(x);
        const auto sx = sb(x);
        return std::pair{(cx & a) | (sx & (a | b)), (cx & b) | (sx & (a & b))};
    });
}

/// Identity map on the elements of `alg`.
[[nodiscard]] inline SquareMapTable identity_map(const BoolAlgebra& alg) {
    return detail::tabulate(alg, [](const Element& a, const Element& b) { return std::pair{a, b}; });
}

/// P(a, b) = (a v b, ab).
[[nodiscard]] inline SquareMapTable join_meet_map(const BoolAlgebra& alg) {
    return detail::tabulate(alg, [](const Element& a, const Element& b) { return std::pair{a | b, a & b}; });
}

/// For every x: phi_param(x) satisfies the braid condition, and both triple
/// composites agree pointwise with the closed forms
///   (a v x(b v c), ^x b v xab v xac v xbc, ^x c v xabc).
[[nodiscard]] inline CheckReport check_param_braid_family(const BoolAlgebra& alg) {
    detail::require_braid_atoms(alg);
    CheckReport rep{"param_braid_family"};
    const auto elems = alg.enumerate();
    for (const auto& x : elems) {
        const auto phi = phi_param(alg, x);
        ++rep.cases;
        if (auto v = braid_check(phi); !v.holds) {
            rep.fail("x=" + x.to_string() + " " + v.witness->to_string());
        }
        const auto nx = ~x;
        for (const auto& a : elems)
            for (const auto& b : elems)
                for (const auto& c : elems) {
                    ++rep.cases;
                    const Triple3 closed{(a | (x & (b | c))).mask(),
                                         ((nx & b) | (x & a & b) | (x & a & c) | (x & b & c)).mask(),
                                         ((nx & c) | (x & a & b & c)).mask()};
                    const Triple3 t{a.mask(), b.mask(), c.mask()};
                    const auto l = braid_lhs(phi, t);
                    const auto r = braid_rhs(phi, t);
                    if (l != closed || r != closed) {
                        rep.fail("x=" + x.to_string() + " closed form mismatch at " +
                                 BraidWitness{t, l, r}.to_string());
                    }
                }
    }
    return rep;
}

struct BraidSolutions {
    std::size_t count = 0;
    std::vector<SquareMapTable> solutions;
};

/// All braid solutions among the (m^2)^(m^2) maps on {0,1}^2.
///
/// Candidates are visited with the image of input (0,0) most significant,
/// each output (p, q) coded as p*m + q; solutions come out in that order.
[[nodiscard]] inline BraidSolutions enumerate_solutions(std::uint32_t m) {
    if (m != 2) throw PreconditionError("enumerate_solutions supports m = 2 only");
    constexpr std::uint32_t inputs = 4;
    BraidSolutions out;
    for (std::uint32_t code = 0; code < 256; ++code) {
        SquareMapTable phi{m};
        for (std::uint32_t k = 0; k < inputs; ++k) {
            const std::uint32_t o = (code >> (2 * (inputs - 1 - k))) & 3U;
            phi.table[k] = {o / m, o % m};
        }
        if (braid_check(phi).holds) out.solutions.push_back(std::move(phi));
    }
    out.count = out.solutions.size();
    return out;
}

/// Text interchange format: first line m, then m^2 lines "i j -> p q".
inline void write_square_map(std::ostream& out, const SquareMapTable& phi) {
    out << phi.m << '\n';
    for (std::uint32_t i = 0; i < phi.m; ++i)
        for (std::uint32_t j = 0; j < phi.m; ++j) {
            const auto [p, q] = phi(i, j);
            out << i << ' ' << j << " -> " << p << ' ' << q << '\n';
        }
}

[[nodiscard]] inline SquareMapTable read_square_map(std::istream& in) {
    long long m = 0;
    if (!(in >> m) || m <= 0 || m > 512) throw ValidationError("square map file: bad carrier size");
    SquareMapTable phi{static_cast<std::uint32_t>(m)};
    std::vector<bool> seen(phi.table.size(), false);
    for (std::size_t line = 0; line < phi.table.size(); ++line) {
        long long i = 0, j = 0, p = 0, q = 0;
        std::string arrow;
        if (!(in >> i >> j >> arrow >> p >> q) || arrow != "->") {
            throw ValidationError("square map file: malformed entry " + std::to_string(line + 1));
        }
        if (i < 0 || j < 0 || p < 0 || q < 0 || i >= m || j >= m || p >= m || q >= m) {
            throw ValidationError("square map file: index out of range in entry " + std::to_string(line + 1));
        }
        const auto k = static_cast<std::size_t>(i * m + j);
        if (seen[k]) throw ValidationError("square map file: duplicate input " + std::to_string(i) + " " + std::to_string(j));
        seen[k] = true;
        phi.table[k] = {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)};
    }
    std::string extra;
    if (in >> extra) throw ValidationError("square map file: trailing data");
    return phi;
}

} // namespace algcheck
