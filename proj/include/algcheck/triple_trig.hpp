#pragma once

#include <string>
#include <vector>

#include "algcheck/boolalg.hpp"
#include "algcheck/common.hpp"

namespace algcheck {

/// Element of the product algebra A x A x A with pointwise operations.
struct Triple {
    Element a, b, c;

    Triple(Element a_, Element b_, Element c_) : a{a_}, b{b_}, c{c_} {
        Element::require_same(a, b);
        Element::require_same(b, c);
    }

    [[nodiscard]] std::string to_string() const {
        return "(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
    }

    friend bool operator==(const Triple& x, const Triple& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

[[nodiscard]] inline Triple operator|(const Triple& x, const Triple& y) { return {x.a | y.a, x.b | y.b, x.c | y.c}; }
[[nodiscard]] inline Triple operator&(const Triple& x, const Triple& y) { return {x.a & y.a, x.b & y.b, x.c & y.c}; }
[[nodiscard]] inline Triple operator~(const Triple& x) { return {~x.a, ~x.b, ~x.c}; }

namespace triple {

[[nodiscard]] inline Triple zero(const BoolAlgebra& alg) { return {alg.bottom(), alg.bottom(), alg.bottom()}; }
[[nodiscard]] inline Triple one(const BoolAlgebra& alg) { return {alg.top(), alg.top(), alg.top()}; }
/// The "imaginary unit" (0,1,1).
[[nodiscard]] inline Triple j_unit(const BoolAlgebra& alg) { return {alg.bottom(), alg.top(), alg.top()}; }
/// The "half turn" (1,0,0): cos of it is 1 and sin of it is 0.
[[nodiscard]] inline Triple pi(const BoolAlgebra& alg) { return {alg.top(), alg.bottom(), alg.bottom()}; }

/// All (2^n)^3 triples, lexicographic over components with ascending masks.
[[nodiscard]] inline std::vector<Triple> enumerate(const BoolAlgebra& alg) {
    const auto elems = alg.enumerate();
    std::vector<Triple> out;
    out.reserve(elems.size() * elems.size() * elems.size());
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems) out.emplace_back(a, b, c);
    return out;
}

} // namespace triple

/// (a,b,c) -> (^a, ^b, 1)
[[nodiscard]] inline Triple exp3(const Triple& x) { return {~x.a, ~x.b, BoolAlgebra{x.a.atoms()}.top()}; }
/// (a,b,c) -> (1, ^b, ^c)
[[nodiscard]] inline Triple cos3(const Triple& x) { return {BoolAlgebra{x.a.atoms()}.top(), ~x.b, ~x.c}; }
/// (a,b,c) -> (0, 0, c)
[[nodiscard]] inline Triple sin3(const Triple& x) {
    const auto zero = BoolAlgebra{x.a.atoms()}.bottom();
    return {zero, zero, x.c};
}

namespace detail {

inline void require_trig_atoms(const BoolAlgebra& alg) {
    if (alg.atom_count() > 4) {
        throw PreconditionError("exhaustive triple checks need atom_count <= 4, got " +
                                std::to_string(alg.atom_count()));
    }
}

template <typename Pred>
CheckReport for_all_triples(const BoolAlgebra& alg, std::string name, Pred&& pred) {
    require_trig_atoms(alg);
    CheckReport rep{std::move(name)};
    for (const auto& x : triple::enumerate(alg)) {
        ++rep.cases;
        if (auto why = pred(x); !why.empty()) rep.fail("X=" + x.to_string() + ": " + why);
    }
    return rep;
}

template <typename Pred>
CheckReport for_all_triple_pairs(const BoolAlgebra& alg, std::string name, Pred&& pred) {
    require_trig_atoms(alg);
    CheckReport rep{std::move(name)};
    const auto all = triple::enumerate(alg);
    for (const auto& x : all) {
        for (const auto& y : all) {
            ++rep.cases;
            if (!rep.passed) continue;
            if (auto why = pred(x, y); !why.empty()) {
                rep.fail("X=" + x.to_string() + " Y=" + y.to_string() + ": " + why);
            }
        }
    }
    return rep;
}

inline std::string mismatch(const char* what, const Triple& lhs, const Triple& rhs) {
    return std::string(what) + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

} // namespace detail

/// e^(X v Y) = e^X ^ e^Y and cos(X v Y) = cos X ^ cos Y over all pairs.
[[nodiscard]] inline CheckReport check_exp_addition(const BoolAlgebra& alg) {
    return detail::for_all_triple_pairs(alg, "exp_addition", [](const Triple& x, const Triple& y) -> std::string {
        if (auto l = exp3(x | y), r = exp3(x) & exp3(y); !(l == r)) return detail::mismatch("exp", l, r);
        if (auto l = cos3(x | y), r = cos3(x) & cos3(y); !(l == r)) return detail::mismatch("cos", l, r);
        return {};
    });
}

/// sin(X v Y) = [sin X ^ cos Y] v [cos X ^ sin Y] v [sin X ^ sin Y] over all pairs.
[[nodiscard]] inline CheckReport check_sin_addition(const BoolAlgebra& alg) {
    return detail::for_all_triple_pairs(alg, "sin_addition", [](const Triple& x, const Triple& y) -> std::string {
        const auto lhs = sin3(x | y);
        const auto rhs = (sin3(x) & cos3(y)) | (cos3(x) & sin3(y)) | (sin3(x) & sin3(y));
        return lhs == rhs ? std::string{} : detail::mismatch("sin", lhs, rhs);
    });
}

/// Both Pythagorean-style variants, each required to equal the top triple:
///   (sin X ^ sin X) v (cos X ^ cos X) v cos(sin X)   and   sin X v cos(sin X).
/// Neither variant is preferred; a counterexample names the variant that broke.
[[nodiscard]] inline CheckReport check_fundamental(const BoolAlgebra& alg) {
    const auto top = triple::one(alg);
    return detail::for_all_triples(alg, "fundamental_trig", [&](const Triple& x) -> std::string {
        const auto s = sin3(x);
        const auto c = cos3(x);
        if (auto v = (s & s) | (c & c) | cos3(s); !(v == top)) return detail::mismatch("squares-variant", v, top);
        if (auto v = s | cos3(s); !(v == top)) return detail::mismatch("short-variant", v, top);
        return {};
    });
}

/// e^(J ^ X) = cos X v (J ^ sin X) for all X.
[[nodiscard]] inline CheckReport check_euler_formula(const BoolAlgebra& alg) {
    const auto j = triple::j_unit(alg);
    return detail::for_all_triples(alg, "euler_formula", [&](const Triple& x) -> std::string {
        const auto lhs = exp3(j & x);
        const auto rhs = cos3(x) | (j & sin3(x));
        return lhs == rhs ? std::string{} : detail::mismatch("euler", lhs, rhs);
    });
}

/// e^(J ^ Pi) = 1, together with cos(Pi) = 1 and sin(Pi) = 0.
[[nodiscard]] inline CheckReport check_euler_identity(const BoolAlgebra& alg) {
    CheckReport rep{"euler_identity"};
    const auto pi = triple::pi(alg);
    rep.cases = 3;
    if (auto v = exp3(triple::j_unit(alg) & pi); !(v == triple::one(alg))) {
        rep.fail(detail::mismatch("e^(J^Pi)", v, triple::one(alg)));
    }
    if (auto v = cos3(pi); !(v == triple::one(alg))) rep.fail(detail::mismatch("cos(Pi)", v, triple::one(alg)));
    if (auto v = sin3(pi); !(v == triple::zero(alg))) rep.fail(detail::mismatch("sin(Pi)", v, triple::zero(alg)));
    return rep;
}

/// cos(X v Y) v [J ^ sin(X v Y)] = [cos X v (J ^ sin X)] ^ [cos Y v (J ^ sin Y)] over all pairs.
[[nodiscard]] inline CheckReport check_product_formula(const BoolAlgebra& alg) {
    const auto j = triple::j_unit(alg);
    return detail::for_all_triple_pairs(alg, "product_formula", [&](const Triple& x, const Triple& y) -> std::string {
        const auto euler = [&](const Triple& t) { return cos3(t) | (j & sin3(t)); };
        const auto lhs = euler(x | y);
        const auto rhs = euler(x) & euler(y);
        return lhs == rhs ? std::string{} : detail::mismatch("product", lhs, rhs);
    });
}

} // namespace algcheck
