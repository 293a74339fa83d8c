#pragma once

#include <string>
#include <vector>

#include "algcheck/boolalg.hpp"
#include "algcheck/common.hpp"
#include "algcheck/weak_bring.hpp"

namespace algcheck {

/// Nonzero base e of the exponential x -> ^x v e.
class ExpBase {
  public:
    explicit ExpBase(Element e) : e_{e} {
        if (e.is_bottom()) throw PreconditionError("exponential base must be nonzero");
    }
    [[nodiscard]] const Element& value() const { return e_; }

  private:
    Element e_;
};

[[nodiscard]] inline Element exp_e(const ExpBase& base, const Element& x) { return ~x | base.value(); }
[[nodiscard]] inline Element cb(const Element& x) { return ~x; }
[[nodiscard]] inline Element sb(const Element& x) { return x; }

/// Extension to the twisted square: E(a, b) = (e^a ^ ^b, e^a ^ b).
[[nodiscard]] inline PairElement big_e(const ExpBase& base, const PairElement& p) {
    const auto ea = exp_e(base, p.a);
    return {ea & ~p.b, ea & p.b};
}

/// Five scalar identities over all x, y in A, one report each:
/// exponential addition, C_B addition, S_B addition, and both fundamental formulas.
[[nodiscard]] inline std::vector<CheckReport> check_scalar_identities(const BoolAlgebra& alg, const ExpBase& base) {
    if (alg.atom_count() > 4) throw PreconditionError("scalar identity checks need atom_count <= 4");
    if (!alg.contains(base.value())) throw DomainError("base e is not an element of the algebra");

    std::vector<CheckReport> reps{{"scalar_exp_addition"},
                                  {"scalar_cos_addition"},
                                  {"scalar_sin_addition"},
                                  {"scalar_fundamental_squares"},
                                  {"scalar_fundamental_short"}};
    const auto elems = alg.enumerate();
    const auto top = alg.top();
    const auto witness = [](const Element& x, const Element& y, const Element& l, const Element& r) {
        return "x=" + x.to_string() + " y=" + y.to_string() + " lhs=" + l.to_string() + " rhs=" + r.to_string();
    };
    for (const auto& x : elems) {
        reps[3].cases++;
        reps[4].cases++;
        if (auto v = (sb(x) & sb(x)) | (cb(x) & cb(x)); !(v == top)) reps[3].fail("x=" + x.to_string());
        if (auto v = sb(x) | cb(x); !(v == top)) reps[4].fail("x=" + x.to_string());
        for (const auto& y : elems) {
            reps[0].cases++;
            reps[1].cases++;
            reps[2].cases++;
            if (auto l = exp_e(base, x | y), r = exp_e(base, x) & exp_e(base, y); !(l == r)) {
                reps[0].fail(witness(x, y, l, r));
            }
            if (auto l = cb(x | y), r = cb(x) & cb(y); !(l == r)) reps[1].fail(witness(x, y, l, r));
            if (auto l = sb(x | y), r = (sb(x) & cb(y)) | (cb(x) & sb(y)) | (sb(x) & sb(y)); !(l == r)) {
                reps[2].fail(witness(x, y, l, r));
            }
        }
    }
    return reps;
}

/// Two readings of the pair-level addition law, reported separately.
struct DualCheckReport {
    /// E(u v v) = E(u ^ v), literally as stated.
    CheckReport as_printed;
    /// E(u v v) = E(u) ^ E(v) with the twisted product on the right.
    CheckReport homomorphism;
};

/// Enumerates u outer, v inner, both in PairElement::index() order, so the
/// recorded witness is the first failure in that order.
[[nodiscard]] inline DualCheckReport check_pair_exp_addition(const BoolAlgebra& alg, const ExpBase& base) {
    if (alg.atom_count() > 3) throw PreconditionError("pair addition checks need atom_count <= 3");
    if (!alg.contains(base.value())) throw DomainError("base e is not an element of the algebra");

    DualCheckReport rep{{"pair_exp_as_printed"}, {"pair_exp_homomorphism"}};
    const auto elems = pair::enumerate(alg);
    const auto prefix = "e=" + base.value().to_string();
    for (const auto& u : elems) {
        for (const auto& v : elems) {
            rep.as_printed.cases++;
            rep.homomorphism.cases++;
            const auto lhs = big_e(base, pair_join(u, v));
            if (auto r = big_e(base, twisted_meet(u, v)); !(lhs == r)) {
                rep.as_printed.fail(prefix + " u=" + u.to_string() + " v=" + v.to_string() +
                                    " E(u v v)=" + lhs.to_string() + " E(u ^ v)=" + r.to_string());
            }
            if (auto r = twisted_meet(big_e(base, u), big_e(base, v)); !(lhs == r)) {
                rep.homomorphism.fail(prefix + " u=" + u.to_string() + " v=" + v.to_string() +
                                      " E(u v v)=" + lhs.to_string() + " E(u)E(v)=" + r.to_string());
            }
        }
    }
    return rep;
}

/// E(hy) = C_B(y) v h S_B(y) for every y, and E(h) = h.
/// Since h.(y,0) = (0,y), "hy" is evaluated at the pair (0, y).
[[nodiscard]] inline CheckReport check_euler_pair(const BoolAlgebra& alg, const ExpBase& base) {
    if (alg.atom_count() > 4) throw PreconditionError("pair Euler check needs atom_count <= 4");
    CheckReport rep{"pair_euler_formula"};
    const auto zero = alg.bottom();
    for (const auto& y : alg.enumerate()) {
        ++rep.cases;
        const PairElement hy{zero, y};
        if (!(twisted_meet(pair::h(alg), PairElement{y, zero}) == hy)) {
            rep.fail("h.(y,0) != (0,y) at y=" + y.to_string());
        }
        const auto lhs = big_e(base, hy);
        const PairElement rhs{cb(y), sb(y)};
        if (!(lhs == rhs)) rep.fail("y=" + y.to_string() + " E(hy)=" + lhs.to_string() + " rhs=" + rhs.to_string());
    }
    ++rep.cases;
    if (auto v = big_e(base, pair::h(alg)); !(v == pair::h(alg))) rep.fail("E(h)=" + v.to_string());
    return rep;
}

} // namespace algcheck
