#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algcheck/common.hpp"

namespace algcheck {

/// Element of the powerset Boolean algebra on `atoms` generators.
///
/// Bit i of `mask` is set iff atom i lies below the element. Two elements are
/// compatible only when they come from algebras with the same atom count;
/// every binary operation, including `==`, throws DomainError otherwise.
class Element {
  public:
    constexpr Element() = default;

    [[nodiscard]] constexpr unsigned atoms() const { return atoms_; }
    [[nodiscard]] constexpr std::uint32_t mask() const { return mask_; }
    [[nodiscard]] constexpr std::uint32_t full_mask() const { return (std::uint32_t{1} << atoms_) - 1; }

    [[nodiscard]] constexpr bool is_bottom() const { return mask_ == 0; }
    [[nodiscard]] constexpr bool is_top() const { return mask_ == full_mask(); }

    /// Binary digits, highest atom first (n=3, mask 6 -> "110").
    [[nodiscard]] std::string to_string() const {
        std::string s(atoms_, '0');
        for (unsigned i = 0; i < atoms_; ++i) {
            if (mask_ & (std::uint32_t{1} << i)) s[atoms_ - 1 - i] = '1';
        }
        return s;
    }

    friend bool operator==(const Element& x, const Element& y) {
        require_same(x, y);
        return x.mask_ == y.mask_;
    }

    static void require_same(const Element& x, const Element& y) {
        if (x.atoms_ != y.atoms_) {
            throw DomainError("operands belong to different Boolean algebras (" + std::to_string(x.atoms_) +
                              " vs " + std::to_string(y.atoms_) + " atoms)");
        }
    }

  private:
    friend class BoolAlgebra;
    constexpr Element(unsigned atoms, std::uint32_t mask) : atoms_{static_cast<std::uint8_t>(atoms)}, mask_{mask} {}

    std::uint8_t atoms_ = 0;
    std::uint32_t mask_ = 0;
};

/// Free Boolean algebra on n atoms (the powerset of an n-set).
class BoolAlgebra {
  public:
    static constexpr unsigned max_atoms = 16;

    explicit BoolAlgebra(unsigned atom_count) : atoms_{atom_count} {
        if (atom_count < 1 || atom_count > max_atoms) {
            throw ValidationError("atom_count must be in [1, 16], got " + std::to_string(atom_count));
        }
    }

    [[nodiscard]] unsigned atom_count() const { return atoms_; }
    [[nodiscard]] std::uint32_t size() const { return std::uint32_t{1} << atoms_; }
    [[nodiscard]] std::uint32_t full_mask() const { return size() - 1; }

    [[nodiscard]] Element element(std::uint32_t mask) const {
        if (mask > full_mask()) {
            throw ValidationError("mask " + std::to_string(mask) + " out of range for " + std::to_string(atoms_) +
                                  " atoms");
        }
        return Element{atoms_, mask};
    }
    [[nodiscard]] Element top() const { return Element{atoms_, full_mask()}; }
    [[nodiscard]] Element bottom() const { return Element{atoms_, 0}; }

    /// All 2^n elements in ascending mask order.
    [[nodiscard]] std::vector<Element> enumerate() const {
        std::vector<Element> out;
        out.reserve(size());
        for (std::uint32_t m = 0; m < size(); ++m) out.push_back(Element{atoms_, m});
        return out;
    }

    [[nodiscard]] bool contains(const Element& x) const { return x.atoms() == atoms_; }

    friend bool operator==(const BoolAlgebra&, const BoolAlgebra&) = default;

  private:
    unsigned atoms_;
};

[[nodiscard]] inline Element join(const Element& x, const Element& y) {
    Element::require_same(x, y);
    return BoolAlgebra{x.atoms()}.element(x.mask() | y.mask());
}

[[nodiscard]] inline Element meet(const Element& x, const Element& y) {
    Element::require_same(x, y);
    return BoolAlgebra{x.atoms()}.element(x.mask() & y.mask());
}

[[nodiscard]] inline Element complement(const Element& x) {
    return BoolAlgebra{x.atoms()}.element(x.full_mask() ^ x.mask());
}

[[nodiscard]] inline Element top(const BoolAlgebra& alg) { return alg.top(); }
[[nodiscard]] inline Element bottom(const BoolAlgebra& alg) { return alg.bottom(); }
[[nodiscard]] inline std::vector<Element> enumerate(const BoolAlgebra& alg) { return alg.enumerate(); }

// Operator spellings used by the identity checks.
[[nodiscard]] inline Element operator|(const Element& x, const Element& y) { return join(x, y); }
[[nodiscard]] inline Element operator&(const Element& x, const Element& y) { return meet(x, y); }
[[nodiscard]] inline Element operator~(const Element& x) { return complement(x); }

} // namespace algcheck
