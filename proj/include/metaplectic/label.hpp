#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace metaplectic {

/// Simple-object label: 1, eps, phi_i (1 <= i <= p), psi+ or psi-.
/// The canonical total order is 1 < eps < phi_1 < ... < phi_p < psi+ < psi-,
/// which is also the basis order used inside every F-matrix.
struct Label {
    enum class Kind : std::uint8_t { One = 0, Eps = 1, Phi = 2, PsiPlus = 3, PsiMinus = 4 };

    Kind kind = Kind::One;
    int i = 0;  // phi index, meaningful only for Kind::Phi

    static Label one() { return {Kind::One, 0}; }
    static Label eps() { return {Kind::Eps, 0}; }
    static Label phi(int i) { return {Kind::Phi, i}; }
    static Label psi_plus() { return {Kind::PsiPlus, 0}; }
    static Label psi_minus() { return {Kind::PsiMinus, 0}; }

    bool is_one() const { return kind == Kind::One; }
    bool is_eps() const { return kind == Kind::Eps; }
    bool is_phi() const { return kind == Kind::Phi; }
    bool is_psi() const { return kind == Kind::PsiPlus || kind == Kind::PsiMinus; }
    /// +1 for psi+, -1 for psi-; 0 otherwise.
    int psi_sign() const {
        return kind == Kind::PsiPlus ? 1 : (kind == Kind::PsiMinus ? -1 : 0);
    }
    Label psi_flipped() const {
        if (kind == Kind::PsiPlus) return psi_minus();
        if (kind == Kind::PsiMinus) return psi_plus();
        return *this;
    }

    /// Canonical index: 0 = 1, 1 = eps, 1+i = phi_i, p+2 = psi+, p+3 = psi-.
    int index(int p) const {
        switch (kind) {
            case Kind::One: return 0;
            case Kind::Eps: return 1;
            case Kind::Phi: return 1 + i;
            case Kind::PsiPlus: return p + 2;
            default: return p + 3;
        }
    }
    static Label from_index(int idx, int p) {
        if (idx == 0) return one();
        if (idx == 1) return eps();
        if (idx <= p + 1) return phi(idx - 1);
        return idx == p + 2 ? psi_plus() : psi_minus();
    }

    std::string name() const {
        switch (kind) {
            case Kind::One: return "1";
            case Kind::Eps: return "eps";
            case Kind::Phi: return "phi" + std::to_string(i);
            case Kind::PsiPlus: return "psi+";
            default: return "psi-";
        }
    }
    static std::optional<Label> parse(const std::string& s, int p) {
        if (s == "1") return one();
        if (s == "eps") return eps();
        if (s == "psi+") return psi_plus();
        if (s == "psi-") return psi_minus();
        if (s.size() > 3 && s.substr(0, 3) == "phi") {
            try {
                int i = std::stoi(s.substr(3));
                if (i >= 1 && i <= p) return phi(i);
            } catch (...) {
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label& a, const Label& b) {
        if (a.kind != b.kind) return a.kind <=> b.kind;
        return a.i <=> b.i;
    }
};

}  // namespace metaplectic
