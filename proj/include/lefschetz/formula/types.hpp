#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/nf/field.hpp"
#include "lefschetz/quat/algebra.hpp"

namespace lefschetz::formula {

using exact::Integer;
using exact::Rational;
using nf::Ideal;
using nf::PrimeIdeal;
using nf::TotallyRealField;
using quat::QuaternionAlgebra;

/// Signature (p, q) of a quaternionic hermitian form at one real ramified place.
struct Signature {
    int p = 0;
    int q = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// One local signature per real place where D ramifies. Only classes with
/// every q even occur in the decomposition of the fixed-point set.
class SignatureClass {
public:
    SignatureClass() = default;

    SignatureClass(int n, std::vector<Signature> signatures) : n_(n), signatures_(std::move(signatures)) {
        for (const auto& s : signatures_) {
            if (s.p < 0 || s.q < 0 || s.p + s.q != n) {
                throw ValidationError("signature (" + std::to_string(s.p) + "," + std::to_string(s.q) +
                                      ") does not satisfy p + q = " + std::to_string(n));
            }
            if (s.q % 2 != 0) {
                throw ValidationError("signature (" + std::to_string(s.p) + "," + std::to_string(s.q) +
                                      ") has odd q");
            }
        }
    }

    int n() const { return n_; }
    const std::vector<Signature>& signatures() const { return signatures_; }
    std::size_t size() const { return signatures_.size(); }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < signatures_.size(); ++i) {
            if (i > 0) s += ",";
            s += "(" + std::to_string(signatures_[i].p) + "," + std::to_string(signatures_[i].q) + ")";
        }
        return s + ")";
    }

    friend bool operator==(const SignatureClass&, const SignatureClass&) = default;

private:
    int n_ = 0;
    std::vector<Signature> signatures_;
};

struct LefschetzInput {
    TotallyRealField field;
    QuaternionAlgebra algebra;
    int n = 1;
    Ideal level;
    /// Tr(tau* | W); 1 for the trivial representation.
    Rational trace_w = 1;
    bool assume_torsion_free = false;
};

struct LefschetzReport {
    Rational value;
    /// M(j, A, D) for j = 1..n.
    std::vector<Rational> m_factors;
    /// 2^-r
    Rational two_power;
    /// N(A)^(n(2n+1))
    Integer level_norm_power;
    /// d(D)^(n(n+1)/2)
    Integer discriminant_power;
    Rational trace_w;
    std::vector<std::string> warnings;
};

struct EulerCharReport {
    Rational value;
    SignatureClass signature_class;
    /// prod_v C(n, p_v)
    Integer binomial_factor;
    std::vector<Rational> m_factors;
    std::vector<std::string> warnings;
};

}  // namespace lefschetz::formula
