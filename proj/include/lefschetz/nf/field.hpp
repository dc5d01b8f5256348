#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exact/rational.hpp"
#include "lefschetz/nf/arith.hpp"

namespace lefschetz::nf {

using exact::Integer;
using exact::Rational;

inline bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 0 || D == 1) return false;
    if (mod(D, 4) == 1) return is_squarefree(D);
    if (mod(D, 4) != 0) return false;
    const std::int64_t m = D / 4;
    const std::int64_t r = mod(m, 4);
    return (r == 2 || r == 3) && is_squarefree(m);
}

/// Kronecker symbol (D/m) for a fundamental discriminant D.
inline int kronecker(std::int64_t D, std::int64_t m) {
    if (!is_fundamental_discriminant(D)) {
        throw ValidationError("kronecker: " + std::to_string(D) + " is not a fundamental discriminant");
    }
    if (m == 0) return 0;
    int result = 1;
    if (m < 0) {
        if (D < 0) result = -result;
        m = -m;
    }
    for (const auto& [p, k] : factor(m)) {
        int chi = 0;
        if (p == 2) {
            if (D % 2 == 0) return 0;
            const std::int64_t r = mod(D, 8);
            chi = (r == 1 || r == 7) ? 1 : -1;
        } else {
            const std::int64_t a = mod(D, p);
            if (a == 0) return 0;
            chi = powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
        }
        if (chi == -1 && (k % 2) == 1) result = -result;
    }
    return result;
}

/// User-supplied data for a number field the library cannot compute natively.
struct ExternalFieldData {
    std::string name;
    int degree = 1;
    std::int64_t abs_discriminant = 1;
    int num_real_places = 1;
    /// zeta_neg[j-1] = zeta_F(1 - 2j)
    std::vector<Rational> zeta_neg;
    /// p -> [(f, e), ...], one entry per prime above p
    std::map<std::int64_t, std::vector<std::pair<int, int>>> splitting;
};

class TotallyRealField {
public:
    enum class Kind { Rationals, RealQuadratic, External };

    static TotallyRealField rationals() { return TotallyRealField(Kind::Rationals, 0, nullptr); }

    /// Q(sqrt d) for squarefree d > 1.
    static TotallyRealField real_quadratic(std::int64_t d) {
        if (d <= 1 || !is_squarefree(d)) {
            throw ValidationError("real quadratic field needs a squarefree d > 1, got " + std::to_string(d));
        }
        return TotallyRealField(Kind::RealQuadratic, d, nullptr);
    }

    static TotallyRealField external(ExternalFieldData data) {
        validate_external(data);
        return TotallyRealField(Kind::External, 0, std::make_shared<const ExternalFieldData>(std::move(data)));
    }

    Kind kind() const { return kind_; }

    int degree() const {
        switch (kind_) {
            case Kind::Rationals: return 1;
            case Kind::RealQuadratic: return 2;
            case Kind::External: return external_->degree;
        }
        return 0;
    }

    int num_real_places() const { return kind_ == Kind::External ? external_->num_real_places : degree(); }

    bool is_totally_real() const { return num_real_places() == degree(); }
    bool has_complex_place() const { return !is_totally_real(); }

    /// d for Q(sqrt d).
    std::int64_t quadratic_radicand() const { return d_; }

    /// Discriminant of Q(sqrt d): d or 4d.
    std::int64_t fundamental_discriminant() const {
        if (kind_ != Kind::RealQuadratic) throw UnsupportedField("field is not real quadratic");
        return mod(d_, 4) == 1 ? d_ : 4 * d_;
    }

    std::int64_t abs_discriminant() const {
        switch (kind_) {
            case Kind::Rationals: return 1;
            case Kind::RealQuadratic: return fundamental_discriminant();
            case Kind::External: return external_->abs_discriminant;
        }
        return 0;
    }

    const ExternalFieldData& external_data() const {
        if (kind_ != Kind::External) throw UnsupportedField("field is not external");
        return *external_;
    }

    /// Short tag, also the CLI spelling: "q", "quad:5", "external:<name>".
    std::string id() const {
        switch (kind_) {
            case Kind::Rationals: return "q";
            case Kind::RealQuadratic: return "quad:" + std::to_string(d_);
            case Kind::External: return "external:" + external_->name;
        }
        return {};
    }

    friend bool operator==(const TotallyRealField& a, const TotallyRealField& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ != Kind::External) return a.d_ == b.d_;
        return a.external_ == b.external_ || (a.external_->name == b.external_->name &&
                                              a.external_->degree == b.external_->degree &&
                                              a.external_->abs_discriminant == b.external_->abs_discriminant);
    }

private:
    TotallyRealField(Kind kind, std::int64_t d, std::shared_ptr<const ExternalFieldData> ext)
        : kind_(kind), d_(d), external_(std::move(ext)) {}

    static void validate_external(const ExternalFieldData& data) {
        if (data.degree < 1) throw ValidationError("external field: degree must be positive");
        if (data.abs_discriminant < 1) throw ValidationError("external field: abs_discriminant must be positive");
        if (data.num_real_places < 0 || data.num_real_places > data.degree ||
            (data.degree - data.num_real_places) % 2 != 0) {
            throw ValidationError("external field: num_real_places inconsistent with degree");
        }
        for (const auto& [p, primes] : data.splitting) {
            if (!is_prime(p)) throw ValidationError("external field: splitting key " + std::to_string(p) + " is not prime");
            int total = 0;
            for (const auto& [f, e] : primes) {
                if (f < 1 || e < 1) throw ValidationError("external field: residue degree and ramification must be >= 1");
                total += f * e;
            }
            if (total != data.degree) {
                throw ValidationError("external field: sum of e*f above " + std::to_string(p) + " is " +
                                      std::to_string(total) + ", expected " + std::to_string(data.degree));
            }
        }
        if (data.num_real_places == data.degree) {
            for (std::size_t i = 0; i < data.zeta_neg.size(); ++i) {
                const int j = static_cast<int>(i) + 1;
                const int expected = ((j * data.degree) % 2 == 0) ? 1 : -1;
                if (exact::sign(data.zeta_neg[i]) != expected) {
                    throw ValidationError("external field: zeta_F(" + std::to_string(1 - 2 * j) +
                                          ") has the wrong sign or is zero");
                }
            }
        }
    }

    Kind kind_;
    std::int64_t d_ = 0;
    std::shared_ptr<const ExternalFieldData> external_;
};

/// A prime ideal, identified by the rational prime below it and a label for
/// conjugates above a split prime.
struct PrimeIdeal {
    std::int64_t residue_char = 2;
    int residue_degree = 1;
    int ramification_index = 1;
    std::string label;

    std::int64_t norm() const { return checked_pow(residue_char, residue_degree); }

    std::string to_string() const {
        return std::to_string(residue_char) + ":" + std::to_string(residue_degree) + ":" +
               std::to_string(ramification_index) + ":" + label;
    }

    friend auto operator<=>(const PrimeIdeal&, const PrimeIdeal&) = default;
    friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

inline std::vector<PrimeIdeal> split_prime(const TotallyRealField& field, std::int64_t p) {
    if (!is_prime(p)) throw ValidationError("split_prime: " + std::to_string(p) + " is not prime");
    switch (field.kind()) {
        case TotallyRealField::Kind::Rationals:
            return {PrimeIdeal{p, 1, 1, ""}};
        case TotallyRealField::Kind::RealQuadratic: {
            const int k = kronecker(field.fundamental_discriminant(), p);
            if (k == 1) return {PrimeIdeal{p, 1, 1, "a"}, PrimeIdeal{p, 1, 1, "b"}};
            if (k == -1) return {PrimeIdeal{p, 2, 1, ""}};
            return {PrimeIdeal{p, 1, 2, ""}};
        }
        case TotallyRealField::Kind::External: {
            const auto& table = field.external_data().splitting;
            const auto it = table.find(p);
            if (it == table.end()) {
                throw UnsupportedField("external field has no splitting data for p = " + std::to_string(p));
            }
            std::vector<PrimeIdeal> out;
            const bool several = it->second.size() > 1;
            for (std::size_t i = 0; i < it->second.size(); ++i) {
                const auto [f, e] = it->second[i];
                out.push_back(PrimeIdeal{p, f, e, several ? std::string(1, static_cast<char>('a' + i)) : ""});
            }
            return out;
        }
    }
    return {};
}

/// Integral ideal as a formal product of prime ideals.
class Ideal {
public:
    explicit Ideal(std::string field_id) : field_id_(std::move(field_id)) {}

    Ideal(std::string field_id, std::map<PrimeIdeal, int> factors)
        : field_id_(std::move(field_id)), factors_(std::move(factors)) {
        for (const auto& [prime, k] : factors_) {
            if (k < 1) throw ValidationError("ideal: exponents must be positive");
        }
    }

    static Ideal unit(const TotallyRealField& field) { return Ideal(field.id()); }

    const std::string& field_id() const { return field_id_; }
    const std::map<PrimeIdeal, int>& factors() const { return factors_; }

    bool is_unit() const { return factors_.empty(); }

    int valuation(const PrimeIdeal& p) const {
        const auto it = factors_.find(p);
        return it == factors_.end() ? 0 : it->second;
    }

    bool contains_prime(const PrimeIdeal& p) const { return factors_.count(p) > 0; }

    void multiply_by(const PrimeIdeal& p, int k = 1) {
        if (k < 1) throw ValidationError("ideal: exponents must be positive");
        factors_[p] += k;
    }

    Integer norm() const {
        Integer n = 1;
        for (const auto& [p, k] : factors_) n *= exact::ipow(Integer(p.norm()), static_cast<std::uint64_t>(k));
        return n;
    }

    friend Ideal operator*(const Ideal& a, const Ideal& b) {
        if (a.field_id_ != b.field_id_) throw ValidationError("ideal product across different fields");
        Ideal out = a;
        for (const auto& [p, k] : b.factors_) out.factors_[p] += k;
        return out;
    }

    std::string to_string() const {
        if (factors_.empty()) return "(1)";
        std::string s;
        for (const auto& [p, k] : factors_) {
            if (!s.empty()) s += ",";
            s += p.to_string() + "^" + std::to_string(k);
        }
        return s;
    }

    friend bool operator==(const Ideal&, const Ideal&) = default;

private:
    std::string field_id_;
    std::map<PrimeIdeal, int> factors_;
};

/// N*O, with each prime above p carrying exponent e * v_p(N).
inline Ideal ideal_from_integer(const TotallyRealField& field, std::int64_t N) {
    if (N < 2) throw ValidationError("ideal_from_integer: N must be >= 2");
    Ideal out(field.id());
    for (const auto& [p, k] : factor(N)) {
        for (const auto& prime : split_prime(field, p)) out.multiply_by(prime, prime.ramification_index * k);
    }
    return out;
}

inline Integer ideal_norm(const Ideal& A) { return A.norm(); }

/// True iff A | B, i.e. v_P(A) <= v_P(B) for every prime of A.
inline bool ideal_divides(const Ideal& A, const Ideal& B) {
    if (A.field_id() != B.field_id()) throw ValidationError("ideal_divides: ideals belong to different fields");
    for (const auto& [p, k] : A.factors()) {
        if (k > B.valuation(p)) return false;
    }
    return true;
}

}  // namespace lefschetz::nf
