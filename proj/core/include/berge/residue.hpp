#pragma once

#include <string>

#include "berge/checked.hpp"

namespace berge {

/// An integer reduced modulo an explicit modulus p >= 2. Carrier for
/// homology classes and congruence residuals. Mixing moduli is an error,
/// never a silent coercion.
class Residue {
public:
    Residue(i64 value, i64 modulus) : modulus_(modulus) {
        if (modulus < 2) throw InvalidParameterError("modulus must be >= 2");
        value_ = mod_floor(value, modulus);
    }

    i64 value() const { return value_; }
    i64 modulus() const { return modulus_; }

    Residue operator+(const Residue& o) const {
        require_same_modulus(o);
        return Residue(checked_add(value_, o.value_), modulus_);
    }
    Residue operator-(const Residue& o) const {
        require_same_modulus(o);
        return Residue(checked_sub(value_, o.value_), modulus_);
    }
    Residue operator*(const Residue& o) const {
        require_same_modulus(o);
        return Residue(checked_mul(value_, o.value_), modulus_);
    }
    Residue operator-() const { return Residue(checked_neg(value_), modulus_); }

    Residue inverse() const;

    bool is_zero() const { return value_ == 0; }

    bool operator==(const Residue& o) const {
        return modulus_ == o.modulus_ && value_ == o.value_;
    }
    bool operator!=(const Residue& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(value_); }

private:
    void require_same_modulus(const Residue& o) const {
        if (modulus_ != o.modulus_)
            throw ModulusMismatchError("residue arithmetic across moduli " +
                                       std::to_string(modulus_) + " and " +
                                       std::to_string(o.modulus_));
    }

    i64 value_;
    i64 modulus_;
};

} // namespace berge
