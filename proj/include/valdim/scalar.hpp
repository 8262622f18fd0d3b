#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace valdim {

using Rat = mpq_class;

/// Coefficient field: the rationals (p == 0) or a prime field F_p.
///
/// Values of both fields are carried as exact rationals; prime-field values
/// are kept normalized to integer representatives in [0, p).
struct Field {
    unsigned long p = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(unsigned long p);

    bool is_rationals() const { return p == 0; }
    bool operator==(const Field&) const = default;

    /// Canonical representative of a rational in this field.
    /// For F_p this reduces numerator and denominator mod p; a denominator
    /// divisible by p is rejected.
    Rat normalize(const Rat& x) const;

    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }
    Rat inv(const Rat& a) const;
    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

    std::string to_string(const Rat& a) const;
};

/// Parse "Q" / {"Fp": p} style field tags given p directly.
inline Field Field::prime(unsigned long q) {
    if (q < 2) throw std::invalid_argument("field characteristic must be a prime");
    for (unsigned long d = 2; d * d <= q; ++d)
        if (q % d == 0) throw std::invalid_argument("field characteristic must be a prime");
    Field f;
    f.p = q;
    return f;
}

void require_same_field(const Field& a, const Field& b);

}  // namespace valdim
