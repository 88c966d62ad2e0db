#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cclab/cyclotomic.hpp"

namespace cclab {

// Parameters of F_{p^f}. The modulus is monic of degree f, stored low to high
// (length f+1). For f = 1 the modulus is x, so residues encode themselves.
struct FieldSpec {
    int p = 2;
    int f = 1;
    std::vector<int> modulus;
    int q() const;
};

bool is_prime(int64_t n);
bool poly_irreducible_mod_p(const std::vector<int>& monic, int p);

// field_make: lowest irreducible monic modulus, compared from the x^(f-1)
// coefficient downwards.
FieldSpec field_make(int p, int f);

// Elements are encoded as integers in [0, q): x = sum c_i p^i where c_i is the
// coefficient of x^i in the polynomial representative.
class Field {
public:
    explicit Field(FieldSpec spec);
    static std::shared_ptr<const Field> make(int p, int f);

    const FieldSpec& spec() const { return spec_; }
    int p() const { return spec_.p; }
    int f() const { return spec_.f; }
    int q() const { return q_; }

    int add(int a, int b) const {
        if (!add_.empty()) return add_[a * q_ + b];
        return add_digits(a, b, false);
    }
    int sub(int a, int b) const {
        if (!add_.empty()) return add_[a * q_ + neg_[b]];
        return add_digits(a, b, true);
    }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const {
        if (!mul_.empty()) return mul_[a * q_ + b];
        if (a == 0 || b == 0) return 0;
        int s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, int64_t e) const;
    // x^(p^k)
    int frobenius(int a, int k = 1) const;

    // Image of an integer under Z -> F_p -> F_q.
    int from_int(int64_t n) const;
    // Coefficient vector of length f.
    std::vector<int> coeffs(int a) const;
    int from_coeffs(const std::vector<int>& c) const;

    int primitive() const { return primitive_; }
    // discrete log base primitive(); a != 0
    int log(int a) const { return log_[a]; }
    int exp(int64_t k) const;
    bool is_square(int a) const { return a == 0 || log_[a] % 2 == 0 || p() == 2; }
    int sqrt(int a) const;

    // Tr_{F_q/F_p}, returned as a residue in [0, p).
    int trace(int a) const { return trace_[a]; }
    // psi(a) = zeta_p^Tr(a)
    Cyc additive_character(int a) const { return Cyc::zeta(p(), trace(a)); }

    std::string str(int a) const;

private:
    int add_digits(int a, int b, bool subtract) const;

    FieldSpec spec_;
    int q_;
    int primitive_ = 1;
    std::vector<int> add_, mul_, neg_, inv_, log_, exp_, trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace cclab
