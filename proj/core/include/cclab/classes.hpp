#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "cclab/cyclotomic.hpp"
#include "cclab/groups.hpp"

namespace cclab {

class ClassPartition {
public:
    explicit ClassPartition(GroupPtr G);

    const GroupPtr& group() const { return G_; }
    int count() const { return static_cast<int>(reps_.size()); }
    int64_t group_order() const { return G_->order(); }
    int class_of(int element) const { return class_of_[element]; }
    int rep(int c) const { return reps_[c]; }
    int64_t size(int c) const { return sizes_[c]; }
    int64_t centralizer_order(int c) const { return G_->order() / sizes_[c]; }
    int inverse_class(int c) const { return inverse_[c]; }
    int element_order(int c) const { return orders_[c]; }
    // class of rep(c)^t, 0 <= t < element_order(c)
    int power_class(int c, int64_t t) const;
    int exponent() const { return exponent_; }
    // members of class c (element ids, ascending)
    std::vector<int> members(int c) const;

    // a[c2][c3] = #{(x, y) in C_c1 x C_c2 : x y = rep(c3)}, cached per c1
    const std::vector<int64_t>& mult_row(int c1) const;
    int64_t mult_coeff(int c1, int c2, int c3) const { return mult_row(c1)[static_cast<size_t>(c2) * count() + c3]; }

private:
    GroupPtr G_;
    std::vector<int> class_of_, reps_, inverse_, orders_;
    std::vector<int64_t> sizes_;
    std::vector<std::vector<int>> powers_;
    std::vector<int> member_offsets_, member_list_;
    int exponent_ = 1;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<int64_t>> rows_;
};

using ClassesPtr = std::shared_ptr<const ClassPartition>;

ClassesPtr compute_classes(const GroupPtr& G);

// Cyclotomic-valued class function. Values are kept in Q(zeta_e) with e the
// exponent of the group.
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(ClassesPtr cls);
    ClassFunction(ClassesPtr cls, std::vector<Cyc> values);

    static ClassFunction trivial(const ClassesPtr& cls);
    static ClassFunction regular(const ClassesPtr& cls);
    // from a rational-valued function of the class id
    template <class Fn>
    static ClassFunction from_rational(const ClassesPtr& cls, Fn fn) {
        ClassFunction f(cls);
        for (int c = 0; c < cls->count(); ++c) f.v_[c] = Cyc(cls->exponent(), Rational(fn(c)));
        return f;
    }

    const ClassesPtr& classes() const { return cls_; }
    int size() const { return static_cast<int>(v_.size()); }
    const Cyc& operator[](int c) const { return v_[c]; }
    Cyc& at(int c) { return v_[c]; }
    const std::vector<Cyc>& values() const { return v_; }
    const Cyc& degree() const { return v_[0]; }

    ClassFunction conj() const;
    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const ClassFunction& o);
    ClassFunction& operator*=(const Rational& s);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
    friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a *= s; }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);
    bool is_zero() const;

private:
    void check_same(const ClassFunction& o) const;
    ClassesPtr cls_;
    std::vector<Cyc> v_;
};

// (1/|G|) sum_c |c| f(c) conj(g(c)); throws if the result is not rational.
Rational inner(const ClassFunction& f, const ClassFunction& g);
// |f(c)|^2 as a rational
Rational abs2(const Cyc& x);

// Subgroup together with the fusion of its classes into the parent.
struct SubgroupClasses {
    ClassesPtr parent;
    ClassesPtr sub;
    std::vector<int> embed;   // sub element id -> parent element id
    std::vector<int> fusion;  // sub class -> parent class
};

SubgroupClasses make_subgroup_classes(const ClassesPtr& parent, const Subgroup& H);

ClassFunction restrict_to(const ClassFunction& f, const SubgroupClasses& H);
ClassFunction induce_from(const ClassFunction& f, const SubgroupClasses& H);
int64_t double_cosets(const SubgroupClasses& H);

}  // namespace cclab
