#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cclab/classes.hpp"

namespace cclab {

struct CharacterTable {
    ClassesPtr classes;
    int exponent = 1;
    std::vector<ClassFunction> irr;
    std::vector<int64_t> degrees;
    std::vector<int64_t> centralizers;
    uint64_t modulus_used = 0;  // prime of the modular eigenvector stage

    int size() const { return static_cast<int>(irr.size()); }
    const GroupTable& group() const { return *classes->group(); }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kDefaultClassBound = 400;

// Dixon-Schneider: common eigenvectors of the class matrices over F_l, lifted
// to exact cyclotomic values.
TablePtr build_table(const ClassesPtr& cls, int class_bound = kDefaultClassBound);

struct TableCheck {
    bool row_orthogonality = false;
    bool column_orthogonality = false;
    bool degree_sum = false;
    bool count_matches = false;
    bool degrees_divide = false;
    std::string detail;
    bool ok() const { return row_orthogonality && column_orthogonality && degree_sum && count_matches && degrees_divide; }
};

TableCheck verify_table(const CharacterTable& t);

struct MultiplicityProfile {
    std::vector<int64_t> multiplicities;  // indexed like table.irr
    int64_t sigma = 0;
    int64_t lambda = 0;
    bool is_character = true;  // all multiplicities nonnegative integers
    bool integral = true;
};

MultiplicityProfile profile(const ClassFunction& rho, const CharacterTable& t);

// index of the trivial character (always 0 after sorting)
int trivial_index(const CharacterTable& t);

}  // namespace cclab
