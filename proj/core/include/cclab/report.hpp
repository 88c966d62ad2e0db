#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cclab/rational.hpp"

namespace cclab {

enum class Verdict { Pass, Fail, NotApplicable };

const char* verdict_name(Verdict v);

enum class Relation { LE, LT, GE, GT, EQ };

const char* relation_symbol(Relation r);

// One evaluated inequality. lhs is always exact. rhs is exact when
// rhs_exact is set; otherwise it is the rational end of a certified
// enclosure that decided the comparison (the lower end when proving
// lhs <= rhs, the upper end when proving a failure).
struct BoundReport {
    std::string id;
    std::string instance;
    std::vector<std::pair<std::string, std::string>> params;
    BigRational lhs;
    BigRational rhs;
    Relation relation = Relation::LE;
    bool rhs_exact = true;
    Verdict verdict = Verdict::NotApplicable;
    std::string note;

    BoundReport& param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    // rhs - lhs for upper bounds, lhs - rhs for lower bounds
    BigRational margin() const;
    bool holds() const;  // the relation evaluated on (lhs, rhs)
};

bool relation_holds(const BigRational& lhs, Relation rel, const BigRational& rhs);

// Fill in lhs/rhs/relation and set the verdict. applicable = false keeps the
// numbers but reports not-applicable.
void decide(BoundReport& r, const BigRational& lhs, Relation rel, const BigRational& rhs, bool applicable = true);

struct SuiteSummary {
    int pass = 0, fail = 0, not_applicable = 0;
    void add(const BoundReport& r);
    void add(const std::vector<BoundReport>& rs) {
        for (const auto& r : rs) add(r);
    }
    bool ok() const { return fail == 0; }
};

}  // namespace cclab
