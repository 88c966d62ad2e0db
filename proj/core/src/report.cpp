#include "cclab/report.hpp"

namespace cclab {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::LE: return "<=";
        case Relation::LT: return "<";
        case Relation::GE: return ">=";
        case Relation::GT: return ">";
        case Relation::EQ: return "==";
    }
    return "?";
}

bool relation_holds(const BigRational& lhs, Relation rel, const BigRational& rhs) {
    switch (rel) {
        case Relation::LE: return lhs <= rhs;
        case Relation::LT: return lhs < rhs;
        case Relation::GE: return lhs >= rhs;
        case Relation::GT: return lhs > rhs;
        case Relation::EQ: return lhs == rhs;
    }
    return false;
}

BigRational BoundReport::margin() const {
    if (relation == Relation::GE || relation == Relation::GT) return lhs - rhs;
    return rhs - lhs;
}

bool BoundReport::holds() const { return relation_holds(lhs, relation, rhs); }

void decide(BoundReport& r, const BigRational& lhs, Relation rel, const BigRational& rhs, bool applicable) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = rel;
    if (!applicable)
        r.verdict = Verdict::NotApplicable;
    else
        r.verdict = relation_holds(lhs, rel, rhs) ? Verdict::Pass : Verdict::Fail;
}

void SuiteSummary::add(const BoundReport& r) {
    switch (r.verdict) {
        case Verdict::Pass: ++pass; break;
        case Verdict::Fail: ++fail; break;
        case Verdict::NotApplicable: ++not_applicable; break;
    }
}

}  // namespace cclab
