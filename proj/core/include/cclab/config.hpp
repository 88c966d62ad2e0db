#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cclab/groups.hpp"
#include "cclab/rational.hpp"

namespace cclab {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          message_(what),
          position_(position) {}
    size_t position() const { return position_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    size_t position_;
};

// FAMILY '(' n ',' q ')' with FAMILY one of GL SL GU SU Sp SO SO+ SO- O O+ O-
// GO GO+ GO- Omega Omega+ Omega-. The unsigned orthogonal names are for odd
// dimension only. Throws ParseError.
GroupSpec parse_group_spec(const std::string& s);

enum class Suite { Level, Rank, Main3, Orbits, Centralizer, Restriction, Delta, Walk, ProductOne, WeilModel };

const char* suite_name(Suite s);
Suite parse_suite(const std::string& name);  // throws ParseError
const std::vector<Suite>& all_suites();

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
    std::vector<GroupSpec> groups;
    std::vector<Suite> suites;
    size_t enumeration_budget = kDefaultEnumerationBudget;
    size_t model_budget = 2000;        // Weil model dimension
    size_t tuple_budget = 10000000;    // brute-force tuple enumeration
    size_t orbit_budget = 100000000;   // |V|^j for Burnside orbit counts
    std::string cache_dir;             // empty: CCLAB_CACHE_DIR or no cache
    OutputFormat format = OutputFormat::Json;
    int workers = 1;

    std::vector<BigRational> gammas{BigRational(99, 100), BigRational(9, 10)};
    // (gamma, delta) pairs to certify
    std::vector<std::pair<BigRational, BigRational>> delta_claims{{BigRational(99, 100), BigRational(11, 10000)},
                                                                  {BigRational(9, 10), BigRational(36, 100000)}};
    std::vector<BigRational> epsilons{BigRational(992, 1000)};
    int walk_steps = 8;
    std::vector<int> walk_classes;  // empty: every noncentral class
    int product_arity = 3;
    int weil_pairs = 1000;

    void validate() const;  // throws ParseError
};

// key = value lines, '#' comments. Keys mirror the RunConfig fields; lists
// are comma separated (commas inside parentheses belong to group specs).
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

std::vector<std::string> split_top_level(const std::string& s, char sep = ',');

}  // namespace cclab
