#include "cclab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace cclab {

namespace {

struct FamilyName {
    const char* name;
    Family family;
    int sign;  // 0: unsigned name
};

// longest names first so "Omega+" wins over "O"
const FamilyName kFamilies[] = {
    {"Omega+", Family::Omega, 1}, {"Omega-", Family::Omega, -1}, {"Omega", Family::Omega, 0},
    {"GO+", Family::GO, 1},       {"GO-", Family::GO, -1},       {"GO", Family::GO, 0},
    {"SO+", Family::SO, 1},       {"SO-", Family::SO, -1},       {"SO", Family::SO, 0},
    {"GL", Family::GL, 0},        {"SL", Family::SL, 0},         {"GU", Family::GU, 0},
    {"SU", Family::SU, 0},        {"Sp", Family::Sp, 0},         {"O+", Family::GO, 1},
    {"O-", Family::GO, -1},       {"O", Family::GO, 0},
};

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i_);
    }
    int integer() {
        skip_ws();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError("expected a positive integer", start);
        int v = 0;
        auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + i_, v);
        if (ec != std::errc()) throw ParseError("integer out of range", start);
        return v;
    }
    size_t pos() const { return i_; }
    void advance(size_t k) { i_ += k; }
    bool at_end() {
        skip_ws();
        return i_ == s_.size();
    }
    const std::string& text() const { return s_; }

private:
    const std::string& s_;
    size_t i_ = 0;
};

size_t parse_size(const std::string& key, const std::string& v) {
    size_t out = 0;
    std::string t = trim(v);
    // allow 1e8 style values
    if (t.find_first_of("eE") != std::string::npos) {
        double d = 0;
        try {
            d = std::stod(t);
        } catch (const std::exception&) {
            throw ParseError(key + ": not a number: " + t, 0);
        }
        if (!(d >= 1) || d > 1e18) throw ParseError(key + " must be a positive integer", 0);
        return static_cast<size_t>(d);
    }
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || p != t.data() + t.size()) throw ParseError(key + ": not a positive integer: " + t, 0);
    if (out == 0) throw ParseError(key + " must be positive", 0);
    return out;
}

int parse_int(const std::string& key, const std::string& v) {
    int out = 0;
    std::string t = trim(v);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || p != t.data() + t.size()) throw ParseError(key + ": not an integer: " + t, 0);
    return out;
}

BigRational parse_number(const std::string& key, const std::string& v) {
    try {
        return parse_rational(trim(v));
    } catch (const std::exception& e) {
        throw ParseError(key + ": " + e.what(), 0);
    }
}

}  // namespace

GroupSpec parse_group_spec(const std::string& s) {
    Cursor c(s);
    c.skip_ws();
    const FamilyName* fam = nullptr;
    for (const auto& f : kFamilies) {
        std::string n = f.name;
        if (s.compare(c.pos(), n.size(), n) == 0) {
            fam = &f;
            break;
        }
    }
    if (!fam) throw ParseError("unknown group family in '" + s + "'", c.pos());
    c.advance(std::string(fam->name).size());
    c.expect('(');
    size_t dim_pos = c.pos();
    int n = c.integer();
    c.expect(',');
    size_t q_pos = c.pos();
    int q = c.integer();
    c.expect(')');
    if (!c.at_end()) throw ParseError("trailing characters after group spec", c.pos());

    GroupSpec g;
    g.family = fam->family;
    g.dim = n;
    g.q = q;
    g.sign = fam->sign;
    bool orth = g.orthogonal();
    if (orth && n % 2 == 0 && g.sign == 0)
        throw ParseError("even-dimensional orthogonal group needs a type sign (+ or -)", dim_pos);
    if (orth && n % 2 == 1 && g.sign != 0) throw ParseError("odd-dimensional orthogonal group takes no type sign", dim_pos);
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        size_t where = what.find("q ") != std::string::npos || what.find("field") != std::string::npos ||
                               what.find("odd q") != std::string::npos
                           ? q_pos
                           : dim_pos;
        throw ParseError(what, where);
    }
    return g;
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::Level: return "level";
        case Suite::Rank: return "rank";
        case Suite::Main3: return "main3";
        case Suite::Orbits: return "orbits";
        case Suite::Centralizer: return "centralizer";
        case Suite::Restriction: return "restriction";
        case Suite::Delta: return "delta";
        case Suite::Walk: return "walk";
        case Suite::ProductOne: return "product-one";
        case Suite::WeilModel: return "weil-model";
    }
    return "?";
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> v{Suite::Level,       Suite::Rank,        Suite::Main3, Suite::Orbits,
                                      Suite::Centralizer, Suite::Restriction, Suite::Delta, Suite::Walk,
                                      Suite::ProductOne,  Suite::WeilModel};
    return v;
}

Suite parse_suite(const std::string& name) {
    std::string t = trim(name);
    for (Suite s : all_suites())
        if (t == suite_name(s)) return s;
    throw ParseError("unknown suite '" + t + "'", 0);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
    return out;
}

void RunConfig::validate() const {
    if (enumeration_budget == 0 || model_budget == 0 || tuple_budget == 0 || orbit_budget == 0)
        throw ParseError("budgets must be positive", 0);
    if (workers < 1) throw ParseError("workers must be at least 1", 0);
    if (walk_steps < 0 || walk_steps > 64) throw ParseError("walk_steps must lie in [0, 64]", 0);
    if (product_arity < 2) throw ParseError("product_arity must be at least 2", 0);
    if (weil_pairs < 1) throw ParseError("weil_pairs must be positive", 0);
}

RunConfig parse_run_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    size_t offset = 0;
    std::map<std::string, bool> seen;
    while (std::getline(in, line)) {
        size_t line_start = offset;
        offset += line.size() + 1;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", line_start);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        size_t val_pos = line_start + eq + 1;
        if (seen[key]) throw ParseError("duplicate key '" + key + "'", line_start);
        seen[key] = true;
        auto rethrow = [&](const ParseError& e) -> ParseError {
            return ParseError(e.message(), val_pos + e.position());
        };
        try {
            if (key == "groups") {
                for (const auto& g : split_top_level(val)) cfg.groups.push_back(parse_group_spec(g));
            } else if (key == "suites") {
                for (const auto& s : split_top_level(val)) cfg.suites.push_back(parse_suite(s));
            } else if (key == "enumeration_budget") {
                cfg.enumeration_budget = parse_size(key, val);
            } else if (key == "model_budget") {
                cfg.model_budget = parse_size(key, val);
            } else if (key == "tuple_budget") {
                cfg.tuple_budget = parse_size(key, val);
            } else if (key == "orbit_budget") {
                cfg.orbit_budget = parse_size(key, val);
            } else if (key == "cache_dir") {
                cfg.cache_dir = val;
            } else if (key == "format") {
                if (val == "json")
                    cfg.format = OutputFormat::Json;
                else if (val == "csv")
                    cfg.format = OutputFormat::Csv;
                else if (val == "text")
                    cfg.format = OutputFormat::Text;
                else
                    throw ParseError("format must be json, csv or text", 0);
            } else if (key == "workers") {
                cfg.workers = parse_int(key, val);
            } else if (key == "gamma") {
                cfg.gammas.clear();
                for (const auto& g : split_top_level(val)) cfg.gammas.push_back(parse_number(key, g));
            } else if (key == "delta_claims") {
                cfg.delta_claims.clear();
                for (const auto& item : split_top_level(val)) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos) throw ParseError("delta_claims entries are gamma:delta", 0);
                    cfg.delta_claims.emplace_back(parse_number(key, item.substr(0, colon)),
                                                  parse_number(key, item.substr(colon + 1)));
                }
            } else if (key == "epsilon") {
                cfg.epsilons.clear();
                for (const auto& e : split_top_level(val)) cfg.epsilons.push_back(parse_number(key, e));
            } else if (key == "walk_steps") {
                cfg.walk_steps = parse_int(key, val);
            } else if (key == "walk_classes") {
                cfg.walk_classes.clear();
                for (const auto& c : split_top_level(val)) cfg.walk_classes.push_back(parse_int(key, c));
            } else if (key == "product_arity") {
                cfg.product_arity = parse_int(key, val);
            } else if (key == "weil_pairs") {
                cfg.weil_pairs = parse_int(key, val);
            } else {
                throw ParseError("unknown key '" + key + "'", 0);
            }
        } catch (const ParseError& e) {
            throw rethrow(e);
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file " + path, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

}  // namespace cclab
