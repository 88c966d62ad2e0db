#include "cclab/runner.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "cclab/apps.hpp"
#include "cclab/bounds.hpp"
#include "cclab/cache.hpp"
#include "cclab/level.hpp"
#include "cclab/weil.hpp"

namespace cclab {

using ojson = nlohmann::ordered_json;

namespace {

struct GroupContext {
    GroupSpec spec;
    GroupPtr group;
    ClassesPtr classes;
    TablePtr table;
    std::string status = "ok";  // of the table build
    std::string message;
    CacheEvent cache;

    std::mutex mu;
    std::optional<LevelSweep> sweep;
    const LevelSweep& levels() {
        std::lock_guard<std::mutex> lock(mu);
        if (!sweep) sweep = compute_levels(table);
        return *sweep;
    }
};

void append(std::vector<BoundReport>& out, std::vector<BoundReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
}

// Runs fn on 0..n-1 with a fixed number of threads. Results land in slots
// owned by the caller, so ordering never depends on scheduling.
void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, n); ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::vector<std::vector<int>> multisets(const std::vector<int>& items, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k, 0);
    const int n = static_cast<int>(items.size());
    if (n == 0) return out;
    while (true) {
        std::vector<int> m;
        for (int i : idx) m.push_back(items[i]);
        out.push_back(m);
        int p = k - 1;
        while (p >= 0 && idx[p] == n - 1) --p;
        if (p < 0) break;
        ++idx[p];
        for (int j = p + 1; j < k; ++j) idx[j] = idx[p];
    }
    return out;
}

std::vector<BoundReport> run_level(GroupContext& g) {
    const auto& sw = g.levels();
    std::vector<BoundReport> out{level_range_check(sw), theta_value_check(sw)};
    append(out, degree_contrapositive_check(sw, 4));
    return out;
}

std::vector<BoundReport> run_main3(GroupContext& g) { return degree_level_check(g.levels()); }

std::vector<BoundReport> run_rank(GroupContext& g, const RunConfig& cfg) {
    const auto& sw = g.levels();
    RankSetup rs = make_rank_setup(g.classes);
    std::vector<BoundReport> out = rank_level_checks(sw, rs).reports;
    // dual pair with Sp(2, q) when G is a split special orthogonal group
    if (g.spec.family == Family::SO && g.spec.sign == 1) {
        auto S = compute_classes(enumerate(GroupSpec{Family::Sp, 2, g.spec.q, 0}, cfg.enumeration_budget));
        auto st = build_table(S);
        DualPair dp = make_dual_pair(g.classes, S, cfg.model_budget);
        append(out, dual_pair_analysis(dp, sw, rs, *st).reports);
        append(out, so_regular_check(dp, rs, *st));
    }
    return out;
}

std::vector<BoundReport> run_orbits(GroupContext& g, const RunConfig& cfg) {
    std::vector<BoundReport> out;
    const GroupTable& G = *g.group;
    const double v = std::pow(static_cast<double>(G.field().q()), G.dim());
    double vj = v;  // |V|^j
    for (int j = 1; vj <= static_cast<double>(cfg.orbit_budget); ++j, vj *= v)
        append(out, orbit_bound_check(g.classes, j, std::min<size_t>(cfg.tuple_budget, 2000000)));
    for (int j = 1; j <= G.dim(); ++j)
        for (int i = 0; i <= j; ++i) out.push_back(gauss_binom_check(j, i, g.spec.q));
    return out;
}

std::vector<BoundReport> run_centralizer(GroupContext& g, const RunConfig& cfg) {
    std::vector<BoundReport> out;
    bool brute = static_cast<size_t>(g.group->order()) <= 100000;
    try {
        out = centralizer_bound_check(g.classes, brute);
    } catch (const std::invalid_argument& e) {
        BoundReport r;
        r.id = "centralizer-lower";
        r.instance = g.spec.str();
        r.note = e.what();
        out.push_back(r);
    }
    out.push_back(schur_bound_check(*g.table));
    for (const auto& [gamma, delta] : cfg.delta_claims)
        out.push_back(character_bound_check(*g.table, "character-bound-gamma", 4, gamma, delta));
    for (const auto& eps : cfg.epsilons) {
        auto ec = epsilon_composition(eps);
        out.push_back(character_bound_check(*g.table, "character-bound-epsilon", 1, eps, ec.delta));
    }
    append(out, min_degree_check(*g.table));
    return out;
}

std::vector<BoundReport> run_restriction(GroupContext& g, const RunConfig& cfg) {
    std::vector<BoundReport> out;
    const auto& spec = g.spec;
    const bool classical_form = spec.family == Family::Sp || spec.orthogonal();
    if (classical_form) out.push_back(irr_count_check(*g.table));
    if (classical_form && spec.dim >= 3) {
        auto H = make_subgroup_classes(g.classes, standard_restriction_subgroup(g.group));
        auto ht = build_table(H.sub);
        append(out, restriction_norm_check(*g.table, H));
        append(out, sigma_lambda_check(*g.table, H, *ht));
    }
    if ((spec.family == Family::Sp || (spec.orthogonal() && spec.sign == 1)) && spec.dim >= 4) {
        auto L = make_subgroup_classes(g.classes, siegel_levi(g.group));
        auto lt = build_table(L.sub);
        LeviBound which = spec.family == Family::Sp ? LeviBound::Classical
                          : spec.family == Family::Omega ? LeviBound::Derived
                                                          : LeviBound::Standard;
        append(out, levi_restriction_check(*g.table, L, *lt, which, 2));
    }
    append(out, tensor_product_check(*g.table, 1));
    append(out, tensor_sigma_check(*g.table));
    append(out, tensor_power_check(*g.table, 3));
    if (spec.family == Family::SO && spec.q % 2 == 1) {
        auto O = make_subgroup_classes(g.classes, derived_subgroup(g.group));
        append(out, spin_reducibility_check(*g.table, O));
    }
    (void)cfg;
    return out;
}

std::vector<BoundReport> run_delta(const RunConfig& cfg) {
    std::vector<BoundReport> out;
    std::map<std::string, BigRational> dmax;
    for (const auto& gamma : cfg.gammas) {
        auto d = delta_solver(gamma);
        dmax[to_decimal(gamma, 12)] = d.delta_max;
        append(out, d.reports);
    }
    for (const auto& [gamma, delta] : cfg.delta_claims) {
        append(out, delta_certificate(gamma, delta));
        auto it = dmax.find(to_decimal(gamma, 12));
        BigRational top = it != dmax.end() ? it->second : delta_solver(gamma).delta_max;
        BoundReport r;
        r.id = "delta-max-covers-claim";
        r.instance = "gamma=" + to_decimal(gamma, 12);
        r.param("gamma", to_decimal(gamma, 12)).param("delta", to_decimal(delta, 12));
        decide(r, top, Relation::GE, delta);
        out.push_back(r);
    }
    for (const auto& eps : cfg.epsilons) append(out, epsilon_composition(eps).reports);
    append(out, constant_certificates());
    append(out, orthogonal_order_check(8, {3, 5, 7, 9, 11}));
    append(out, restriction_tail_check({2, 3, 4, 5, 7}, 12));
    for (int r : {1, 2, 3, 4})
        for (int e : {r, r + 1, 2 * r})
            for (int h : {3, 4, 6}) out.push_back(m0_check(r, e, h));
    return out;
}

// per-item slots keep the output order independent of the worker count
std::vector<BoundReport> gather(int n, int workers, const std::function<std::vector<BoundReport>(int)>& fn) {
    std::vector<std::vector<BoundReport>> slots(n);
    parallel_for(n, workers, [&](int i) { slots[i] = fn(i); });
    std::vector<BoundReport> out;
    for (auto& s : slots) append(out, std::move(s));
    return out;
}

std::vector<BoundReport> run_walk(GroupContext& g, const RunConfig& cfg) {
    std::vector<int> classes = cfg.walk_classes;
    if (classes.empty())
        for (int c = 0; c < g.classes->count(); ++c)
            if (g.classes->size(c) > 1) classes.push_back(c);
    return gather(static_cast<int>(classes.size()), cfg.workers, [&](int i) -> std::vector<BoundReport> {
        const int c = classes[i];
        if (c < 0 || c >= g.classes->count()) {
            BoundReport r;
            r.id = "walk-class";
            r.instance = g.spec.str() + " class " + std::to_string(c);
            r.note = "no such class";
            return {r};
        }
        return mixing_bounds(*g.table, c, cfg.walk_steps).reports;
    });
}

std::vector<BoundReport> run_product_one(GroupContext& g, const RunConfig& cfg) {
    std::vector<int> noncentral;
    for (int c = 0; c < g.classes->count(); ++c)
        if (g.classes->size(c) > 1) noncentral.push_back(c);
    auto tuples = multisets(noncentral, cfg.product_arity);
    // the brute-force oracle runs while the shared tuple budget lasts
    std::vector<double> cost(tuples.size(), 1);
    std::vector<char> brute(tuples.size(), 0);
    double left = static_cast<double>(cfg.tuple_budget);
    for (size_t k = 0; k < tuples.size(); ++k) {
        for (size_t i = 0; i + 1 < tuples[k].size(); ++i) cost[k] *= static_cast<double>(g.classes->size(tuples[k][i]));
        if (cost[k] <= left) {
            brute[k] = 1;
            left -= cost[k];
        }
    }
    return gather(static_cast<int>(tuples.size()), cfg.workers, [&](int k) {
        return product_one_report(*g.table, tuples[k], brute[k] != 0, cost[k] + 1).reports;
    });
}

std::vector<BoundReport> run_weil(GroupContext& g, const RunConfig& cfg) {
    std::vector<BoundReport> out = weil_model_check(g.classes, cfg.weil_pairs, 1, cfg.model_budget);
    const BigRational delta = cfg.delta_claims.empty() ? BigRational(11, 10000) : cfg.delta_claims.front().second;
    append(out, weil_value_check(*g.table, delta));
    return out;
}

BoundReport failure_report(const std::string& suite, const std::string& group, const std::string& what) {
    BoundReport r;
    r.id = suite + "-internal";
    r.instance = group;
    r.note = what;
    decide(r, 1, Relation::EQ, 0);
    return r;
}

void run_item(SuiteSection& sec, const std::function<std::vector<BoundReport>()>& fn) {
    try {
        sec.reports = fn();
        sec.status = "ok";
    } catch (const BudgetError& e) {
        sec.status = "budget";
        sec.message = e.what();
    } catch (const TooLargeError& e) {
        sec.status = "budget";
        sec.message = e.what();
    } catch (const std::invalid_argument& e) {
        sec.status = "not-applicable";
        sec.message = e.what();
    } catch (const std::exception& e) {
        sec.status = "error";
        sec.message = e.what();
        sec.reports = {failure_report(sec.suite, sec.group, e.what())};
    }
}

ojson rational_json(const BigRational& x) {
    return ojson{{"num", boost::multiprecision::numerator(x).str()},
                 {"den", boost::multiprecision::denominator(x).str()},
                 {"decimal", to_decimal(x, 12)}};
}

ojson report_json(const BoundReport& r) {
    ojson params = ojson::array();
    for (const auto& [k, v] : r.params) params.push_back(ojson::array({k, v}));
    return ojson{{"id", r.id},
                 {"instance", r.instance},
                 {"params", params},
                 {"lhs", rational_json(r.lhs)},
                 {"relation", relation_symbol(r.relation)},
                 {"rhs", rational_json(r.rhs)},
                 {"rhs_exact", r.rhs_exact},
                 {"verdict", verdict_name(r.verdict)},
                 {"note", r.note}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

SuiteSummary ReportBundle::summary() const {
    SuiteSummary s;
    for (const auto& sec : sections) s.add(sec.reports);
    return s;
}

ReportBundle run_suite(const RunConfig& config) {
    config.validate();
    ReportBundle bundle;
    if (config.suites.empty()) return bundle;

    TableCache cache = config.cache_dir.empty() ? TableCache::from_env() : TableCache(config.cache_dir);
    bool needs_tables = false;
    for (Suite s : config.suites)
        if (s != Suite::Delta) needs_tables = true;

    std::vector<std::unique_ptr<GroupContext>> groups;
    std::map<std::string, int> seen;
    if (needs_tables)
        for (const auto& spec : config.groups) {
            if (seen.count(spec.str())) continue;
            seen[spec.str()] = static_cast<int>(groups.size());
            auto g = std::make_unique<GroupContext>();
            g->spec = spec;
            groups.push_back(std::move(g));
        }
    parallel_for(static_cast<int>(groups.size()), config.workers, [&](int i) {
        GroupContext& g = *groups[i];
        try {
            g.group = enumerate(g.spec, config.enumeration_budget);
            g.classes = compute_classes(g.group);
            g.table = cache.table(g.classes, &g.cache);
        } catch (const TooLargeError& e) {
            g.status = "budget";
            g.message = e.what();
        } catch (const BudgetError& e) {
            g.status = "budget";
            g.message = e.what();
        } catch (const std::exception& e) {
            g.status = "error";
            g.message = e.what();
        }
    });
    for (const auto& g : groups)
        if (!g->cache.warning.empty()) bundle.warnings.push_back(g->cache.warning);

    struct Item {
        Suite suite;
        GroupContext* group;
    };
    std::vector<Item> items;
    for (Suite s : config.suites) {
        if (s == Suite::Delta) {
            items.push_back({s, nullptr});
            continue;
        }
        for (const auto& g : groups) items.push_back({s, g.get()});
    }
    bundle.sections.resize(items.size());
    parallel_for(static_cast<int>(items.size()), config.workers, [&](int i) {
        const Item& it = items[i];
        SuiteSection& sec = bundle.sections[i];
        sec.suite = suite_name(it.suite);
        if (!it.group) {
            run_item(sec, [&] { return run_delta(config); });
            return;
        }
        GroupContext& g = *it.group;
        sec.group = g.spec.str();
        if (g.status != "ok") {
            sec.status = g.status;
            sec.message = g.message;
            if (g.status == "error") sec.reports = {failure_report(sec.suite, sec.group, g.message)};
            return;
        }
        run_item(sec, [&]() -> std::vector<BoundReport> {
            switch (it.suite) {
                case Suite::Level: return run_level(g);
                case Suite::Main3: return run_main3(g);
                case Suite::Rank: return run_rank(g, config);
                case Suite::Orbits: return run_orbits(g, config);
                case Suite::Centralizer: return run_centralizer(g, config);
                case Suite::Restriction: return run_restriction(g, config);
                case Suite::Walk: return run_walk(g, config);
                case Suite::ProductOne: return run_product_one(g, config);
                case Suite::WeilModel: return run_weil(g, config);
                case Suite::Delta: break;
            }
            return {};
        });
    });
    return bundle;
}

std::string to_json(const ReportBundle& b, const RunConfig& config) {
    ojson cfg;
    ojson groups = ojson::array(), suites = ojson::array();
    for (const auto& g : config.groups) groups.push_back(g.str());
    for (Suite s : config.suites) suites.push_back(suite_name(s));
    cfg["groups"] = groups;
    cfg["suites"] = suites;
    cfg["enumeration_budget"] = config.enumeration_budget;
    cfg["model_budget"] = config.model_budget;
    cfg["tuple_budget"] = config.tuple_budget;
    cfg["orbit_budget"] = config.orbit_budget;

    ojson sections = ojson::array();
    for (const auto& sec : b.sections) {
        ojson s;
        s["suite"] = sec.suite;
        s["group"] = sec.group;
        s["status"] = sec.status;
        s["message"] = sec.message;
        SuiteSummary sum;
        sum.add(sec.reports);
        s["summary"] = ojson{{"pass", sum.pass}, {"fail", sum.fail}, {"not_applicable", sum.not_applicable}};
        ojson reps = ojson::array();
        for (const auto& r : sec.reports) reps.push_back(report_json(r));
        s["reports"] = reps;
        sections.push_back(s);
    }
    SuiteSummary sum = b.summary();
    ojson doc;
    doc["schema"] = kReportSchema;
    doc["version"] = CCLAB_VERSION;
    doc["config"] = cfg;
    doc["sections"] = sections;
    doc["summary"] = ojson{{"pass", sum.pass},
                           {"fail", sum.fail},
                           {"not_applicable", sum.not_applicable},
                           {"exit_code", b.exit_code()}};
    return doc.dump(1) + "\n";
}

std::string to_csv(const ReportBundle& b) {
    std::ostringstream os;
    os << "suite,group,id,instance,lhs,relation,rhs,rhs_exact,verdict,lhs_exact,rhs_value,note\n";
    for (const auto& sec : b.sections) {
        if (sec.reports.empty())
            os << csv_field(sec.suite) << "," << csv_field(sec.group) << ",," << csv_field(sec.status) << ",,,,,,,,"
               << csv_field(sec.message) << "\n";
        for (const auto& r : sec.reports) {
            auto exact = [](const BigRational& x) {
                return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
            };
            os << csv_field(sec.suite) << "," << csv_field(sec.group) << "," << csv_field(r.id) << ","
               << csv_field(r.instance) << "," << to_decimal(r.lhs, 12) << "," << relation_symbol(r.relation) << ","
               << to_decimal(r.rhs, 12) << "," << (r.rhs_exact ? "true" : "false") << "," << verdict_name(r.verdict)
               << "," << exact(r.lhs) << "," << exact(r.rhs) << "," << csv_field(r.note) << "\n";
        }
    }
    return os.str();
}

std::string to_text(const ReportBundle& b) {
    std::ostringstream os;
    for (const auto& sec : b.sections) {
        SuiteSummary s;
        s.add(sec.reports);
        os << "[" << sec.suite << (sec.group.empty() ? "" : " " + sec.group) << "] " << sec.status << ": " << s.pass
           << " pass, " << s.fail << " fail, " << s.not_applicable << " n/a";
        if (!sec.message.empty()) os << " (" << sec.message << ")";
        os << "\n";
        for (const auto& r : sec.reports) {
            if (r.verdict == Verdict::Pass) continue;
            os << "  " << verdict_name(r.verdict) << " " << r.id << " [" << r.instance << "] " << to_decimal(r.lhs, 12)
               << " " << relation_symbol(r.relation) << " " << to_decimal(r.rhs, 12);
            if (!r.note.empty()) os << "  " << r.note;
            os << "\n";
        }
    }
    SuiteSummary s = b.summary();
    os << "total: " << s.pass << " pass, " << s.fail << " fail, " << s.not_applicable << " n/a\n";
    return os.str();
}

std::string render(const ReportBundle& b, const RunConfig& config) {
    switch (config.format) {
        case OutputFormat::Json: return to_json(b, config);
        case OutputFormat::Csv: return to_csv(b);
        case OutputFormat::Text: return to_text(b);
    }
    return {};
}

}  // namespace cclab
